// minicode: build codes from q-ary functions, compute weight distributions,
// decide minimality, and rerun the embedded example suite.
//
// Exit status: 0 success / minimal, 1 not minimal or repro mismatch,
// 2 usage, guard, budget or input errors.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "minicode/code.hpp"
#include "minicode/error.hpp"
#include "minicode/families.hpp"
#include "minicode/minimality.hpp"
#include "minicode/repro.hpp"
#include "minicode/witness.hpp"

namespace fs = std::filesystem;
using namespace minicode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotMinimal = 1;
constexpr int kExitError = 2;

struct Input {
    std::optional<FunctionSpec> function;
    std::optional<DefiningSet> defining;
    std::string label;
};

std::string format_vector(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool is_number(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// A preset name, a function file ("q m variant" header) or a matrix file
// ("q cols rows" header).  Matrix files hold the defining set one vector per
// row unless `generator` is set or the file name ends in .gen.
Input load_input(const std::string& spec, bool generator) {
    Input in;
    if (const Preset* p = find_preset(spec)) {
        in.function = p->function;
        in.label = p->name;
        return in;
    }
    std::ifstream file(spec, std::ios::binary);
    if (!file) throw Error("'" + spec + "' is neither a preset nor a readable file");
    in.label = fs::path(spec).stem().string();
    std::string header;
    std::getline(file, header);
    std::istringstream tokens(header);
    std::string a, b, c;
    tokens >> a >> b >> c;
    file.clear();
    file.seekg(0);
    if (!c.empty() && !is_number(c)) {
        in.function = read_function(file);
    } else {
        const bool transposed = generator || fs::path(spec).extension() == ".gen";
        in.defining = defining_set_from_matrix(read_matrix(file), transposed);
    }
    return in;
}

/// D_f for function inputs, refusing linear f.
DefiningSet code_of(Input& in) {
    if (in.defining) return *in.defining;
    if (auto omega = linearity_check(*in.function)) {
        throw Error("f is linear, f(x) = omega . x with omega = " + format_vector(*omega) +
                    "; C_f would only have dimension m");
    }
    in.defining = defining_set(*in.function);
    return *in.defining;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

int cmd_build(const std::string& input, std::string prefix) {
    Input in = load_input(input, false);
    if (!in.function) throw Error("build needs a preset or a function file");
    const DefiningSet d = code_of(in);
    if (prefix.empty()) prefix = in.label;
    std::ostringstream gen, def;
    write_matrix(gen, d.field, generator_matrix(d));
    write_matrix(def, d.field, defining_matrix(d));
    write_file(prefix + ".gen", gen.str());
    write_file(prefix + ".def", def.str());
    std::cout << "n = " << d.n() << ", k = " << d.k << "\n";
    std::cout << "wrote " << prefix << ".gen and " << prefix << ".def\n";
    return kExitOk;
}

int cmd_wdist(const std::string& input, bool generator, const std::string& output, unsigned jobs) {
    Input in = load_input(input, generator);
    const DefiningSet d = code_of(in);
    const WeightEnumerator we = weight_distribution(d, jobs);
    const CodeParams p = params(we);
    if (output.empty()) {
        std::cout << enumerator_json(we);
    } else {
        write_file(output, enumerator_json(we));
    }
    std::cout << enumerator_text(we) << "\n";
    std::cout << "[" << p.n << ", " << p.k << ", " << p.d << "] w_min = " << p.w_min << ", w_max = " << p.w_max
              << "\n";
    return kExitOk;
}

int cmd_check(const std::string& input, bool generator, const std::string& criterion, std::uint64_t budget,
              const std::string& cert_path, unsigned jobs) {
    Input in = load_input(input, generator);
    CheckOptions opts;
    opts.jobs = jobs;
    opts.budget = budget;
    opts.want_certificate = !cert_path.empty();

    MinimalityReport report;
    if (criterion.rfind("witness:", 0) == 0) {
        const auto thm = parse_theorem_id(criterion.substr(8));
        if (!thm) throw CLI::ValidationError("--criterion", "unknown theorem '" + criterion.substr(8) + "'");
        if (!in.function) throw Error("witness criteria need a preset or a function file");
        const WitnessSweep sweep = theorem_witness_sweep(*thm, *in.function, jobs);
        report.criterion = Criterion::witness;
        report.verdict = Verdict::minimal;
        report.classes_checked = sweep.classes;
        report.certificate = sweep.certificate;
        if (sweep.gap_filled) {
            std::cout << "note: " << sweep.gap_filled << " classes needed a substituted vector\n";
            for (const auto& n : sweep.notes) std::cout << "  " << n << "\n";
        }
    } else {
        const DefiningSet d = code_of(in);
        if (criterion == "definition") {
            report = is_minimal_definition(d, opts);
        } else if (criterion == "ab") {
            report = ab_condition(d, opts);
        } else if (criterion == "dhz") {
            report = dhz_criterion(d, opts);
        } else if (criterion == "rank") {
            report = rank_criterion_code(d, opts);
        } else {
            throw CLI::ValidationError("--criterion", "unknown criterion '" + criterion + "'");
        }
    }
    std::cout << describe(report);
    if (report.certificate && !cert_path.empty()) {
        write_file(cert_path, certificate_json(*report.certificate));
        std::cout << "certificate: " << cert_path << "\n";
    }
    return report.verdict == Verdict::not_minimal ? kExitNotMinimal : kExitOk;
}

int cmd_repro(const std::string& filter, bool heavy, unsigned jobs) {
    ReproOptions opts;
    opts.filter = filter;
    opts.heavy = heavy;
    opts.jobs = jobs;
    const auto rows = run_repro(repro_cases(), opts);
    std::cout << format_repro_table(rows);
    return repro_ok(rows) ? kExitOk : kExitNotMinimal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal linear codes from q-ary functions"};
    app.require_subcommand(1);

    std::string input, output, criterion = "rank", cert_path, filter = "*";
    bool generator = false, heavy = false;
    unsigned jobs = 0;
    std::uint64_t budget = default_budget();

    auto* build = app.add_subcommand("build", "write the generator matrix and defining set of C_f");
    build->add_option("input", input, "preset name or function file")->required();
    build->add_option("-o,--output", output, "output prefix (default: the input name)");

    auto* wdist = app.add_subcommand("wdist", "exact weight distribution");
    wdist->add_option("input", input, "preset, function file or matrix file")->required();
    wdist->add_option("-o,--output", output, "write the JSON document here instead of stdout");
    wdist->add_flag("--generator", generator, "matrix file is a k x n generator matrix");
    wdist->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)");

    auto* check = app.add_subcommand("check", "decide minimality");
    check->add_option("input", input, "preset, function file or matrix file")->required();
    check->add_option("-c,--criterion", criterion, "definition | ab | dhz | rank | witness:<A1|A2|B|C1|C2|D1|D2>");
    check->add_option("--budget", budget, "operation budget for the rank criterion");
    check->add_option("--certificate", cert_path, "write the certificate here when minimal");
    check->add_flag("--generator", generator, "matrix file is a k x n generator matrix");
    check->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)");

    auto* repro = app.add_subcommand("repro", "rerun the embedded example suite");
    repro->add_option("--filter", filter, "glob on case names");
    repro->add_flag("--heavy", heavy, "include the m = 8 ternary cases");
    repro->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (*build) return cmd_build(input, output);
        if (*wdist) return cmd_wdist(input, generator, output, jobs);
        if (*check) return cmd_check(input, generator, criterion, budget, cert_path, jobs);
        if (*repro) return cmd_repro(filter, heavy, jobs);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
