#include "minicode/minimality.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <json.hpp>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "minicode/error.hpp"
#include "minicode/parallel.hpp"

namespace minicode {

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::definition: return "definition";
        case Criterion::ab: return "ab";
        case Criterion::dhz: return "dhz";
        case Criterion::rank: return "rank";
        case Criterion::cf_case: return "cf_case";
        case Criterion::witness: return "witness";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::minimal: return "minimal";
        case Verdict::not_minimal: return "not_minimal";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view to_string(CfCase c) {
    switch (c) {
        case CfCase::zero_v: return "u != 0, v = 0";
        case CfCase::both_nonzero: return "u != 0, v != 0";
        case CfCase::zero_u: return "u = 0, v != 0";
    }
    return "?";
}

// ---- projective classes ------------------------------------------------------

std::uint64_t projective_class_count(std::uint32_t q, std::size_t k) {
    return (space_size(q, k, ~std::uint64_t{0}) - 1) / (q - 1);
}

// Representatives with their leading 1 at 0-based position p have index
// q^r + tail, r = k-1-p, tail < q^r.  Blocks appear in ascending r, and the
// block for r starts at ordinal (q^r - 1)/(q - 1).
Vector projective_representative(std::uint32_t q, std::size_t k, std::uint64_t ordinal) {
    if (ordinal >= projective_class_count(q, k)) throw Error("projective ordinal out of range");
    std::size_t r = 0;
    std::uint64_t start = 0, block = 1;
    while (ordinal >= start + block) {
        start += block;
        block *= q;
        ++r;
    }
    return vector_at(q, k, block + (ordinal - start));
}

std::uint64_t projective_ordinal(std::uint32_t q, const Vector& representative) {
    std::size_t p = 0;
    while (p < representative.size() && representative[p] == 0) ++p;
    if (p == representative.size() || representative[p] != 1) {
        throw Error("projective_ordinal needs a normalized representative");
    }
    const std::size_t r = representative.size() - 1 - p;
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < r; ++i) block *= q;
    const std::uint64_t start = (block - 1) / (q - 1);
    return start + (index_of(q, representative) - block);
}

Vector normalize_projective(const Field& field, Vector y) {
    auto it = std::find_if(y.begin(), y.end(), [](Scalar a) { return a != 0; });
    if (it == y.end()) throw Error("the zero vector has no projective class");
    if (*it != 1) y = scale(field, field.inv(*it), y);
    return y;
}

// ---- certificates --------------------------------------------------------------

namespace {

struct VectorHash {
    std::size_t operator()(const Vector& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Scalar a : v) h = (h ^ a) * 1099511628211ull;
        return h;
    }
};

void check_vector_shape(const Vector& v, std::size_t k, std::uint32_t q, const char* what) {
    if (v.size() != k) throw ParseError(std::string("certificate: ") + what + " has wrong length");
    for (Scalar a : v) {
        if (a >= q) throw ParseError(std::string("certificate: ") + what + " has an entry outside the field");
    }
}

}  // namespace

bool verify_certificate(const DefiningSet& d, const Certificate& cert) {
    const std::uint32_t q = d.field.q();
    const std::size_t k = d.k;
    for (const auto& e : cert.entries) {
        check_vector_shape(e.representative, cert.k, cert.q ? cert.q : q, "representative");
        if (!e.member_indices.empty() && !e.member_vectors.empty()) {
            throw ParseError("certificate: a class lists members both by index and by value");
        }
        for (const auto& v : e.member_vectors) check_vector_shape(v, cert.k, cert.q ? cert.q : q, "member vector");
    }
    if (cert.q != q || cert.k != k || cert.n != d.n()) return false;
    const std::uint64_t classes = projective_class_count(q, k);
    if (cert.class_count != classes || cert.entries.size() != classes) return false;

    std::unordered_set<Vector, VectorHash> members;
    bool by_value = false;
    for (const auto& e : cert.entries) by_value |= !e.member_vectors.empty();
    if (by_value) members.insert(d.vectors.begin(), d.vectors.end());

    std::vector<bool> seen(classes, false);
    for (const auto& e : cert.entries) {
        if (is_zero(e.representative)) return false;
        const Vector rep = normalize_projective(d.field, e.representative);
        if (rep != e.representative) return false;
        const std::uint64_t ord = projective_ordinal(q, rep);
        if (seen[ord]) return false;
        seen[ord] = true;

        RowEchelon ech(d.field, k);
        auto accept = [&](const Vector& v) {
            if (dot(d.field, rep, v) != 0) return false;
            ech.insert(v);
            return true;
        };
        for (std::size_t idx : e.member_indices) {
            if (idx < 1 || idx > d.n()) return false;
            if (!accept(d.vectors[idx - 1])) return false;
        }
        for (const auto& v : e.member_vectors) {
            if (!members.count(v)) return false;
            if (!accept(v)) return false;
        }
        if (ech.rank() != k - 1) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string certificate_json(const Certificate& cert) {
    nlohmann::ordered_json doc;
    doc["q"] = cert.q;
    doc["n"] = cert.n;
    doc["k"] = cert.k;
    doc["class_count"] = cert.class_count;
    bool by_value = false;
    for (const auto& e : cert.entries) by_value |= !e.member_vectors.empty();
    doc["members"] = by_value ? "vector" : "index";
    auto classes = nlohmann::ordered_json::array();
    for (const auto& e : cert.entries) {
        nlohmann::ordered_json c;
        c["y"] = e.representative;
        if (by_value) {
            c["vectors"] = e.member_vectors;
        } else {
            c["members"] = e.member_indices;
        }
        classes.push_back(std::move(c));
    }
    doc["classes"] = std::move(classes);
    return doc.dump() + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    Certificate cert;
    try {
        const auto doc = nlohmann::json::parse(text);
        cert.q = doc.at("q").get<std::uint32_t>();
        cert.n = doc.at("n").get<std::size_t>();
        cert.k = doc.at("k").get<std::size_t>();
        cert.class_count = doc.at("class_count").get<std::uint64_t>();
        const std::string mode = doc.value("members", std::string("index"));
        if (mode != "index" && mode != "vector") throw ParseError("unknown member mode '" + mode + "'");
        for (const auto& c : doc.at("classes")) {
            CertificateEntry e;
            e.representative = c.at("y").get<Vector>();
            if (mode == "index") {
                e.member_indices = c.at("members").get<std::vector<std::size_t>>();
            } else {
                e.member_vectors = c.at("vectors").get<std::vector<Vector>>();
            }
            cert.entries.push_back(std::move(e));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("certificate document: ") + e.what());
    }
    return cert;
}

// ---- reports -------------------------------------------------------------------

namespace {

std::string fmt_vector(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string describe(const MinimalityReport& report) {
    std::ostringstream out;
    out << "criterion: " << to_string(report.criterion) << "\n";
    out << "verdict: " << to_string(report.verdict) << "\n";
    if (report.classes_checked) out << "classes checked: " << report.classes_checked << "\n";
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, CoverViolation>) {
                out << "cover violation: c" << fmt_vector(w.b) << " is covered by c" << fmt_vector(w.a) << "\n";
            } else if constexpr (std::is_same_v<T, WeightIdentity>) {
                out << "weight identity: a = " << fmt_vector(w.a) << ", b = " << fmt_vector(w.b)
                    << ", sum = " << w.lhs << " = (q-1) wt(a) - wt(b) = " << w.rhs << "\n";
            } else if constexpr (std::is_same_v<T, WeightRatio>) {
                out << "w_min = " << w.w_min << ", w_max = " << w.w_max << "\n";
            } else if constexpr (std::is_same_v<T, RankWitness>) {
                if (report.verdict == Verdict::not_minimal) {
                    out << "failing class: y = " << fmt_vector(w.y) << ", rank H(y, D) = " << w.rank << "\n";
                }
            } else if constexpr (std::is_same_v<T, CaseWitness>) {
                out << "case: " << to_string(w.which) << ", rank " << w.rank << "\n";
            }
        },
        report.witness);
    return out.str();
}

// ---- deciders -------------------------------------------------------------------

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MINICODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultBudget;
}

namespace {

void require_full_rank(const DefiningSet& d) {
    const std::size_t r = rank(d.field, d.vectors);
    if (r != d.k) {
        throw Error("defining set has rank " + std::to_string(r) + " < k = " + std::to_string(d.k) +
                    "; the criteria need rank(D) = k");
    }
}

void pairwise_guard(const DefiningSet& d) {
    const std::uint64_t classes = projective_class_count(d.field.q(), d.k);
    if (classes > kPairwiseMaxClasses) {
        throw GuardError(std::to_string(classes) + " projective classes exceed the pairwise limit of " +
                         std::to_string(kPairwiseMaxClasses));
    }
    if (d.n() > kPairwiseMaxLength) {
        throw GuardError("length " + std::to_string(d.n()) + " exceeds the pairwise limit of " +
                         std::to_string(kPairwiseMaxLength));
    }
}

std::vector<Vector> class_codewords(const DefiningSet& d, std::uint64_t classes) {
    std::vector<Vector> words(classes);
    for (std::uint64_t o = 0; o < classes; ++o) {
        words[o] = codeword(projective_representative(d.field.q(), d.k, o), d);
    }
    return words;
}

}  // namespace

MinimalityReport is_minimal_definition(const DefiningSet& d, const CheckOptions&) {
    pairwise_guard(d);
    require_full_rank(d);
    const std::uint32_t q = d.field.q();
    const std::uint64_t classes = projective_class_count(q, d.k);
    const auto words = class_codewords(d, classes);

    // Supports as bitsets for fast containment tests.
    const std::size_t blocks = (d.n() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> supp(classes, std::vector<std::uint64_t>(blocks, 0));
    for (std::uint64_t o = 0; o < classes; ++o) {
        for (std::size_t i = 0; i < d.n(); ++i) {
            if (words[o][i]) supp[o][i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }

    MinimalityReport report;
    report.criterion = Criterion::definition;
    report.classes_checked = classes;
    for (std::uint64_t a = 0; a < classes; ++a) {
        for (std::uint64_t b = 0; b < classes; ++b) {
            if (a == b) continue;
            bool inside = true;
            for (std::size_t j = 0; j < blocks && inside; ++j) inside = (supp[b][j] & ~supp[a][j]) == 0;
            if (inside) {
                report.verdict = Verdict::not_minimal;
                report.witness = CoverViolation{projective_representative(q, d.k, a),
                                                projective_representative(q, d.k, b)};
                return report;
            }
        }
    }
    report.verdict = Verdict::minimal;
    return report;
}

MinimalityReport ab_condition(const WeightEnumerator& we) {
    const CodeParams p = params(we);
    MinimalityReport report;
    report.criterion = Criterion::ab;
    report.verdict = p.ratio_exceeds_bound ? Verdict::minimal : Verdict::inconclusive;
    report.witness = WeightRatio{p.w_min, p.w_max};
    return report;
}

MinimalityReport ab_condition(const DefiningSet& d, const CheckOptions& opts) {
    return ab_condition(weight_distribution(d, opts.jobs));
}

MinimalityReport dhz_criterion(const DefiningSet& d, const CheckOptions&) {
    pairwise_guard(d);
    require_full_rank(d);
    const Field& field = d.field;
    const std::uint32_t q = field.q();
    const std::uint64_t classes = projective_class_count(q, d.k);
    std::vector<std::int64_t> wt(classes);
    std::vector<Vector> reps(classes);
    for (std::uint64_t o = 0; o < classes; ++o) {
        reps[o] = projective_representative(q, d.k, o);
        wt[o] = static_cast<std::int64_t>(weight(codeword(reps[o], d)));
    }

    MinimalityReport report;
    report.criterion = Criterion::dhz;
    report.classes_checked = classes;
    for (std::uint64_t a = 0; a < classes; ++a) {
        for (std::uint64_t b = 0; b < classes; ++b) {
            if (a == b) continue;
            std::int64_t lhs = 0;
            for (Scalar c = 1; c < q; ++c) {
                Vector y = reps[a];
                axpy(field, c, reps[b], y);
                lhs += wt[projective_ordinal(q, normalize_projective(field, std::move(y)))];
            }
            const std::int64_t rhs = static_cast<std::int64_t>(q - 1) * wt[a] - wt[b];
            if (lhs == rhs) {
                report.verdict = Verdict::not_minimal;
                report.witness = WeightIdentity{reps[a], reps[b], lhs, rhs};
                return report;
            }
        }
    }
    report.verdict = Verdict::minimal;
    return report;
}

namespace {

// Streams D, keeping an echelon basis of the members orthogonal to y; stops at k-1.
RankWitness rank_of_hyperplane_section(const Vector& y, const DefiningSet& d) {
    RankWitness w;
    w.y = y;
    RowEchelon ech(d.field, d.k);
    std::vector<Vector> members;
    for (std::size_t i = 0; i < d.n() && ech.rank() + 1 < d.k; ++i) {
        const Vector& v = d.vectors[i];
        if (dot(d.field, y, v) != 0) continue;
        if (ech.insert(v)) {
            w.member_indices.push_back(i + 1);
            members.push_back(v);
        }
    }
    w.rank = ech.rank();
    w.basis.vectors = std::move(members);
    w.basis.ambient_dim = d.k;
    return w;
}

}  // namespace

MinimalityReport rank_criterion_codeword(const Vector& y, const DefiningSet& d) {
    if (y.size() != d.k) throw Error("message length does not match k");
    if (is_zero(y)) throw Error("the zero codeword is excluded from the rank criterion");
    require_full_rank(d);
    MinimalityReport report;
    report.criterion = Criterion::rank;
    report.classes_checked = 1;
    RankWitness w = rank_of_hyperplane_section(y, d);
    report.verdict = w.rank + 1 == d.k ? Verdict::minimal : Verdict::not_minimal;
    report.witness = std::move(w);
    return report;
}

MinimalityReport rank_criterion_code(const DefiningSet& d, const CheckOptions& opts) {
    const std::uint32_t q = d.field.q();
    const std::uint64_t classes = projective_class_count(q, d.k);
    const long double cost = static_cast<long double>(classes) * d.n() * d.k;
    if (cost > static_cast<long double>(opts.budget)) {
        const std::uint64_t required =
            cost >= 1.8e19L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(cost);
        throw BudgetExceeded(required, opts.budget);
    }
    require_full_rank(d);

    // Chunks of consecutive ordinals; a failure cancels every chunk that starts later.
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(256, classes / 64));
    const std::uint64_t chunks = (classes + chunk - 1) / chunk;
    std::atomic<std::uint64_t> first_fail{classes};
    std::vector<CertificateEntry> entries(opts.want_certificate ? classes : 0);
    std::mutex fail_mutex;
    std::optional<RankWitness> fail_witness;

    parallel_chunks(chunks, opts.jobs, [&](std::uint64_t c, unsigned) {
        const std::uint64_t lo = c * chunk, hi = std::min(classes, lo + chunk);
        for (std::uint64_t o = lo; o < hi; ++o) {
            if (o >= first_fail.load(std::memory_order_relaxed)) return;
            Vector y = projective_representative(q, d.k, o);
            RankWitness w = rank_of_hyperplane_section(y, d);
            if (w.rank + 1 != d.k) {
                std::lock_guard lock(fail_mutex);
                if (o < first_fail.load()) {
                    first_fail.store(o);
                    fail_witness = std::move(w);
                }
                return;
            }
            if (opts.want_certificate) {
                entries[o].representative = std::move(y);
                entries[o].member_indices = std::move(w.member_indices);
            }
        }
    });

    MinimalityReport report;
    report.criterion = Criterion::rank;
    if (fail_witness) {
        report.verdict = Verdict::not_minimal;
        report.classes_checked = first_fail.load() + 1;
        report.witness = std::move(*fail_witness);
        return report;
    }
    report.verdict = Verdict::minimal;
    report.classes_checked = classes;
    if (opts.want_certificate) {
        Certificate cert;
        cert.q = q;
        cert.n = d.n();
        cert.k = d.k;
        cert.class_count = classes;
        cert.entries = std::move(entries);
        report.certificate = std::move(cert);
    }
    return report;
}

MinimalityReport cf_case_check(Scalar u, const Vector& v, const FunctionSpec& f) {
    const Field& field = f.field();
    const std::size_t m = f.arity();
    const std::uint32_t q = field.q();
    if (v.size() != m) throw Error("v must have length m = " + std::to_string(m));
    if (!field.contains(u)) throw Error("u is outside the field");
    if (u == 0 && is_zero(v)) throw Error("(u, v) must be nonzero");
    if (auto omega = linearity_check(f)) {
        throw Error("f is linear; the code C_f has dimension m rather than m + 1");
    }
    space_size(q, m);

    CaseWitness w;
    w.u = u;
    w.v = v;
    const FunctionSpec table = f.materialize();
    const auto& values = std::get<TableFunction>(table.variant()).values;

    Vector x(m, 0);
    std::uint64_t idx = 0;
    if (u != 0) {
        // f(x) = omega . x on m independent points; omega = 0 covers the zeros of f.
        Vector omega(m, 0);
        if (is_zero(v)) {
            w.which = CfCase::zero_v;
        } else {
            w.which = CfCase::both_nonzero;
            omega = scale(field, field.neg(field.inv(u)), v);
            w.omega = omega;
        }
        RowEchelon ech(field, m);
        while (ech.rank() < m && next_vector(q, x)) {
            ++idx;
            if (values[idx] == dot(field, omega, x) && ech.insert(x)) w.alphas.push_back(x);
        }
        w.rank = ech.rank();
    } else {
        // m points of H(v) whose lifts (f(x), x) are independent.
        w.which = CfCase::zero_u;
        RowEchelon ech(field, m + 1);
        while (ech.rank() < m && next_vector(q, x)) {
            ++idx;
            if (dot(field, v, x) != 0) continue;
            Vector lift;
            lift.reserve(m + 1);
            lift.push_back(values[idx]);
            lift.insert(lift.end(), x.begin(), x.end());
            if (ech.insert(lift)) w.alphas.push_back(x);
        }
        w.rank = ech.rank();
    }

    MinimalityReport report;
    report.criterion = Criterion::cf_case;
    report.classes_checked = 1;
    report.verdict = w.rank == m ? Verdict::minimal : Verdict::not_minimal;
    report.witness = std::move(w);
    return report;
}

}  // namespace minicode
