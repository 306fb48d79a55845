// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minicode/code.hpp"
#include "minicode/minimality.hpp"
#include "minicode/witness.hpp"
#include "oracles.hpp"

using namespace minicode;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Expect {
    std::string preset;
    std::size_t n, k, d;
    std::string enumerator;  // empty: not checked
    std::size_t w_max = 0;   // 0: not checked
};

void check_code(const Expect& e, Outcome& out) {
    const DefiningSet d = defining_set(find_preset(e.preset)->function);
    const WeightEnumerator we = weight_distribution(d);
    const CodeParams p = params(we);
    std::ostringstream got;
    got << e.preset << " [" << p.n << "," << p.k << "," << p.d << "]";
    if (p.n != e.n || p.k != e.k || p.d != e.d) {
        out.fail(got.str() + ", expected [" + std::to_string(e.n) + "," + std::to_string(e.k) + "," +
                 std::to_string(e.d) + "]");
    }
    if (!e.enumerator.empty() && enumerator_text(we) != e.enumerator) {
        out.fail(e.preset + " enumerator " + enumerator_text(we));
    }
    if (e.w_max && p.w_max != e.w_max) out.fail(e.preset + " w_max " + std::to_string(p.w_max));
    CheckOptions opts;
    opts.want_certificate = false;
    const MinimalityReport r = rank_criterion_code(d, opts);
    if (r.verdict != Verdict::minimal) {
        std::string why = e.preset + " is " + std::string(to_string(r.verdict));
        if (const auto* w = std::get_if<RankWitness>(&r.witness)) {
            why += " (class y = (";
            for (std::size_t i = 0; i < w->y.size(); ++i) why += (i ? "," : "") + std::to_string(w->y[i]);
            why += "), rank H(y, D) = " + std::to_string(w->rank) + " < " + std::to_string(d.k - 1) + ")";
        }
        out.fail(why);
    }
    if (out.pass) out.note(got.str() + " minimal");
}

void time_limit(double seconds, double limit, Outcome& out) {
    if (seconds > limit) {
        std::ostringstream s;
        s << "took " << seconds << " s, limit " << limit << " s";
        out.fail(s.str());
    }
}

// Nonlinear binary functions on F_2^3 plus 200 random ternary ones on F_3^3.
struct Instance {
    std::uint32_t q;
    std::size_t m;
    std::vector<Scalar> table;
};

std::vector<Instance> oracle_instances() {
    std::vector<Instance> out;
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
        std::vector<Scalar> t(8);
        for (int i = 0; i < 8; ++i) t[i] = bits >> i & 1;
        if (!linearity_check(oracle::table_function(2, 3, t))) out.push_back({2, 3, t});
    }
    std::mt19937 rng(20240601);
    std::size_t ternary = 0;
    while (ternary < 200) {
        auto t = oracle::random_table(rng, 3, 3);
        if (linearity_check(oracle::table_function(3, 3, t))) continue;
        out.push_back({3, 3, std::move(t)});
        ++ternary;
    }
    return out;
}

Outcome criterion_oracle(bool ab_side) {
    Outcome out;
    std::size_t disagreements = 0, ab_minimal = 0, counterexamples = 0;
    const auto instances = oracle_instances();
    CheckOptions opts;
    opts.want_certificate = false;
    for (const auto& in : instances) {
        const DefiningSet d = defining_set(oracle::table_function(in.q, in.m, in.table));
        const Verdict def = is_minimal_definition(d, opts).verdict;
        if (!ab_side) {
            if (dhz_criterion(d, opts).verdict != def || rank_criterion_code(d, opts).verdict != def) ++disagreements;
            continue;
        }
        if (ab_condition(d, opts).verdict != Verdict::minimal) continue;
        ++ab_minimal;
        const bool truth = oracle::minimal(in.q, oracle::defining_set(in.q, in.m, in.table), in.m + 1);
        if (!truth || def != Verdict::minimal) ++counterexamples;
    }
    std::ostringstream s;
    if (!ab_side) {
        s << instances.size() << " instances, " << disagreements << " disagreements";
        if (disagreements) out.fail(s.str());
    } else {
        s << ab_minimal << " ab-minimal instances, " << counterexamples << " counterexamples";
        if (counterexamples) out.fail(s.str());
    }
    if (out.pass) out.note(s.str());
    return out;
}

Outcome criterion_witness_soundness() {
    Outcome out;
    std::size_t sweeps = 0, classes = 0, gaps = 0;
    for (const auto& p : paper_presets()) {
        for (TheoremId thm : kAllTheorems) {
            HypothesisResult h;
            try {
                h = validate_hypotheses(p.function, thm);
            } catch (const Error&) {
                continue;  // variant cannot express this theorem
            }
            if (!h) continue;
            try {
                const WitnessSweep sweep = theorem_witness_sweep(thm, p.function);
                const DefiningSet d = defining_set(p.function);
                if (!verify_certificate(d, sweep.certificate)) {
                    out.fail(p.name + "/" + std::string(to_string(thm)) + " certificate rejected");
                }
                ++sweeps;
                classes += sweep.classes;
                gaps += sweep.gap_filled;
            } catch (const std::exception& e) {
                out.fail(p.name + "/" + std::string(to_string(thm)) + ": " + e.what());
            }
        }
    }
    std::ostringstream s;
    s << sweeps << " preset/theorem sweeps, " << classes << " classes verified";
    if (gaps) s << ", " << gaps << " with a substituted vector";
    out.note(s.str());
    return out;
}

Outcome criterion_lemmas() {
    Outcome out;
    std::size_t failures = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (std::size_t m = (q == 2 ? 2 : 1); m <= 8; ++m) {
            const WitnessBasis b = full_weight_basis(f, m);
            const std::size_t floor = q >= 3 ? m : (m % 2 == 0 ? m - 1 : m - 2);
            bool ok = b.vectors.size() == m && rank(f, b.vectors) == m;
            for (const auto& v : b.vectors) ok = ok && weight(v) >= floor;
            failures += !ok;
        }
    }
    std::mt19937 rng(4242);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const Field f = Field::make(q);
        for (int it = 0; it < 500; ++it) {
            const std::size_t m = 1 + rng() % 6;
            const Vector w = vector_at(q, m, 1 + rng() % (oracle::power(q, m) - 1));
            const WitnessBasis u = unit_inner_basis(f, w);
            bool ok = u.vectors.size() == m && rank(f, u.vectors) == m;
            for (const auto& b : u.vectors) ok = ok && dot(f, w, b) == 1 && weight(b) >= 1 && weight(b) <= 2;
            const WitnessBasis h = hyperplane_low_weight_basis(f, w);
            ok = ok && h.vectors.size() == m - 1 && rank(f, h.vectors) == m - 1;
            for (const auto& b : h.vectors) ok = ok && dot(f, w, b) == 0 && weight(b) >= 1 && weight(b) <= 2;
            failures += !ok;
        }
    }
    const Field f3 = Field::make(3);
    for (int it = 0; it < 500; ++it) {
        const std::size_t l = 1 + rng() % 3, n = 1 + rng() % 5;
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < l; ++i) rows.push_back(vector_at(3, n, rng() % oracle::power(3, n)));
        const Vector x = vector_at(3, n, rng() % oracle::power(3, n));
        Vector b;
        for (const auto& r : rows) b.push_back(dot(f3, r, x));
        const Matrix a(n, rows);
        const auto sols = linear_system_solutions(f3, a, b);
        const std::size_t r = rank(f3, a);
        bool ok = sols.size() == (is_zero(b) ? n - r : n - r + 1) && rank(f3, sols) == sols.size();
        for (const auto& s : sols)
            for (std::size_t i = 0; i < l; ++i) ok = ok && dot(f3, rows[i], s) == b[i];
        failures += !ok;
    }
    std::ostringstream s;
    s << failures << " failures";
    if (failures) out.fail(s.str());
    else out.note(s.str());
    return out;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    auto codes = [](std::vector<Expect> es) {
        return [es] {
            Outcome o;
            for (const auto& e : es) check_code(e, o);
            return o;
        };
    };
    const std::vector<Criterion> criteria = {
        {1, "ternary weight-threshold example f_1", 1,
         codes({{"sec4_f1", 80, 5, 32, "1 + 2 z^32 + 64 z^50 + 48 z^53 + 80 z^54 + 32 z^56 + 16 z^65"}})},
        {2, "ternary example f_2", 1,
         codes({{"sec4_f2", 80, 5, 41, "1 + 2 z^41 + 24 z^47 + 40 z^50 + 24 z^53 + 80 z^54 + 58 z^56 + 14 z^65"}})},
        {3, "binary complement-threshold examples", 1,
         codes({{"sec5_f1", 31, 6, 10, "1 + 6 z^10 + 47 z^16 + 10 z^18"},
                {"sec5_f2", 31, 6, 6, "1 + 1 z^6 + 5 z^12 + 5 z^14 + 41 z^16 + 10 z^18 + 1 z^20"},
                {"sec5_f3", 31, 6, 10, "1 + 3 z^10 + 4 z^12 + 3 z^14 + 43 z^16 + 9 z^18 + 1 z^22"}})},
        {4, "binary Maiorana-McFarland example", 1,
         codes({{"sec6_q2", 127, 8, 39,
                 "1 + 1 z^39 + 12 z^55 + 8 z^59 + 72 z^63 + 127 z^64 + 24 z^67 + 10 z^71 + 1 z^103"}})},
        {5, "ternary Maiorana-McFarland example", 30,
         codes({{"sec6_q3", 2186, 8, 1295,
                 "1 + 2 z^1295 + 18 z^1376 + 90 z^1403 + 108 z^1439 + 3588 z^1457 + 2186 z^1458 + 378 z^1466 + "
                 "180 z^1484 + 8 z^1538 + 2 z^2024"}})},
        {6, "m = 8 ternary monomial sums", 600,
         [] {
             Outcome o;
             check_code({"sec7_f1", 6560, 9, 2208, "", 4602}, o);
             check_code({"sec7_f3", 6560, 9, 2424, "", 4764}, o);
             check_code({"sec7_f4", 6560, 9, 2664, "", 4716}, o);
             const DefiningSet d = defining_set(find_preset("sec7_f2")->function);
             const CodeParams p = params(weight_distribution(d));
             CheckOptions opts;
             opts.want_certificate = false;
             if (p.w_max != 4401) o.fail("sec7_f2 w_max " + std::to_string(p.w_max));
             if (rank_criterion_code(d, opts).verdict != Verdict::minimal) o.fail("sec7_f2 not minimal");
             o.note("sec7_f2 computed d = " + std::to_string(p.d) + " (published 4320 and 4302)");
             return o;
         }},
        {7, "distance formula 2^(m-1) - 2^(t-1)(s-1) for m = 7", 1,
         codes({{"dhz_m7", 127, 8, (1u << 6) - (1u << 2) * 3, ""}})},
        {8, "definition, dhz and rank criteria agree", 60, [] { return criterion_oracle(false); }},
        {9, "weight-ratio bound is one-sided", 60, [] { return criterion_oracle(true); }},
        {10, "theorem witnesses on every validated preset", 600, criterion_witness_soundness},
        {11, "basis lemmas and linear-system solution counts", 60, criterion_lemmas},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        time_limit(secs, c.limit, o);
        failed += !o.pass;
        std::printf("criterion %2d  %s  %7.2fs  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.name,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
