#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "minicode/code.hpp"
#include "minicode/error.hpp"
#include "minicode/minimality.hpp"
#include "oracles.hpp"

using namespace minicode;

namespace {

DefiningSet simplex(std::uint32_t q, std::size_t k) {
    return DefiningSet(Field::make(q), k, enumerate_vectors(q, k, false));
}

DefiningSet toy_non_minimal() { return DefiningSet(Field::make(2), 2, {{1, 0}, {1, 0}, {0, 1}}); }

CheckOptions serial() {
    CheckOptions o;
    o.jobs = 1;
    return o;
}

void expect_valid_cover(const DefiningSet& d, const MinimalityReport& r) {
    const auto* cv = std::get_if<CoverViolation>(&r.witness);
    ASSERT_TRUE(cv);
    EXPECT_TRUE(covers(codeword(cv->b, d), codeword(cv->a, d)));
    EXPECT_EQ(rank(d.field, std::vector<Vector>{cv->a, cv->b}), 2u);
}

}  // namespace

TEST(Projective, ClassesRoundTrip) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (std::size_t k = 1; k <= 4; ++k) {
            const std::uint64_t count = projective_class_count(q, k);
            EXPECT_EQ(count, (oracle::power(q, k) - 1) / (q - 1));
            const Field f = Field::of_order(q);
            std::uint64_t last = 0;
            for (std::uint64_t i = 0; i < count; ++i) {
                const Vector rep = projective_representative(q, k, i);
                ASSERT_EQ(projective_ordinal(q, rep), i);
                ASSERT_EQ(normalize_projective(f, rep), rep);
                const std::uint64_t idx = index_of(q, rep);
                if (i) ASSERT_GT(idx, last);
                last = idx;
                for (Scalar a = 1; a < q; ++a) ASSERT_EQ(normalize_projective(f, scale(f, a, rep)), rep);
            }
        }
    }
    EXPECT_THROW(normalize_projective(Field::make(3), {0, 0}), Error);
}

TEST(Definition, Examples) {
    EXPECT_EQ(is_minimal_definition(simplex(3, 3)).verdict, Verdict::minimal);
    const DefiningSet toy = toy_non_minimal();
    const MinimalityReport r = is_minimal_definition(toy);
    EXPECT_EQ(r.verdict, Verdict::not_minimal);
    expect_valid_cover(toy, r);
    const auto& cv = std::get<CoverViolation>(r.witness);
    EXPECT_EQ(codeword(cv.a, toy), (Vector{1, 1, 1}));
    EXPECT_EQ(is_minimal_definition(defining_set(find_preset("sec5_f2")->function)).verdict, Verdict::minimal);
}

TEST(Definition, Guards) {
    EXPECT_THROW(is_minimal_definition(defining_set(find_preset("sec7_f1")->function)), GuardError);
    EXPECT_THROW(dhz_criterion(defining_set(find_preset("sec7_f1")->function)), GuardError);
    // rank(D) < k
    EXPECT_THROW(is_minimal_definition(DefiningSet(Field::make(2), 2, {{1, 0}})), Error);
}

TEST(Ab, Examples) {
    const MinimalityReport f1 = ab_condition(defining_set(find_preset("sec5_f1")->function));
    EXPECT_EQ(f1.verdict, Verdict::minimal);
    const auto& ratio = std::get<WeightRatio>(f1.witness);
    EXPECT_EQ(ratio.w_min, 10u);
    EXPECT_EQ(ratio.w_max, 18u);
    EXPECT_EQ(ab_condition(defining_set(find_preset("sec4_f1")->function)).verdict, Verdict::inconclusive);
    EXPECT_EQ(ab_condition(simplex(2, 4)).verdict, Verdict::minimal);
}

TEST(Dhz, Examples) {
    EXPECT_EQ(dhz_criterion(defining_set(find_preset("sec4_f2")->function)).verdict, Verdict::minimal);
    const MinimalityReport r = dhz_criterion(toy_non_minimal());
    EXPECT_EQ(r.verdict, Verdict::not_minimal);
    const auto& wi = std::get<WeightIdentity>(r.witness);
    EXPECT_EQ(wi.lhs, wi.rhs);
}

TEST(Dhz, AgreesWithDefinitionOnRandomDefiningSets) {
    std::mt19937 rng(77);
    int compared = 0;
    while (compared < 300) {
        const std::uint32_t q = compared % 2 ? 3 : 2;
        const std::size_t k = 1 + rng() % 4, n = 1 + rng() % 20;
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < n; ++i) vs.push_back(vector_at(q, k, 1 + rng() % (oracle::power(q, k) - 1)));
        const DefiningSet d(Field::make(q), k, vs);
        if (rank(d.field, vs) != k) continue;
        const bool truth = oracle::minimal(q, vs, k);
        ASSERT_EQ(dhz_criterion(d).verdict == Verdict::minimal, truth);
        ASSERT_EQ(is_minimal_definition(d).verdict == Verdict::minimal, truth);
        ASSERT_EQ(rank_criterion_code(d, serial()).verdict == Verdict::minimal, truth);
        ++compared;
    }
}

TEST(Rank, CodewordExamples) {
    const DefiningSet s = simplex(3, 3);
    for (std::uint64_t i = 0; i < projective_class_count(3, 3); ++i)
        EXPECT_EQ(rank_criterion_codeword(projective_representative(3, 3, i), s).verdict, Verdict::minimal);
    const DefiningSet two(Field::make(3), 2, {{1, 0}, {0, 1}});
    const MinimalityReport r = rank_criterion_codeword({1, 1}, two);
    EXPECT_EQ(r.verdict, Verdict::not_minimal);
    EXPECT_EQ(std::get<RankWitness>(r.witness).rank, 0u);
    EXPECT_THROW(rank_criterion_codeword({0, 0}, two), Error);
}

TEST(Rank, CodeExamples) {
    const DefiningSet d = defining_set(find_preset("sec4_f1")->function);
    const MinimalityReport r = rank_criterion_code(d);
    EXPECT_EQ(r.verdict, Verdict::minimal);
    EXPECT_EQ(r.classes_checked, 121u);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(verify_certificate(d, *r.certificate));

    const DefiningSet toy = toy_non_minimal();
    const MinimalityReport bad = rank_criterion_code(toy);
    EXPECT_EQ(bad.verdict, Verdict::not_minimal);
    EXPECT_FALSE(bad.certificate);
    EXPECT_EQ(std::get<RankWitness>(bad.witness).y, (Vector{1, 1}));
}

TEST(Rank, MinimalWitnessSpansTheHyperplane) {
    const DefiningSet d = defining_set(find_preset("sec5_f3")->function);
    std::mt19937 rng(8);
    for (int it = 0; it < 40; ++it) {
        const Vector y = vector_at(2, 6, 1 + rng() % 63);
        const MinimalityReport r = rank_criterion_codeword(y, d);
        ASSERT_EQ(r.verdict, Verdict::minimal);
        const auto& w = std::get<RankWitness>(r.witness);
        EXPECT_EQ(w.basis.dim(), 5u);
        for (std::size_t i = 0; i < w.member_indices.size(); ++i) {
            EXPECT_EQ(d.vectors[w.member_indices[i] - 1], w.basis.vectors[i]);
            EXPECT_EQ(dot(d.field, y, w.basis.vectors[i]), 0u);
        }
    }
}

TEST(Rank, ScalarInvariance) {
    const Field f3 = Field::make(3);
    const DefiningSet d3 = defining_set(find_preset("sec4_f2")->function);
    for (std::uint64_t i = 0; i < projective_class_count(3, 5); ++i) {
        const Vector y = projective_representative(3, 5, i);
        EXPECT_EQ(rank_criterion_codeword(y, d3).verdict, rank_criterion_codeword(scale(f3, 2, y), d3).verdict);
    }
}

TEST(Rank, CodeVerdictIsTheConjunctionOfClassVerdicts) {
    std::mt19937 rng(10);
    for (int it = 0; it < 60; ++it) {
        const std::uint32_t q = it % 2 ? 3 : 2;
        const std::size_t m = 2 + rng() % 2;
        const FunctionSpec f = oracle::table_function(q, m, oracle::random_table(rng, q, m));
        if (linearity_check(f)) continue;
        const DefiningSet d = defining_set(f);
        bool all = true;
        std::uint64_t first_bad = 0;
        for (std::uint64_t i = projective_class_count(q, m + 1); i-- > 0;) {
            if (rank_criterion_codeword(projective_representative(q, m + 1, i), d).verdict != Verdict::minimal) {
                all = false;
                first_bad = i;
            }
        }
        const MinimalityReport r = rank_criterion_code(d, serial());
        ASSERT_EQ(r.verdict == Verdict::minimal, all);
        if (!all) EXPECT_EQ(std::get<RankWitness>(r.witness).y, projective_representative(q, m + 1, first_bad));
    }
}

TEST(Rank, FailingClassDoesNotDependOnWorkers) {
    const DefiningSet d = defining_set(find_preset("sec6_q2_literal")->function);
    CheckOptions o;
    o.want_certificate = false;
    std::optional<Vector> first;
    for (unsigned jobs : {1u, 2u, 3u, 8u}) {
        o.jobs = jobs;
        const MinimalityReport r = rank_criterion_code(d, o);
        ASSERT_EQ(r.verdict, Verdict::not_minimal);
        const Vector y = std::get<RankWitness>(r.witness).y;
        if (!first) first = y;
        EXPECT_EQ(y, *first) << "jobs=" << jobs;
    }
}

TEST(Rank, Budget) {
    const DefiningSet d = defining_set(find_preset("sec4_f1")->function);
    CheckOptions o;
    o.budget = 1000;
    try {
        rank_criterion_code(d, o);
        FAIL() << "budget not enforced";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.budget(), 1000u);
        EXPECT_GT(e.required(), 1000u);
    }
    ::setenv("MINICODE_BUDGET", "12345", 1);
    EXPECT_EQ(default_budget(), 12345u);
    ::setenv("MINICODE_BUDGET", "lots", 1);
    EXPECT_EQ(default_budget(), kDefaultBudget);
    ::unsetenv("MINICODE_BUDGET");
    EXPECT_EQ(default_budget(), kDefaultBudget);
}

TEST(Certificate, TamperingIsDetected) {
    const DefiningSet d = defining_set(find_preset("sec5_f1")->function);
    const Certificate good = *rank_criterion_code(d).certificate;
    ASSERT_TRUE(verify_certificate(d, good));

    Certificate missing = good;
    missing.entries.pop_back();
    EXPECT_FALSE(verify_certificate(d, missing));

    Certificate skew = good;
    auto& entry = skew.entries[5];
    for (std::size_t i = 1; i <= d.n(); ++i) {
        if (dot(d.field, entry.representative, d.vectors[i - 1]) != 0) {
            entry.member_indices[0] = i;
            break;
        }
    }
    EXPECT_FALSE(verify_certificate(d, skew));

    Certificate dup = good;
    dup.entries[3] = dup.entries[4];
    EXPECT_FALSE(verify_certificate(d, dup));

    Certificate short_rank = good;
    short_rank.entries[0].member_indices[1] = short_rank.entries[0].member_indices[0];
    EXPECT_FALSE(verify_certificate(d, short_rank));

    Certificate by_value = good;
    for (auto& e : by_value.entries) {
        for (auto i : e.member_indices) e.member_vectors.push_back(d.vectors[i - 1]);
        e.member_indices.clear();
    }
    EXPECT_TRUE(verify_certificate(d, by_value));
    by_value.entries[2].member_vectors[0] = Vector(6, 0);
    EXPECT_FALSE(verify_certificate(d, by_value));
}

TEST(Certificate, JsonRoundTrip) {
    const DefiningSet d = defining_set(find_preset("sec5_f2")->function);
    const Certificate c = *rank_criterion_code(d).certificate;
    const Certificate back = certificate_from_json(certificate_json(c));
    EXPECT_EQ(back.class_count, c.class_count);
    EXPECT_EQ(back.entries.size(), c.entries.size());
    EXPECT_TRUE(verify_certificate(d, back));
    EXPECT_EQ(certificate_json(back), certificate_json(c));
    EXPECT_THROW(certificate_from_json("[]"), ParseError);
    EXPECT_THROW(certificate_from_json("{\"q\": 2}"), ParseError);
}

TEST(Criteria, ExhaustiveBinaryAgreement) {
    int nonlinear = 0;
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
        std::vector<Scalar> t(8);
        for (int i = 0; i < 8; ++i) t[i] = bits >> i & 1;
        const FunctionSpec f = oracle::table_function(2, 3, t);
        if (linearity_check(f)) continue;
        ++nonlinear;
        const DefiningSet d = defining_set(f);
        const bool truth = oracle::minimal(2, oracle::defining_set(2, 3, t), 4);
        const Verdict def = is_minimal_definition(d).verdict;
        ASSERT_EQ(def == Verdict::minimal, truth) << bits;
        ASSERT_EQ(dhz_criterion(d).verdict, def) << bits;
        ASSERT_EQ(rank_criterion_code(d, serial()).verdict, def) << bits;
        if (ab_condition(d).verdict == Verdict::minimal) ASSERT_TRUE(truth) << bits;
    }
    // 2^8 tables minus the 16 linear ones (8 omegas, either value at 0).
    EXPECT_EQ(nonlinear, 240);
}

TEST(Criteria, RandomTernaryAgreement) {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 200) {
        const std::size_t m = 1 + rng() % 3;
        const auto t = oracle::random_table(rng, 3, m);
        const FunctionSpec f = oracle::table_function(3, m, t);
        if (linearity_check(f)) continue;
        ++done;
        const DefiningSet d = defining_set(f);
        const bool truth = oracle::minimal(3, oracle::defining_set(3, m, t), m + 1);
        ASSERT_EQ(is_minimal_definition(d).verdict == Verdict::minimal, truth);
        ASSERT_EQ(dhz_criterion(d).verdict == Verdict::minimal, truth);
        ASSERT_EQ(rank_criterion_code(d, serial()).verdict == Verdict::minimal, truth);
        if (ab_condition(d).verdict == Verdict::minimal) ASSERT_TRUE(truth);
    }
}

TEST(Criteria, NotMinimalAlwaysCarriesAWitness) {
    std::mt19937 rng(55);
    for (int it = 0; it < 80; ++it) {
        const FunctionSpec f = oracle::table_function(3, 2, oracle::random_table(rng, 3, 2));
        if (linearity_check(f)) continue;
        const DefiningSet d = defining_set(f);
        for (const MinimalityReport& r : {is_minimal_definition(d), dhz_criterion(d), rank_criterion_code(d)}) {
            if (r.verdict == Verdict::not_minimal) EXPECT_FALSE(std::holds_alternative<std::monostate>(r.witness));
            if (r.verdict == Verdict::inconclusive) ADD_FAILURE() << "only ab may be inconclusive";
        }
        if (is_minimal_definition(d).verdict == Verdict::not_minimal) expect_valid_cover(d, is_minimal_definition(d));
    }
}

TEST(CfCase, Examples) {
    const FunctionSpec one = oracle::table_function(2, 3, std::vector<Scalar>(8, 1));
    EXPECT_EQ(cf_case_check(1, {0, 0, 0}, one).verdict, Verdict::not_minimal);
    const MinimalityReport r = cf_case_check(1, {0, 0, 0, 0, 0}, find_preset("sec5_f1")->function);
    EXPECT_EQ(r.verdict, Verdict::minimal);
    const auto& w = std::get<CaseWitness>(r.witness);
    EXPECT_EQ(w.which, CfCase::zero_v);
    EXPECT_EQ(w.alphas.size(), 5u);
    EXPECT_THROW(cf_case_check(0, {0, 0, 0}, one), Error);
    std::vector<Scalar> lin;
    for (const auto& x : enumerate_vectors(2, 3, true)) lin.push_back(x[0]);
    EXPECT_THROW(cf_case_check(1, {0, 0, 1}, oracle::table_function(2, 3, lin)), Error);
}

TEST(CfCase, AgreesWithRankCriterion) {
    std::mt19937 rng(50);
    int functions = 0;
    while (functions < 50) {
        const FunctionSpec f = oracle::table_function(3, 3, oracle::random_table(rng, 3, 3));
        if (linearity_check(f)) continue;
        ++functions;
        const DefiningSet d = defining_set(f);
        for (std::uint64_t i = 0; i < projective_class_count(3, 4); ++i) {
            const Vector y = projective_representative(3, 4, i);
            const Vector v(y.begin() + 1, y.end());
            const MinimalityReport c = cf_case_check(y[0], v, f);
            ASSERT_EQ(c.verdict, rank_criterion_codeword(y, d).verdict);
            const auto& w = std::get<CaseWitness>(c.witness);
            if (c.verdict != Verdict::minimal) continue;
            ASSERT_EQ(w.alphas.size(), 3u);
            for (const auto& a : w.alphas) {
                const Scalar fa = f(a);
                if (y[0] == 0) ASSERT_EQ(dot(d.field, v, a), 0u);
                else ASSERT_EQ(d.field.add(d.field.mul(y[0], fa), dot(d.field, v, a)), 0u);
            }
        }
    }
}
