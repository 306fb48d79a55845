#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "minicode/code.hpp"
#include "minicode/error.hpp"
#include "oracles.hpp"

using namespace minicode;

namespace {

FunctionSpec linear_f3() {
    // f(x) = x1 + 2 x3 over F_3^3
    std::vector<Scalar> t;
    for (const auto& x : enumerate_vectors(3, 3, true)) t.push_back((x[0] + 2 * x[2]) % 3);
    return oracle::table_function(3, 3, t);
}

WeightEnumerator enumerator_of(const std::string& preset) {
    return weight_distribution(defining_set(find_preset(preset)->function), 1);
}

}  // namespace

TEST(Code, DefiningSetOfConstantOne) {
    const DefiningSet d = defining_set(oracle::table_function(2, 2, {1, 1, 1, 1}));
    EXPECT_EQ(d.k, 3u);
    EXPECT_EQ(d.vectors, (std::vector<Vector>{{1, 0, 1}, {1, 1, 0}, {1, 1, 1}}));
    EXPECT_EQ(d.origin, DefiningSet::Origin::from_function);
    EXPECT_EQ(d.m, 2u);
}

TEST(Code, DefiningSetShapeForPreset) {
    const DefiningSet d = defining_set(find_preset("sec4_f1")->function);
    EXPECT_EQ(d.n(), 80u);
    EXPECT_EQ(d.k, 5u);
    EXPECT_EQ(rank(d.field, d.vectors), 5u);
}

TEST(Code, ZeroFunctionHasRankM) {
    const DefiningSet d = defining_set(oracle::table_function(3, 3, std::vector<Scalar>(27, 0)));
    for (const auto& v : d.vectors) EXPECT_EQ(v[0], 0u);
    EXPECT_EQ(rank(d.field, d.vectors), 3u);
}

TEST(Code, LinearityCheck) {
    EXPECT_EQ(linearity_check(linear_f3()), (Vector{1, 0, 2}));
    EXPECT_FALSE(linearity_check(oracle::table_function(2, 2, {1, 1, 1, 1})));
    EXPECT_FALSE(linearity_check(find_preset("sec4_f1")->function));
}

TEST(Code, LinearityCheckMatchesRank) {
    std::mt19937 rng(21);
    for (int it = 0; it < 300; ++it) {
        const std::uint32_t q = it % 2 ? 3 : 2;
        const std::size_t m = 1 + rng() % 3;
        auto table = oracle::random_table(rng, q, m);
        table[0] = 0;
        if (it % 5 == 0) {  // force some linear ones
            const Vector w = vector_at(q, m, rng() % oracle::power(q, m));
            for (std::uint64_t i = 0; i < table.size(); ++i) table[i] = dot(Field::make(q), w, vector_at(q, m, i));
        }
        const FunctionSpec f = oracle::table_function(q, m, table);
        const DefiningSet d = defining_set(f);
        EXPECT_EQ(!linearity_check(f), rank(d.field, d.vectors) == m + 1);
    }
}

TEST(Code, CodewordOfLinearPartHasHyperplaneWeight) {
    const FunctionSpec f = find_preset("sec4_f1")->function;
    const DefiningSet d = defining_set(f);
    for (const auto& v : enumerate_vectors(3, 4, false)) {
        Vector y{0};
        y.insert(y.end(), v.begin(), v.end());
        ASSERT_EQ(weight(codeword(y, d)), 81u - 27u);
    }
    EXPECT_TRUE(is_zero(codeword({0, 0, 0, 0, 0}, d)));
    EXPECT_THROW(codeword({1, 0}, d), Error);
}

TEST(Code, CodewordCoordinatesAreUfPlusVx) {
    const FunctionSpec f = find_preset("sec5_f2")->function;
    const DefiningSet d = defining_set(f);
    const Vector y{1, 1, 0, 1, 1, 0};
    const Vector c = codeword(y, d);
    const auto xs = enumerate_vectors(2, 5, false);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Vector v(y.begin() + 1, y.end());
        EXPECT_EQ(c[i], (f(xs[i]) + dot(d.field, v, xs[i])) % 2);
    }
}

TEST(Code, DistributionMatchesOracleOnRandomFunctions) {
    std::mt19937 rng(1234);
    for (int it = 0; it < 120; ++it) {
        const std::uint32_t q = it % 2 ? 3 : 2;
        const std::size_t m = 1 + rng() % 3;
        const auto table = oracle::random_table(rng, q, m);
        const DefiningSet d = defining_set(oracle::table_function(q, m, table));
        const WeightEnumerator we = weight_distribution(d, 1 + it % 3);
        const auto want = oracle::distribution(q, oracle::defining_set(q, m, table), m + 1);
        EXPECT_EQ(we.counts, want);
        EXPECT_EQ(we.total(), oracle::power(q, m + 1));
    }
}

TEST(Code, DistributionMatchesOracleOnRandomDefiningSets) {
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        const std::uint32_t q = it % 2 ? 3 : 2;
        const std::size_t k = 1 + rng() % 4, n = 1 + rng() % 12;
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < n; ++i) vs.push_back(vector_at(q, k, rng() % oracle::power(q, k)));
        const DefiningSet d(Field::make(q), k, vs);
        const WeightEnumerator we = weight_distribution(d, 2);
        EXPECT_EQ(we.counts, oracle::distribution(q, vs, k));
        EXPECT_EQ(we.count(0) == 1, rank(d.field, vs) == k);
    }
}

TEST(Code, ScalarMultiplesHaveEqualWeight) {
    const DefiningSet d = defining_set(find_preset("sec4_f2")->function);
    std::mt19937 rng(4);
    for (int it = 0; it < 50; ++it) {
        const Vector y = vector_at(3, 5, rng() % 243);
        EXPECT_EQ(weight(codeword(y, d)), weight(codeword(scale(d.field, 2, y), d)));
    }
}

TEST(Code, ResultIndependentOfWorkerCount) {
    const DefiningSet d = defining_set(find_preset("sec6_q3")->function);
    const WeightEnumerator one = weight_distribution(d, 1);
    EXPECT_EQ(one, weight_distribution(d, 3));
    EXPECT_EQ(one, weight_distribution(d, 8));
}

TEST(Code, PublishedEnumerators) {
    EXPECT_EQ(enumerator_text(enumerator_of("sec4_f1")), "1 + 2 z^32 + 64 z^50 + 48 z^53 + 80 z^54 + 32 z^56 + 16 z^65");
    EXPECT_EQ(enumerator_text(enumerator_of("sec5_f1")), "1 + 6 z^10 + 47 z^16 + 10 z^18");
}

TEST(Code, Params) {
    const CodeParams p = params(enumerator_of("sec4_f1"));
    EXPECT_EQ(p.n, 80u);
    EXPECT_EQ(p.k, 5u);
    EXPECT_EQ(p.d, 32u);
    EXPECT_EQ(p.w_min, 32u);
    EXPECT_EQ(p.w_max, 65u);
    EXPECT_FALSE(p.ratio_exceeds_bound);
    EXPECT_TRUE(params(enumerator_of("sec5_f1")).ratio_exceeds_bound);
}

TEST(Code, EmptyCodeIsRefused) {
    const DefiningSet empty(Field::make(2), 3, {});
    EXPECT_THROW(weight_distribution(empty), GuardError);
}

TEST(Code, EnumeratorDocuments) {
    WeightEnumerator we;
    we.q = 2;
    we.n = 3;
    we.k = 2;
    we.counts = {{0, 1}, {2, 2}, {10, 1}};
    EXPECT_EQ(enumerator_text(we), "1 + 2 z^2 + 1 z^10");
    const std::string json = enumerator_json(we);
    // Numeric, not lexicographic, key order.
    EXPECT_LT(json.find("\"2\""), json.find("\"10\""));
    EXPECT_EQ(enumerator_from_json(json), we);
    EXPECT_EQ(parse_enumerator_text("1 + 2 z^2 + 1 z^10", 2, 3, 2), we);
    EXPECT_THROW(enumerator_from_json("{"), ParseError);
    EXPECT_THROW(parse_enumerator_text("1 + z", 2, 3, 2), ParseError);
}

TEST(Code, GeneratorAndDefiningMatrices) {
    const DefiningSet d = defining_set(find_preset("sec5_f1")->function);
    const Matrix g = generator_matrix(d);
    EXPECT_EQ(g.row_count(), d.k);
    for (std::size_t i = 0; i < d.k; ++i) EXPECT_EQ(g.rows[i], codeword(unit_vector(d.k, i + 1), d));
    const DefiningSet from_gen = defining_set_from_matrix({d.field, g}, true);
    const DefiningSet from_def = defining_set_from_matrix({d.field, defining_matrix(d)}, false);
    EXPECT_EQ(from_gen.vectors, d.vectors);
    EXPECT_EQ(from_def.vectors, d.vectors);
}
