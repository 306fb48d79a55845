#include <gtest/gtest.h>

#include "minicode/error.hpp"
#include "minicode/gf.hpp"

using namespace minicode;

namespace {

const std::uint32_t kSmallOrders[] = {2, 3, 4, 5, 7, 8, 9};

// Schoolbook polynomial product reduced by the field's modulus, digits LSB first.
Scalar poly_mul(const Field& f, Scalar a, Scalar b) {
    const std::uint32_t p = f.p();
    const unsigned e = f.e();
    std::vector<std::uint32_t> x(e), y(e), prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i) {
        x[i] = a % p, a /= p;
        y[i] = b % p, b /= p;
    }
    for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    if (e > 1) {
        const auto& mod = f.modulus();
        for (unsigned d = 2 * e - 1; d >= e; --d) {
            const std::uint32_t c = prod[d];
            if (!c) continue;
            for (unsigned i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i]) % p;
        }
    }
    Scalar out = 0;
    for (unsigned i = e; i-- > 0;) out = out * p + prod[i];
    return out;
}

Scalar poly_add(const Field& f, Scalar a, Scalar b) {
    Scalar out = 0, scale = 1;
    for (unsigned i = 0; i < f.e(); ++i) {
        out += ((a % f.p() + b % f.p()) % f.p()) * scale;
        a /= f.p(), b /= f.p(), scale *= f.p();
    }
    return out;
}

}  // namespace

TEST(Field, PrimeFieldExamples) {
    const Field f3 = Field::make(3);
    EXPECT_EQ(f3.q(), 3u);
    EXPECT_EQ(f3.add(2, 2), 1u);
    EXPECT_EQ(f3.inv(2), 2u);
    EXPECT_EQ(Field::make(2).q(), 2u);
}

TEST(Field, F4MultipliesByModulus) {
    const Field f4 = Field::make(2, 2, std::vector<Scalar>{1, 1, 1});
    const Scalar x = 2;
    EXPECT_EQ(f4.mul(x, x), 3u);  // x^2 = x + 1
    EXPECT_EQ(field_arith(f4, x, x, FieldOp::mul), 3u);
}

TEST(Field, ConstructionErrors) {
    EXPECT_THROW(Field::make(4), Error);
    EXPECT_THROW(Field::make(2, 2, std::vector<Scalar>{1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
    EXPECT_THROW(Field::make(2, 7), Error);                                // 128 > built-in table
    EXPECT_NO_THROW(Field::make(2, 7, std::vector<Scalar>{1, 1, 0, 0, 0, 0, 0, 1}));
    EXPECT_THROW(Field::of_order(6), Error);
}

TEST(Field, InverseOfZeroIsAnError) {
    const Field f = Field::of_order(9);
    EXPECT_THROW(f.inv(0), Error);
    EXPECT_THROW(field_arith(f, 0, 0, FieldOp::inv), Error);
}

TEST(Field, AxiomsOnAllTriples) {
    for (auto q : kSmallOrders) {
        const Field f = Field::of_order(q);
        for (Scalar a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, 0), a);
            EXPECT_EQ(f.mul(a, 1), a);
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            if (a) {
                EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
                EXPECT_EQ(f.inv(f.inv(a)), a);
            }
            for (Scalar b = 0; b < q; ++b) {
                EXPECT_EQ(f.add(a, b), f.add(b, a));
                EXPECT_EQ(f.mul(a, b), f.mul(b, a));
                EXPECT_EQ(f.sub(f.add(a, b), b), a);
                for (Scalar c = 0; c < q; ++c) {
                    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << "q=" << q;
                    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << "q=" << q;
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << "q=" << q;
                }
            }
        }
    }
}

TEST(Field, TablesMatchPolynomialArithmetic) {
    for (auto q : kSmallOrders) {
        const Field f = Field::of_order(q);
        for (Scalar a = 0; a < q; ++a)
            for (Scalar b = 0; b < q; ++b) {
                ASSERT_EQ(f.mul(a, b), poly_mul(f, a, b)) << "q=" << q << " " << a << "*" << b;
                ASSERT_EQ(f.add(a, b), poly_add(f, a, b)) << "q=" << q;
            }
    }
}

TEST(Field, UntabulatedOrdersAgreeWithPolynomialArithmetic) {
    // 2^9 = 512 is above the table limit, so the slow path is exercised.
    const Field f = Field::make(2, 9, std::vector<Scalar>{1, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    for (Scalar a = 1; a < f.q(); a += 37)
        for (Scalar b = 0; b < f.q(); b += 29) {
            ASSERT_EQ(f.mul(a, b), poly_mul(f, a, b));
            ASSERT_EQ(f.add(a, b), poly_add(f, a, b));
        }
    for (Scalar a = 1; a < f.q(); ++a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Field, Irreducibility) {
    EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
    EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));
    EXPECT_TRUE(is_irreducible(3, {1, 0, 1}));   // x^2 + 1 over F_3
    EXPECT_FALSE(is_irreducible(5, {1, 0, 1}));  // 2^2 = -1 mod 5
    EXPECT_FALSE(is_irreducible(2, {1, 0, 1, 0, 1}));  // (x^2 + x + 1)^2
}

TEST(Field, FromInteger) {
    const Field f = Field::of_order(9);
    EXPECT_EQ(f.from_integer(-1), 2u);
    EXPECT_EQ(f.from_integer(7), 1u);
}
