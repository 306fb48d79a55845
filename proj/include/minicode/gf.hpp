#pragma once

// Arithmetic in F_q for q = p^e.
//
// Elements are canonical integers in [0, q).  For e > 1 the base-p digits of an
// element are its coordinates in the polynomial basis 1, x, ..., x^(e-1), least
// significant digit first, so x is encoded as p and x + 1 as p + 1.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace minicode {

using Scalar = std::uint32_t;

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    std::vector<Scalar> modulus;  // ascending coefficients, empty for prime fields
    // Full operation tables, populated when q <= kTableLimit.
    std::vector<Scalar> add;
    std::vector<Scalar> mul;
    std::vector<Scalar> neg;
    std::vector<Scalar> inv;
};

}  // namespace detail

/// A finite field F_q.  Immutable and cheap to copy (the lookup tables are shared).
class Field {
public:
    /// Largest field order for which full add/mul tables are precomputed.
    static constexpr std::uint32_t kTableLimit = 256;
    /// Largest supported field order.
    static constexpr std::uint32_t kMaxOrder = 1u << 16;
    /// Largest order covered by the built-in modulus table.
    static constexpr std::uint32_t kBuiltinModulusLimit = 64;

    /// Builds F_{p^e}.  `modulus` lists the e+1 ascending coefficients of a monic
    /// irreducible polynomial; when omitted for e > 1 the built-in table is used.
    static Field make(std::uint32_t p, unsigned e = 1,
                      std::optional<std::vector<Scalar>> modulus = std::nullopt);

    /// The field of order q with the built-in modulus.
    static Field of_order(std::uint32_t q);

    std::uint32_t p() const { return data_->p; }
    unsigned e() const { return data_->e; }
    std::uint32_t q() const { return data_->q; }
    const std::vector<Scalar>& modulus() const { return data_->modulus; }
    bool is_prime_field() const { return data_->e == 1; }
    bool contains(Scalar a) const { return a < data_->q; }

    Scalar add(Scalar a, Scalar b) const {
        if (!data_->add.empty()) return data_->add[a * data_->q + b];
        return add_slow(a, b);
    }
    Scalar mul(Scalar a, Scalar b) const {
        if (!data_->mul.empty()) return data_->mul[a * data_->q + b];
        return mul_slow(a, b);
    }
    Scalar neg(Scalar a) const {
        if (!data_->neg.empty()) return data_->neg[a];
        return neg_slow(a);
    }
    Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

    /// Multiplicative inverse; throws minicode::Error on zero.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    /// Image of an integer in the prime subfield (n mod p).
    Scalar from_integer(std::int64_t n) const;

    /// Renders an element as its canonical integer.
    std::string to_string(Scalar a) const { return std::to_string(a); }

    friend bool operator==(const Field& a, const Field& b) {
        return a.data_ == b.data_ ||
               (a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus());
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    Scalar add_slow(Scalar a, Scalar b) const;
    Scalar mul_slow(Scalar a, Scalar b) const;
    Scalar neg_slow(Scalar a) const;

    std::shared_ptr<const detail::FieldData> data_;
};

enum class FieldOp { add, sub, mul, inv, neg };

/// Single entry point for the five field operations; `b` is ignored by inv and neg.
Scalar field_arith(const Field& field, Scalar a, Scalar b, FieldOp op);

bool is_prime(std::uint32_t n);

/// True when the monic polynomial (ascending coefficients mod p) has no monic
/// factor of degree 1 .. deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<Scalar>& poly);

}  // namespace minicode
