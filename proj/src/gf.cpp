#include "minicode/gf.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "minicode/error.hpp"

namespace minicode {

namespace {

using Poly = std::vector<Scalar>;

// Conway polynomials, ascending coefficients.
const std::map<std::pair<std::uint32_t, unsigned>, Poly>& builtin_moduli() {
    static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    return table;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Scalar lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<Scalar>((a[shift + i] + (p - lead) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(Scalar a, std::uint32_t p, unsigned e) {
    Poly d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Scalar from_digits(const Poly& d, std::uint32_t p) {
    Scalar v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<Scalar>& poly) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Every monic candidate divisor of degree d, enumerated by its low coefficients.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t r = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Scalar>(r % p);
                r /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, unsigned e, std::optional<std::vector<Scalar>> modulus) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            throw Error("field order " + std::to_string(p) + "^" + std::to_string(e) +
                        " exceeds the supported maximum " + std::to_string(kMaxOrder));
        }
    }

    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->e = e;
    data->q = static_cast<std::uint32_t>(q);

    if (e > 1) {
        Poly mod;
        if (modulus && !modulus->empty()) {
            mod = *modulus;
        } else {
            auto it = builtin_moduli().find({p, e});
            if (it == builtin_moduli().end()) {
                throw Error("no built-in modulus for F_" + std::to_string(q) +
                            "; supply an irreducible polynomial of degree " + std::to_string(e));
            }
            mod = it->second;
        }
        if (mod.size() != e + 1) {
            throw Error("modulus must have exactly " + std::to_string(e + 1) + " coefficients");
        }
        for (Scalar c : mod) {
            if (c >= p) throw Error("modulus coefficient " + std::to_string(c) + " not in [0, p)");
        }
        if (mod.back() != 1) throw Error("modulus must be monic");
        if (!is_irreducible(p, mod)) throw Error("modulus is reducible over F_" + std::to_string(p));
        data->modulus = std::move(mod);
    } else if (modulus && !modulus->empty()) {
        throw Error("a prime field takes no modulus");
    }

    Field proto{data};
    if (data->q <= kTableLimit) {
        const std::uint32_t n = data->q;
        data->add.resize(static_cast<std::size_t>(n) * n);
        data->mul.resize(static_cast<std::size_t>(n) * n);
        data->neg.resize(n);
        data->inv.assign(n, 0);
        for (Scalar a = 0; a < n; ++a) {
            data->neg[a] = proto.neg_slow(a);
            for (Scalar b = 0; b < n; ++b) {
                data->add[a * n + b] = proto.add_slow(a, b);
                data->mul[a * n + b] = proto.mul_slow(a, b);
            }
        }
        for (Scalar a = 1; a < n; ++a) {
            for (Scalar b = 1; b < n; ++b) {
                if (data->mul[a * n + b] == 1) {
                    data->inv[a] = b;
                    break;
                }
            }
        }
    }
    return Field{std::move(data)};
}

Field Field::of_order(std::uint32_t q) {
    if (q < 2) throw Error("field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw Error(std::to_string(q) + " is not a prime power");
    return make(p, e);
}

Scalar Field::add_slow(Scalar a, Scalar b) const {
    const std::uint32_t p = data_->p;
    if (data_->e == 1) return static_cast<Scalar>((static_cast<std::uint64_t>(a) + b) % p);
    Scalar r = 0;
    Scalar place = 1;
    for (unsigned i = 0; i < data_->e; ++i) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

Scalar Field::neg_slow(Scalar a) const {
    const std::uint32_t p = data_->p;
    if (data_->e == 1) return a == 0 ? 0 : p - a;
    Scalar r = 0;
    Scalar place = 1;
    for (unsigned i = 0; i < data_->e; ++i) {
        r += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    return r;
}

Scalar Field::mul_slow(Scalar a, Scalar b) const {
    const std::uint32_t p = data_->p;
    if (data_->e == 1) return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
    const Poly da = digits(a, p, data_->e);
    const Poly db = digits(b, p, data_->e);
    Poly prod(2 * data_->e - 1, 0);
    for (unsigned i = 0; i < data_->e; ++i) {
        for (unsigned j = 0; j < data_->e; ++j) {
            prod[i + j] = static_cast<Scalar>((prod[i + j] + da[i] * db[j]) % p);
        }
    }
    Poly r = poly_mod(std::move(prod), data_->modulus, p);
    r.resize(data_->e, 0);
    return from_digits(r, p);
}

Scalar Field::inv(Scalar a) const {
    if (a == 0 || a >= data_->q) throw Error("inverse of " + std::to_string(a) + " is undefined");
    if (!data_->inv.empty()) return data_->inv[a];
    // a^(q-2) by square-and-multiply.
    Scalar result = 1;
    Scalar base = a;
    std::uint32_t k = data_->q - 2;
    while (k) {
        if (k & 1u) result = mul(result, base);
        base = mul(base, base);
        k >>= 1u;
    }
    return result;
}

Scalar Field::from_integer(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(data_->p);
    return static_cast<Scalar>(((n % p) + p) % p);
}

Scalar field_arith(const Field& field, Scalar a, Scalar b, FieldOp op) {
    if (!field.contains(a) || (op != FieldOp::inv && op != FieldOp::neg && !field.contains(b))) {
        throw Error("operand outside F_" + std::to_string(field.q()));
    }
    switch (op) {
        case FieldOp::add: return field.add(a, b);
        case FieldOp::sub: return field.sub(a, b);
        case FieldOp::mul: return field.mul(a, b);
        case FieldOp::inv: return field.inv(a);
        case FieldOp::neg: return field.neg(a);
    }
    throw Error("unknown field operation");
}

}  // namespace minicode
