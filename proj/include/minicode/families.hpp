#pragma once

// q-ary functions f : F_q^m -> F_q, the parametric families the minimality
// theorems are stated for, and exhaustive validators for their hypotheses.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minicode/gf.hpp"
#include "minicode/linalg.hpp"

namespace minicode {

/// Dense value table in canonical x-order, zero vector first; length q^m.
struct TableFunction {
    std::vector<Scalar> values;
};

/// f(x) = a_{wt(x)} when 1 <= wt(x) <= t, else 0.  `values` holds a_1 .. a_t.
struct WeightThreshold {
    std::size_t t = 0;
    std::vector<Scalar> values;
};

/// f(x) = 0 when wt(x) <= t, else 1.
struct ComplementThreshold {
    std::size_t t = 0;
};

/// f(beta, gamma) = phi(beta) . gamma + g(beta) with beta in F_q^s, gamma in F_q^t.
/// `phi` and `g` are tables over F_q^s in canonical order.
struct MaioranaMcFarland {
    std::size_t s = 0;
    std::size_t t = 0;
    std::vector<Vector> phi;
    std::vector<Scalar> g;
};

struct Monomial {
    Scalar coefficient = 1;
    std::vector<unsigned> exponents;  // one per variable
};

/// f(x) = sum_j a_j prod_i x_i^{b_ji}, with 0^0 = 1.
struct MonomialSum {
    std::vector<Monomial> terms;
};

class FunctionSpec {
public:
    using Variant =
        std::variant<TableFunction, WeightThreshold, ComplementThreshold, MaioranaMcFarland, MonomialSum>;

    /// Validates the variant's invariants against (field, m).
    FunctionSpec(Field field, std::size_t m, Variant variant);

    const Field& field() const { return field_; }
    std::size_t arity() const { return m_; }
    const Variant& variant() const { return variant_; }
    std::string_view variant_name() const;
    bool is_table() const { return std::holds_alternative<TableFunction>(variant_); }

    /// f(x); throws on arity mismatch.
    Scalar operator()(const Vector& x) const;

    /// The same function as a Table variant.
    FunctionSpec materialize() const;

private:
    Field field_;
    std::size_t m_;
    Variant variant_;
};

inline Scalar eval(const FunctionSpec& f, const Vector& x) { return f(x); }

/// s(g): 1-based indices with a nonzero exponent.
std::vector<std::size_t> monomial_support(const std::vector<unsigned>& exponents);

/// The minimality theorems whose hypotheses can be validated.
///   A1 / A2  low-weight nonzero, full-weight zero (q > 2 / q = 2)
///   B        low-weight zero, high-weight scalar-invariant nonzero
///   C1 / C2  Maiorana-McFarland with phi injective on weight <= 1 (q > 2 / q = 2)
///   D1 / D2  sums of monomials with disjoint supports (size >= 3 / square-free size >= 2)
enum class TheoremId { A1, A2, B, C1, C2, D1, D2 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view s);
inline constexpr TheoremId kAllTheorems[] = {TheoremId::A1, TheoremId::A2, TheoremId::B, TheoremId::C1,
                                            TheoremId::C2, TheoremId::D1, TheoremId::D2};

struct HypothesisResult {
    bool pass = true;
    std::string condition;          // the first violated condition, empty on pass
    std::optional<Vector> witness;  // offending point (or exponent vector for monomial conditions)
    std::optional<Vector> other;    // second point of a collision or scalar-multiple check

    explicit operator bool() const { return pass; }
};

/// Exhaustively checks every hypothesis of `thm` for `f`.  Throws when the
/// variant cannot express the theorem's objects (e.g. C1 on a plain table).
HypothesisResult validate_hypotheses(const FunctionSpec& f, TheoremId thm);

/// Calls fn(x) for each x in F_q^m with wt(x) == w: supports in lexicographic
/// order, values in canonical order within a support.
template <typename Fn>
void for_each_vector_of_weight(std::uint32_t q, std::size_t m, std::size_t w, Fn&& fn);

// ---- presets ---------------------------------------------------------------

struct Preset {
    std::string name;
    std::string description;
    FunctionSpec function;
};

/// Every function used by the reproduction suite, in a stable order.
const std::vector<Preset>& paper_presets();
const Preset* find_preset(std::string_view name);

// ---- function file format ----------------------------------------------------
//
//   q m variant
//   <parameters as integers>
//
// variant is one of table, weight-threshold, complement-threshold,
// maiorana-mcfarland, monomial-sum.

void write_function(std::ostream& out, const FunctionSpec& f);
FunctionSpec read_function(std::istream& in);

// ---- implementation ------------------------------------------------------------

template <typename Fn>
void for_each_vector_of_weight(std::uint32_t q, std::size_t m, std::size_t w, Fn&& fn) {
    if (w > m) return;
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    while (true) {
        Vector vals(w, 1);
        while (true) {
            Vector x(m, 0);
            for (std::size_t i = 0; i < w; ++i) x[pos[i]] = vals[i];
            fn(static_cast<const Vector&>(x));
            // Odometer over nonzero values, last position fastest.
            std::size_t i = w;
            while (i > 0) {
                --i;
                if (++vals[i] < q) break;
                vals[i] = 1;
                if (i == 0) {
                    i = w + 1;
                    break;
                }
            }
            if (w == 0 || i == w + 1) break;
        }
        // Next combination.
        std::size_t i = w;
        while (i > 0 && pos[i - 1] == m - w + i - 1) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace minicode
