#pragma once

// Codes C(D) = { (y.d_1, ..., y.d_n) : y in F_q^k } given by a defining set D,
// and the specialization D_f = { (f(x), x) : x in F_q^m \ {0} }.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minicode/families.hpp"
#include "minicode/gf.hpp"
#include "minicode/linalg.hpp"

namespace minicode {

/// An ordered multiset of n vectors in F_q^k.  The order fixes the coordinate
/// order of every codeword.
struct DefiningSet {
    enum class Origin { generic, from_function };

    Field field;
    std::size_t k = 0;
    std::vector<Vector> vectors;
    Origin origin = Origin::generic;
    std::size_t m = 0;  // arity of f when origin == from_function

    DefiningSet(Field f, std::size_t dim, std::vector<Vector> vs);

    std::size_t n() const { return vectors.size(); }
};

/// Counts of codewords by Hamming weight over all q^k messages.
struct WeightEnumerator {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::map<std::size_t, std::uint64_t> counts;  // only nonzero counts are stored

    std::uint64_t total() const;
    std::uint64_t count(std::size_t w) const;
    /// Minimum / maximum nonzero weight; nullopt when every codeword is zero.
    std::optional<std::size_t> min_nonzero_weight() const;
    std::optional<std::size_t> max_nonzero_weight() const;

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t w_min = 0;
    std::size_t w_max = 0;
    /// q * w_min > (q - 1) * w_max, the weight-ratio sufficient condition.
    bool ratio_exceeds_bound = false;
};

/// Message-space guard for exhaustive enumeration (q^k).
inline constexpr std::uint64_t kMaxMessages = std::uint64_t{1} << 26;

/// D_f in canonical x-order; the f-value is the first coordinate of each vector.
DefiningSet defining_set(const FunctionSpec& f);

/// The omega with f(x) = omega . x on every nonzero x, if one exists.  Absent
/// exactly when rank(D_f) = m + 1.
std::optional<Vector> linearity_check(const FunctionSpec& f);

Vector codeword(const Vector& y, const DefiningSet& d);

/// Exact weight distribution.  `jobs` = 0 uses every hardware thread; the
/// result does not depend on the worker count.
WeightEnumerator weight_distribution(const DefiningSet& d, unsigned jobs = 0);

CodeParams params(const WeightEnumerator& we);
CodeParams params(const DefiningSet& d, unsigned jobs = 0);

/// k x n generator matrix whose rows are the codewords of e_1 .. e_k.
Matrix generator_matrix(const DefiningSet& d);
/// The defining set as an n x k matrix (one vector per row).
Matrix defining_matrix(const DefiningSet& d);
/// Reads an n x k defining-set matrix (or, with `transposed`, a k x n generator matrix).
DefiningSet defining_set_from_matrix(const FieldMatrix& fm, bool transposed = false);

/// "1 + c1 z^w1 + c2 z^w2 + ..." with terms in ascending weight.
std::string enumerator_text(const WeightEnumerator& we);
/// {"q":..,"n":..,"k":..,"counts":{"w":count,...}} with keys in ascending numeric order.
std::string enumerator_json(const WeightEnumerator& we);
WeightEnumerator enumerator_from_json(const std::string& text);
/// Parses the text form back, given the code parameters.
WeightEnumerator parse_enumerator_text(const std::string& text, std::uint32_t q, std::size_t n, std::size_t k);

}  // namespace minicode
