#pragma once

// Explicit bases that certify minimality of codewords of C_f, built the way the
// minimality theorems construct them, plus the small lemmas they rely on.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minicode/code.hpp"
#include "minicode/error.hpp"
#include "minicode/families.hpp"
#include "minicode/linalg.hpp"
#include "minicode/minimality.hpp"

namespace minicode {

enum class WitnessKind { full_weight, unit_inner, hyperplane, theorem_case };

struct WitnessBasis {
    WitnessKind kind = WitnessKind::full_weight;
    std::vector<Vector> vectors;
    /// omega for unit_inner, v for hyperplane.
    Vector parameter;
    // theorem_case only
    std::optional<TheoremId> theorem;
    Scalar u = 0;
    Vector v;
    std::string branch;                   // proof branch that produced the vectors
    std::optional<std::string> gap_note;  // set when a vector had to be substituted
};

/// A construction produced vectors that fail their own post-conditions.
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& what, bool proof_gap) : Error(what), proof_gap_(proof_gap) {}
    /// True when the failing step is one the proof asserts without justification.
    bool proof_gap() const { return proof_gap_; }

private:
    bool proof_gap_;
};

/// m independent vectors of high weight: all of weight m when q >= 3; weight
/// >= m-1 (m even) or >= m-2 (m odd) when q = 2.  Requires m >= 1, and m >= 2 for q = 2.
WitnessBasis full_weight_basis(const Field& field, std::size_t m);

/// A basis beta_1..beta_m with omega . beta_i = 1 and 1 <= wt(beta_i) <= 2.
WitnessBasis unit_inner_basis(const Field& field, const Vector& omega);

/// A basis of H(v) = v^perp of m-1 vectors of weight 1 or 2.
WitnessBasis hyperplane_low_weight_basis(const Field& field, const Vector& v);

/// b = 0: a kernel basis (n - rank(A) vectors).  b != 0: n - rank(A) + 1
/// independent solutions x0, x0 + k_1, ...  Throws Error on an inconsistent system.
std::vector<Vector> linear_system_solutions(const Field& field, const Matrix& a, const Vector& b);

/// The m vectors alpha in F_q^m the theorem's proof builds for y = (u, v):
/// f(alpha) = 0 (v = 0), f(alpha) = omega . alpha with omega = -v/u (u, v != 0), or
/// alpha in H(v) (u = 0); their lifts (f(alpha), alpha) are independent.
/// Validates the hypotheses first; throws ConstructionError if the output fails
/// its post-conditions.
WitnessBasis theorem_witness(TheoremId thm, const FunctionSpec& f, Scalar u, const Vector& v);

struct WitnessSweep {
    Certificate certificate;         // members by value: the lifted vectors
    std::uint64_t classes = 0;
    std::uint64_t gap_filled = 0;    // classes whose basis needed a substitution
    std::vector<std::string> notes;  // distinct gap notes
};

/// theorem_witness over every projective class of F_q^(m+1).  Hypotheses are
/// validated once.
WitnessSweep theorem_witness_sweep(TheoremId thm, const FunctionSpec& f, unsigned jobs = 0);

}  // namespace minicode
