#pragma once

// Deciding minimality of codewords and codes.
//
// A codeword c is minimal when every codeword it covers is a scalar multiple of
// c; a code is minimal when all of its codewords are.  Four deciders are
// provided: the definition itself (pairwise support containment), the weight
// ratio bound w_min / w_max > (q-1)/q (sufficient only), the weight identity over
// pairs of independent codewords, and the rank test dim Span(D cap y^perp) = k-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minicode/code.hpp"
#include "minicode/families.hpp"
#include "minicode/linalg.hpp"

namespace minicode {

enum class Criterion { definition, ab, dhz, rank, cf_case, witness };
enum class Verdict { minimal, not_minimal, inconclusive };

std::string_view to_string(Criterion c);
std::string_view to_string(Verdict v);

// ---- projective classes ------------------------------------------------------
//
// Minimality is invariant under y -> a y, so one representative per class of
// nonzero messages suffices: the one whose first nonzero coordinate is 1.
// Ordinals enumerate representatives in ascending canonical index.

std::uint64_t projective_class_count(std::uint32_t q, std::size_t k);
Vector projective_representative(std::uint32_t q, std::size_t k, std::uint64_t ordinal);
/// Ordinal of an already-normalized representative.
std::uint64_t projective_ordinal(std::uint32_t q, const Vector& representative);
/// Scales y so that its first nonzero coordinate is 1; throws on y = 0.
Vector normalize_projective(const Field& field, Vector y);

// ---- certificates --------------------------------------------------------------

/// One projective class and k-1 members of D orthogonal to it that span y^perp.
/// Members are given either as 1-based indices into D or by value.
struct CertificateEntry {
    Vector representative;
    std::vector<std::size_t> member_indices;
    std::vector<Vector> member_vectors;
};

struct Certificate {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t class_count = 0;
    std::vector<CertificateEntry> entries;
};

/// True iff every member belongs to D, is orthogonal to its class
/// representative, each member set has rank exactly k-1, and every projective
/// class appears exactly once.  Throws ParseError on structurally malformed input.
bool verify_certificate(const DefiningSet& d, const Certificate& cert);

std::string certificate_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// ---- reports -------------------------------------------------------------------

/// codeword(b) is covered by codeword(a) although b is not a multiple of a.
struct CoverViolation {
    Vector a;
    Vector b;
};

/// sum_{c != 0} wt(a + c b) == (q-1) wt(a) - wt(b) for independent messages a, b.
struct WeightIdentity {
    Vector a;
    Vector b;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct WeightRatio {
    std::size_t w_min = 0;
    std::size_t w_max = 0;
};

/// Rank of H(y, D) for one class; when it reaches k-1 the members form a basis of y^perp.
struct RankWitness {
    Vector y;
    std::size_t rank = 0;
    std::vector<std::size_t> member_indices;  // 1-based into D
    SubspaceBasis basis;
};

enum class CfCase { zero_v, both_nonzero, zero_u };
std::string_view to_string(CfCase c);

/// Case-shaped witness for y = (u, v) on D_f: the alpha vectors in F_q^m.
struct CaseWitness {
    CfCase which = CfCase::zero_v;
    Scalar u = 0;
    Vector v;
    std::optional<Vector> omega;  // -v/u when u != 0 and v != 0
    std::vector<Vector> alphas;
    std::size_t rank = 0;
};

using Witness = std::variant<std::monostate, CoverViolation, WeightIdentity, WeightRatio, RankWitness, CaseWitness>;

struct MinimalityReport {
    Criterion criterion = Criterion::rank;
    Verdict verdict = Verdict::inconclusive;
    Witness witness;
    std::uint64_t classes_checked = 0;
    std::optional<Certificate> certificate;
};

/// Human-readable multi-line summary.
std::string describe(const MinimalityReport& report);

// ---- deciders -------------------------------------------------------------------

/// Default elementary-operation budget; MINICODE_BUDGET overrides it.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ull;
std::uint64_t default_budget();

/// Scale guards for the pairwise deciders.
inline constexpr std::uint64_t kPairwiseMaxClasses = 10'000;
inline constexpr std::size_t kPairwiseMaxLength = 1'000;

struct CheckOptions {
    unsigned jobs = 0;
    std::uint64_t budget = default_budget();
    bool want_certificate = true;
};

MinimalityReport is_minimal_definition(const DefiningSet& d, const CheckOptions& opts = {});
MinimalityReport ab_condition(const DefiningSet& d, const CheckOptions& opts = {});
MinimalityReport ab_condition(const WeightEnumerator& we);
MinimalityReport dhz_criterion(const DefiningSet& d, const CheckOptions& opts = {});

/// Minimality of the single codeword c(y).  Requires y != 0 and rank(D) = k.
MinimalityReport rank_criterion_codeword(const Vector& y, const DefiningSet& d);
/// Rank test over every projective class; emits a certificate when minimal.
MinimalityReport rank_criterion_code(const DefiningSet& d, const CheckOptions& opts = {});

/// Minimality of c(u, v) in C_f via the case split on (u, v): a basis of zeros of
/// f, a basis where f agrees with omega . x, or lifts spanning inside H(v).
MinimalityReport cf_case_check(Scalar u, const Vector& v, const FunctionSpec& f);

}  // namespace minicode
