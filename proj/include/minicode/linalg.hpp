#pragma once

// Dense vectors and matrices over F_q.
//
// Coordinates are stored 0-based in memory; every index that leaves the library
// (supports, certificate member lists, error messages) is 1-based, so the i-th
// coordinate x_i of a vector x is v[i - 1].

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "minicode/gf.hpp"

namespace minicode {

using Vector = std::vector<Scalar>;

/// A matrix as a list of rows of equal length.
struct Matrix {
    std::size_t cols = 0;
    std::vector<Vector> rows;

    Matrix() = default;
    Matrix(std::size_t n_cols, std::vector<Vector> r);

    std::size_t row_count() const { return rows.size(); }
};

/// Linearly independent vectors spanning a subspace of F_q^ambient_dim.
struct SubspaceBasis {
    std::vector<Vector> vectors;
    std::size_t ambient_dim = 0;

    std::size_t dim() const { return vectors.size(); }
};

Scalar dot(const Field& field, const Vector& u, const Vector& v);

/// 1-based indices of the nonzero coordinates.
std::vector<std::size_t> support(const Vector& v);
std::size_t weight(const Vector& v);
bool is_zero(const Vector& v);

/// True iff Suppt(u) is a subset of Suppt(v), i.e. v covers u.
bool covers(const Vector& u, const Vector& v);

Vector scale(const Field& field, Scalar a, const Vector& v);
Vector add(const Field& field, const Vector& u, const Vector& v);
Vector sub(const Field& field, const Vector& u, const Vector& v);
/// y += a * x
void axpy(const Field& field, Scalar a, const Vector& x, Vector& y);

/// The standard basis vector e_i of F_q^m (i is 1-based).
Vector unit_vector(std::size_t m, std::size_t i);

/// Incrementally maintained semi-echelon basis.  Each stored row has a pivot
/// scaled to 1 and is zero at the pivots of the rows inserted before it.
class RowEchelon {
public:
    RowEchelon(Field field, std::size_t dim);

    /// Inserts v; returns true when it was independent of the current rows.
    bool insert(const Vector& v);
    bool in_span(const Vector& v) const;
    /// v with every pivot coordinate eliminated.
    Vector reduce(Vector v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Vector>& rows() const { return rows_; }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row rank over F_q.
std::size_t rank(const Field& field, const std::vector<Vector>& rows);
std::size_t rank(const Field& field, const Matrix& m);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RrefResult {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;  // 0-based columns
};
RrefResult rref(const Field& field, const Matrix& m);

/// Basis of {x : A x = 0}, one vector per free column in ascending order.
std::vector<Vector> kernel_basis(const Field& field, const Matrix& a);

/// The solution of A x = b with every free variable set to zero, or nothing when
/// the system is inconsistent.
std::optional<Vector> particular_solution(const Field& field, const Matrix& a, const Vector& b);

/// A basis of S^perp inside F_q^dim.
std::vector<Vector> orthogonal_complement(const Field& field, const std::vector<Vector>& s,
                                          std::size_t dim);

/// Checks independence and wraps the vectors.
SubspaceBasis make_subspace_basis(const Field& field, std::vector<Vector> vectors,
                                  std::size_t ambient_dim);

// ---- canonical enumeration of F_q^m ---------------------------------------

/// Guard for enumerating F_q^m.
inline constexpr std::uint64_t kMaxSpaceSize = std::uint64_t{1} << 31;

/// q^m, throwing GuardError when it exceeds `limit`.
std::uint64_t space_size(std::uint32_t q, std::size_t m, std::uint64_t limit = kMaxSpaceSize);

/// index(x) = sum_i x_i q^(m-i) with x_1 the most significant digit.
std::uint64_t index_of(std::uint32_t q, const Vector& v);
Vector vector_at(std::uint32_t q, std::size_t m, std::uint64_t index);

/// Advances v to the vector with the next canonical index; returns false on wrap.
bool next_vector(std::uint32_t q, Vector& v);

/// All vectors of F_q^m in ascending index order.
std::vector<Vector> enumerate_vectors(std::uint32_t q, std::size_t m, bool include_zero);

// ---- matrix text format ----------------------------------------------------
//
//   q cols rows
//   a_11 a_12 ... a_1cols
//   ...

struct FieldMatrix {
    Field field;
    Matrix matrix;
};

void write_matrix(std::ostream& out, const Field& field, const Matrix& m);
FieldMatrix read_matrix(std::istream& in);

}  // namespace minicode
