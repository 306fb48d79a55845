#include "minicode/linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "minicode/error.hpp"

namespace minicode {

namespace {

void require_same_length(const Vector& u, const Vector& v, const char* what) {
    if (u.size() != v.size()) {
        throw Error(std::string(what) + ": length mismatch (" + std::to_string(u.size()) +
                    " vs " + std::to_string(v.size()) + ")");
    }
}

}  // namespace

Matrix::Matrix(std::size_t n_cols, std::vector<Vector> r) : cols(n_cols), rows(std::move(r)) {
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error("matrix rows must all have length " + std::to_string(cols));
    }
}

Scalar dot(const Field& field, const Vector& u, const Vector& v) {
    require_same_length(u, v, "dot");
    Scalar acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] && v[i]) acc = field.add(acc, field.mul(u[i], v[i]));
    }
    return acc;
}

std::vector<std::size_t> support(const Vector& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) s.push_back(i + 1);
    }
    return s;
}

std::size_t weight(const Vector& v) {
    std::size_t w = 0;
    for (Scalar x : v) w += (x != 0);
    return w;
}

bool is_zero(const Vector& v) {
    for (Scalar x : v) {
        if (x != 0) return false;
    }
    return true;
}

bool covers(const Vector& u, const Vector& v) {
    require_same_length(u, v, "covers");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 0 && v[i] == 0) return false;
    }
    return true;
}

Vector scale(const Field& field, Scalar a, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = field.mul(a, v[i]);
    return r;
}

Vector add(const Field& field, const Vector& u, const Vector& v) {
    require_same_length(u, v, "add");
    Vector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = field.add(u[i], v[i]);
    return r;
}

Vector sub(const Field& field, const Vector& u, const Vector& v) {
    require_same_length(u, v, "sub");
    Vector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = field.sub(u[i], v[i]);
    return r;
}

void axpy(const Field& field, Scalar a, const Vector& x, Vector& y) {
    require_same_length(x, y, "axpy");
    if (a == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) y[i] = field.add(y[i], field.mul(a, x[i]));
    }
}

Vector unit_vector(std::size_t m, std::size_t i) {
    if (i < 1 || i > m) throw Error("unit vector index out of range");
    Vector e(m, 0);
    e[i - 1] = 1;
    return e;
}

// ---- RowEchelon ------------------------------------------------------------

RowEchelon::RowEchelon(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

Vector RowEchelon::reduce(Vector v) const {
    if (v.size() != dim_) throw Error("RowEchelon: vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = v[pivots_[r]];
        if (c != 0) axpy(field_, field_.neg(c), rows_[r], v);
    }
    return v;
}

bool RowEchelon::insert(const Vector& v) {
    if (rows_.size() == dim_) {
        if (v.size() != dim_) throw Error("RowEchelon: vector length mismatch");
        return false;
    }
    Vector w = reduce(v);
    std::size_t pivot = 0;
    while (pivot < w.size() && w[pivot] == 0) ++pivot;
    if (pivot == w.size()) return false;
    const Scalar s = field_.inv(w[pivot]);
    for (auto& x : w) x = field_.mul(s, x);
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

bool RowEchelon::in_span(const Vector& v) const { return is_zero(reduce(v)); }

std::size_t rank(const Field& field, const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    RowEchelon ech(field, rows.front().size());
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

std::size_t rank(const Field& field, const Matrix& m) {
    if (m.rows.empty()) return 0;
    RowEchelon ech(field, m.cols);
    for (const auto& r : m.rows) ech.insert(r);
    return ech.rank();
}

RrefResult rref(const Field& field, const Matrix& m) {
    std::vector<Vector> a = m.rows;
    RrefResult out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < a.size(); ++col) {
        std::size_t r = lead;
        while (r < a.size() && a[r][col] == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[lead], a[r]);
        const Scalar s = field.inv(a[lead][col]);
        for (auto& x : a[lead]) x = field.mul(s, x);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != lead && a[i][col] != 0) axpy(field, field.neg(a[i][col]), a[lead], a[i]);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    a.resize(lead);
    out.rows = std::move(a);
    return out;
}

std::vector<Vector> kernel_basis(const Field& field, const Matrix& a) {
    const RrefResult red = rref(field, a);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        Vector x(a.cols, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            x[red.pivots[r]] = field.neg(red.rows[r][free]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<Vector> particular_solution(const Field& field, const Matrix& a, const Vector& b) {
    if (b.size() != a.rows.size()) throw Error("particular_solution: right-hand side length mismatch");
    Matrix aug;
    aug.cols = a.cols + 1;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        Vector row = a.rows[i];
        row.push_back(b[i]);
        aug.rows.push_back(std::move(row));
    }
    const RrefResult red = rref(field, aug);
    Vector x(a.cols, 0);
    for (std::size_t r = 0; r < red.rows.size(); ++r) {
        if (red.pivots[r] == a.cols) return std::nullopt;
        x[red.pivots[r]] = red.rows[r][a.cols];
    }
    return x;
}

std::vector<Vector> orthogonal_complement(const Field& field, const std::vector<Vector>& s,
                                          std::size_t dim) {
    return kernel_basis(field, Matrix(dim, s));
}

SubspaceBasis make_subspace_basis(const Field& field, std::vector<Vector> vectors,
                                  std::size_t ambient_dim) {
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw Error("subspace basis: vector length mismatch");
    }
    if (rank(field, vectors) != vectors.size()) throw Error("subspace basis vectors are dependent");
    return SubspaceBasis{std::move(vectors), ambient_dim};
}

// ---- enumeration -----------------------------------------------------------

std::uint64_t space_size(std::uint32_t q, std::size_t m, std::uint64_t limit) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < m; ++i) {
        size *= q;
        if (size > limit) {
            throw GuardError("F_" + std::to_string(q) + "^" + std::to_string(m) +
                             " is too large to enumerate (limit " + std::to_string(limit) + ")");
        }
    }
    return size;
}

std::uint64_t index_of(std::uint32_t q, const Vector& v) {
    std::uint64_t idx = 0;
    for (Scalar x : v) idx = idx * q + x;
    return idx;
}

Vector vector_at(std::uint32_t q, std::size_t m, std::uint64_t index) {
    Vector v(m, 0);
    for (std::size_t i = m; i-- > 0;) {
        v[i] = static_cast<Scalar>(index % q);
        index /= q;
    }
    return v;
}

bool next_vector(std::uint32_t q, Vector& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < q) return true;
        v[i] = 0;
    }
    return false;
}

std::vector<Vector> enumerate_vectors(std::uint32_t q, std::size_t m, bool include_zero) {
    const std::uint64_t size = space_size(q, m);
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(include_zero ? size : size - 1));
    Vector v(m, 0);
    if (include_zero) out.push_back(v);
    while (next_vector(q, v)) out.push_back(v);
    return out;
}

// ---- text format -----------------------------------------------------------

void write_matrix(std::ostream& out, const Field& field, const Matrix& m) {
    out << field.q() << ' ' << m.cols << ' ' << m.rows.size() << '\n';
    for (const auto& row : m.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ' ';
            out << row[i];
        }
        out << '\n';
    }
}

FieldMatrix read_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("matrix: missing header line");
    std::istringstream hs(header);
    std::uint64_t q = 0, cols = 0, rows = 0;
    if (!(hs >> q >> cols >> rows)) throw ParseError("matrix: header must be 'q cols rows'");
    std::string extra;
    if (hs >> extra) throw ParseError("matrix: unexpected token '" + extra + "' in header");
    Field field = Field::of_order(static_cast<std::uint32_t>(q));
    Matrix m;
    m.cols = cols;
    for (std::uint64_t r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
        std::istringstream ls(line);
        Vector row;
        std::uint64_t x;
        while (ls >> x) {
            if (x >= q) throw ParseError("matrix: entry " + std::to_string(x) + " not in F_" + std::to_string(q));
            row.push_back(static_cast<Scalar>(x));
        }
        if (!ls.eof()) throw ParseError("matrix: non-integer entry in row " + std::to_string(r + 1));
        if (row.size() != cols) {
            throw ParseError("matrix: row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(cols));
        }
        m.rows.push_back(std::move(row));
    }
    return FieldMatrix{std::move(field), std::move(m)};
}

}  // namespace minicode
