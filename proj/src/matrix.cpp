#include "bihom/matrix.hpp"

#include "bihom/error.hpp"

#include <sstream>

namespace bihom {

Vector zero_vector(std::size_t n) {
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v.at(k) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.begin(), a.end());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.begin(), a.end());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
    Vector r(v.begin(), v.end());
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!b[k].is_zero()) a[k] += s * b[k];
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return bihom::is_zero(data_);
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x *= s;
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t p = pivot_row;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != pivot_row)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(pivot_row, k));
        Scalar inv = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!a(pivot_row, k).is_zero()) a(pivot_row, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, c).is_zero()) continue;
            Scalar f = a(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!a(pivot_row, k).is_zero()) a(r, k) -= f * a(pivot_row, k);
        }
        out.pivots.push_back(c);
        ++pivot_row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

std::vector<Vector> nullspace(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw SingularMatrix();
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    return inv;
}

std::vector<Vector> canonical_span_basis(std::size_t n, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return {};
    RrefResult r = rref(Matrix::from_rows(n, vectors));
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < r.rank; ++k) {
        auto row = r.reduced.row(k);
        basis.emplace_back(row.begin(), row.end());
    }
    return basis;
}

bool in_span(const std::vector<Vector>& basis, std::span<const Scalar> v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    std::vector<Vector> ext = basis;
    ext.emplace_back(v.begin(), v.end());
    return rank(Matrix::from_rows(v.size(), ext)) == rank(Matrix::from_rows(v.size(), basis));
}

std::vector<Vector> intersect_spans(std::size_t n, const std::vector<Vector>& a, const std::vector<Vector>& b) {
    if (a.empty() || b.empty()) return {};
    Matrix sys(n, a.size() + b.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) sys(r, c) = a[c][r];
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) sys(r, a.size() + c) = -b[c][r];
    std::vector<Vector> common;
    for (const auto& coeffs : nullspace(sys)) {
        Vector x(n);
        for (std::size_t c = 0; c < a.size(); ++c) axpy(x, coeffs[c], a[c]);
        common.push_back(std::move(x));
    }
    return canonical_span_basis(n, common);
}

}  // namespace bihom
