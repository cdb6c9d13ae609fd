#pragma once

#include "bihom/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bihom {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
// a += s * b
void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b);

// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;

    Vector apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Canonical kernel basis: one vector per free column, with that free
// variable set to 1 and the other free variables to 0.
std::vector<Vector> nullspace(const Matrix& m);

// Throws SingularMatrix when m is not invertible.
Matrix inverse(const Matrix& m);

// RREF of the span of the given vectors; rows of the result are a canonical basis.
std::vector<Vector> canonical_span_basis(std::size_t n, const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, std::span<const Scalar> v);
// Canonical basis of span(a) ∩ span(b).
std::vector<Vector> intersect_spans(std::size_t n, const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace bihom
