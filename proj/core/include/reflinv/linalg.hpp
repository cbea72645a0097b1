#ifndef REFLINV_LINALG_HPP
#define REFLINV_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflinv/cyclotomic.hpp"

namespace reflinv {

using Vector = std::vector<Cyclotomic>;

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Cyclotomic &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix &o) const;
    Vector operator*(const Vector &v) const;
    Matrix operator-(const Matrix &o) const;
    friend bool operator==(const Matrix &a, const Matrix &b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix &m);
Cyclotomic determinant(Matrix m);
// Basis of {x : m x = 0}; each vector has a 1 in its free column.
std::vector<Vector> nullspace(const Matrix &m);

// Incrementally maintained echelon basis of a subspace of K^n.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return rows_.size(); }

    // Residual of v after elimination against the basis (zero iff v in span).
    Vector reduce(Vector v) const;
    bool contains(const Vector &v) const;
    // Adds v if independent; returns true when the span grew.
    bool add(const Vector &v);

    // Basis rows sorted by pivot column: the reduced row echelon form.
    std::vector<Vector> echelon_rows() const;

private:
    std::size_t dim_;
    std::vector<Vector> rows_; // each normalized to 1 at its pivot
    std::vector<std::size_t> pivots_;
};

} // namespace reflinv

#endif
