#include "reflinv/linalg.hpp"

#include <algorithm>
#include <utility>

#include "reflinv/error.hpp"

namespace reflinv {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Cyclotomic(1);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw InvalidArgument("ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Matrix Matrix::operator*(const Matrix &o) const
{
    if (cols_ != o.rows_) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyclotomic &a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (!o(k, j).is_zero()) {
                    r(i, j) += a * o(k, j);
                }
            }
        }
    }
    return r;
}

Vector Matrix::operator*(const Vector &v) const
{
    if (cols_ != v.size()) {
        throw InvalidArgument("matrix-vector dimension mismatch");
    }
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) {
                r[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return r;
}

Matrix Matrix::operator-(const Matrix &o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] -= o.data_[i];
    }
    return r;
}

bool operator==(const Matrix &a, const Matrix &b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon rref(Matrix m)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = c; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const Cyclotomic inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (!m(r, j).is_zero()) {
                m(r, j) *= inv;
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const Cyclotomic f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) {
                    m(i, j) -= f * m(r, j);
                }
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix &m) { return rref(m).rank(); }

Cyclotomic determinant(Matrix m)
{
    if (m.rows() != m.cols()) {
        throw InvalidArgument("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Cyclotomic det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) {
            ++p;
        }
        if (p == n) {
            return Cyclotomic(0);
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        const Cyclotomic inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) {
                continue;
            }
            const Cyclotomic f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) {
                if (!m(c, j).is_zero()) {
                    m(i, j) -= f * m(c, j);
                }
            }
        }
    }
    return det;
}

std::vector<Vector> nullspace(const Matrix &m)
{
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(m.cols());
        v[f] = Cyclotomic(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.reduced(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector SpanBasis::reduce(Vector v) const
{
    if (v.size() != dim_) {
        throw InvalidArgument("vector dimension mismatch in span test");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p].is_zero()) {
            continue;
        }
        const Cyclotomic f = v[p];
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!rows_[k][j].is_zero()) {
                v[j] -= f * rows_[k][j];
            }
        }
    }
    return v;
}

bool SpanBasis::contains(const Vector &v) const
{
    const Vector r = reduce(v);
    for (const auto &x : r) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool SpanBasis::add(const Vector &v)
{
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) {
        ++p;
    }
    if (p == dim_) {
        return false;
    }
    const Cyclotomic inv = r[p].inverse();
    for (auto &x : r) {
        if (!x.is_zero()) {
            x *= inv;
        }
    }
    // keep earlier rows reduced against the new pivot
    for (auto &row : rows_) {
        if (!row[p].is_zero()) {
            const Cyclotomic f = row[p];
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!r[j].is_zero()) {
                    row[j] -= f * r[j];
                }
            }
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<Vector> SpanBasis::echelon_rows() const
{
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vector> out;
    out.reserve(order.size());
    for (auto i : order) {
        out.push_back(rows_[i]);
    }
    return out;
}

} // namespace reflinv
