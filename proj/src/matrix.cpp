#include "g2deg/matrix.hpp"

#include "g2deg/errors.hpp"

#include <ostream>

namespace g2deg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionMismatch("row length differs from column count");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns, std::size_t rows)
{
    return from_rows(columns, rows).transpose();
}

RatVector RatMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RatVector RatMatrix::column(std::size_t c) const
{
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool RatMatrix::is_symmetric() const
{
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("matrix sum of different shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& scalar)
{
    for (auto& x : data_) {
        x *= scalar;
    }
    return *this;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs)
{
    if (lhs.cols() != rhs.rows()) {
        throw DimensionMismatch("matrix product: inner dimensions differ");
    }
    RatMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Rational& a = lhs(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                if (!rhs(k, j).is_zero()) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
    }
    return out;
}

RatVector operator*(const RatMatrix& m, std::span<const Rational> v)
{
    if (m.cols() != v.size()) {
        throw DimensionMismatch("matrix-vector product: length differs from column count");
    }
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero() && !v[j].is_zero()) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot product of different lengths");
    }
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sum of different lengths");
    }
    RatVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

RatVector subtract(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector difference of different lengths");
    }
    RatVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

RatVector scale(std::span<const Rational> a, const Rational& s)
{
    RatVector out(a.begin(), a.end());
    for (auto& x : out) {
        x *= s;
    }
    return out;
}

bool is_zero(std::span<const Rational> v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r == 0 ? "[" : ", [");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            os << (c == 0 ? "" : ", ") << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace g2deg
