#pragma once

#include "g2deg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace g2deg {

/// Dense rectangular matrix of rationals. Dimensions are fixed at construction.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
    static RatMatrix from_columns(std::span<const RatVector> columns, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RatVector row(std::size_t r) const;
    [[nodiscard]] RatVector column(std::size_t c) const;
    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    RatMatrix& operator+=(const RatMatrix& rhs);
    RatMatrix& operator*=(const Rational& scalar);
    friend RatMatrix operator+(RatMatrix lhs, const RatMatrix& rhs) { return lhs += rhs; }
    friend RatMatrix operator*(RatMatrix lhs, const Rational& scalar) { return lhs *= scalar; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
RatVector operator*(const RatMatrix& m, std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector subtract(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(std::span<const Rational> a, const Rational& s);
bool is_zero(std::span<const Rational> v);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace g2deg
