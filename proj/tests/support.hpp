#pragma once

#include "g2deg/matrix.hpp"
#include "oracle/naive.hpp"

#include <random>

namespace testing {

inline oracle::Q to_q(const g2deg::Rational& r)
{
    return oracle::from_string(r.str());
}

inline oracle::QMatrix to_q(const g2deg::RatMatrix& m)
{
    oracle::QMatrix out(m.rows(), oracle::QVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = to_q(m(i, j));
        }
    }
    return out;
}

inline g2deg::RatVector ints(std::initializer_list<long> xs)
{
    g2deg::RatVector v;
    for (long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

/// Small random rationals; a fraction of entries are zero so that rank
/// deficiency actually occurs.
class RationalGen {
public:
    explicit RationalGen(unsigned seed) : rng_(seed) {}

    g2deg::Rational next()
    {
        if (std::uniform_int_distribution<int>(0, 3)(rng_) == 0) {
            return 0;
        }
        const long num = std::uniform_int_distribution<long>(-9, 9)(rng_);
        const long den = std::uniform_int_distribution<long>(1, 5)(rng_);
        return {num, den};
    }

    g2deg::RatMatrix matrix(std::size_t rows, std::size_t cols)
    {
        g2deg::RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = next();
            }
        }
        return m;
    }

    /// rows×cols matrix of rank at most k, built as a product.
    g2deg::RatMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k)
    {
        return matrix(rows, k) * matrix(k, cols);
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

}  // namespace testing
