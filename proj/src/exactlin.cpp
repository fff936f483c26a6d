#include "g2deg/exactlin.hpp"

#include "g2deg/errors.hpp"

#include <utility>

namespace g2deg {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Each row multiplied by the lcm of its denominators.
IntRows integer_rows(const RatMatrix& m)
{
    IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).raw();
            rows[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

}  // namespace

Echelon echelon(const RatMatrix& m)
{
    IntRows a = integer_rows(m);
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    std::vector<std::size_t> pivots;
    mpz_class previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        std::swap(a[p], a[r]);
        const mpz_class& pivot = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                mpz_class t = pivot * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }

    RatMatrix reduced(nrows, ncols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& lead = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < ncols; ++j) {
            if (a[i][j] != 0) {
                reduced(i, j) = Rational(mpq_class(a[i][j], lead));
            }
        }
    }
    // Clear above each pivot, last pivot first.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational factor = reduced(i, pc);
            if (factor.is_zero()) {
                continue;
            }
            for (std::size_t j = pc; j < ncols; ++j) {
                if (!reduced(k, j).is_zero()) {
                    reduced(i, j) -= factor * reduced(k, j);
                }
            }
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

namespace {

std::vector<RatVector> kernel_from_echelon(const Echelon& e, std::size_t ncols)
{
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(ncols);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            v[e.pivots[i]] = -e.reduced(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    return kernel_from_echelon(echelon(m), m.cols());
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows()) {
        throw DimensionMismatch("right-hand side length differs from row count");
    }
    const std::size_t n = m.cols();
    RatMatrix augmented(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            augmented(r, c) = m(r, c);
        }
        augmented(r, n) = b[r];
    }
    const Echelon e = echelon(augmented);
    if (!e.pivots.empty() && e.pivots.back() == n) {
        return std::nullopt;
    }
    AffineSolution out;
    out.particular.assign(n, Rational{});
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        out.particular[e.pivots[i]] = e.reduced(i, n);
    }
    // The pivot structure of [m|b] restricted to the first n columns is that of m.
    out.kernel_basis = kernel_from_echelon(e, n);
    return out;
}

std::size_t rank(const RatMatrix& m)
{
    return echelon(m).rank();
}

RatMatrix gram(std::span<const RatVector> vectors, const RatMatrix& pairing)
{
    if (pairing.rows() != pairing.cols()) {
        throw DimensionMismatch("pairing matrix is not square");
    }
    std::vector<RatVector> images;
    images.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != pairing.cols()) {
            throw DimensionMismatch("vector length differs from pairing dimension");
        }
        images.push_back(pairing * v);
    }
    RatMatrix g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            g(i, j) = dot(vectors[i], images[j]);
        }
    }
    return g;
}

}  // namespace g2deg
