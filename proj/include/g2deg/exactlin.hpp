#pragma once

#include "g2deg/matrix.hpp"

#include <optional>
#include <vector>

namespace g2deg {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;  // one per nonzero row, ascending

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss) elimination on integer-scaled rows, then
/// back-substitution to RREF. Pivot is the first nonzero entry in column order.
Echelon echelon(const RatMatrix& m);

struct AffineSolution {
    RatVector particular;             // free variables set to zero
    std::vector<RatVector> kernel_basis;
};

/// One solution of m·x = b plus a basis of ker(m), or nullopt when b ∉ im(m).
/// Kernel vectors carry a single 1 in their free position, free columns ascending.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, std::span<const Rational> b);

std::vector<RatVector> kernel_basis(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Entry (i,j) = vᵢᵀ·pairing·vⱼ.
RatMatrix gram(std::span<const RatVector> vectors, const RatMatrix& pairing);

}  // namespace g2deg
