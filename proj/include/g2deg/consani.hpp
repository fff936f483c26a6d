#pragma once

#include "g2deg/fibre.hpp"
#include "g2deg/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2deg {

/// Strictly increasing component indices (i₁ < … < i_r) naming a stratum Y_I.
using IndexSet = std::vector<int>;

/// Explicit δ(u) matrices keyed by (t, u): push maps the Y^(t+1) lattice to
/// the Y^(t) lattice, pull goes the other way.
struct DeltaMaps {
    std::map<std::pair<int, int>, RatMatrix> push;
    std::map<std::pair<int, int>, RatMatrix> pull;
};

/// Strata Y^(1..depth) of a special fibre with per-stratum class lattices.
/// Lattices default to rank 1 (fundamental classes) with incidence maps.
class StratifiedComplex {
public:
    StratifiedComplex() = default;
    /// strata[r-1] lists Y^(r). Throws FormatError when an index set is not
    /// strictly increasing, repeats, has the wrong size or a missing facet;
    /// DimensionMismatch when explicit maps do not fit the lattices.
    explicit StratifiedComplex(std::vector<std::vector<IndexSet>> strata,
                               std::vector<std::vector<int>> lattice_ranks = {}, DeltaMaps maps = {});

    [[nodiscard]] int depth() const { return static_cast<int>(strata_.size()); }
    /// Empty for r < 1 or r > depth.
    [[nodiscard]] const std::vector<IndexSet>& strata(int r) const;
    [[nodiscard]] int lattice_rank(int r, std::size_t stratum) const;
    [[nodiscard]] std::size_t lattice_dim(int r) const;
    [[nodiscard]] std::optional<std::size_t> find(int r, const IndexSet& index) const;
    [[nodiscard]] const DeltaMaps& maps() const { return maps_; }
    [[nodiscard]] bool has_custom_lattices() const;

private:
    [[nodiscard]] std::size_t lattice_offset(int r, std::size_t stratum) const;

    std::vector<std::vector<IndexSet>> strata_;
    std::vector<std::vector<int>> ranks_;
    DeltaMaps maps_;
};

enum class SignConvention {
    AsWritten,    // (-1)^(u-1)
    Alternating,  // (-1)^(t+1-u): deleted position counted from the end
};

std::string_view to_string(SignConvention c);
SignConvention parse_sign_convention(std::string_view token);

/// δ(u)_*: Y^(t+1) lattice → Y^(t) lattice, 1 ≤ u ≤ t+1.
RatMatrix delta_push(const StratifiedComplex& complex, int t, int u);
/// δ(u)^*: Y^(t) lattice → Y^(t+1) lattice.
RatMatrix delta_pull(const StratifiedComplex& complex, int t, int u);

/// γ at degree t maps Y^(t+1) to Y^(t). DegreeOutOfRange unless 1 ≤ t ≤ depth.
RatMatrix gamma_matrix(const StratifiedComplex& complex, int t,
                       SignConvention convention = SignConvention::AsWritten);
/// ρ at degree t maps Y^(t) to Y^(t+1).
RatMatrix rho_matrix(const StratifiedComplex& complex, int t,
                     SignConvention convention = SignConvention::AsWritten);

struct IdentityCheck {
    std::string identity;  // kGammaSquared, kRhoSquared or kAnticommutator
    int degree = 0;
    SignConvention convention = SignConvention::AsWritten;
    bool asserted = true;
    bool passed = false;
    std::string witness;
};

inline constexpr std::string_view kGammaSquared = "gamma^2=0";
inline constexpr std::string_view kRhoSquared = "rho^2=0";
inline constexpr std::string_view kAnticommutator = "gamma.rho+rho.gamma=0";

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    /// True when every asserted identity holds; the anticommutator is reported only.
    [[nodiscard]] bool ok() const;
};

/// Evaluates all three identities degree by degree under both sign conventions.
IdentityReport check_identities(const StratifiedComplex& complex);

struct PchRankReport {
    int q = 0;
    int a = 0;
    std::size_t ambient_dim = 0;       // lattice of the numerator
    std::size_t kernel_dim = 0;        // numerator
    std::size_t image_dim = 0;         // denominator
    std::size_t intersection_dim = 0;  // dim(Ker ∩ Im)
    std::size_t quotient_dim = 0;      // kernel_dim - intersection_dim
    bool image_in_kernel = false;
};

/// Rank of PCH^{q-a-1}(Y, q-2a-1) ⊗ ℚ. For q-2a = 1 the subquotient is
/// Ker(iistar)/Im(γ: Y^(2) → Y^(1)) and iistar is required (MissingMap);
/// for q-2a > 1 it is Ker(γ)/Im(γ) at stratum q-2a. DegreeOutOfRange when q-2a < 1.
PchRankReport pch_rank(const StratifiedComplex& complex, int q, int a,
                       const std::optional<RatMatrix>& iistar = std::nullopt);

/// Components as Y^(1), intersecting pairs as Y^(2), all lattices rank 1.
StratifiedComplex curve_model_complex(const FibreGraph& graph);

}  // namespace g2deg
