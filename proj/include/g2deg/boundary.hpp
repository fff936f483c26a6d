#pragma once

#include "g2deg/catalog.hpp"
#include "g2deg/fibre.hpp"

#include <string>
#include <vector>

namespace g2deg {

/// Pins one coefficient of a vertical divisor, fixing the fibre-class freedom.
struct Normalization {
    std::string component;
    Rational value;
};

/// Unique a with M·a = −H and a[normalization.component] = normalization.value.
/// Throws Inconsistent when deg H ≠ 0, RadicalTooLarge when the fibre is disconnected.
VerticalDivisor solve_vertical(const FibreGraph& graph, const HorizontalDivisor& horizontal,
                               const Normalization& normalization);

/// Components carrying the closures of the Weierstrass points P and Q.
struct Placement {
    std::string p_component;
    std::string q_component;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Horizontal divisor 2P̄ − 2Q̄ of Collino's function.
HorizontalDivisor collino_horizontal(const Placement& placement);

/// ∂Ξ_{P,Q} = Σ 2aᵢ Xᵢ with a solved under a_P = 0. Compare results with
/// BoundaryCycle::equal_mod_fibre.
BoundaryCycle collino_boundary(const FibreGraph& graph, const Placement& placement);

/// ∂((C, πᵏ)) = k·(fibre class).
BoundaryCycle decomposable_boundary(const FibreGraph& graph, long k);

enum class Verdict { Pass, Fail, BoundOnly };
std::string_view to_string(Verdict v);

/// Intersection of a boundary with a Weierstrass-carrying component.
struct SlotPairing {
    std::size_t vector_index = 0;
    std::string component;
    Rational value;
};

struct SurjectivityCertificate {
    std::string case_label;
    CaseParams params;
    std::vector<Placement> cycles;
    std::vector<BoundaryCycle> vectors;  // fibre class first, then one per cycle
    RatMatrix pairing;
    RatMatrix gram;
    std::size_t coefficient_rank = 0;  // rank of the vector set as coefficient rows
    std::size_t pairing_rank = 0;      // rank(gram) + 1 for the fibre class in the radical
    std::size_t rank_mod_fibre = 0;
    RankDescriptor expected;
    Verdict verdict = Verdict::Fail;
    std::vector<SlotPairing> slot_pairings;

    [[nodiscard]] std::size_t achieved_rank() const { return coefficient_rank; }
};

/// Resolves slot aliases and checks each placement against the Weierstrass slots.
std::vector<Placement> resolve_placements(const CatalogEntry& entry, const std::vector<Placement>& placements);

/// Certificate for an arbitrary valid fibre; `slot_components` selects which
/// components appear in slot_pairings.
SurjectivityCertificate certify_graph(const FibreGraph& graph, std::string case_label, CaseParams params,
                                      const std::vector<Placement>& cycles, RankDescriptor expected,
                                      const std::vector<std::string>& slot_components);

SurjectivityCertificate certify(CaseId id, const CaseParams& params, const std::vector<Placement>& cycles);

}  // namespace g2deg
