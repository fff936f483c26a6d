#pragma once

#include "g2deg/consani.hpp"
#include "g2deg/fibre.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2deg {

/// Parshin's seven configurations for the minimal regular model of a genus-2 curve.
enum class CaseId { I, II, III, IV, V, VI, VII };

inline constexpr CaseId kAllCases[] = {CaseId::I,  CaseId::II, CaseId::III, CaseId::IV,
                                       CaseId::V,  CaseId::VI, CaseId::VII};

std::string_view to_string(CaseId id);
/// "I".."VII"; throws UnknownCase.
CaseId parse_case(std::string_view text);

using CaseParams = std::map<std::string, int>;

/// Exact rank, or a lower bound for Type 1 Jacobians.
struct RankDescriptor {
    int value = 0;
    bool lower_bound = false;

    [[nodiscard]] std::string str() const;  // "2" or ">=2"
    friend bool operator==(const RankDescriptor&, const RankDescriptor&) = default;
};

struct ParshinCase {
    CaseId id = CaseId::I;
    CaseParams params;
    std::map<std::string, std::string> weierstrass_slots;  // w1..w6 -> component
    std::map<std::string, std::string> aliases;            // e.g. Xn -> X2
    int jacobian_type = 1;
    RankDescriptor expected_rank;

    /// Literal component name or a slot alias. Throws FormatError.
    [[nodiscard]] std::string resolve(std::string_view name, const FibreGraph& graph) const;
    [[nodiscard]] int slots_on(std::string_view component) const;
};

struct CatalogEntry {
    FibreGraph graph;
    ParshinCase placement;
};

/// Parameter names in declaration order: II {n}, III {n,m}, IV {r}, V {r,m},
/// VI {s,n,m}, VII {r,s,t}; Case I takes none.
std::vector<std::string> param_names(CaseId id);

/// Throws ParamOutOfRange on missing, unknown or out-of-range parameters.
CatalogEntry build_case(CaseId id, const CaseParams& params);

RankDescriptor expected_dimension(CaseId id);
int jacobian_type(CaseId id);

/// P:Q placements used for the standard certificate of each case.
std::vector<std::pair<std::string, std::string>> default_cycles(CaseId id);

/// Cycle of N elliptic ruled surfaces (N ≥ 3).
StratifiedComplex build_type2_complex(int cycle_length);
/// Standard triangulation of an n1×n2 torus (n1, n2 ≥ 3).
StratifiedComplex build_type3_complex(int n1, int n2);
/// Dispatches on the Kulikov type: 2 takes {N}, 3 takes {N1, N2}.
StratifiedComplex build_kulikov_complex(int kulikov_type, const std::vector<int>& sizes);

}  // namespace g2deg
