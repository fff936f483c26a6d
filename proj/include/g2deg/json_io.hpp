#pragma once

#include "g2deg/boundary.hpp"
#include "g2deg/catalog.hpp"
#include "g2deg/conformance.hpp"
#include "g2deg/consani.hpp"
#include "g2deg/fibre.hpp"

#include <json.hpp>

#include <optional>

namespace g2deg {

using Json = nlohmann::json;

/// Rationals serialize as "p/q" strings, or "p" when q = 1. Parsing also
/// accepts JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

/// {"components":[{"name","genus","self"}], "intersections":[[a,b,n]], "horizontal":{name:int}}.
/// Catalog metadata keys (case, params, weierstrass, aliases, jacobian_type,
/// expected) are permitted and ignored; any other key is a FormatError.
struct FibreDocument {
    FibreGraph graph;
    std::optional<HorizontalDivisor> horizontal;
};

FibreDocument parse_fibre(const Json& j);
Json fibre_to_json(const FibreGraph& graph, const HorizontalDivisor* horizontal = nullptr);
Json catalog_to_json(const CatalogEntry& entry);
Json expected_to_json(const RankDescriptor& r);

Json to_json(const ValidationReport& report);
/// Object keyed by component name.
Json to_json(const ComponentVector& v);
Json to_json(const SurjectivityCertificate& cert);
Json to_json(const std::vector<ConformanceCheck>& checks);

/// {"depth":D, "strata":{"1":[[0],...],...}, "lattice_ranks":{...}, "maps":{"push":{"t":{"u":M}},"pull":...}}.
StratifiedComplex parse_complex(const Json& j);
Json complex_to_json(const StratifiedComplex& complex);
Json to_json(const IdentityReport& report);
Json to_json(const PchRankReport& report);

}  // namespace g2deg
