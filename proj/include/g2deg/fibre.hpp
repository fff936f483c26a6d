#pragma once

#include "g2deg/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2deg {

/// A component of the special fibre. Multiplicity is always one.
struct Component {
    std::string name;
    int genus = 0;  // metadata only
    int self_intersection = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

/// Total intersection number of two distinct components.
struct Intersection {
    std::string first;
    std::string second;
    int count = 0;
};

/// Special fibre of a minimal regular model: components in declaration order
/// plus pairwise intersection numbers. Construction rejects duplicate names,
/// unresolved or repeated pairs, self-pairs and negative counts; it does not
/// check the fibre conditions (see validate()).
class FibreGraph {
public:
    FibreGraph() = default;
    FibreGraph(std::vector<Component> components, const std::vector<Intersection>& intersections);

    [[nodiscard]] const std::vector<Component>& components() const { return components_; }
    [[nodiscard]] std::size_t size() const { return components_.size(); }
    [[nodiscard]] std::vector<std::string> names() const;

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    /// Throws FormatError when the name does not resolve.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;

    [[nodiscard]] int intersection(std::size_t i, std::size_t j) const;
    /// Nonzero pairs (i < j) in index order.
    [[nodiscard]] std::vector<Intersection> intersections() const;

private:
    std::vector<Component> components_;
    std::map<std::pair<std::size_t, std::size_t>, int> pairs_;
};

/// Intersection numbers (H·X_j) of a horizontal divisor; absent components are 0.
struct HorizontalDivisor {
    std::map<std::string, long> multiplicities;

    [[nodiscard]] long degree() const;
    [[nodiscard]] bool empty() const { return multiplicities.empty(); }
    /// Dense vector in the graph's component order; throws FormatError on unknown names.
    [[nodiscard]] RatVector dense(const FibreGraph& graph) const;
};

/// Rational coefficients over the components of a fixed graph.
class ComponentVector {
public:
    ComponentVector() = default;
    ComponentVector(std::vector<std::string> names, RatVector values);

    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const RatVector& values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Rational& at(std::string_view name) const;
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const ComponentVector&, const ComponentVector&) = default;

protected:
    std::vector<std::string> names_;
    RatVector values_;
};

/// Coefficients a_i of div(f̄) = H + Σ a_i X_i.
class VerticalDivisor : public ComponentVector {
public:
    using ComponentVector::ComponentVector;
};

/// A boundary in PCH¹ read as a coefficient vector. Canonical equality is
/// equality modulo the all-ones fibre class.
class BoundaryCycle : public ComponentVector {
public:
    using ComponentVector::ComponentVector;

    [[nodiscard]] bool equal_mod_fibre(const BoundaryCycle& other) const;
    [[nodiscard]] bool is_zero_mod_fibre() const;
    /// Representative with the named component's coefficient shifted to `value`.
    [[nodiscard]] BoundaryCycle normalized_at(std::string_view name, const Rational& value = 0) const;

    BoundaryCycle operator-() const;
    friend BoundaryCycle operator+(const BoundaryCycle& lhs, const BoundaryCycle& rhs);
    friend BoundaryCycle operator-(const BoundaryCycle& lhs, const BoundaryCycle& rhs);
};

struct InvariantCheck {
    std::string name;
    bool passed = false;
    std::string witness;  // set on failure
};

struct ValidationReport {
    std::vector<InvariantCheck> checks;
    std::size_t radical_dimension = 0;

    [[nodiscard]] bool ok() const;
    /// Throws std::out_of_range for an unknown check name.
    [[nodiscard]] const InvariantCheck& check(std::string_view name) const;
};

// Check names used in ValidationReport.
inline constexpr std::string_view kCheckSymmetric = "symmetric";
inline constexpr std::string_view kCheckRowSums = "row_sums_zero";
inline constexpr std::string_view kCheckConnected = "connected";
inline constexpr std::string_view kCheckSemidefinite = "negative_semidefinite";
inline constexpr std::string_view kCheckRadical = "radical_is_fibre_class";

/// Off-diagonal entries are pairwise intersections, the diagonal holds
/// self-intersections; rows and columns follow the component order.
RatMatrix intersection_matrix(const FibreGraph& graph);

/// Never throws; each failed invariant becomes a report entry with a witness.
ValidationReport validate(const FibreGraph& graph);

RatVector fibre_class(std::size_t components);

}  // namespace g2deg
