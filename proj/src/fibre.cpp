#include "g2deg/fibre.hpp"

#include "g2deg/errors.hpp"
#include "g2deg/exactlin.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2deg {

FibreGraph::FibreGraph(std::vector<Component> components, const std::vector<Intersection>& intersections)
    : components_(std::move(components))
{
    std::set<std::string_view> seen;
    for (const auto& c : components_) {
        if (c.name.empty()) {
            throw FormatError("component with empty name");
        }
        if (!seen.insert(c.name).second) {
            throw FormatError("duplicate component name '" + c.name + "'");
        }
        if (c.genus < 0) {
            throw FormatError("negative genus on component '" + c.name + "'");
        }
    }
    for (const auto& x : intersections) {
        const std::size_t i = index_of(x.first);
        const std::size_t j = index_of(x.second);
        if (i == j) {
            throw FormatError("intersection of '" + x.first + "' with itself; use the self-intersection field");
        }
        if (x.count < 0) {
            throw FormatError("negative intersection number between '" + x.first + "' and '" + x.second + "'");
        }
        const auto key = std::minmax(i, j);
        if (!pairs_.emplace(std::pair{key.first, key.second}, x.count).second) {
            throw FormatError("duplicate intersection pair '" + x.first + "', '" + x.second + "'");
        }
    }
}

std::vector<std::string> FibreGraph::names() const
{
    std::vector<std::string> out;
    out.reserve(components_.size());
    for (const auto& c : components_) {
        out.push_back(c.name);
    }
    return out;
}

std::optional<std::size_t> FibreGraph::find(std::string_view name) const
{
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t FibreGraph::index_of(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw FormatError("unknown component '" + std::string(name) + "'");
}

int FibreGraph::intersection(std::size_t i, std::size_t j) const
{
    if (i == j) {
        return components_.at(i).self_intersection;
    }
    const auto key = std::minmax(i, j);
    auto it = pairs_.find({key.first, key.second});
    return it == pairs_.end() ? 0 : it->second;
}

std::vector<Intersection> FibreGraph::intersections() const
{
    std::vector<Intersection> out;
    for (const auto& [key, count] : pairs_) {
        if (count != 0) {
            out.push_back({components_[key.first].name, components_[key.second].name, count});
        }
    }
    return out;
}

long HorizontalDivisor::degree() const
{
    long d = 0;
    for (const auto& [name, m] : multiplicities) {
        d += m;
    }
    return d;
}

RatVector HorizontalDivisor::dense(const FibreGraph& graph) const
{
    RatVector v(graph.size());
    for (const auto& [name, m] : multiplicities) {
        v[graph.index_of(name)] += Rational(m);
    }
    return v;
}

ComponentVector::ComponentVector(std::vector<std::string> names, RatVector values)
    : names_(std::move(names)), values_(std::move(values))
{
    if (names_.size() != values_.size()) {
        throw DimensionMismatch("component names and coefficients differ in length");
    }
}

const Rational& ComponentVector::at(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return values_[i];
        }
    }
    throw FormatError("unknown component '" + std::string(name) + "'");
}

namespace {

void require_same_components(const ComponentVector& a, const ComponentVector& b)
{
    if (a.names() != b.names()) {
        throw DimensionMismatch("boundary cycles live on different fibres");
    }
}

}  // namespace

bool BoundaryCycle::equal_mod_fibre(const BoundaryCycle& other) const
{
    require_same_components(*this, other);
    if (values_.empty()) {
        return true;
    }
    const Rational offset = values_[0] - other.values_[0];
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] - other.values_[i] != offset) {
            return false;
        }
    }
    return true;
}

bool BoundaryCycle::is_zero_mod_fibre() const
{
    return std::all_of(values_.begin(), values_.end(), [&](const Rational& x) { return x == values_.front(); });
}

BoundaryCycle BoundaryCycle::normalized_at(std::string_view name, const Rational& value) const
{
    const Rational shift = value - at(name);
    RatVector v = values_;
    for (auto& x : v) {
        x += shift;
    }
    return {names_, std::move(v)};
}

BoundaryCycle BoundaryCycle::operator-() const
{
    return {names_, scale(values_, -1)};
}

BoundaryCycle operator+(const BoundaryCycle& lhs, const BoundaryCycle& rhs)
{
    require_same_components(lhs, rhs);
    return {lhs.names_, add(lhs.values_, rhs.values_)};
}

BoundaryCycle operator-(const BoundaryCycle& lhs, const BoundaryCycle& rhs)
{
    require_same_components(lhs, rhs);
    return {lhs.names_, subtract(lhs.values_, rhs.values_)};
}

bool ValidationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

const InvariantCheck& ValidationReport::check(std::string_view name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no validation check named '" + std::string(name) + "'");
}

RatMatrix intersection_matrix(const FibreGraph& graph)
{
    const std::size_t n = graph.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = graph.intersection(i, j);
        }
    }
    return m;
}

RatVector fibre_class(std::size_t components)
{
    return RatVector(components, Rational(1));
}

namespace {

InvariantCheck check_symmetric(const RatMatrix& m, const FibreGraph& g)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) {
                return {std::string(kCheckSymmetric), false,
                        "entry (" + g.components()[i].name + "," + g.components()[j].name + ")"};
            }
        }
    }
    return {std::string(kCheckSymmetric), true, {}};
}

InvariantCheck check_row_sums(const RatMatrix& m, const FibreGraph& g)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            s += m(i, j);
        }
        if (!s.is_zero()) {
            return {std::string(kCheckRowSums), false,
                    "row " + g.components()[i].name + " sums to " + s.str()};
        }
    }
    return {std::string(kCheckRowSums), true, {}};
}

InvariantCheck check_connected(const FibreGraph& g)
{
    const std::size_t n = g.size();
    if (n == 0) {
        return {std::string(kCheckConnected), false, "no components"};
    }
    std::vector<bool> reached(n, false);
    std::queue<std::size_t> todo;
    reached[0] = true;
    todo.push(0);
    while (!todo.empty()) {
        const std::size_t i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && !reached[j] && g.intersection(i, j) > 0) {
                reached[j] = true;
                todo.push(j);
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!reached[j]) {
            return {std::string(kCheckConnected), false,
                    g.components()[j].name + " unreachable from " + g.components()[0].name};
        }
    }
    return {std::string(kCheckConnected), true, {}};
}

// Symmetric elimination on -M: a negative pivot, or a zero pivot with a
// nonzero remainder in its row, rules out semidefiniteness.
InvariantCheck check_semidefinite(const RatMatrix& m, const FibreGraph& g)
{
    const std::size_t n = m.rows();
    if (!m.is_symmetric()) {
        return {std::string(kCheckSemidefinite), false, "matrix is not symmetric"};
    }
    RatMatrix a = m * Rational(-1);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = a(k, k);
        if (pivot.sign() < 0) {
            return {std::string(kCheckSemidefinite), false,
                    "positive pivot " + (-pivot).str() + " at " + g.components()[k].name};
        }
        if (pivot.is_zero()) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!a(k, j).is_zero()) {
                    return {std::string(kCheckSemidefinite), false,
                            "zero pivot with nonzero coupling at " + g.components()[k].name + "," +
                                g.components()[j].name};
                }
            }
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) {
                continue;
            }
            const Rational f = a(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
        }
    }
    return {std::string(kCheckSemidefinite), true, {}};
}

}  // namespace

ValidationReport validate(const FibreGraph& graph)
{
    ValidationReport report;
    const RatMatrix m = intersection_matrix(graph);
    report.checks.push_back(check_symmetric(m, graph));
    report.checks.push_back(check_row_sums(m, graph));
    report.checks.push_back(check_connected(graph));
    report.checks.push_back(check_semidefinite(m, graph));

    const auto kernel = kernel_basis(m);
    report.radical_dimension = kernel.size();
    InvariantCheck radical{std::string(kCheckRadical), false, {}};
    if (kernel.size() != 1) {
        radical.witness = "radical dimension " + std::to_string(kernel.size());
    } else if (rank(RatMatrix::from_rows(std::vector{kernel[0], fibre_class(graph.size())}, graph.size())) != 1) {
        radical.witness = "radical is not spanned by the fibre class";
    } else {
        radical.passed = true;
    }
    report.checks.push_back(std::move(radical));
    return report;
}

}  // namespace g2deg
