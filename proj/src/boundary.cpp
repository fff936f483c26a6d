#include "g2deg/boundary.hpp"

#include "g2deg/errors.hpp"
#include "g2deg/exactlin.hpp"

#include <set>

namespace g2deg {

VerticalDivisor solve_vertical(const FibreGraph& graph, const HorizontalDivisor& horizontal,
                               const Normalization& normalization)
{
    const std::size_t pin = graph.index_of(normalization.component);
    const RatVector h = horizontal.dense(graph);
    if (horizontal.degree() != 0) {
        throw Inconsistent("horizontal divisor has degree " + std::to_string(horizontal.degree()) +
                           "; the closure of a principal divisor has degree 0");
    }
    const RatMatrix m = intersection_matrix(graph);
    if (const std::size_t radical = graph.size() - rank(m); radical != 1) {
        throw RadicalTooLarge("intersection form has a radical of dimension " + std::to_string(radical) +
                              "; the fibre is not connected");
    }
    const auto solution = solve_affine(m, scale(h, -1));
    if (!solution) {
        throw Inconsistent("horizontal divisor is not orthogonal to the radical of the intersection form");
    }
    const RatVector& k = solution->kernel_basis.front();
    if (k[pin].is_zero()) {
        throw RadicalTooLarge("radical does not move the normalized component");
    }
    const Rational shift = (normalization.value - solution->particular[pin]) / k[pin];
    return {graph.names(), add(solution->particular, scale(k, shift))};
}

HorizontalDivisor collino_horizontal(const Placement& placement)
{
    HorizontalDivisor h;
    h.multiplicities[placement.p_component] += 2;
    h.multiplicities[placement.q_component] -= 2;
    return h;
}

BoundaryCycle collino_boundary(const FibreGraph& graph, const Placement& placement)
{
    static_cast<void>(graph.index_of(placement.q_component));
    const VerticalDivisor a = solve_vertical(graph, collino_horizontal(placement), {placement.p_component, 0});
    return {a.names(), scale(a.values(), 2)};
}

BoundaryCycle decomposable_boundary(const FibreGraph& graph, long k)
{
    return {graph.names(), RatVector(graph.size(), Rational(k))};
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::BoundOnly: return "bound-only";
    }
    return "?";
}

std::vector<Placement> resolve_placements(const CatalogEntry& entry, const std::vector<Placement>& wanted_cycles)
{
    std::vector<Placement> out;
    for (const auto& wanted : wanted_cycles) {
        Placement p{entry.placement.resolve(wanted.p_component, entry.graph),
                    entry.placement.resolve(wanted.q_component, entry.graph)};
        for (const auto* name : {&p.p_component, &p.q_component}) {
            if (entry.placement.slots_on(*name) == 0) {
                throw FormatError("component " + *name + " carries no Weierstrass point in case " +
                                  std::string(to_string(entry.placement.id)));
            }
        }
        if (p.p_component == p.q_component && entry.placement.slots_on(p.p_component) < 2) {
            throw FormatError("component " + p.p_component + " carries only one Weierstrass point");
        }
        out.push_back(std::move(p));
    }
    return out;
}

SurjectivityCertificate certify_graph(const FibreGraph& graph, std::string case_label, CaseParams params,
                                      const std::vector<Placement>& cycles, RankDescriptor expected,
                                      const std::vector<std::string>& slot_components)
{
    SurjectivityCertificate cert;
    cert.case_label = std::move(case_label);
    cert.params = std::move(params);
    cert.cycles = cycles;
    cert.expected = expected;
    cert.pairing = intersection_matrix(graph);

    cert.vectors.push_back(decomposable_boundary(graph, 1));
    for (const auto& c : cycles) {
        cert.vectors.push_back(collino_boundary(graph, c));
    }
    std::vector<RatVector> rows;
    for (const auto& v : cert.vectors) {
        rows.push_back(v.values());
    }
    cert.coefficient_rank = rank(RatMatrix::from_rows(rows, graph.size()));
    cert.gram = gram(rows, cert.pairing);
    const std::size_t gram_rank = rank(cert.gram);
    if (cert.coefficient_rank < 1 || cert.coefficient_rank - 1 != gram_rank) {
        throw MethodDisagreement("coefficient rank " + std::to_string(cert.coefficient_rank) +
                                 " minus the fibre class differs from Gram rank " + std::to_string(gram_rank));
    }
    cert.rank_mod_fibre = gram_rank;
    cert.pairing_rank = gram_rank + 1;

    if (expected.lower_bound) {
        cert.verdict = Verdict::BoundOnly;
    } else {
        cert.verdict = cert.achieved_rank() >= static_cast<std::size_t>(expected.value) ? Verdict::Pass
                                                                                         : Verdict::Fail;
    }

    for (std::size_t i = 1; i < cert.vectors.size(); ++i) {
        const RatVector image = cert.pairing * cert.vectors[i].values();
        for (const auto& name : slot_components) {
            cert.slot_pairings.push_back({i, name, image[graph.index_of(name)]});
        }
    }
    return cert;
}

SurjectivityCertificate certify(CaseId id, const CaseParams& params, const std::vector<Placement>& cycles)
{
    const CatalogEntry entry = build_case(id, params);
    const auto resolved = resolve_placements(entry, cycles);
    std::vector<std::string> slot_components;
    std::set<std::string> seen;
    for (const auto& [slot, component] : entry.placement.weierstrass_slots) {
        if (seen.insert(component).second) {
            slot_components.push_back(component);
        }
    }
    return certify_graph(entry.graph, std::string(to_string(id)), entry.placement.params, resolved,
                         entry.placement.expected_rank, slot_components);
}

}  // namespace g2deg
