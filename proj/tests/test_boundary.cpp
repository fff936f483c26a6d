#include "g2deg/boundary.hpp"
#include "g2deg/catalog.hpp"
#include "g2deg/conformance.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/exactlin.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace g2deg;
using testing::ints;

namespace {

std::vector<std::pair<CaseId, CaseParams>> sweep_tuples()
{
    std::vector<std::pair<CaseId, CaseParams>> out;
    out.emplace_back(CaseId::I, CaseParams{});
    for (int n = 2; n <= 8; ++n) {
        out.emplace_back(CaseId::II, CaseParams{{"n", n}});
    }
    for (int r = 1; r <= 8; ++r) {
        out.emplace_back(CaseId::IV, CaseParams{{"r", r}});
    }
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            out.emplace_back(CaseId::III, CaseParams{{"n", a}, {"m", b}});
            out.emplace_back(CaseId::V, CaseParams{{"r", a}, {"m", b}});
        }
    }
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int c = 1; c <= 4; ++c) {
                out.emplace_back(CaseId::VI, CaseParams{{"s", a}, {"n", b}, {"m", c}});
                out.emplace_back(CaseId::VII, CaseParams{{"r", a}, {"s", b}, {"t", c}});
            }
        }
    }
    return out;
}

std::vector<std::string> slot_components(const ParshinCase& pc)
{
    std::set<std::string> seen;
    for (const auto& [slot, comp] : pc.weierstrass_slots) {
        seen.insert(comp);
    }
    return {seen.begin(), seen.end()};
}

std::vector<Placement> default_placements(CaseId id)
{
    std::vector<Placement> out;
    for (const auto& [p, q] : default_cycles(id)) {
        out.push_back({p, q});
    }
    return out;
}

}  // namespace

TEST_CASE("solve_vertical examples")
{
    const auto one = build_case(CaseId::I, {});
    const auto a = solve_vertical(one.graph, {}, {"C", 0});
    CHECK(a.values() == ints({0}));

    const auto two = build_case(CaseId::II, {{"n", 2}});
    const auto b = solve_vertical(two.graph, {{{"E", 2}, {"X2", -2}}}, {"E", 0});
    CHECK(b.names() == std::vector<std::string>{"E", "X1", "X2", "X3"});
    CHECK(b.values() == ints({0, -1, -2, -1}));
    CHECK(b.at("X2") == Rational(-2));

    const auto four = build_case(CaseId::IV, {{"r", 1}});
    const auto c = solve_vertical(four.graph, {{{"E1", 2}, {"E2", -2}}}, {"E1", 2});
    CHECK(c.values() == ints({2, 0, -2}));

    const auto half = solve_vertical(two.graph, {{{"E", 2}, {"X2", -2}}}, {"X1", Rational(1, 2)});
    CHECK(half.values() == std::vector<Rational>{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2)});
}

TEST_CASE("solve_vertical errors")
{
    const auto two = build_case(CaseId::II, {{"n", 2}});
    CHECK_THROWS_AS(solve_vertical(two.graph, {{{"E", 2}}}, {"E", 0}), Inconsistent);
    CHECK_THROWS_AS(solve_vertical(two.graph, {{{"E", 1}, {"Q", -1}}}, {"E", 0}), FormatError);
    CHECK_THROWS_AS(solve_vertical(two.graph, {}, {"Q", 0}), FormatError);

    const FibreGraph split({{"A", 0, 0}, {"B", 0, 0}}, {});
    CHECK_THROWS_AS(solve_vertical(split, {{{"A", 1}, {"B", -1}}}, {"A", 0}), RadicalTooLarge);
}

TEST_CASE("collino_boundary examples")
{
    const auto two = build_case(CaseId::II, {{"n", 2}});
    const auto b = collino_boundary(two.graph, {"E", "X2"});
    CHECK(b.equal_mod_fibre(BoundaryCycle(two.graph.names(), ints({0, -2, -4, -2}))));
    CHECK(b.equal_mod_fibre(BoundaryCycle(two.graph.names(), ints({5, 3, 1, 3}))));
    CHECK_FALSE(b.equal_mod_fibre(BoundaryCycle(two.graph.names(), ints({0, -2, -4, -3}))));

    const auto four = build_case(CaseId::IV, {{"r", 1}});
    CHECK(collino_boundary(four.graph, {"E1", "E2"})
              .equal_mod_fibre(BoundaryCycle(four.graph.names(), ints({4, 0, -4}))));

    const auto collino = collino_horizontal({"E", "X2"});
    CHECK(collino.multiplicities == std::map<std::string, long>{{"E", 2}, {"X2", -2}});
    CHECK(collino_horizontal({"E", "E"}).degree() == 0);

    for (const auto& name : two.graph.names()) {
        CHECK(collino_boundary(two.graph, {name, name}).is_zero_mod_fibre());
    }
}

TEST_CASE("decomposable_boundary examples")
{
    const auto two = build_case(CaseId::II, {{"n", 2}});
    CHECK(decomposable_boundary(two.graph, 0).values() == ints({0, 0, 0, 0}));
    CHECK(decomposable_boundary(two.graph, 1).values() == ints({1, 1, 1, 1}));
    CHECK(decomposable_boundary(two.graph, 1).is_zero_mod_fibre());
    const auto one = build_case(CaseId::I, {});
    CHECK(decomposable_boundary(one.graph, -3).values() == ints({-3}));
}

TEST_CASE("boundary cycle arithmetic")
{
    const std::vector<std::string> names{"A", "B", "C"};
    const BoundaryCycle x(names, ints({1, 2, 3}));
    const BoundaryCycle y(names, ints({0, 1, -1}));
    CHECK((x + y).values() == ints({1, 3, 2}));
    CHECK((x - y).values() == ints({1, 1, 4}));
    CHECK((-x).values() == ints({-1, -2, -3}));
    CHECK(x.normalized_at("B").values() == ints({-1, 0, 1}));
    CHECK(x.normalized_at("A", 5).values() == ints({5, 6, 7}));
    CHECK(x.equal_mod_fibre(x.normalized_at("C", 10)));
}

TEST_CASE("certify examples")
{
    const auto two = certify(CaseId::II, {{"n", 2}}, {{"E", "X2"}});
    CHECK(two.achieved_rank() == 2);
    CHECK(two.rank_mod_fibre == 1);
    CHECK(two.expected == RankDescriptor{2, false});
    CHECK(two.verdict == Verdict::Pass);
    CHECK(two.vectors.size() == 2);
    CHECK(two.vectors[0].values() == ints({1, 1, 1, 1}));

    const auto seven = certify(CaseId::VII, {{"r", 1}, {"s", 1}, {"t", 1}}, {{"X1", "Y1"}, {"Y1", "Z1"}});
    CHECK(seven.achieved_rank() == 3);
    CHECK(seven.verdict == Verdict::Pass);
    // Pairing against the X-slot component of the first boundary.
    bool found = false;
    for (const auto& sp : seven.slot_pairings) {
        if (sp.vector_index == 1 && sp.component == "X1") {
            CHECK(sp.value == Rational(-4));
            found = true;
        }
    }
    CHECK(found);

    const auto degenerate = certify(CaseId::II, {{"n", 2}}, {{"E", "E"}});
    CHECK(degenerate.achieved_rank() == 1);
    CHECK(degenerate.verdict == Verdict::Fail);

    const auto three = certify(CaseId::III, {{"n", 2}, {"m", 2}}, {{"B", "Xn"}, {"B", "Ym"}});
    CHECK(three.achieved_rank() == 3);
    CHECK(three.verdict == Verdict::Pass);

    const auto six = certify(CaseId::VI, {{"s", 1}, {"n", 1}, {"m", 2}}, {{"B1", "B2"}, {"B1", "Zm"}});
    CHECK(six.achieved_rank() == 3);
    CHECK(six.verdict == Verdict::Pass);

    const auto one = certify(CaseId::I, {}, {{"C", "C"}});
    CHECK(one.achieved_rank() == 1);
    CHECK(one.verdict == Verdict::BoundOnly);

    CHECK(to_string(Verdict::Pass) == "pass");
    CHECK(to_string(Verdict::Fail) == "fail");
    CHECK(to_string(Verdict::BoundOnly) == "bound-only");
}

TEST_CASE("placements must come from the Weierstrass slots")
{
    CHECK_THROWS_AS(certify(CaseId::II, {{"n", 2}}, {{"E", "X1"}}), FormatError);
    CHECK_THROWS_AS(certify(CaseId::II, {{"n", 2}}, {{"E", "nowhere"}}), FormatError);
    // Only one slot sits on B in Case V.
    CHECK_THROWS_AS(certify(CaseId::V, {{"r", 1}, {"m", 1}}, {{"B", "B"}}), FormatError);
    const auto entry = build_case(CaseId::III, {{"n", 3}, {"m", 2}});
    CHECK(resolve_placements(entry, {{"Xn", "Ym"}}) == std::vector<Placement>{{"X3", "Y2"}});
}

TEST_CASE("certificate ranks over the sweeps")
{
    for (const auto& [id, params] : sweep_tuples()) {
        CAPTURE(to_string(id), params);
        const auto cert = certify(id, params, default_placements(id));
        CHECK(cert.coefficient_rank == cert.pairing_rank);
        switch (id) {
        case CaseId::I:
            CHECK(cert.achieved_rank() == 1);
            CHECK(cert.verdict == Verdict::BoundOnly);
            break;
        case CaseId::II:
        case CaseId::V:
            CHECK(cert.achieved_rank() == 2);
            CHECK(cert.verdict == Verdict::Pass);
            break;
        case CaseId::IV:
            CHECK(cert.achieved_rank() == 2);
            CHECK(cert.verdict == Verdict::BoundOnly);
            break;
        default:
            CHECK(cert.achieved_rank() == 3);
            CHECK(cert.verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("boundary properties over the sweeps")
{
    for (const auto& [id, params] : sweep_tuples()) {
        CAPTURE(to_string(id), params);
        const auto entry = build_case(id, params);
        const auto& g = entry.graph;
        const auto slots = slot_components(entry.placement);

        for (const auto& p : slots) {
            CHECK(collino_boundary(g, {p, p}).is_zero_mod_fibre());
            for (const auto& q : slots) {
                const auto pq = collino_boundary(g, {p, q});
                CHECK(collino_boundary(g, {q, p}).equal_mod_fibre(-pq));
                for (const auto& r : slots) {
                    const auto pr = collino_boundary(g, {p, r});
                    CHECK(pr.equal_mod_fibre(pq + collino_boundary(g, {q, r})));
                }

                // Any two pins give solutions that differ by a constant.
                const auto h = collino_horizontal({p, q});
                const auto first = solve_vertical(g, h, {g.names().front(), 0});
                const auto second = solve_vertical(g, h, {g.names().back(), Rational(7, 3)});
                const RatVector diff = subtract(second.values(), first.values());
                for (const auto& d : diff) {
                    CHECK(d == diff.front());
                }
            }
        }
    }
}

TEST_CASE("solver agrees with the independent oracle on every catalog graph")
{
    for (const auto& [id, params] : sweep_tuples()) {
        CAPTURE(to_string(id), params);
        const auto entry = build_case(id, params);
        const auto& g = entry.graph;
        const auto m = testing::to_q(intersection_matrix(g));
        for (const auto& [p, q] : default_cycles(id)) {
            const Placement pl = resolve_placements(entry, {{p, q}}).front();
            const auto h = collino_horizontal(pl);
            const auto dense = h.dense(g);
            oracle::QVector hq;
            for (const auto& x : dense) {
                hq.push_back(testing::to_q(x));
            }
            const auto pin = g.index_of(pl.p_component);
            const auto expected = oracle::solve_pinned(m, hq, pin, 0);
            REQUIRE(expected);
            const auto got = solve_vertical(g, h, {pl.p_component, 0});
            for (std::size_t i = 0; i < g.size(); ++i) {
                CHECK(testing::to_q(got[i]) == (*expected)[i]);
            }
        }
    }
}

TEST_CASE("closed-form conformance checks")
{
    for (const auto& [id, params] : sweep_tuples()) {
        CAPTURE(to_string(id), params);
        const auto checks = closed_form_checks(id, params);
        CHECK_FALSE(checks.empty());
        for (const auto& c : checks) {
            CAPTURE(c.name, c.detail);
            // Known disagreement: moving Q from B to Ym changes the Y chain by a tent profile.
            if (id == CaseId::V && c.name == "Q on Ym gives the same boundary as Q on B") {
                CHECK_FALSE(c.passed);
                continue;
            }
            CHECK(c.passed);
        }
    }
}
