#include "g2deg/conformance.hpp"

#include "g2deg/boundary.hpp"

#include <functional>

namespace g2deg {

namespace {

std::string X(const char* prefix, int i)
{
    return prefix + std::to_string(i);
}

class Checker {
public:
    explicit Checker(const FibreGraph& graph) : graph_(graph) {}

    /// Every (component, value) pair must match the divisor exactly.
    void coefficients(std::string name, const VerticalDivisor& divisor,
                      const std::vector<std::pair<std::string, Rational>>& expected)
    {
        ConformanceCheck c{std::move(name), true, {}};
        for (const auto& [component, value] : expected) {
            const Rational& got = divisor.at(component);
            if (got != value) {
                c.passed = false;
                c.detail = component + ": expected " + value.str() + ", got " + got.str();
                break;
            }
        }
        checks_.push_back(std::move(c));
    }

    /// Boundary equals the expression modulo the fibre class; absent components are 0.
    void boundary(std::string name, const BoundaryCycle& got,
                  const std::vector<std::pair<std::string, Rational>>& expression)
    {
        RatVector v(graph_.size());
        for (const auto& [component, value] : expression) {
            v[graph_.index_of(component)] += value;
        }
        const BoundaryCycle want(graph_.names(), std::move(v));
        ConformanceCheck c{std::move(name), got.equal_mod_fibre(want), {}};
        if (!c.passed) {
            c.detail = "difference is not a multiple of the fibre class";
        }
        checks_.push_back(std::move(c));
    }

    void truth(std::string name, bool ok, std::string detail)
    {
        checks_.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
    }

    std::vector<ConformanceCheck> take() { return std::move(checks_); }

private:
    const FibreGraph& graph_;
    std::vector<ConformanceCheck> checks_;
};

using Terms = std::vector<std::pair<std::string, Rational>>;

VerticalDivisor vertical(const FibreGraph& g, const Placement& p, const std::string& pin, const Rational& value)
{
    return solve_vertical(g, collino_horizontal(p), {pin, value});
}

void case_one(const FibreGraph& g, Checker& ck)
{
    const Placement p{"C", "C"};
    ck.coefficients("a=0", vertical(g, p, "C", 0), {{"C", 0}});
    ck.truth("boundary zero", collino_boundary(g, p).is_zero_mod_fibre(), "nonzero boundary");
}

void case_two(const FibreGraph& g, int n, Checker& ck)
{
    const Placement p{"E", X("X", n)};
    for (int a : {0, 5}) {
        const auto div = vertical(g, p, "E", a);
        Terms chain;
        Terms mirror;
        for (int k = 1; k <= n; ++k) {
            chain.emplace_back(X("X", k), a - k);
        }
        for (int k = 1; k <= n - 1; ++k) {
            mirror.emplace_back(X("X", 2 * n - k), div.at(X("X", k)));
        }
        const std::string tag = " (a=" + std::to_string(a) + ")";
        ck.coefficients("b_k=a-k" + tag, div, chain);
        ck.coefficients("b_{2n-k}=b_k" + tag, div, mirror);
    }
    Terms expr;
    for (int i = 1; i <= n - 1; ++i) {
        expr.emplace_back(X("X", i), -2 * i);
        expr.emplace_back(X("X", 2 * n - i), -2 * i);
    }
    expr.emplace_back(X("X", n), -2 * n);
    ck.boundary("boundary closed form", collino_boundary(g, p), expr);
}

Terms case_three_expr(const char* own, int len, const char* other, int other_len, int a)
{
    Terms expr{{"B", 2 * a}};
    for (int j = 1; j <= 2 * other_len - 1; ++j) {
        expr.emplace_back(X(other, j), 2 * a);
    }
    for (int i = 1; i <= len - 1; ++i) {
        expr.emplace_back(X(own, i), -2 * (i - a));
        expr.emplace_back(X(own, 2 * len - i), -2 * (i - a));
    }
    expr.emplace_back(X(own, len), -2 * (len - a));
    return expr;
}

void case_three(const FibreGraph& g, int n, int m, Checker& ck)
{
    for (int a : {0, 2}) {
        const std::string tag = " (a=" + std::to_string(a) + ")";
        ck.boundary("boundary (B,Xn) closed form" + tag, collino_boundary(g, {"B", X("X", n)}),
                    case_three_expr("X", n, "Y", m, a));
        ck.boundary("boundary (B,Ym) closed form" + tag, collino_boundary(g, {"B", X("Y", m)}),
                    case_three_expr("Y", m, "X", n, a));
    }
}

void case_four(const FibreGraph& g, int r, Checker& ck)
{
    const Placement p{"E1", "E2"};
    for (int b0 : {0, r + 1}) {
        const auto div = vertical(g, p, "E1", b0);
        Terms expected{{"E1", b0}, {"E2", b0 - 2 * (r + 1)}};
        for (int i = 1; i <= r; ++i) {
            expected.emplace_back(X("X", i), b0 - 2 * i);
        }
        ck.coefficients("b_i=b_0-2i (b_0=" + std::to_string(b0) + ")", div, expected);
    }
    const auto symmetric = vertical(g, p, "E1", r + 1);
    Terms antisym{{"E2", -symmetric.at("E1")}};
    for (int i = 1; i <= r; ++i) {
        antisym.emplace_back(X("X", i), -symmetric.at(X("X", r + 1 - i)));
    }
    ck.coefficients("b_i=-b_{r+1-i} (b_0=r+1)", symmetric, antisym);

    Terms expr{{"E1", 2 * (r + 1)}, {"E2", -2 * (r + 1)}};
    for (int i = 1; i <= (r + 1) / 2; ++i) {
        expr.emplace_back(X("X", i), 2 * (r + 1 - 2 * i));
        expr.emplace_back(X("X", r + 1 - i), -2 * (r + 1 - 2 * i));
    }
    ck.boundary("boundary closed form", collino_boundary(g, p), expr);
}

void case_five(const FibreGraph& g, int r, int m, Checker& ck)
{
    const int s = 2 * m - 1;
    const Placement p{"E", "B"};
    for (int a : {0, 3}) {
        const auto div = vertical(g, p, "E", a);
        Terms b;
        for (int i = 1; i <= r; ++i) {
            b.emplace_back(X("X", i), a - 2 * i);
        }
        Terms d;
        for (int j = 1; j <= s; ++j) {
            d.emplace_back(X("Y", j), a - 2 * (r + 1));
        }
        const std::string tag = " (a=" + std::to_string(a) + ")";
        ck.coefficients("b_i=a-2i" + tag, div, b);
        ck.coefficients("c=a-2(r+1)" + tag, div, {{"B", a - 2 * (r + 1)}});
        ck.coefficients("d_j=a-2(r+1)" + tag, div, d);
    }
    // The displayed boundary at a = 0 (its E term vanishes there).
    Terms expr{{"B", -4 * (r + 1)}};
    for (int i = 1; i <= r; ++i) {
        expr.emplace_back(X("X", i), -4 * i);
    }
    for (int j = 1; j <= s; ++j) {
        expr.emplace_back(X("Y", j), -4 * (r + 1));
    }
    const auto via_b = collino_boundary(g, p);
    ck.boundary("boundary closed form (a=0)", via_b, expr);
    const auto via_y = collino_boundary(g, {"E", X("Y", m)});
    ck.truth("Q on Ym gives the same boundary as Q on B", via_y.equal_mod_fibre(via_b),
             "boundaries differ modulo the fibre class");
}

void case_six(const FibreGraph& g, int s, int n, int m, Checker& ck)
{
    Terms common{{"B2", -2 * (s + 1)}};
    for (int j = 1; j <= 2 * n - 1; ++j) {
        common.emplace_back(X("Y", j), 0);
    }
    for (int i = 1; i <= s; ++i) {
        common.emplace_back(X("X", i), -2 * i);
    }

    const Placement first{"B1", "B2"};
    const auto div = vertical(g, first, "B1", 0);
    ck.coefficients("(B1,B2): d_j=0, c_i=-2i, b_2=-2(s+1)", div, common);
    Terms e;
    for (int k = 1; k <= 2 * m - 1; ++k) {
        e.emplace_back(X("Z", k), -2 * (s + 1));
    }
    ck.coefficients("(B1,B2): e_k=-2(s+1)", div, e);

    Terms expr{{"B1", 2 * (s + 1)}, {"B2", -2 * (s + 1)}};
    for (int j = 1; j <= 2 * n - 1; ++j) {
        expr.emplace_back(X("Y", j), 2 * (s + 1));
    }
    for (int k = 1; k <= 2 * m - 1; ++k) {
        expr.emplace_back(X("Z", k), -2 * (s + 1));
    }
    for (int i = 1; i <= (s + 1) / 2; ++i) {
        expr.emplace_back(X("X", i), 2 * (s + 1 - 2 * i));
        expr.emplace_back(X("X", s + 1 - i), -2 * (s + 1 - 2 * i));
    }
    ck.boundary("(B1,B2): symmetric boundary closed form", collino_boundary(g, first), expr);

    const Placement second{"B1", X("Z", m)};
    const auto div2 = vertical(g, second, "B1", 0);
    ck.coefficients("(B1,Zm): d_j=0, c_i=-2i, b_2=-2(s+1)", div2, common);
    Terms ek;
    for (int k = 1; k <= m; ++k) {
        ek.emplace_back(X("Z", k), -2 * (s + 1) - k);
    }
    ck.coefficients("(B1,Zm): e_k=-2(s+1)-k", div2, ek);
    Terms mirror;
    for (int k = 1; k <= m - 1; ++k) {
        mirror.emplace_back(X("Z", m + k), div2.at(X("Z", m - k)));
    }
    ck.coefficients("(B1,Zm): e_{m-k}=e_{m+k}", div2, mirror);
}

void case_seven(const FibreGraph& g, int r, int s, int t, Checker& ck)
{
    const Placement p{X("X", r), X("Y", s)};
    const auto div = vertical(g, p, "B1", 0);
    ck.coefficients("a_1=1, c_1=-1, b_2=d_1=0", div, {{"X1", 1}, {"Y1", -1}, {"B2", 0}, {"Z1", 0}});
    Terms chains;
    for (int i = 1; i <= 2 * r - 1; ++i) {
        chains.emplace_back(X("X", i), i <= r ? i : i - 2 * (i - r));
    }
    for (int j = 1; j <= 2 * s - 1; ++j) {
        chains.emplace_back(X("Y", j), j <= s ? -j : -j + 2 * (j - s));
    }
    for (int k = 1; k <= 2 * t - 1; ++k) {
        chains.emplace_back(X("Z", k), 0);
    }
    ck.coefficients("a_i, c_j piecewise linear; d_k=0", div, chains);

    Terms expr;
    for (int i = 1; i <= 2 * r - 1; ++i) {
        expr.emplace_back(X("X", i), 2 * (i <= r ? i : 2 * r - i));
    }
    for (int j = 1; j <= 2 * s - 1; ++j) {
        expr.emplace_back(X("Y", j), -2 * (j <= s ? j : 2 * s - j));
    }
    ck.boundary("boundary closed form", collino_boundary(g, p), expr);
}

}  // namespace

std::vector<ConformanceCheck> closed_form_checks(CaseId id, const CaseParams& params)
{
    const CatalogEntry entry = build_case(id, params);
    const FibreGraph& g = entry.graph;
    const auto& pr = entry.placement.params;
    Checker ck(g);
    switch (id) {
    case CaseId::I: case_one(g, ck); break;
    case CaseId::II: case_two(g, pr.at("n"), ck); break;
    case CaseId::III: case_three(g, pr.at("n"), pr.at("m"), ck); break;
    case CaseId::IV: case_four(g, pr.at("r"), ck); break;
    case CaseId::V: case_five(g, pr.at("r"), pr.at("m"), ck); break;
    case CaseId::VI: case_six(g, pr.at("s"), pr.at("n"), pr.at("m"), ck); break;
    case CaseId::VII: case_seven(g, pr.at("r"), pr.at("s"), pr.at("t"), ck); break;
    }
    return ck.take();
}

}  // namespace g2deg
