#include "g2deg/catalog.hpp"

#include "g2deg/errors.hpp"

#include <algorithm>
#include <set>

namespace g2deg {

std::string_view to_string(CaseId id)
{
    switch (id) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
    case CaseId::V: return "V";
    case CaseId::VI: return "VI";
    case CaseId::VII: return "VII";
    }
    return "?";
}

CaseId parse_case(std::string_view text)
{
    for (CaseId id : kAllCases) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw UnknownCase("unknown case '" + std::string(text) + "' (expected I..VII)");
}

std::string RankDescriptor::str() const
{
    return (lower_bound ? ">=" : "") + std::to_string(value);
}

std::string ParshinCase::resolve(std::string_view name, const FibreGraph& graph) const
{
    if (graph.find(name)) {
        return std::string(name);
    }
    if (auto it = aliases.find(std::string(name)); it != aliases.end()) {
        return it->second;
    }
    throw FormatError("'" + std::string(name) + "' is neither a component nor a slot alias of case " +
                      std::string(to_string(id)));
}

int ParshinCase::slots_on(std::string_view component) const
{
    return static_cast<int>(std::count_if(weierstrass_slots.begin(), weierstrass_slots.end(),
                                          [&](const auto& kv) { return kv.second == component; }));
}

std::vector<std::string> param_names(CaseId id)
{
    switch (id) {
    case CaseId::I: return {};
    case CaseId::II: return {"n"};
    case CaseId::III: return {"n", "m"};
    case CaseId::IV: return {"r"};
    case CaseId::V: return {"r", "m"};
    case CaseId::VI: return {"s", "n", "m"};
    case CaseId::VII: return {"r", "s", "t"};
    }
    return {};
}

RankDescriptor expected_dimension(CaseId id)
{
    switch (id) {
    case CaseId::I: return {2, true};
    case CaseId::II: return {2, false};
    case CaseId::III: return {3, false};
    case CaseId::IV: return {3, true};
    case CaseId::V: return {2, false};
    case CaseId::VI: return {3, false};
    case CaseId::VII: return {3, false};
    }
    return {};
}

int jacobian_type(CaseId id)
{
    switch (id) {
    case CaseId::I:
    case CaseId::IV: return 1;
    case CaseId::II:
    case CaseId::V: return 2;
    case CaseId::III:
    case CaseId::VI:
    case CaseId::VII: return 3;
    }
    return 0;
}

std::vector<std::pair<std::string, std::string>> default_cycles(CaseId id)
{
    switch (id) {
    case CaseId::I: return {{"C", "C"}};
    case CaseId::II: return {{"E", "Xn"}};
    case CaseId::III: return {{"B", "Xn"}, {"B", "Ym"}};
    case CaseId::IV: return {{"E1", "E2"}};
    case CaseId::V: return {{"E", "B"}};
    case CaseId::VI: return {{"B1", "B2"}, {"B1", "Zm"}};
    case CaseId::VII: return {{"Xr", "Ys"}, {"Ys", "Zt"}};
    }
    return {};
}

namespace {

class GraphBuilder {
public:
    void component(std::string name, int genus, int self)
    {
        components_.push_back({std::move(name), genus, self});
    }

    void meet(const std::string& a, const std::string& b)
    {
        ++counts_[std::minmax(a, b)];
    }

    /// prefix1..prefix<length> with self-intersection -2, joining `from` to `to`.
    void chain(const std::string& from, const std::string& prefix, int length, const std::string& to)
    {
        std::string previous = from;
        for (int i = 1; i <= length; ++i) {
            std::string name = prefix + std::to_string(i);
            component(name, 0, -2);
            meet(previous, name);
            previous = std::move(name);
        }
        meet(previous, to);
    }

    FibreGraph build() const
    {
        std::vector<Intersection> xs;
        for (const auto& [pair, count] : counts_) {
            xs.push_back({pair.first, pair.second, count});
        }
        return {components_, xs};
    }

private:
    std::vector<Component> components_;
    std::map<std::pair<std::string, std::string>, int> counts_;
};

int require(const CaseParams& params, const std::string& name, int minimum)
{
    auto it = params.find(name);
    if (it == params.end()) {
        throw ParamOutOfRange("missing parameter '" + name + "'");
    }
    if (it->second < minimum) {
        throw ParamOutOfRange("parameter " + name + " must be >= " + std::to_string(minimum) + " (got " +
                              std::to_string(it->second) + ")");
    }
    return it->second;
}

std::string at(const std::string& prefix, int i)
{
    return prefix + std::to_string(i);
}

}  // namespace

CatalogEntry build_case(CaseId id, const CaseParams& params)
{
    const auto names = param_names(id);
    for (const auto& [key, value] : params) {
        if (std::find(names.begin(), names.end(), key) == names.end()) {
            throw ParamOutOfRange("case " + std::string(to_string(id)) + " takes no parameter '" + key + "'");
        }
    }

    GraphBuilder g;
    ParshinCase pc;
    pc.id = id;
    pc.jacobian_type = jacobian_type(id);
    pc.expected_rank = expected_dimension(id);
    std::vector<std::string> slots;

    switch (id) {
    case CaseId::I: {
        g.component("C", 2, 0);
        slots.assign(6, "C");
        break;
    }
    case CaseId::II: {
        const int n = require(params, "n", 2);
        g.component("E", 1, -2);
        g.chain("E", "X", 2 * n - 1, "E");
        pc.aliases["Xn"] = at("X", n);
        slots = {"E", "E", "E", "E", at("X", n), at("X", n)};
        break;
    }
    case CaseId::III: {
        const int n = require(params, "n", 1);
        const int m = require(params, "m", 1);
        g.component("B", 0, -4);
        g.chain("B", "X", 2 * n - 1, "B");
        g.chain("B", "Y", 2 * m - 1, "B");
        pc.aliases["Xn"] = at("X", n);
        pc.aliases["Ym"] = at("Y", m);
        slots = {"B", "B", at("X", n), at("X", n), at("Y", m), at("Y", m)};
        break;
    }
    case CaseId::IV: {
        const int r = require(params, "r", 1);
        g.component("E1", 1, -1);
        g.chain("E1", "X", r, "E2");
        g.component("E2", 1, -1);
        slots = {"E1", "E1", "E1", "E2", "E2", "E2"};
        break;
    }
    case CaseId::V: {
        const int r = require(params, "r", 1);
        const int m = require(params, "m", 1);
        g.component("E", 1, -1);
        g.chain("E", "X", r, "B");
        g.component("B", 0, -3);
        g.chain("B", "Y", 2 * m - 1, "B");
        pc.aliases["Ym"] = at("Y", m);
        slots = {"E", "E", "E", "B", at("Y", m), at("Y", m)};
        break;
    }
    case CaseId::VI: {
        const int s = require(params, "s", 1);
        const int n = require(params, "n", 1);
        const int m = require(params, "m", 1);
        g.component("B1", 0, -3);
        g.component("B2", 0, -3);
        g.chain("B1", "X", s, "B2");
        g.chain("B1", "Y", 2 * n - 1, "B1");
        g.chain("B2", "Z", 2 * m - 1, "B2");
        pc.aliases["Yn"] = at("Y", n);
        pc.aliases["Zm"] = at("Z", m);
        slots = {at("Y", n), at("Y", n), at("Z", m), at("Z", m), "B1", "B2"};
        break;
    }
    case CaseId::VII: {
        const int r = require(params, "r", 1);
        const int s = require(params, "s", 1);
        const int t = require(params, "t", 1);
        g.component("B1", 0, -3);
        g.component("B2", 0, -3);
        g.chain("B1", "X", 2 * r - 1, "B2");
        g.chain("B1", "Y", 2 * s - 1, "B2");
        g.chain("B1", "Z", 2 * t - 1, "B2");
        pc.aliases["Xr"] = at("X", r);
        pc.aliases["Ys"] = at("Y", s);
        pc.aliases["Zt"] = at("Z", t);
        slots = {at("X", r), at("X", r), at("Y", s), at("Y", s), at("Z", t), at("Z", t)};
        break;
    }
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
        pc.weierstrass_slots["w" + std::to_string(i + 1)] = slots[i];
    }
    for (const auto& name : names) {
        pc.params[name] = params.at(name);
    }
    return {g.build(), std::move(pc)};
}

StratifiedComplex build_type2_complex(int cycle_length)
{
    if (cycle_length < 3) {
        throw ParamOutOfRange("Type 2 cycle length must be >= 3 (got " + std::to_string(cycle_length) + ")");
    }
    std::vector<IndexSet> vertices;
    std::vector<IndexSet> edges;
    for (int i = 0; i < cycle_length; ++i) {
        vertices.push_back({i});
        const int j = (i + 1) % cycle_length;
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(edges.begin(), edges.end());
    return StratifiedComplex({vertices, edges});
}

StratifiedComplex build_type3_complex(int n1, int n2)
{
    if (n1 < 3 || n2 < 3) {
        throw ParamOutOfRange("Type 3 torus sides must be >= 3 (got " + std::to_string(n1) + "x" +
                              std::to_string(n2) + ")");
    }
    auto vertex = [&](int i, int j) { return ((i % n1) * n2) + (j % n2); };
    auto sorted = [](IndexSet s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    std::set<IndexSet> edges;
    std::set<IndexSet> triangles;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const int v = vertex(i, j);
            const int right = vertex(i, j + 1);
            const int down = vertex(i + 1, j);
            const int diag = vertex(i + 1, j + 1);
            edges.insert(sorted({v, right}));
            edges.insert(sorted({v, down}));
            edges.insert(sorted({v, diag}));
            triangles.insert(sorted({v, down, diag}));
            triangles.insert(sorted({v, right, diag}));
        }
    }
    std::vector<IndexSet> vertices;
    for (int v = 0; v < n1 * n2; ++v) {
        vertices.push_back({v});
    }
    return StratifiedComplex({vertices, {edges.begin(), edges.end()}, {triangles.begin(), triangles.end()}});
}

StratifiedComplex build_kulikov_complex(int kulikov_type, const std::vector<int>& sizes)
{
    if (kulikov_type == 2 && sizes.size() == 1) {
        return build_type2_complex(sizes[0]);
    }
    if (kulikov_type == 3 && sizes.size() == 2) {
        return build_type3_complex(sizes[0], sizes[1]);
    }
    throw ParamOutOfRange("Kulikov complexes: type 2 takes {N}, type 3 takes {N1, N2}");
}

}  // namespace g2deg
