#include "g2deg/json_io.hpp"

#include "g2deg/errors.hpp"

#include <set>

namespace g2deg {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where)
{
    if (!j.is_object()) {
        throw FormatError(where + " must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw FormatError("unknown key '" + key + "' in " + where);
        }
    }
}

long integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) {
        throw FormatError(what + " must be an integer");
    }
    return j.get<long>();
}

int small_integer(const Json& j, const std::string& what)
{
    const long v = integer(j, what);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw FormatError(what + " is out of range");
    }
    return static_cast<int>(v);
}

const std::string& string_value(const Json& j, const std::string& what)
{
    if (!j.is_string()) {
        throw FormatError(what + " must be a string");
    }
    return j.get_ref<const std::string&>();
}

int level_key(const std::string& key, int depth, const std::string& where)
{
    int r = 0;
    try {
        std::size_t used = 0;
        r = std::stoi(key, &used);
        if (used != key.size()) {
            throw FormatError("");
        }
    } catch (const std::exception&) {
        throw FormatError("level key '" + key + "' in " + where + " is not an integer");
    }
    if (r < 1 || r > depth) {
        throw FormatError("level " + key + " in " + where + " is outside 1.." + std::to_string(depth));
    }
    return r;
}

}  // namespace

Json to_json(const Rational& q)
{
    return q.str();
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get_ref<const std::string&>());
    }
    throw FormatError("rational must be an integer or a \"p/q\" string");
}

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw FormatError("matrix must be an array of rows");
    }
    std::vector<RatVector> rows;
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw FormatError("matrix row must be an array");
        }
        RatVector v;
        for (const auto& x : row) {
            v.push_back(rational_from_json(x));
        }
        if (!rows.empty() && v.size() != cols) {
            throw FormatError("ragged matrix");
        }
        cols = v.size();
        rows.push_back(std::move(v));
    }
    return RatMatrix::from_rows(rows, cols);
}

FibreDocument parse_fibre(const Json& j)
{
    reject_unknown_keys(j,
                        {"components", "intersections", "horizontal", "case", "params", "weierstrass", "aliases",
                         "jacobian_type", "expected"},
                        "fibre document");
    if (!j.contains("components") || !j["components"].is_array()) {
        throw FormatError("fibre document needs a \"components\" array");
    }
    std::vector<Component> components;
    for (const auto& c : j["components"]) {
        reject_unknown_keys(c, {"name", "genus", "self"}, "component");
        for (const char* key : {"name", "genus", "self"}) {
            if (!c.contains(key)) {
                throw FormatError(std::string("component is missing \"") + key + "\"");
            }
        }
        components.push_back({string_value(c["name"], "component name"), small_integer(c["genus"], "genus"),
                              small_integer(c["self"], "self-intersection")});
    }
    std::vector<Intersection> intersections;
    if (j.contains("intersections")) {
        if (!j["intersections"].is_array()) {
            throw FormatError("\"intersections\" must be an array");
        }
        for (const auto& x : j["intersections"]) {
            if (!x.is_array() || x.size() != 3) {
                throw FormatError("intersection entries are [name, name, count]");
            }
            intersections.push_back({string_value(x[0], "intersection component"),
                                     string_value(x[1], "intersection component"),
                                     small_integer(x[2], "intersection number")});
        }
    }
    FibreDocument doc{FibreGraph(std::move(components), intersections), std::nullopt};
    if (j.contains("horizontal")) {
        if (!j["horizontal"].is_object()) {
            throw FormatError("\"horizontal\" must be an object of component multiplicities");
        }
        HorizontalDivisor h;
        for (const auto& [name, m] : j["horizontal"].items()) {
            static_cast<void>(doc.graph.index_of(name));
            h.multiplicities[name] = integer(m, "horizontal multiplicity");
        }
        doc.horizontal = std::move(h);
    }
    return doc;
}

Json fibre_to_json(const FibreGraph& graph, const HorizontalDivisor* horizontal)
{
    Json j;
    Json components = Json::array();
    for (const auto& c : graph.components()) {
        components.push_back({{"name", c.name}, {"genus", c.genus}, {"self", c.self_intersection}});
    }
    j["components"] = std::move(components);
    Json xs = Json::array();
    for (const auto& x : graph.intersections()) {
        xs.push_back({x.first, x.second, x.count});
    }
    j["intersections"] = std::move(xs);
    if (horizontal != nullptr) {
        Json h = Json::object();
        for (const auto& [name, m] : horizontal->multiplicities) {
            h[name] = m;
        }
        j["horizontal"] = std::move(h);
    }
    return j;
}

Json expected_to_json(const RankDescriptor& r)
{
    if (r.lower_bound) {
        return r.str();
    }
    return r.value;
}

Json catalog_to_json(const CatalogEntry& entry)
{
    Json j = fibre_to_json(entry.graph);
    j["case"] = std::string(to_string(entry.placement.id));
    j["params"] = entry.placement.params;
    j["weierstrass"] = entry.placement.weierstrass_slots;
    j["aliases"] = entry.placement.aliases;
    j["jacobian_type"] = entry.placement.jacobian_type;
    j["expected"] = expected_to_json(entry.placement.expected_rank);
    return j;
}

Json to_json(const ValidationReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            e["witness"] = c.witness;
        }
        checks.push_back(std::move(e));
    }
    return {{"checks", std::move(checks)}, {"radical_dimension", report.radical_dimension}, {"ok", report.ok()}};
}

Json to_json(const ComponentVector& v)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) {
        j[v.names()[i]] = to_json(v[i]);
    }
    return j;
}

Json to_json(const SurjectivityCertificate& cert)
{
    Json j;
    j["case"] = cert.case_label;
    j["params"] = cert.params;
    Json cycles = Json::array();
    for (const auto& c : cert.cycles) {
        cycles.push_back(c.p_component + ":" + c.q_component);
    }
    j["cycles"] = std::move(cycles);
    Json vectors = Json::array();
    for (const auto& v : cert.vectors) {
        vectors.push_back(to_json(v));
    }
    j["vectors"] = std::move(vectors);
    j["pairing"] = to_json(cert.pairing);
    j["gram"] = to_json(cert.gram);
    j["coefficient_rank"] = cert.coefficient_rank;
    j["pairing_rank"] = cert.pairing_rank;
    j["rank_mod_fibre"] = cert.rank_mod_fibre;
    j["expected"] = expected_to_json(cert.expected);
    j["verdict"] = std::string(to_string(cert.verdict));
    Json pairings = Json::array();
    for (const auto& p : cert.slot_pairings) {
        pairings.push_back({{"vector", p.vector_index}, {"component", p.component}, {"value", to_json(p.value)}});
    }
    j["slot_pairings"] = std::move(pairings);
    return j;
}

Json to_json(const std::vector<ConformanceCheck>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks) {
        Json e{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            e["detail"] = c.detail;
        }
        out.push_back(std::move(e));
    }
    return out;
}

StratifiedComplex parse_complex(const Json& j)
{
    reject_unknown_keys(j, {"depth", "strata", "lattice_ranks", "maps"}, "complex document");
    if (!j.contains("depth") || !j.contains("strata")) {
        throw FormatError("complex document needs \"depth\" and \"strata\"");
    }
    const int depth = small_integer(j["depth"], "depth");
    if (depth < 1) {
        throw FormatError("depth must be >= 1");
    }
    if (!j["strata"].is_object()) {
        throw FormatError("\"strata\" must be an object keyed by level");
    }
    std::vector<std::vector<IndexSet>> strata(static_cast<std::size_t>(depth));
    for (const auto& [key, list] : j["strata"].items()) {
        const int r = level_key(key, depth, "strata");
        if (!list.is_array()) {
            throw FormatError("strata level " + key + " must be an array of index sets");
        }
        for (const auto& s : list) {
            if (!s.is_array()) {
                throw FormatError("index set must be an array");
            }
            IndexSet idx;
            for (const auto& i : s) {
                idx.push_back(small_integer(i, "component index"));
            }
            strata[static_cast<std::size_t>(r - 1)].push_back(std::move(idx));
        }
    }
    std::vector<std::vector<int>> ranks;
    if (j.contains("lattice_ranks")) {
        if (!j["lattice_ranks"].is_object()) {
            throw FormatError("\"lattice_ranks\" must be an object keyed by level");
        }
        for (const auto& level : strata) {
            ranks.emplace_back(level.size(), 1);
        }
        for (const auto& [key, list] : j["lattice_ranks"].items()) {
            const int r = level_key(key, depth, "lattice_ranks");
            auto& level = ranks[static_cast<std::size_t>(r - 1)];
            if (!list.is_array() || list.size() != level.size()) {
                throw FormatError("lattice_ranks level " + key + " must list one rank per stratum");
            }
            for (std::size_t k = 0; k < level.size(); ++k) {
                level[k] = small_integer(list[k], "lattice rank");
            }
        }
    }
    DeltaMaps maps;
    if (j.contains("maps")) {
        reject_unknown_keys(j["maps"], {"push", "pull"}, "maps");
        for (const char* kind : {"push", "pull"}) {
            if (!j["maps"].contains(kind)) {
                continue;
            }
            auto& table = std::string(kind) == "push" ? maps.push : maps.pull;
            const auto& by_degree = j["maps"][kind];
            if (!by_degree.is_object()) {
                throw FormatError(std::string("maps.") + kind + " must be an object keyed by degree");
            }
            for (const auto& [tkey, by_u] : by_degree.items()) {
                const int t = level_key(tkey, depth, std::string("maps.") + kind);
                if (!by_u.is_object()) {
                    throw FormatError("maps entries are keyed by u");
                }
                for (const auto& [ukey, m] : by_u.items()) {
                    const int u = level_key(ukey, t + 1, "maps u index");
                    table[{t, u}] = matrix_from_json(m);
                }
            }
        }
    }
    return StratifiedComplex(std::move(strata), std::move(ranks), std::move(maps));
}

Json complex_to_json(const StratifiedComplex& complex)
{
    Json j;
    j["depth"] = complex.depth();
    Json strata = Json::object();
    for (int r = 1; r <= complex.depth(); ++r) {
        strata[std::to_string(r)] = complex.strata(r);
    }
    j["strata"] = std::move(strata);
    if (complex.has_custom_lattices()) {
        Json ranks = Json::object();
        for (int r = 1; r <= complex.depth(); ++r) {
            std::vector<int> level;
            for (std::size_t k = 0; k < complex.strata(r).size(); ++k) {
                level.push_back(complex.lattice_rank(r, k));
            }
            ranks[std::to_string(r)] = level;
        }
        j["lattice_ranks"] = std::move(ranks);
    }
    if (!complex.maps().push.empty() || !complex.maps().pull.empty()) {
        Json maps = Json::object();
        for (const auto& [kind, table] : {std::pair{"push", &complex.maps().push}, std::pair{"pull", &complex.maps().pull}}) {
            Json by_degree = Json::object();
            for (const auto& [key, m] : *table) {
                by_degree[std::to_string(key.first)][std::to_string(key.second)] = to_json(m);
            }
            if (!by_degree.empty()) {
                maps[kind] = std::move(by_degree);
            }
        }
        j["maps"] = std::move(maps);
    }
    return j;
}

Json to_json(const IdentityReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e{{"identity", c.identity},
               {"degree", c.degree},
               {"convention", std::string(to_string(c.convention))},
               {"asserted", c.asserted},
               {"passed", c.passed}};
        if (!c.passed) {
            e["witness"] = c.witness;
        }
        checks.push_back(std::move(e));
    }
    return {{"checks", std::move(checks)}, {"ok", report.ok()}};
}

Json to_json(const PchRankReport& report)
{
    return {{"q", report.q},
            {"a", report.a},
            {"ambient_dim", report.ambient_dim},
            {"kernel_dim", report.kernel_dim},
            {"image_dim", report.image_dim},
            {"intersection_dim", report.intersection_dim},
            {"quotient_dim", report.quotient_dim},
            {"image_in_kernel", report.image_in_kernel}};
}

}  // namespace g2deg
