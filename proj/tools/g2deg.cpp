// g2deg: command-line front end for the boundary calculus on genus-2 fibres.
//
// Exit codes: 0 success/pass, 1 fail or bound-only, 2 malformed input,
// 3 internal rank-method disagreement.

#include "g2deg/boundary.hpp"
#include "g2deg/catalog.hpp"
#include "g2deg/conformance.hpp"
#include "g2deg/consani.hpp"
#include "g2deg/errors.hpp"
#include "g2deg/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace g2deg;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : Error {
    using Error::Error;
};

struct CaseOptions {
    std::string case_id;
    std::map<std::string, int> values;
    std::map<std::string, CLI::Option*> flags;

    void attach(CLI::App& app)
    {
        app.add_option("--case", case_id, "Parshin case I..VII");
        for (const char* name : {"n", "m", "r", "s", "t"}) {
            flags[name] = app.add_option(std::string("--") + name, values[name], std::string("parameter ") + name);
        }
    }

    [[nodiscard]] bool given() const { return !case_id.empty(); }

    [[nodiscard]] CaseParams params() const
    {
        CaseParams p;
        for (const auto& [name, opt] : flags) {
            if (opt->count() > 0) {
                p[name] = values.at(name);
            }
        }
        return p;
    }
};

struct Output {
    std::string format = "json";
    std::string path;

    void attach(CLI::App& app)
    {
        app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        app.add_option("--output,-o", path, "output file (default: standard output)");
    }

    [[nodiscard]] bool json() const { return format == "json"; }

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) {
            throw UsageError("cannot write '" + path + "'");
        }
        out << text;
    }

    void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Placement parse_placement(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size() ||
        text.find(':', colon + 1) != std::string::npos) {
        throw UsageError("placement '" + text + "' must look like P_component:Q_component");
    }
    return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<Placement> parse_placements(const std::vector<std::string>& items)
{
    std::vector<Placement> out;
    for (const auto& item : items) {
        out.push_back(parse_placement(item));
    }
    return out;
}

void require_one_source(const CaseOptions& c, const std::string& input)
{
    if (c.given() == !input.empty()) {
        throw UsageError("give exactly one input source: --case or --input");
    }
}

// "-2·X1 - 4·X2 - 2·X3"; zero coefficients are dropped.
std::string render(const ComponentVector& v)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational& c = v[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) {
            os << mag << "·";
        }
        os << v.names()[i];
        first = false;
    }
    return first ? "0" : os.str();
}

std::string render_params(const CaseParams& params)
{
    std::string out;
    for (const auto& [k, v] : params) {
        out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
    }
    return out.empty() ? "-" : out;
}

std::string render_certificate(const SurjectivityCertificate& cert)
{
    std::ostringstream os;
    os << "case " << cert.case_label << " (" << render_params(cert.params) << ")\n";
    os << "  C_p = " << render(cert.vectors.front()) << "\n";
    for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
        os << "  ∂Ξ[" << cert.cycles[i].p_component << "," << cert.cycles[i].q_component
           << "] = " << render(cert.vectors[i + 1]) << " (mod fibre)\n";
    }
    for (const auto& p : cert.slot_pairings) {
        os << "  (v" << p.vector_index << " . " << p.component << ") = " << p.value << "\n";
    }
    os << "  coefficient rank " << cert.coefficient_rank << ", pairing rank " << cert.pairing_rank
       << ", expected " << cert.expected.str() << ": " << to_string(cert.verdict) << "\n";
    return os.str();
}

std::string render_validation(const ValidationReport& report)
{
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.passed) {
            os << " (" << c.witness << ")";
        }
        os << "\n";
    }
    return os.str();
}

int verdict_exit(Verdict v)
{
    return v == Verdict::Pass ? kExitOk : kExitFail;
}

// --- catalog -------------------------------------------------------------

int run_catalog(const CaseOptions& c, const Output& out)
{
    if (!c.given()) {
        throw UsageError("catalog needs --case");
    }
    const CatalogEntry entry = build_case(parse_case(c.case_id), c.params());
    if (out.json()) {
        out.write(catalog_to_json(entry));
        return kExitOk;
    }
    std::ostringstream os;
    os << "case " << to_string(entry.placement.id) << " (" << render_params(entry.placement.params)
       << "), Jacobian type " << entry.placement.jacobian_type << ", expected rank "
       << entry.placement.expected_rank.str() << "\n";
    for (const auto& comp : entry.graph.components()) {
        os << "  " << comp.name << ": genus " << comp.genus << ", self-intersection " << comp.self_intersection
           << ", Weierstrass points " << entry.placement.slots_on(comp.name) << "\n";
    }
    for (const auto& x : entry.graph.intersections()) {
        os << "  " << x.first << " . " << x.second << " = " << x.count << "\n";
    }
    os << render_validation(validate(entry.graph));
    out.write(os.str());
    return kExitOk;
}

// --- solve / boundary ----------------------------------------------------

struct Resolved {
    FibreGraph graph;
    std::optional<CatalogEntry> entry;
    std::optional<HorizontalDivisor> horizontal;
};

Resolved resolve_source(const CaseOptions& c, const std::string& input)
{
    require_one_source(c, input);
    if (c.given()) {
        CatalogEntry entry = build_case(parse_case(c.case_id), c.params());
        FibreGraph g = entry.graph;
        return {std::move(g), std::move(entry), std::nullopt};
    }
    FibreDocument doc = parse_fibre(read_json_file(input));
    return {std::move(doc.graph), std::nullopt, std::move(doc.horizontal)};
}

Placement resolve_one(const Resolved& src, const Placement& wanted)
{
    if (src.entry) {
        return resolve_placements(*src.entry, {wanted}).front();
    }
    return {src.graph.components().at(src.graph.index_of(wanted.p_component)).name,
            src.graph.components().at(src.graph.index_of(wanted.q_component)).name};
}

void require_valid(const FibreGraph& g)
{
    const auto report = validate(g);
    if (!report.ok()) {
        for (const auto& check : report.checks) {
            if (!check.passed) {
                throw FormatError("fibre fails " + check.name + ": " + check.witness);
            }
        }
    }
}

int run_solve(const CaseOptions& c, const std::string& input, const std::string& cycle, const std::string& normalize,
              const Output& out)
{
    Resolved src = resolve_source(c, input);
    require_valid(src.graph);
    HorizontalDivisor h;
    std::string pin = src.graph.components().front().name;
    if (!cycle.empty()) {
        const Placement p = resolve_one(src, parse_placement(cycle));
        h = collino_horizontal(p);
        pin = p.p_component;
    } else if (src.horizontal) {
        h = *src.horizontal;
    } else {
        throw UsageError("solve needs --cycle or a document with a \"horizontal\" divisor");
    }
    Rational value = 0;
    if (!normalize.empty()) {
        const auto eq = normalize.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--normalize expects COMPONENT=VALUE");
        }
        pin = src.entry ? src.entry->placement.resolve(normalize.substr(0, eq), src.graph) : normalize.substr(0, eq);
        value = Rational::parse(normalize.substr(eq + 1));
    }
    const VerticalDivisor a = solve_vertical(src.graph, h, {pin, value});
    if (out.json()) {
        Json hj = Json::object();
        for (const auto& [name, m] : h.multiplicities) {
            hj[name] = m;
        }
        out.write(Json{{"coefficients", to_json(a)},
                       {"horizontal", hj},
                       {"normalization", {{"component", pin}, {"value", to_json(value)}}}});
    } else {
        out.write("div(f) = H + " + render(a) + "\n");
    }
    return kExitOk;
}

int run_boundary(const CaseOptions& c, const std::string& input, const std::string& cycle, const Output& out)
{
    Resolved src = resolve_source(c, input);
    require_valid(src.graph);
    if (cycle.empty()) {
        throw UsageError("boundary needs --cycle P:Q");
    }
    const Placement p = resolve_one(src, parse_placement(cycle));
    const BoundaryCycle b = collino_boundary(src.graph, p);
    if (out.json()) {
        out.write(Json{{"cycle", p.p_component + ":" + p.q_component},
                       {"boundary", to_json(b)},
                       {"zero_mod_fibre", b.is_zero_mod_fibre()}});
    } else {
        out.write("∂Ξ[" + p.p_component + "," + p.q_component + "] = " + render(b) + " (mod fibre)\n");
    }
    return kExitOk;
}

// --- certify -------------------------------------------------------------

int run_certify(const CaseOptions& c, const std::string& input, const std::vector<std::string>& cycles,
                const CLI::Option* expected_opt, int expected, const Output& out)
{
    require_one_source(c, input);
    SurjectivityCertificate cert;
    if (c.given()) {
        const CaseId id = parse_case(c.case_id);
        std::vector<Placement> wanted_cycles;
        if (cycles.empty()) {
            for (const auto& [p, q] : default_cycles(id)) {
                wanted_cycles.push_back({p, q});
            }
        } else {
            wanted_cycles = parse_placements(cycles);
        }
        cert = certify(id, c.params(), wanted_cycles);
    } else {
        if (expected_opt->count() == 0) {
            throw UsageError("certify --input needs --expected N");
        }
        FibreDocument doc = parse_fibre(read_json_file(input));
        require_valid(doc.graph);
        std::vector<Placement> wanted_cycles;
        for (const auto& p : parse_placements(cycles)) {
            wanted_cycles.push_back(
                {doc.graph.components().at(doc.graph.index_of(p.p_component)).name,
                 doc.graph.components().at(doc.graph.index_of(p.q_component)).name});
        }
        cert = certify_graph(doc.graph, "file", {}, wanted_cycles, {expected, false}, {});
    }
    if (out.json()) {
        out.write(to_json(cert));
    } else {
        out.write(render_certificate(cert));
    }
    return verdict_exit(cert.verdict);
}

// --- complex -------------------------------------------------------------

struct ComplexOptions {
    int type = 0;
    int length = 0;
    int n1 = 0;
    int n2 = 0;
    int q = 0;
    int a = 0;
    std::string iistar;
    CLI::Option* q_opt = nullptr;
    CLI::Option* a_opt = nullptr;
};

int run_complex(const CaseOptions& c, const std::string& input, ComplexOptions& o, const Output& out)
{
    const int sources = (c.given() ? 1 : 0) + (input.empty() ? 0 : 1) + (o.type != 0 ? 1 : 0);
    if (sources != 1) {
        throw UsageError("give exactly one input source: --case, --input or --type");
    }
    StratifiedComplex complex;
    std::optional<RatMatrix> iistar;
    if (c.given()) {
        const CatalogEntry entry = build_case(parse_case(c.case_id), c.params());
        complex = curve_model_complex(entry.graph);
        iistar = intersection_matrix(entry.graph);
    } else if (!input.empty()) {
        complex = parse_complex(read_json_file(input));
    } else if (o.type == 2) {
        complex = build_type2_complex(o.length);
    } else if (o.type == 3) {
        complex = build_type3_complex(o.n1, o.n2);
    } else {
        throw UsageError("--type must be 2 or 3");
    }
    if (!o.iistar.empty()) {
        iistar = matrix_from_json(read_json_file(o.iistar));
    }

    const IdentityReport identities = check_identities(complex);
    Json j{{"complex", complex_to_json(complex)}, {"identities", to_json(identities)}};
    std::optional<PchRankReport> pch;
    if ((o.q_opt->count() > 0) != (o.a_opt->count() > 0)) {
        throw UsageError("--q and --a go together");
    }
    if (o.q_opt->count() > 0) {
        pch = pch_rank(complex, o.q, o.a, iistar);
        j["pch"] = to_json(*pch);
    }

    if (out.json()) {
        out.write(j);
    } else {
        std::ostringstream os;
        os << "depth " << complex.depth();
        for (int r = 1; r <= complex.depth(); ++r) {
            os << ", |Y^(" << r << ")| = " << complex.strata(r).size();
        }
        os << "\n";
        for (const auto& check : identities.checks) {
            os << "  " << (check.passed ? "ok   " : (check.asserted ? "FAIL " : "nz   ")) << check.identity
               << " degree " << check.degree << " [" << to_string(check.convention) << "]"
               << (check.asserted ? "" : " (reported)") << "\n";
        }
        if (pch) {
            os << "  PCH q=" << pch->q << " a=" << pch->a << ": dim Ker = " << pch->kernel_dim
               << ", dim Im = " << pch->image_dim << ", quotient = " << pch->quotient_dim
               << (pch->image_in_kernel ? "" : " (image not contained in kernel)") << "\n";
        }
        out.write(os.str());
    }
    return identities.ok() ? kExitOk : kExitFail;
}

// --- sweep ---------------------------------------------------------------

struct Range {
    int low = 0;
    int high = 0;
};

Range parse_range(const std::string& text)
{
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return v;
        } catch (const std::exception&) {
            throw UsageError("malformed range '" + text + "' (expected A..B or A)");
        }
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::vector<CaseParams> expand(const std::vector<std::string>& names, const std::map<std::string, Range>& ranges)
{
    std::vector<CaseParams> rows{{}};
    for (const auto& name : names) {
        auto it = ranges.find(name);
        if (it == ranges.end()) {
            throw UsageError("sweep needs a range for --" + name);
        }
        std::vector<CaseParams> next;
        for (const auto& partial : rows) {
            for (int v = it->second.low; v <= it->second.high; ++v) {
                CaseParams p = partial;
                p[name] = v;
                next.push_back(std::move(p));
            }
        }
        rows = std::move(next);
    }
    return rows;
}

int run_sweep(const std::string& case_text, const std::map<std::string, std::string>& range_text,
              const Output& out)
{
    if (case_text.empty()) {
        throw UsageError("sweep needs --case");
    }
    const CaseId id = parse_case(case_text);
    const auto names = param_names(id);
    std::map<std::string, Range> ranges;
    for (const auto& [name, text] : range_text) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UsageError("case " + case_text + " takes no parameter --" + name);
        }
        ranges[name] = parse_range(text);
    }
    std::vector<Placement> cycles;
    for (const auto& [p, q] : default_cycles(id)) {
        cycles.push_back({p, q});
    }
    const bool type_one = jacobian_type(id) == 1;

    Json rows = Json::array();
    std::ostringstream table;
    bool all_ok = true;
    for (const auto& params : expand(names, ranges)) {
        const auto checks = closed_form_checks(id, params);
        const auto cert = certify(id, params, cycles);
        const bool conforms =
            std::all_of(checks.begin(), checks.end(), [](const ConformanceCheck& c) { return c.passed; });
        const bool verdict_ok = type_one ? cert.verdict == Verdict::BoundOnly : cert.verdict == Verdict::Pass;
        const bool ok = conforms && verdict_ok;
        all_ok = all_ok && ok;
        rows.push_back({{"params", params},
                        {"conformance", to_json(checks)},
                        {"rank", cert.achieved_rank()},
                        {"expected", expected_to_json(cert.expected)},
                        {"verdict", std::string(to_string(cert.verdict))},
                        {"ok", ok}});
        table << render_params(params) << "\t" << (conforms ? "conform" : "MISMATCH") << "\trank "
              << cert.achieved_rank() << "\texpected " << cert.expected.str() << "\t" << to_string(cert.verdict)
              << "\n";
        for (const auto& check : checks) {
            if (!check.passed) {
                table << "    mismatch: " << check.name << " (" << check.detail << ")\n";
            }
        }
    }
    if (out.json()) {
        out.write(Json{{"case", case_text}, {"rows", rows}, {"ok", all_ok}});
    } else {
        out.write(table.str());
    }
    return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact boundary calculus for semistable genus-2 fibres"};
    app.require_subcommand(1);

    CaseOptions catalog_case;
    Output catalog_out;
    auto* catalog = app.add_subcommand("catalog", "emit a Parshin case as fibre JSON");
    catalog_case.attach(*catalog);
    catalog_out.attach(*catalog);

    CaseOptions solve_case;
    Output solve_out;
    std::string solve_input;
    std::string solve_cycle;
    std::string solve_normalize;
    auto* solve = app.add_subcommand("solve", "solve for the vertical divisor of a function");
    solve_case.attach(*solve);
    solve_out.attach(*solve);
    solve->add_option("--input,-i", solve_input, "fibre JSON with a horizontal divisor");
    solve->add_option("--cycle", solve_cycle, "use H = 2P - 2Q for placement P:Q");
    solve->add_option("--normalize", solve_normalize, "COMPONENT=VALUE (default: first or P component = 0)");

    CaseOptions boundary_case;
    Output boundary_out;
    std::string boundary_input;
    std::string boundary_cycle;
    auto* boundary = app.add_subcommand("boundary", "boundary of a Collino cycle");
    boundary_case.attach(*boundary);
    boundary_out.attach(*boundary);
    boundary->add_option("--input,-i", boundary_input, "fibre JSON");
    boundary->add_option("--cycle", boundary_cycle, "placement P:Q");

    CaseOptions certify_case;
    Output certify_out;
    std::string certify_input;
    std::vector<std::string> certify_cycles;
    int certify_expected = 0;
    auto* certify_cmd = app.add_subcommand("certify", "rank certificate for a set of Collino boundaries");
    certify_case.attach(*certify_cmd);
    certify_out.attach(*certify_cmd);
    certify_cmd->add_option("--input,-i", certify_input, "fibre JSON");
    certify_cmd->add_option("--cycles", certify_cycles, "comma-separated placements P:Q")->delimiter(',');
    auto* expected_opt = certify_cmd->add_option("--expected", certify_expected, "expected rank (file input)");

    CaseOptions complex_case;
    Output complex_out;
    std::string complex_input;
    ComplexOptions complex_opts;
    auto* complex = app.add_subcommand("complex", "stratified complex identities and PCH ranks");
    complex->add_option("--case", complex_case.case_id, "curve model of a Parshin case");
    for (const char* name : {"n", "m", "r", "s", "t"}) {
        complex_case.flags[name] =
            complex->add_option(std::string("--") + name, complex_case.values[name], std::string("parameter ") + name);
    }
    complex_out.attach(*complex);
    complex->add_option("--input,-i", complex_input, "complex JSON");
    complex->add_option("--type", complex_opts.type, "Kulikov type 2 or 3");
    complex->add_option("--N", complex_opts.length, "Type 2 cycle length");
    complex->add_option("--N1", complex_opts.n1, "Type 3 torus side");
    complex->add_option("--N2", complex_opts.n2, "Type 3 torus side");
    complex_opts.q_opt = complex->add_option("--q", complex_opts.q, "PCH weight q");
    complex_opts.a_opt = complex->add_option("--a", complex_opts.a, "PCH weight a");
    complex->add_option("--iistar", complex_opts.iistar, "JSON matrix for i*i_* on Y^(1)");

    std::string sweep_case;
    std::map<std::string, std::string> sweep_ranges;
    std::map<std::string, CLI::Option*> sweep_flags;
    Output sweep_out;
    auto* sweep = app.add_subcommand("sweep", "closed-form and rank sweep over parameter ranges");
    sweep->add_option("--case", sweep_case, "Parshin case I..VII");
    for (const char* name : {"n", "m", "r", "s", "t"}) {
        sweep_flags[name] = sweep->add_option(std::string("--") + name, sweep_ranges[name], "range A..B");
    }
    sweep_out.attach(*sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*catalog) {
            return run_catalog(catalog_case, catalog_out);
        }
        if (*solve) {
            return run_solve(solve_case, solve_input, solve_cycle, solve_normalize, solve_out);
        }
        if (*boundary) {
            return run_boundary(boundary_case, boundary_input, boundary_cycle, boundary_out);
        }
        if (*certify_cmd) {
            return run_certify(certify_case, certify_input, certify_cycles, expected_opt, certify_expected,
                               certify_out);
        }
        if (*complex) {
            return run_complex(complex_case, complex_input, complex_opts, complex_out);
        }
        if (*sweep) {
            std::map<std::string, std::string> given;
            for (const auto& [name, opt] : sweep_flags) {
                if (opt->count() > 0) {
                    given[name] = sweep_ranges[name];
                }
            }
            return run_sweep(sweep_case, given, sweep_out);
        }
    } catch (const MethodDisagreement& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
