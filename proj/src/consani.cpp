#include "g2deg/consani.hpp"

#include "g2deg/errors.hpp"
#include "g2deg/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace g2deg {

namespace {

std::string show(const IndexSet& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(s[i]);
    }
    return out + "]";
}

IndexSet without(const IndexSet& s, int u)
{
    IndexSet j;
    j.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (static_cast<int>(k) != u - 1) {
            j.push_back(s[k]);
        }
    }
    return j;
}

const std::vector<IndexSet> kNoStrata;

}  // namespace

StratifiedComplex::StratifiedComplex(std::vector<std::vector<IndexSet>> strata,
                                     std::vector<std::vector<int>> lattice_ranks, DeltaMaps maps)
    : strata_(std::move(strata)), ranks_(std::move(lattice_ranks)), maps_(std::move(maps))
{
    for (std::size_t r = 0; r < strata_.size(); ++r) {
        std::set<IndexSet> seen;
        for (const auto& s : strata_[r]) {
            if (s.size() != r + 1) {
                throw FormatError("stratum " + show(s) + " listed in Y^(" + std::to_string(r + 1) + ")");
            }
            if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
                throw FormatError("index set " + show(s) + " is not strictly increasing");
            }
            if (s.front() < 0) {
                throw FormatError("negative component index in " + show(s));
            }
            if (!seen.insert(s).second) {
                throw FormatError("stratum " + show(s) + " listed twice");
            }
        }
    }
    for (std::size_t r = 1; r < strata_.size(); ++r) {
        for (const auto& s : strata_[r]) {
            for (int u = 1; u <= static_cast<int>(s.size()); ++u) {
                if (!find(static_cast<int>(r), without(s, u))) {
                    throw FormatError("facet " + show(without(s, u)) + " of " + show(s) + " is not a stratum");
                }
            }
        }
    }
    if (ranks_.empty()) {
        for (const auto& level : strata_) {
            ranks_.emplace_back(level.size(), 1);
        }
    }
    if (ranks_.size() != strata_.size()) {
        throw DimensionMismatch("lattice ranks must be given for every stratum level");
    }
    for (std::size_t r = 0; r < strata_.size(); ++r) {
        if (ranks_[r].size() != strata_[r].size()) {
            throw DimensionMismatch("lattice rank count differs from stratum count at Y^(" + std::to_string(r + 1) +
                                    ")");
        }
        for (int k : ranks_[r]) {
            if (k < 0) {
                throw FormatError("negative lattice rank");
            }
        }
    }
    auto check = [&](const auto& table, bool push) {
        for (const auto& [key, m] : table) {
            const auto [t, u] = key;
            if (t < 1 || t > depth() || u < 1 || u > t + 1) {
                throw FormatError("explicit delta map at (t=" + std::to_string(t) + ", u=" + std::to_string(u) +
                                  ") is out of range");
            }
            const std::size_t low = lattice_dim(t);
            const std::size_t high = lattice_dim(t + 1);
            if (push ? (m.rows() != low || m.cols() != high) : (m.rows() != high || m.cols() != low)) {
                throw DimensionMismatch("explicit delta map at (t=" + std::to_string(t) + ", u=" +
                                        std::to_string(u) + ") has the wrong shape");
            }
        }
    };
    check(maps_.push, true);
    check(maps_.pull, false);
}

const std::vector<IndexSet>& StratifiedComplex::strata(int r) const
{
    if (r < 1 || r > depth()) {
        return kNoStrata;
    }
    return strata_[static_cast<std::size_t>(r - 1)];
}

int StratifiedComplex::lattice_rank(int r, std::size_t stratum) const
{
    return ranks_.at(static_cast<std::size_t>(r - 1)).at(stratum);
}

std::size_t StratifiedComplex::lattice_dim(int r) const
{
    if (r < 1 || r > depth()) {
        return 0;
    }
    const auto& level = ranks_[static_cast<std::size_t>(r - 1)];
    return static_cast<std::size_t>(std::accumulate(level.begin(), level.end(), 0));
}

std::size_t StratifiedComplex::lattice_offset(int r, std::size_t stratum) const
{
    const auto& level = ranks_[static_cast<std::size_t>(r - 1)];
    return static_cast<std::size_t>(
        std::accumulate(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(stratum), 0));
}

std::optional<std::size_t> StratifiedComplex::find(int r, const IndexSet& index) const
{
    const auto& level = strata(r);
    auto it = std::find(level.begin(), level.end(), index);
    if (it == level.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - level.begin());
}

bool StratifiedComplex::has_custom_lattices() const
{
    for (const auto& level : ranks_) {
        for (int k : level) {
            if (k != 1) {
                return true;
            }
        }
    }
    return false;
}

std::string_view to_string(SignConvention c)
{
    return c == SignConvention::AsWritten ? "as-written" : "alternating";
}

SignConvention parse_sign_convention(std::string_view token)
{
    if (token == "as-written") {
        return SignConvention::AsWritten;
    }
    if (token == "alternating") {
        return SignConvention::Alternating;
    }
    throw FormatError("unknown sign convention '" + std::string(token) + "'");
}

RatMatrix delta_push(const StratifiedComplex& complex, int t, int u)
{
    if (t < 1 || u < 1 || u > t + 1) {
        throw DegreeOutOfRange("delta(" + std::to_string(u) + ") at degree " + std::to_string(t));
    }
    if (auto it = complex.maps().push.find({t, u}); it != complex.maps().push.end()) {
        return it->second;
    }
    const auto& upper = complex.strata(t + 1);
    RatMatrix m(complex.lattice_dim(t), complex.lattice_dim(t + 1));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const auto row = complex.find(t, without(upper[col], u));
        if (complex.lattice_rank(t + 1, col) != 1 || complex.lattice_rank(t, *row) != 1) {
            throw MissingMap("delta(" + std::to_string(u) + ")_* at degree " + std::to_string(t) +
                             " needs an explicit matrix for non-rank-1 lattices");
        }
    }
    // With all touched lattices rank 1, lattice positions equal stratum positions.
    for (std::size_t col = 0; col < upper.size(); ++col) {
        m(*complex.find(t, without(upper[col], u)), col) = 1;
    }
    return m;
}

RatMatrix delta_pull(const StratifiedComplex& complex, int t, int u)
{
    if (auto it = complex.maps().pull.find({t, u}); it != complex.maps().pull.end()) {
        return it->second;
    }
    if (complex.maps().push.contains({t, u})) {
        throw MissingMap("delta(" + std::to_string(u) + ")^* at degree " + std::to_string(t) +
                         " must be given alongside its explicit pushforward");
    }
    return delta_push(complex, t, u).transpose();
}

namespace {

Rational sign_for(SignConvention c, int t, int u)
{
    const int exponent = c == SignConvention::AsWritten ? u - 1 : t + 1 - u;
    return exponent % 2 == 0 ? Rational(1) : Rational(-1);
}

void require_degree(const StratifiedComplex& complex, int t)
{
    if (t < 1 || t > std::max(complex.depth(), 1)) {
        throw DegreeOutOfRange("degree " + std::to_string(t) + " outside 1.." + std::to_string(complex.depth()));
    }
}

// Unchecked variants: any t >= 1, empty beyond the depth.
RatMatrix gamma_any(const StratifiedComplex& complex, int t, SignConvention c)
{
    RatMatrix g(complex.lattice_dim(t), complex.lattice_dim(t + 1));
    if (g.empty()) {
        return g;
    }
    for (int u = 1; u <= t + 1; ++u) {
        g += delta_push(complex, t, u) * sign_for(c, t, u);
    }
    return g;
}

RatMatrix rho_any(const StratifiedComplex& complex, int t, SignConvention c)
{
    RatMatrix r(complex.lattice_dim(t + 1), complex.lattice_dim(t));
    if (r.empty()) {
        return r;
    }
    for (int u = 1; u <= t + 1; ++u) {
        r += delta_pull(complex, t, u) * sign_for(c, t, u);
    }
    return r;
}

IdentityCheck zero_check(std::string_view name, int degree, SignConvention c, bool asserted, const RatMatrix& m)
{
    IdentityCheck check{std::string(name), degree, c, asserted, true, {}};
    for (std::size_t i = 0; i < m.rows() && check.passed; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                check.passed = false;
                check.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str();
                break;
            }
        }
    }
    return check;
}

}  // namespace

RatMatrix gamma_matrix(const StratifiedComplex& complex, int t, SignConvention convention)
{
    require_degree(complex, t);
    return gamma_any(complex, t, convention);
}

RatMatrix rho_matrix(const StratifiedComplex& complex, int t, SignConvention convention)
{
    require_degree(complex, t);
    return rho_any(complex, t, convention);
}

bool IdentityReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return !c.asserted || c.passed; });
}

IdentityReport check_identities(const StratifiedComplex& complex)
{
    IdentityReport report;
    const int depth = complex.depth();
    for (SignConvention c : {SignConvention::AsWritten, SignConvention::Alternating}) {
        for (int t = 1; t < depth; ++t) {
            report.checks.push_back(
                zero_check(kGammaSquared, t, c, true, gamma_any(complex, t, c) * gamma_any(complex, t + 1, c)));
        }
        for (int t = 1; t < depth; ++t) {
            report.checks.push_back(
                zero_check(kRhoSquared, t, c, true, rho_any(complex, t + 1, c) * rho_any(complex, t, c)));
        }
        for (int t = 1; t <= depth; ++t) {
            RatMatrix sum = gamma_any(complex, t, c) * rho_any(complex, t, c);
            if (t >= 2) {
                sum += rho_any(complex, t - 1, c) * gamma_any(complex, t - 1, c);
            }
            report.checks.push_back(zero_check(kAnticommutator, t, c, false, sum));
        }
    }
    return report;
}

namespace {

std::size_t intersection_dim(const std::vector<RatVector>& kernel, const RatMatrix& image_span,
                             std::size_t ambient)
{
    std::vector<RatVector> columns = kernel;
    for (std::size_t c = 0; c < image_span.cols(); ++c) {
        columns.push_back(image_span.column(c));
    }
    if (columns.empty()) {
        return 0;
    }
    const std::size_t sum_dim = rank(RatMatrix::from_columns(columns, ambient));
    return kernel.size() + rank(image_span) - sum_dim;
}

}  // namespace

PchRankReport pch_rank(const StratifiedComplex& complex, int q, int a, const std::optional<RatMatrix>& iistar)
{
    const int k = q - 2 * a;
    if (k < 1) {
        throw DegreeOutOfRange("PCH requires q - 2a >= 1 (got q=" + std::to_string(q) + ", a=" +
                               std::to_string(a) + ")");
    }
    PchRankReport report;
    report.q = q;
    report.a = a;
    RatMatrix numerator_map;
    RatMatrix image_map;
    if (k == 1) {
        if (!iistar) {
            throw MissingMap("q - 2a = 1 needs the i*i_* matrix on the Y^(1) lattice");
        }
        report.ambient_dim = complex.lattice_dim(1);
        if (iistar->cols() != report.ambient_dim) {
            throw DimensionMismatch("i*i_* must act on the Y^(1) lattice (dimension " +
                                    std::to_string(report.ambient_dim) + ")");
        }
        numerator_map = *iistar;
        image_map = gamma_any(complex, 1, SignConvention::AsWritten);
    } else {
        report.ambient_dim = complex.lattice_dim(k);
        numerator_map = gamma_any(complex, k - 1, SignConvention::AsWritten);
        image_map = gamma_any(complex, k, SignConvention::AsWritten);
    }
    const auto kernel = report.ambient_dim == 0 ? std::vector<RatVector>{} : kernel_basis(numerator_map);
    report.kernel_dim = kernel.size();
    report.image_dim = image_map.empty() ? 0 : rank(image_map);
    report.intersection_dim = image_map.empty() ? 0 : intersection_dim(kernel, image_map, report.ambient_dim);
    report.quotient_dim = report.kernel_dim - report.intersection_dim;
    report.image_in_kernel = report.intersection_dim == report.image_dim;
    return report;
}

StratifiedComplex curve_model_complex(const FibreGraph& graph)
{
    std::vector<IndexSet> vertices;
    for (int i = 0; i < static_cast<int>(graph.size()); ++i) {
        vertices.push_back({i});
    }
    std::vector<IndexSet> edges;
    for (const auto& x : graph.intersections()) {
        const int i = static_cast<int>(graph.index_of(x.first));
        const int j = static_cast<int>(graph.index_of(x.second));
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(edges.begin(), edges.end());
    if (edges.empty()) {
        return StratifiedComplex({vertices});
    }
    return StratifiedComplex({vertices, edges});
}

}  // namespace g2deg
