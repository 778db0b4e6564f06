#include "eigenbound/report_io.hpp"

#include "eigenbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace eigenbound::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string child(const std::string& pointer, std::string_view key)
{
    std::string escaped;
    for (char c : key) {
        if (c == '~')
            escaped += "~0";
        else if (c == '/')
            escaped += "~1";
        else
            escaped += c;
    }
    return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index)
{
    return pointer + "/" + std::to_string(index);
}

void require_object(const Json& j, const std::string& pointer)
{
    if (!j.is_object()) throw ValidationError(pointer, "expected an object");
}

void reject_unknown(const Json& j, const std::string& pointer, std::initializer_list<std::string_view> allowed)
{
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ValidationError(child(pointer, key), "unknown key");
}

const Json& member(const Json& j, const std::string& pointer, std::string_view key)
{
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(child(pointer, key), "required value is missing");
    return *it;
}

double number_at(const Json& v, const std::string& pointer, bool positive)
{
    if (!v.is_number()) throw ValidationError(pointer, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError(pointer, "expected a finite number");
    if (positive && !(x > 0.0)) throw ValidationError(pointer, "expected a positive number");
    return x;
}

double number(const Json& j, const std::string& pointer, std::string_view key, bool positive = true)
{
    return number_at(member(j, pointer, key), child(pointer, key), positive);
}

int integer_at(const Json& v, const std::string& pointer, int min_value)
{
    if (!v.is_number_integer()) throw ValidationError(pointer, "expected an integer");
    const auto x = v.get<long long>();
    if (x < min_value) throw ValidationError(pointer, "expected an integer >= " + std::to_string(min_value));
    if (x > 1000000) throw ValidationError(pointer, "integer out of range");
    return static_cast<int>(x);
}

int integer(const Json& j, const std::string& pointer, std::string_view key, int min_value)
{
    return integer_at(member(j, pointer, key), child(pointer, key), min_value);
}

std::string string_at(const Json& v, const std::string& pointer)
{
    if (!v.is_string()) throw ValidationError(pointer, "expected a string");
    return v.get<std::string>();
}

bool boolean_at(const Json& v, const std::string& pointer)
{
    if (!v.is_boolean()) throw ValidationError(pointer, "expected true or false");
    return v.get<bool>();
}

// Geometry factories throw GeometryError; surface those at the domain pointer.
template <class F>
geometry::DomainSpec build_domain(const std::string& pointer, F&& make)
{
    try {
        return make();
    } catch (const GeometryError& e) {
        throw ValidationError(pointer, e.what());
    }
}

geometry::DomainSpec domain_from_json(const Json& j, const std::string& pointer, int default_dimension)
{
    require_object(j, pointer);
    const std::string shape = string_at(member(j, pointer, "shape"), child(pointer, "shape"));
    if (shape == "ball") {
        reject_unknown(j, pointer, {"shape", "radius", "n"});
        const double r = number(j, pointer, "radius");
        const int n = j.contains("n") ? integer(j, pointer, "n", 1) : default_dimension;
        return build_domain(pointer, [&] { return geometry::DomainSpec::ball(r, n); });
    }
    if (shape == "box") {
        reject_unknown(j, pointer, {"shape", "sides"});
        const auto& arr = member(j, pointer, "sides");
        const std::string ap = child(pointer, "sides");
        if (!arr.is_array() || arr.empty()) throw ValidationError(ap, "expected a non-empty array of side lengths");
        std::vector<double> sides;
        for (std::size_t i = 0; i < arr.size(); ++i) sides.push_back(number_at(arr[i], child(ap, i), true));
        return build_domain(pointer, [&] { return geometry::DomainSpec::box(sides); });
    }
    if (shape == "stadium") {
        reject_unknown(j, pointer, {"shape", "segment", "radius"});
        const double len = number(j, pointer, "segment");
        const double r = number(j, pointer, "radius");
        return build_domain(pointer, [&] { return geometry::DomainSpec::stadium(len, r); });
    }
    if (shape == "polygon") {
        reject_unknown(j, pointer, {"shape", "vertices"});
        const auto& arr = member(j, pointer, "vertices");
        const std::string ap = child(pointer, "vertices");
        if (!arr.is_array() || arr.size() < 3) throw ValidationError(ap, "expected at least three [x, y] vertices");
        std::vector<geometry::Point2> vertices;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string vp = child(ap, i);
            if (!arr[i].is_array() || arr[i].size() != 2) throw ValidationError(vp, "expected [x, y]");
            vertices.push_back(
                {number_at(arr[i][0], child(vp, 0), false), number_at(arr[i][1], child(vp, 1), false)});
        }
        return build_domain(pointer, [&] { return geometry::DomainSpec::polygon(vertices); });
    }
    if (shape == "l_shape") {
        reject_unknown(j, pointer, {"shape", "leg", "width"});
        const double leg = number(j, pointer, "leg");
        const double width = number(j, pointer, "width");
        return build_domain(pointer, [&] { return geometry::DomainSpec::l_shape(leg, width); });
    }
    if (shape == "u_shape") {
        reject_unknown(j, pointer, {"shape", "outer", "slot_width", "slot_depth"});
        const double outer = number(j, pointer, "outer");
        const double sw = number(j, pointer, "slot_width");
        const double sd = number(j, pointer, "slot_depth");
        return build_domain(pointer, [&] { return geometry::DomainSpec::u_shape(outer, sw, sd); });
    }
    if (shape == "cylinder") {
        reject_unknown(j, pointer, {"shape", "radius", "height"});
        const double r = number(j, pointer, "radius");
        const double h = number(j, pointer, "height");
        return build_domain(pointer, [&] { return geometry::DomainSpec::cylinder(r, h); });
    }
    throw ValidationError(child(pointer, "shape"), "unknown shape '" + shape + "'");
}

RunOptions options_from_json(const Json& j, const std::string& pointer)
{
    require_object(j, pointer);
    reject_unknown(j, pointer, {"k_max", "tol", "oracle", "grid_h", "emit_profile", "emit_field"});
    RunOptions o;
    if (j.contains("k_max")) o.k_max = integer(j, pointer, "k_max", 1);
    if (j.contains("tol")) o.tol = number(j, pointer, "tol");
    if (j.contains("oracle")) o.oracle = boolean_at(j["oracle"], child(pointer, "oracle"));
    if (j.contains("grid_h")) o.grid_h = number(j, pointer, "grid_h");
    if (j.contains("emit_profile")) o.emit_profile = string_at(j["emit_profile"], child(pointer, "emit_profile"));
    if (j.contains("emit_field")) o.emit_field = string_at(j["emit_field"], child(pointer, "emit_field"));
    return o;
}

Json optional_number(const std::optional<double>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::optional<double> read_optional(const Json& j, std::string_view key)
{
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<double>();
}

Json profile_to_json(const radial::RadialProfile& p)
{
    return {{"kind", radial::to_string(p.kind)}, {"alpha", p.alpha}, {"eta", p.eta}, {"c1", p.c1},
            {"c2", p.c2},  {"r_lo", p.r_lo},  {"r_hi", p.r_hi}};
}

radial::RadialProfile profile_from_json(const Json& j)
{
    radial::RadialProfile p;
    const auto kind = j.at("kind").get<std::string>();
    bool found = false;
    for (auto k : {radial::ProfileKind::Theorem1, radial::ProfileKind::Theorem2, radial::ProfileKind::Linear,
                   radial::ProfileKind::Sine})
        if (radial::to_string(k) == kind) {
            p.kind = k;
            found = true;
        }
    if (!found) throw ValidationError("/certificate/profile/kind", "unknown profile kind '" + kind + "'");
    p.alpha = j.at("alpha").get<double>();
    p.eta = j.at("eta").get<double>();
    p.c1 = j.at("c1").get<double>();
    p.c2 = j.at("c2").get<double>();
    p.r_lo = j.at("r_lo").get<double>();
    p.r_hi = j.at("r_hi").get<double>();
    return p;
}

Json check_to_json(const radial::ResidualReport& c)
{
    return {{"max_residual", c.max_residual}, {"worst_r", c.worst_r}, {"min_slope", c.min_slope},
            {"samples", c.samples},           {"r_lo", c.r_lo},       {"r_hi", c.r_hi},
            {"verified", c.verified}};
}

radial::ResidualReport check_from_json(const Json& j)
{
    radial::ResidualReport c;
    c.max_residual = j.at("max_residual").get<double>();
    c.worst_r = j.at("worst_r").get<double>();
    c.min_slope = j.at("min_slope").get<double>();
    c.samples = j.at("samples").get<int>();
    c.r_lo = j.at("r_lo").get<double>();
    c.r_hi = j.at("r_hi").get<double>();
    c.verified = j.at("verified").get<bool>();
    return c;
}

bounds::LowerMethod lower_method_from(const std::string& s)
{
    using bounds::LowerMethod;
    for (auto m : {LowerMethod::Theorem1, LowerMethod::Theorem2J, LowerMethod::Theorem2Y, LowerMethod::Exact})
        if (bounds::to_string(m) == s) return m;
    throw ValidationError("/lower_method", "unknown method '" + s + "'");
}

bounds::UpperMethod upper_method_from(const std::string& s)
{
    using bounds::UpperMethod;
    for (auto m : {UpperMethod::BallEigenvalue, UpperMethod::Exact})
        if (bounds::to_string(m) == s) return m;
    throw ValidationError("/upper_method", "unknown method '" + s + "'");
}

specfun::Family family_from(const std::string& s)
{
    if (s == specfun::to_string(specfun::Family::J)) return specfun::Family::J;
    if (s == specfun::to_string(specfun::Family::Y)) return specfun::Family::Y;
    throw ValidationError("/zero_gap_used/family", "unknown family '" + s + "'");
}

std::string describe_operator(const radial::OperatorSpec& op)
{
    std::ostringstream s;
    s << std::setprecision(10);
    std::visit(overloaded{
                   [&](const radial::Laplacian& l) { s << "laplacian (n = " << l.n << ")"; },
                   [&](const radial::HomogeneousPLaplacian& p) {
                       s << "p_laplacian (p = " << p.p << ", n = " << p.n << ")";
                   },
                   [&](const radial::HomogeneousInfinityLaplacian&) { s << "infinity_laplacian"; },
                   [&](const radial::PucciMaxPlus& m) {
                       s << "pucci_max (gamma = " << m.gamma_min << ", Gamma = " << m.gamma_max << ", n = " << m.n
                         << ")";
                   },
                   [&](const radial::GradientLimit&) { s << "gradient_limit"; },
               },
               op);
    return s.str();
}

} // namespace

radial::OperatorSpec operator_from_json(const Json& j, const std::string& pointer)
{
    require_object(j, pointer);
    const std::string family = string_at(member(j, pointer, "family"), child(pointer, "family"));
    radial::OperatorSpec op;
    if (family == "laplacian") {
        reject_unknown(j, pointer, {"family", "n"});
        op = radial::Laplacian{integer(j, pointer, "n", 1)};
    } else if (family == "p_laplacian") {
        reject_unknown(j, pointer, {"family", "p", "n"});
        const double p = number(j, pointer, "p");
        if (!(p > 1.0)) throw ValidationError(child(pointer, "p"), "p must exceed 1");
        op = radial::HomogeneousPLaplacian{p, integer(j, pointer, "n", 1)};
    } else if (family == "infinity_laplacian") {
        reject_unknown(j, pointer, {"family"});
        op = radial::HomogeneousInfinityLaplacian{};
    } else if (family == "pucci_max") {
        reject_unknown(j, pointer, {"family", "gamma", "Gamma", "n"});
        const double g = number(j, pointer, "gamma");
        const double G = number(j, pointer, "Gamma");
        if (g > G) throw ValidationError(child(pointer, "gamma"), "gamma may not exceed Gamma");
        op = radial::PucciMaxPlus{g, G, integer(j, pointer, "n", 1)};
    } else if (family == "gradient_limit") {
        reject_unknown(j, pointer, {"family"});
        op = radial::GradientLimit{};
    } else {
        throw ValidationError(child(pointer, "family"), "unknown operator family '" + family + "'");
    }
    return op;
}

Json operator_to_json(const radial::OperatorSpec& op)
{
    return std::visit(overloaded{
                          [](const radial::Laplacian& l) { return Json{{"family", "laplacian"}, {"n", l.n}}; },
                          [](const radial::HomogeneousPLaplacian& p) {
                              return Json{{"family", "p_laplacian"}, {"p", p.p}, {"n", p.n}};
                          },
                          [](const radial::HomogeneousInfinityLaplacian&) {
                              return Json{{"family", "infinity_laplacian"}};
                          },
                          [](const radial::PucciMaxPlus& m) {
                              return Json{
                                  {"family", "pucci_max"}, {"gamma", m.gamma_min}, {"Gamma", m.gamma_max}, {"n", m.n}};
                          },
                          [](const radial::GradientLimit&) { return Json{{"family", "gradient_limit"}}; },
                      },
                      op);
}

ProblemFile parse_problem(const Json& doc)
{
    require_object(doc, "");
    reject_unknown(doc, "", {"operator", "domain", "inradius_only", "convex", "options"});
    ProblemFile pf;
    pf.op = operator_from_json(member(doc, "", "operator"), "/operator");
    const int op_dim = radial::operator_dimension(pf.op);
    const int default_dim = op_dim > 0 ? op_dim : 2;

    const bool has_domain = doc.contains("domain");
    const bool has_r = doc.contains("inradius_only");
    if (has_domain == has_r) throw ValidationError("", "exactly one of 'domain' and 'inradius_only' is required");
    if (has_domain) {
        if (doc.contains("convex")) throw ValidationError("/convex", "'convex' applies only with 'inradius_only'");
        pf.domain = domain_from_json(doc["domain"], "/domain", default_dim);
    } else {
        const double r = number(doc, "", "inradius_only");
        const bool convex = doc.contains("convex") ? boolean_at(doc["convex"], "/convex") : false;
        pf.domain = geometry::DomainSpec::inradius_only(r, convex, default_dim);
    }
    if (op_dim > 0 && op_dim != pf.domain.dimension)
        throw ValidationError("/operator/n", "operator dimension " + std::to_string(op_dim) +
                                                 " does not match domain dimension " +
                                                 std::to_string(pf.domain.dimension));
    if (doc.contains("options")) pf.options = options_from_json(doc["options"], "/options");
    return pf;
}

ProblemFile parse_problem_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

std::string eigenvalue_units(const radial::OperatorSpec& op)
{
    return std::holds_alternative<radial::GradientLimit>(op) ? "length^-1" : "length^-2";
}

Json to_json(const bounds::BoundReport& r)
{
    Json j;
    j["operator"] = operator_to_json(r.op);
    j["R"] = r.inradius;
    j["R_resolution"] = r.inradius_resolution;
    j["convex"] = r.convex;
    j["lower"] = r.lower;
    j["lower_method"] = bounds::to_string(r.lower_method);
    j["upper"] = optional_number(r.upper);
    j["upper_method"] = r.upper_method ? Json(bounds::to_string(*r.upper_method)) : Json(nullptr);
    if (r.zero_gap)
        j["zero_gap_used"] = {{"x", r.zero_gap->x},
                              {"y", r.zero_gap->y},
                              {"k", r.zero_gap->k},
                              {"family", std::string(specfun::to_string(r.zero_gap->family))}};
    else
        j["zero_gap_used"] = nullptr;
    j["delta_used"] = optional_number(r.delta_used);
    j["R_delta_used"] = optional_number(r.dilated_inradius_used);
    j["rfk"] = optional_number(r.rfk);
    j["gap_limit"] = optional_number(r.gap_limit);
    j["certificate"] = {{"lambda", r.certificate.lambda},
                        {"profile", profile_to_json(r.certificate.profile)},
                        {"check", check_to_json(r.certificate.check)}};
    j["units"] = eigenvalue_units(r.op);
    return j;
}

bounds::BoundReport report_from_json(const Json& j)
{
    try {
        bounds::BoundReport r;
        r.op = operator_from_json(j.at("operator"), "/operator");
        r.inradius = j.at("R").get<double>();
        r.inradius_resolution = j.at("R_resolution").get<double>();
        r.convex = j.at("convex").get<bool>();
        r.lower = j.at("lower").get<double>();
        r.lower_method = lower_method_from(j.at("lower_method").get<std::string>());
        r.upper = read_optional(j, "upper");
        if (const auto it = j.find("upper_method"); it != j.end() && !it->is_null())
            r.upper_method = upper_method_from(it->get<std::string>());
        if (const auto it = j.find("zero_gap_used"); it != j.end() && !it->is_null())
            r.zero_gap = bounds::ZeroGap{it->at("x").get<double>(), it->at("y").get<double>(),
                                         it->at("k").get<int>(), family_from(it->at("family").get<std::string>())};
        r.delta_used = read_optional(j, "delta_used");
        r.dilated_inradius_used = read_optional(j, "R_delta_used");
        r.rfk = read_optional(j, "rfk");
        r.gap_limit = read_optional(j, "gap_limit");
        const auto& cert = j.at("certificate");
        r.certificate.lambda = cert.at("lambda").get<double>();
        r.certificate.profile = profile_from_json(cert.at("profile"));
        r.certificate.check = check_from_json(cert.at("check"));
        return r;
    } catch (const Json::exception& e) {
        throw ValidationError("", std::string("malformed report: ") + e.what());
    }
}

OracleResult run_oracle(const ProblemFile& problem, bool keep_field)
{
    const auto& domain = problem.domain;
    const auto& op = problem.op;
    if (const auto* ball = std::get_if<geometry::Ball>(&domain.shape);
        ball && (std::holds_alternative<radial::Laplacian>(op) ||
                 std::holds_alternative<radial::HomogeneousPLaplacian>(op))) {
        OracleResult r;
        r.method = "radial-shooting";
        r.lambda = oracle::radial_shoot_ball_lambda1(op, ball->radius);
        return r;
    }
    const auto* lap = std::get_if<radial::Laplacian>(&op);
    if (!lap || domain.dimension != 2 || std::holds_alternative<geometry::InradiusOnly>(domain.shape))
        throw UnsupportedError("the oracle covers the 2D Laplacian on a geometric domain and radial operators on balls");
    double h = 0.0;
    if (problem.options.grid_h) {
        h = *problem.options.grid_h;
    } else {
        const auto bb = geometry::bounding_box(domain);
        h = std::max(bb[2] - bb[0], bb[3] - bb[1]) / 256.0;
    }
    oracle::FdOptions fd;
    fd.keep_eigenvector = keep_field;
    auto grid = oracle::fd_laplacian_lambda1(domain, h, fd);
    OracleResult r;
    r.method = "finite-difference";
    r.lambda = grid.lambda_h;
    r.h = h;
    r.grid = std::move(grid);
    return r;
}

void write_profile_csv(const radial::OperatorSpec& op, const bounds::Certificate& cert, std::ostream& out)
{
    const auto& p = cert.profile;
    const int samples = std::max(cert.check.samples, 2);
    auto rs = radial::chebyshev_interior(p.r_lo, p.r_hi, samples);
    std::sort(rs.begin(), rs.end());
    out << "r,phi,dphi,residual\n";
    out << std::setprecision(17);
    for (double r : rs) {
        const auto v = radial::evaluate(p, r);
        out << r << ',' << v.phi << ',' << v.dphi << ',' << radial::residual(op, p, cert.lambda, r) << '\n';
    }
}

void write_table(const bounds::BoundReport& r, const std::optional<OracleResult>& oracle_result, std::ostream& out)
{
    std::ostringstream s;
    s << std::setprecision(10);
    auto row = [&](std::string_view label) -> std::ostream& {
        s << std::left << std::setw(16) << label << ' ';
        return s;
    };
    row("operator") << describe_operator(r.op) << '\n';
    row("R") << r.inradius;
    if (r.inradius_resolution > 0.0) s << "  (grid resolution " << r.inradius_resolution << ")";
    s << '\n';
    row("convex") << (r.convex ? "yes" : "no") << '\n';
    if (r.zero_gap)
        row("zero gap") << specfun::to_string(r.zero_gap->family) << " k = " << r.zero_gap->k
                        << "  x = " << r.zero_gap->x << "  y = " << r.zero_gap->y << '\n';
    if (r.delta_used) row("delta") << *r.delta_used << '\n';
    if (r.dilated_inradius_used) row("R_delta") << *r.dilated_inradius_used << '\n';
    row("lower") << r.lower << "  [" << bounds::to_string(r.lower_method) << "]\n";
    if (r.upper)
        row("upper") << *r.upper << "  [" << bounds::to_string(*r.upper_method) << "]\n";
    else
        row("upper") << "none\n";
    if (r.rfk) row("rfk") << *r.rfk << '\n';
    if (r.gap_limit) row("gap limit") << *r.gap_limit << "  (informational)\n";
    if (oracle_result) {
        row("oracle") << oracle_result->lambda << "  [" << oracle_result->method;
        if (oracle_result->h > 0.0) s << ", h = " << oracle_result->h;
        s << "]\n";
    }
    row("certificate") << radial::to_string(r.certificate.profile.kind) << " on [" << r.certificate.profile.r_lo
                       << ", " << r.certificate.profile.r_hi << "]  max residual " << r.certificate.check.max_residual
                       << "  min slope " << r.certificate.check.min_slope << "  "
                       << (r.certificate.check.verified ? "verified" : "FAILED") << '\n';
    row("units") << "eigenvalues in " << eigenvalue_units(r.op) << '\n';
    out << s.str();
}

void write_p_scan_table(const bounds::PScan& scan, std::ostream& out)
{
    std::ostringstream s;
    s << std::setprecision(10);
    for (double p : scan.skipped) s << "warning: skipped p = " << p << " (requires p > n = " << scan.n << ")\n";
    s << "n = " << scan.n << ", R = " << scan.inradius << '\n';
    auto cell = [&](auto v) -> std::ostream& { return s << std::left << std::setw(18) << v; };
    cell("p");
    cell("lower");
    cell("upper");
    cell("(pi/2R)^2");
    cell("|lower-limit|");
    s << "|upper-limit|\n";
    for (const auto& row : scan.rows) {
        cell(row.p);
        cell(row.lower);
        cell(row.upper);
        cell(scan.limit);
        cell(std::abs(row.lower - scan.limit));
        s << std::abs(row.upper - scan.limit) << '\n';
    }
    out << s.str();
}

} // namespace eigenbound::io
