#include "eigenbound/bounds.hpp"

#include "eigenbound/errors.hpp"

#include <cmath>
#include <numbers>

namespace eigenbound::bounds {

namespace {

using radial::OperatorSpec;
using specfun::Family;

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_dimensions(const OperatorSpec& op, const geometry::DomainSpec& domain)
{
    const int n = radial::operator_dimension(op);
    if (n != 0 && n != domain.dimension)
        throw ArgumentError("operator dimension " + std::to_string(n) + " does not match domain dimension " +
                            std::to_string(domain.dimension));
}

Certificate certify(const OperatorSpec& op, const radial::RadialProfile& profile, double lambda,
                    const BoundOptions& options)
{
    return {profile, lambda, radial::verify_supersolution(op, profile, lambda, options.samples, options.tol)};
}

struct Candidate {
    double lambda = 0.0;
    ZeroGap gap;
    double delta = 0.0;
    double dilated = 0.0;
};

LowerBound delta_route(const OperatorSpec& op, const geometry::DomainSpec& domain, double inradius,
                       const BoundOptions& options)
{
    const auto ode = radial::radial_ode_coefficients(op);
    const double alpha = ode.alpha();
    const bool convex = geometry::is_convex(domain);
    if (options.k_max < 1) throw ArgumentError("k_max must be at least 1");

    std::optional<Candidate> best;
    std::optional<double> gap_limit;
    for (Family family : {Family::J, Family::Y}) {
        bool increasing = true;
        double last_gap = -1.0;
        std::optional<Candidate> family_best;
        for (int k = 1; k <= options.k_max; ++k) {
            const double x = specfun::bessel_zero(alpha, family, k).value;
            const double y = specfun::next_zero_after(alpha - 1.0, family, x).value;
            if (y - x <= last_gap) increasing = false;
            last_gap = y - x;

            Candidate c;
            c.gap = {x, y, k, family};
            double eta = 0.0;
            if (convex) {
                // δ/(R+δ) = x/y  =>  δ = R x/(y - x),  η = (y - x)/R
                eta = (y - x) / inradius;
                c.delta = x / eta;
                c.dilated = y / eta;
            } else {
                const auto sol = geometry::solve_delta_for_ratio(domain, x / y, options.grid);
                c.dilated = sol.dilated_inradius + sol.resolution;
                eta = y / c.dilated;
                c.delta = x / eta;
            }
            c.lambda = ode.lambda_for_eta(eta);
            if (!family_best || c.lambda > family_best->lambda) family_best = c;
        }
        if (family_best && (!best || family_best->lambda > best->lambda)) best = family_best;
        if (family == Family::J && increasing && convex && options.k_max > 1)
            gap_limit = ode.lambda_for_eta(kHalfPi / inradius);
    }

    LowerBound lb;
    lb.value = best->lambda;
    lb.method = best->gap.family == Family::J ? LowerMethod::Theorem2J : LowerMethod::Theorem2Y;
    lb.inradius = inradius;
    lb.gap = best->gap;
    lb.delta = best->delta;
    lb.dilated_inradius = best->dilated;
    lb.gap_limit = gap_limit;
    const auto profile = radial::build_theorem2_profile(op, lb.value, best->delta, best->dilated, best->gap.family);
    lb.certificate = certify(op, profile, lb.value, options);
    return lb;
}

} // namespace

std::string to_string(LowerMethod m)
{
    switch (m) {
    case LowerMethod::Theorem1: return "theorem1";
    case LowerMethod::Theorem2J: return "theorem2-J";
    case LowerMethod::Theorem2Y: return "theorem2-Y";
    case LowerMethod::Exact: return "exact";
    }
    return "unknown";
}

std::string to_string(UpperMethod m)
{
    return m == UpperMethod::Exact ? "exact" : "ball-eigenvalue";
}

LowerBound lower_bound(const OperatorSpec& op, const geometry::DomainSpec& domain, const BoundOptions& options)
{
    radial::validate(op);
    check_dimensions(op, domain);
    const auto r = geometry::inradius_estimate(domain, options.grid);
    const double R = r.value + r.resolution;

    LowerBound lb;
    lb.inradius = R;
    if (std::holds_alternative<radial::HomogeneousInfinityLaplacian>(op) ||
        std::holds_alternative<radial::GradientLimit>(op)) {
        const bool infinity = std::holds_alternative<radial::HomogeneousInfinityLaplacian>(op);
        lb.value = infinity ? std::pow(kHalfPi / R, 2) : 1.0 / R;
        lb.method = r.exact() ? LowerMethod::Exact : LowerMethod::Theorem1;
        lb.certificate = certify(op, radial::build_theorem1_profile(op, lb.value, R), lb.value, options);
        return lb;
    }

    const auto ode = radial::radial_ode_coefficients(op);
    if (ode.alpha() > 0.0) {
        const double mu = specfun::bessel_zero(ode.alpha() - 1.0, Family::J, 1).value;
        lb.value = ode.lambda_for_eta(mu / R);
        lb.method = LowerMethod::Theorem1;
        lb.certificate = certify(op, radial::build_theorem1_profile(op, lb.value, R), lb.value, options);
        return lb;
    }
    return delta_route(op, domain, R, options);
}

std::optional<UpperBound> upper_bound(const OperatorSpec& op, const geometry::DomainSpec& domain,
                                      const BoundOptions& options)
{
    radial::validate(op);
    check_dimensions(op, domain);
    const auto r = geometry::inradius_estimate(domain, options.grid);
    const double R = r.value - r.resolution;
    if (!(R > 0.0)) throw NumericError("inradius resolution too coarse for an upper bound");

    if (std::holds_alternative<radial::HomogeneousInfinityLaplacian>(op))
        return UpperBound{std::pow(kHalfPi / R, 2), UpperMethod::Exact};
    if (std::holds_alternative<radial::GradientLimit>(op)) return UpperBound{1.0 / R, UpperMethod::Exact};
    if (std::holds_alternative<radial::PucciMaxPlus>(op)) return std::nullopt;

    // Ball eigenfunction (ηr)^α J_{-α}(ηr): regular at 0, first zero at r = R.
    const auto ode = radial::radial_ode_coefficients(op);
    const double mu = specfun::bessel_zero(-ode.alpha(), Family::J, 1).value;
    return UpperBound{ode.lambda_for_eta(mu / R), UpperMethod::BallEigenvalue};
}

double rfk_bound(const geometry::DomainSpec& domain)
{
    const int n = domain.dimension;
    if (n != 2 && n != 3) throw UnsupportedError("RFK bound is provided for n = 2 and n = 3");
    const double vol = geometry::volume(domain);
    const double mu = specfun::bessel_zero(n / 2.0 - 1.0, Family::J, 1).value;
    return std::pow(geometry::unit_ball_volume(n) / vol, 2.0 / n) * mu * mu;
}

BoundReport full_report(const OperatorSpec& op, const geometry::DomainSpec& domain, const BoundOptions& options)
{
    const auto summary = geometry::summarize(domain, options.grid);
    const auto lb = lower_bound(op, domain, options);
    const auto ub = upper_bound(op, domain, options);

    BoundReport rep;
    rep.op = op;
    rep.inradius = summary.inradius;
    rep.inradius_resolution = summary.inradius_resolution;
    rep.convex = summary.convex;
    rep.lower = lb.value;
    rep.lower_method = lb.method;
    rep.zero_gap = lb.gap;
    rep.delta_used = lb.delta;
    rep.dilated_inradius_used = lb.dilated_inradius;
    rep.gap_limit = lb.gap_limit;
    rep.certificate = lb.certificate;
    if (ub) {
        rep.upper = ub->value;
        rep.upper_method = ub->method;
    }
    if (const auto* lap = std::get_if<radial::Laplacian>(&op);
        lap && (lap->n == 2 || lap->n == 3) && !std::holds_alternative<geometry::InradiusOnly>(domain.shape))
        rep.rfk = rfk_bound(domain);

    if (!rep.certificate.check.verified)
        throw ConsistencyError("lower-bound certificate failed: max residual " +
                               std::to_string(rep.certificate.check.max_residual) + ", min slope " +
                               std::to_string(rep.certificate.check.min_slope));
    if (rep.upper && rep.lower > *rep.upper * (1.0 + 1e-12))
        throw ConsistencyError("lower bound " + std::to_string(rep.lower) + " exceeds upper bound " +
                               std::to_string(*rep.upper));
    return rep;
}

PScan p_limit_scan(int n, double inradius, std::span<const double> p_list)
{
    if (p_list.empty()) throw ArgumentError("p list is empty");
    if (n < 1) throw ArgumentError("dimension must be at least 1");
    if (!(inradius > 0.0)) throw ArgumentError("inradius must be positive");
    for (std::size_t i = 1; i < p_list.size(); ++i)
        if (!(p_list[i] > p_list[i - 1])) throw ArgumentError("p list must be strictly increasing");

    PScan scan;
    scan.n = n;
    scan.inradius = inradius;
    scan.limit = std::pow(kHalfPi / inradius, 2);
    for (double p : p_list) {
        if (!(p > n)) {
            scan.skipped.push_back(p);
            continue;
        }
        const auto ode = radial::radial_ode_coefficients(radial::HomogeneousPLaplacian{p, n});
        const double alpha = ode.alpha();
        const double mu_lower = specfun::bessel_zero(alpha - 1.0, Family::J, 1).value;
        const double mu_upper = specfun::bessel_zero(-alpha, Family::J, 1).value;
        scan.rows.push_back({p, ode.lambda_for_eta(mu_lower / inradius), ode.lambda_for_eta(mu_upper / inradius)});
    }
    return scan;
}

} // namespace eigenbound::bounds
