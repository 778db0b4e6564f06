#include "eigenbound/radial.hpp"

#include "eigenbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eigenbound::radial {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_gradient(double dphi, double r)
{
    if (dphi == 0.0)
        throw SingularPointError("gradient-normalized operator evaluated where phi'(r) = 0, r = " + std::to_string(r));
}

bool within(const RadialProfile& p, double r)
{
    const double slack = 1e-12 * std::max(1.0, p.r_hi);
    return r > 0.0 && r >= p.r_lo - slack && r <= p.r_hi + slack;
}

} // namespace

void validate(const OperatorSpec& op)
{
    std::visit(overloaded{
                   [](const Laplacian& l) {
                       if (l.n < 1) throw ArgumentError("Laplacian dimension must be at least 1");
                   },
                   [](const HomogeneousPLaplacian& l) {
                       if (!(l.p > 1.0) || !std::isfinite(l.p)) throw ArgumentError("p-Laplacian requires p > 1");
                       if (l.n < 1) throw ArgumentError("p-Laplacian dimension must be at least 1");
                   },
                   [](const PucciMaxPlus& m) {
                       if (!(m.gamma_min > 0.0) || !std::isfinite(m.gamma_max) || m.gamma_min > m.gamma_max)
                           throw ArgumentError("Pucci operator requires 0 < gamma <= Gamma");
                       if (m.n < 1) throw ArgumentError("Pucci dimension must be at least 1");
                   },
                   [](const auto&) {},
               },
               op);
}

std::string operator_name(const OperatorSpec& op)
{
    return std::visit(overloaded{[](const Laplacian&) { return "laplacian"; },
                                 [](const HomogeneousPLaplacian&) { return "p_laplacian"; },
                                 [](const HomogeneousInfinityLaplacian&) { return "infinity_laplacian"; },
                                 [](const PucciMaxPlus&) { return "pucci_max"; },
                                 [](const GradientLimit&) { return "gradient_limit"; }},
                      op);
}

int operator_dimension(const OperatorSpec& op)
{
    return std::visit(overloaded{[](const Laplacian& l) { return l.n; },
                                 [](const HomogeneousPLaplacian& l) { return l.n; },
                                 [](const PucciMaxPlus& m) { return m.n; }, [](const auto&) { return 0; }},
                      op);
}

bool is_ode_form(const OperatorSpec& op)
{
    return std::holds_alternative<Laplacian>(op) || std::holds_alternative<HomogeneousPLaplacian>(op) ||
           std::holds_alternative<PucciMaxPlus>(op);
}

double OdeCoefficients::eta(double lambda) const
{
    return std::sqrt(lambda_scale * lambda);
}

OdeCoefficients radial_ode_coefficients(const OperatorSpec& op)
{
    validate(op);
    return std::visit(
        overloaded{
            [](const Laplacian& l) { return OdeCoefficients{double(l.n - 1), 1.0}; },
            [](const HomogeneousPLaplacian& l) {
                return OdeCoefficients{(l.n - 1) / (l.p - 1.0), l.p / (l.p - 1.0)};
            },
            // φ'' <= 0 and φ'/r > 0: γφ'' + Γ(n-1)φ'/r + λφ = 0
            [](const PucciMaxPlus& m) {
                return OdeCoefficients{m.gamma_max * (m.n - 1) / m.gamma_min, 1.0 / m.gamma_min};
            },
            [&](const auto&) -> OdeCoefficients {
                throw UnsupportedError(operator_name(op) + " has a closed-form profile, not a Bessel normal form");
            },
        },
        op);
}

std::string to_string(ProfileKind kind)
{
    switch (kind) {
    case ProfileKind::Theorem1: return "theorem1";
    case ProfileKind::Theorem2: return "theorem2";
    case ProfileKind::Linear: return "linear";
    case ProfileKind::Sine: return "sine";
    }
    return "unknown";
}

ProfileValue evaluate(const RadialProfile& p, double r)
{
    if (!within(p, r))
        throw RangeError("r = " + std::to_string(r) + " outside profile interval [" + std::to_string(p.r_lo) + ", " +
                         std::to_string(p.r_hi) + "]");
    switch (p.kind) {
    case ProfileKind::Linear: return {r, 1.0, 0.0};
    case ProfileKind::Sine: {
        const double s = std::sin(p.eta * r), c = std::cos(p.eta * r);
        return {s, p.eta * c, -p.eta * p.eta * s};
    }
    case ProfileKind::Theorem1:
    case ProfileKind::Theorem2: break;
    }

    // d/dx [x^α Z_α] = x^α Z_{α-1};  d/dx [x^α Z_{α-1}] = (2α-1) x^{α-1} Z_{α-1} - x^α Z_α
    const double x = p.eta * r;
    const double xa = std::pow(x, p.alpha);
    ProfileValue v;
    auto add = [&](double c, specfun::Family f) {
        if (c == 0.0) return;
        const double z0 = specfun::cylinder(f, p.alpha, x);
        const double z1 = specfun::cylinder(f, p.alpha - 1.0, x);
        v.phi += c * xa * z0;
        v.dphi += c * p.eta * xa * z1;
        v.d2phi += c * p.eta * p.eta * ((2.0 * p.alpha - 1.0) * xa / x * z1 - xa * z0);
    };
    add(p.c1, specfun::Family::J);
    add(p.c2, specfun::Family::Y);
    return v;
}

RadialProfile build_theorem1_profile(const OperatorSpec& op, double lambda, double r_hi)
{
    validate(op);
    if (!(lambda > 0.0) || !(r_hi > 0.0)) throw ArgumentError("theorem-1 profile needs lambda > 0 and r_hi > 0");
    if (std::holds_alternative<GradientLimit>(op))
        return {ProfileKind::Linear, 0.0, 0.0, 1.0, 0.0, 0.0, r_hi};
    if (std::holds_alternative<HomogeneousInfinityLaplacian>(op)) {
        const double eta = std::sqrt(lambda);
        if (eta * r_hi > std::numbers::pi / 2.0 * (1.0 + 1e-12))
            throw RangeError("sine profile is not increasing up to r_hi");
        return {ProfileKind::Sine, 0.0, eta, 0.0, 0.0, 0.0, r_hi};
    }
    const auto ode = radial_ode_coefficients(op);
    const double alpha = ode.alpha();
    if (!(alpha > 0.0))
        throw RouteError("alpha = " + std::to_string(alpha) + " <= 0: no barrier with phi(0) = 0, use the delta route");
    const double eta = ode.eta(lambda);
    const double first_critical = specfun::bessel_zero(alpha - 1.0, specfun::Family::J, 1).value;
    if (eta * r_hi > first_critical * (1.0 + 1e-12))
        throw RangeError("r_hi lies beyond the first critical point of the profile");
    return {ProfileKind::Theorem1, alpha, eta, 1.0, 0.0, 0.0, r_hi};
}

RadialProfile build_theorem2_profile(const OperatorSpec& op, double lambda, double delta, double r_hi,
                                     specfun::Family family)
{
    validate(op);
    if (!is_ode_form(op)) throw RouteError(operator_name(op) + " has no delta-route Bessel profile");
    if (!(lambda > 0.0) || !(delta > 0.0) || !(r_hi > delta))
        throw ConstructionError("theorem-2 profile needs lambda > 0 and 0 < delta < r_hi");
    const auto ode = radial_ode_coefficients(op);
    const double alpha = ode.alpha();
    const double eta = ode.eta(lambda);

    const double x = eta * delta;
    const auto zero = specfun::next_zero_after(alpha, family, x * (1.0 - 1e-7));
    if (std::abs(zero.value - x) > 1e-8 * std::max(1.0, x))
        throw ConstructionError("eta * delta = " + std::to_string(x) + " is not a zero of the chosen Bessel function");
    const auto critical = specfun::next_zero_after(alpha - 1.0, family, zero.value);
    if (eta * r_hi > critical.value * (1.0 + 1e-10))
        throw ConstructionError("r_hi passes the first critical point after delta");

    RadialProfile p{ProfileKind::Theorem2, alpha, eta, 0.0, 0.0, delta, r_hi};
    (family == specfun::Family::J ? p.c1 : p.c2) = 1.0;
    const double mid = 0.5 * (delta + r_hi);
    if (evaluate(p, mid).phi < 0.0) {
        p.c1 = -p.c1;
        p.c2 = -p.c2;
    }
    return p;
}

namespace {

// φ″ + c φ′/r. For Bessel profiles the x^{α-1} Z_{α-1} terms of φ″ and c φ′/r
// are combined before evaluation; they cancel when c = 1 - 2α, and evaluating
// them separately loses everything to rounding as r -> 0.
double radial_part(const RadialProfile& p, const ProfileValue& v, double r, double c)
{
    if (p.kind != ProfileKind::Theorem1 && p.kind != ProfileKind::Theorem2) return v.d2phi + c * v.dphi / r;
    double kappa = (2.0 * p.alpha - 1.0) + c;
    if (std::abs(kappa) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(c))) kappa = 0.0;
    const double x = p.eta * r;
    const double xa = std::pow(x, p.alpha);
    double sum = 0.0;
    auto add = [&](double coef, specfun::Family f) {
        if (coef == 0.0) return;
        const double z0 = specfun::cylinder(f, p.alpha, x);
        const double z1 = kappa == 0.0 ? 0.0 : specfun::cylinder(f, p.alpha - 1.0, x);
        sum += coef * p.eta * p.eta * (kappa * xa / x * z1 - xa * z0);
    };
    add(p.c1, specfun::Family::J);
    add(p.c2, specfun::Family::Y);
    return sum;
}

} // namespace

double residual(const OperatorSpec& op, const RadialProfile& profile, double lambda, double r)
{
    const auto v = evaluate(profile, r);
    return std::visit(
        overloaded{
            [&](const Laplacian& l) { return radial_part(profile, v, r, l.n - 1) + lambda * v.phi; },
            [&](const HomogeneousPLaplacian& l) {
                require_gradient(v.dphi, r);
                return (l.p - 1.0) / l.p * radial_part(profile, v, r, (l.n - 1) / (l.p - 1.0)) + lambda * v.phi;
            },
            [&](const HomogeneousInfinityLaplacian&) {
                require_gradient(v.dphi, r);
                return v.d2phi + lambda * v.phi;
            },
            [&](const PucciMaxPlus& m) {
                auto weighted = [&](double e) { return e > 0.0 ? m.gamma_max * e : m.gamma_min * e; };
                if (v.d2phi <= 0.0 && v.dphi >= 0.0)
                    return m.gamma_min * radial_part(profile, v, r, (m.n - 1) * m.gamma_max / m.gamma_min) +
                           lambda * v.phi;
                return weighted(v.d2phi) + (m.n - 1) * weighted(v.dphi / r) + lambda * v.phi;
            },
            [&](const GradientLimit&) {
                const double grad = std::abs(v.dphi);
                return -std::min(-grad * grad * v.d2phi, grad - lambda * v.phi);
            },
        },
        op);
}

std::vector<double> chebyshev_interior(double lo, double hi, int count)
{
    std::vector<double> pts(count);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    const double margin = 1e-9 * std::max(std::abs(hi), std::abs(lo));
    for (int i = 0; i < count; ++i) {
        const double r = mid - half * std::cos(std::numbers::pi * (i + 0.5) / count);
        pts[i] = std::clamp(r, lo + margin, hi - margin);
    }
    return pts;
}

ResidualReport verify_supersolution(const OperatorSpec& op, const RadialProfile& profile, double lambda, int samples,
                                    double tol)
{
    if (samples < 2) throw ArgumentError("verify_supersolution needs at least 2 samples");
    ResidualReport rep;
    rep.samples = samples;
    rep.r_lo = profile.r_lo;
    rep.r_hi = profile.r_hi;
    rep.max_residual = -std::numeric_limits<double>::infinity();
    rep.min_slope = std::numeric_limits<double>::infinity();
    bool singular = false;
    for (double r : chebyshev_interior(profile.r_lo, profile.r_hi, samples)) {
        const auto v = evaluate(profile, r);
        rep.min_slope = std::min(rep.min_slope, v.dphi);
        double res = 0.0;
        try {
            res = residual(op, profile, lambda, r);
        } catch (const SingularPointError&) {
            singular = true;
            continue;
        }
        if (res > rep.max_residual) {
            rep.max_residual = res;
            rep.worst_r = r;
        }
    }
    rep.verified = !singular && rep.max_residual <= tol && rep.min_slope > 0.0;
    return rep;
}

} // namespace eigenbound::radial
