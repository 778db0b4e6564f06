// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is non-zero when any criterion fails.

#include "eigenbound/bounds.hpp"
#include "eigenbound/errors.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/radial.hpp"
#include "eigenbound/specfun.hpp"

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace eigenbound;
using geometry::DomainSpec;
using radial::OperatorSpec;
using specfun::Family;

namespace {

constexpr double pi = std::numbers::pi;

double quarter(double R)
{
    return std::pow(pi / (2 * R), 2);
}

// Collects failed sub-checks; a criterion passes when none failed.
struct Check {
    std::ostringstream notes;
    int failures = 0;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            ++failures;
            if (failures <= 3) notes << (failures > 1 ? "; " : "") << what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::string(Check&)> run;
};

std::string fmt(double v, int digits = 10)
{
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

std::string infinity_exactness(Check& c)
{
    const OperatorSpec op = radial::HomogeneousInfinityLaplacian{};
    std::vector<DomainSpec> domains;
    for (double R : {0.5, 1.0, 2.0, 0.585786}) domains.push_back(DomainSpec::inradius_only(R, false));
    domains.push_back(DomainSpec::l_shape(7.0, 1.0));
    double worst = 0;
    for (const auto& d : domains) {
        const double R = geometry::inradius(d);
        const auto rep = bounds::full_report(op, d);
        c.expect(std::abs(rep.lower - quarter(R)) <= 1e-10, "lower != (pi/2R)^2 at R = " + fmt(R));
        c.expect(rep.upper && std::abs(*rep.upper - quarter(R)) <= 1e-10, "upper != (pi/2R)^2 at R = " + fmt(R));
        const auto& p = rep.certificate.profile;
        c.expect(p.kind == radial::ProfileKind::Sine, "certificate is not the sine profile");
        for (double r : radial::chebyshev_interior(0.0, R, 1000))
            worst = std::max(worst, std::abs(radial::residual(op, p, rep.lower, r)));
    }
    c.expect(worst <= 1e-10, "sine residual " + fmt(worst));
    return "max |residual| " + fmt(worst, 3) + ", L(7,1): " + fmt(quarter(geometry::inradius(domains.back())));
}

std::string gradient_exactness(Check& c)
{
    const OperatorSpec op = radial::GradientLimit{};
    for (double R : {0.5, 1.0, 2.0, 0.585786}) {
        const auto rep = bounds::full_report(op, DomainSpec::inradius_only(R, false));
        c.expect(rep.lower == 1.0 / R && rep.upper == 1.0 / R, "bounds != 1/R at R = " + fmt(R));
        const auto& p = rep.certificate.profile;
        c.expect(p.kind == radial::ProfileKind::Linear, "certificate is not linear");
        for (double r : radial::chebyshev_interior(0.0, R, 1000)) {
            const auto v = radial::evaluate(p, r);
            const double branch = std::min(-v.dphi * v.dphi * v.d2phi, v.dphi - rep.lower * v.phi);
            c.expect(branch == std::min(0.0, 1.0 - r / R) && branch == 0.0, "min{...} != 0 at r = " + fmt(r));
            c.expect(radial::residual(op, p, rep.lower, r) == 0.0, "residual != 0 at r = " + fmt(r));
        }
    }
    return "lower = upper = 1/R, residual identically 0";
}

std::string p_limit(Check& c)
{
    const std::vector<double> ps{1e2, 1e4, 1e6};
    const auto scan = bounds::p_limit_scan(2, 1.0, ps);
    c.expect(scan.rows.size() == 3, "rows skipped");
    double gl = INFINITY, gu = INFINITY;
    std::ostringstream s;
    for (const auto& row : scan.rows) {
        const double l = std::abs(row.lower - quarter(1.0)), u = std::abs(row.upper - quarter(1.0));
        c.expect(l < gl && u < gu, "gaps not decreasing at p = " + fmt(row.p));
        gl = l;
        gu = u;
    }
    c.expect(gl < 1e-3 && gu < 1e-3, "final gaps " + fmt(gl) + ", " + fmt(gu));
    s << "final gaps " << fmt(gl, 3) << " / " << fmt(gu, 3);
    return s.str();
}

std::string ball_shooting(Check& c)
{
    struct Case {
        double p;
        int n;
    };
    double worst = 0;
    for (const auto& [p, n] : {Case{2, 2}, Case{2, 3}, Case{4, 2}, Case{10, 3}}) {
        const OperatorSpec op = radial::HomogeneousPLaplacian{p, n};
        const double alpha = radial::radial_ode_coefficients(op).alpha();
        const double mu = specfun::bessel_zero(-alpha, Family::J, 1).value;
        const double formula = (p - 1) / p * mu * mu;
        const double shot = oracle::radial_shoot_ball_lambda1(op, 1.0);
        worst = std::max(worst, std::abs(shot - formula) / formula);
        c.expect(std::abs(shot - formula) <= 1e-6 * formula, "(p, n) = (" + fmt(p) + ", " + fmt(n) + ")");
        c.expect(std::abs(bounds::upper_bound(op, DomainSpec::ball(1.0, n))->value - formula) <= 1e-12 * formula,
                 "upper bound differs from the ball formula");
    }
    // p = 2, n = 3: the Laplacian eigenvalue of B_1 is π², twice the homogeneous value
    const double lap = oracle::radial_shoot_ball_lambda1(radial::Laplacian{3}, 1.0);
    c.expect(std::abs(lap - pi * pi) <= 1e-6 * pi * pi, "Laplacian B_1 shooting " + fmt(lap));
    const double mu_half = specfun::bessel_zero(0.5, Family::J, 1).value;
    c.expect(std::abs(mu_half * mu_half - pi * pi) <= 1e-12, "(mu_1^(1/2))^2 != pi^2");
    return "max relative deviation " + fmt(worst, 3) + ", Laplacian B_1 " + fmt(lap);
}

std::string square_sandwich(Check& c)
{
    const auto square = DomainSpec::box({1.0, 1.0});
    bounds::BoundOptions k1;
    k1.k_max = 1;
    const auto rep = bounds::full_report(radial::Laplacian{2}, square, k1);
    const double h = 1.0 / 256;
    const double lh = oracle::fd_laplacian_lambda1(square, h).lambda_h;
    c.expect(std::abs(rep.lower - 8.1439508464386881) <= 1e-9, "k = 1 lower " + fmt(rep.lower));
    c.expect(std::abs(lh - 2 * pi * pi) <= 1e-3 * 2 * pi * pi, "lambda_h " + fmt(lh));
    c.expect(rep.upper && std::abs(*rep.upper - 23.132743851787138) <= 1e-9, "upper");
    c.expect(rep.lower <= lh * 1.01 && *rep.upper >= lh * 0.99, "sandwich");
    return fmt(rep.lower, 6) + " <= " + fmt(lh, 8) + " <= " + fmt(*rep.upper, 6);
}

std::string l_sandwich(Check& c)
{
    const auto l = DomainSpec::l_shape(3.0, 1.0);
    const double R = geometry::inradius(l);
    c.expect(std::abs(R - 1.0 / (1.0 + 1.0 / std::sqrt(2.0))) <= 1e-14, "R = " + fmt(R));
    const auto rep = bounds::full_report(radial::Laplacian{2}, l);
    const double lh = oracle::fd_laplacian_lambda1(l, 1.0 / 256).lambda_h;
    c.expect(rep.upper.has_value(), "no upper bound");
    c.expect(rep.lower < lh * 1.01 && *rep.upper > lh * 0.99, "sandwich");
    c.expect(rep.lower < lh && lh < *rep.upper, "strict sandwich");
    return fmt(rep.lower, 6) + " < " + fmt(lh, 8) + " < " + fmt(*rep.upper, 6);
}

std::string laplacian_three(Check& c)
{
    bounds::BoundOptions opts;
    opts.k_max = 64;
    double worst_ratio = INFINITY;
    for (const auto& d : {DomainSpec::ball(1.0, 3), DomainSpec::box({1.0, 2.0, 3.0}), DomainSpec::cylinder(1.0, 20.0),
                          DomainSpec::inradius_only(0.3, true, 3)}) {
        const double R = geometry::inradius(d);
        const double v = bounds::lower_bound(radial::Laplacian{3}, d, opts).value;
        worst_ratio = std::min(worst_ratio, v / quarter(R));
        c.expect(v >= 0.98 * quarter(R), "below 0.98 (pi/2R)^2 on " + geometry::shape_name(d));
        c.expect(v <= quarter(R) * (1 + 1e-9), "above (pi/2R)^2 on " + geometry::shape_name(d));
    }
    return "bound / (pi/2R)^2 = " + fmt(worst_ratio, 8);
}

std::string rfk_crossover(Check& c)
{
    double worst = 0;
    for (double R : {0.5, 1.0, 2.5}) {
        const auto cyl = DomainSpec::cylinder(R, 32 * R / 3); // |Ω| = 8|B_R|, inradius R
        c.expect(std::abs(geometry::volume(cyl) - 8 * geometry::unit_ball_volume(3) * R * R * R) <= 1e-12 * R * R * R,
                 "volume");
        worst = std::max(worst, std::abs(bounds::rfk_bound(cyl) - quarter(R)));
    }
    c.expect(worst <= 1e-10, "rfk deviates by " + fmt(worst));
    const auto tall = DomainSpec::cylinder(1.0, 20.0);
    c.expect(geometry::volume(tall) > 8 * geometry::unit_ball_volume(3), "cylinder not larger than 8|B_1|");
    bounds::BoundOptions opts;
    opts.k_max = 64;
    const double ours = bounds::lower_bound(radial::Laplacian{3}, tall, opts).value;
    const double rfk = bounds::rfk_bound(tall);
    c.expect(ours > rfk, "bound " + fmt(ours) + " <= rfk " + fmt(rfk));
    return "|rfk - (pi/2R)^2| <= " + fmt(worst, 3) + "; cylinder " + fmt(ours, 8) + " > rfk " + fmt(rfk, 8);
}

std::string convex_dilation(Check& c)
{
    std::mt19937_64 rng(20240601);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const auto poly = testing_support::random_convex_polygon(rng);
        const auto d = DomainSpec::polygon(poly);
        const double R = geometry::inradius(d);
        for (double delta : {0.1, 0.5, 2.0}) {
            const double direct = testing_support::dilated_inradius_direct(poly, delta);
            const double lib = geometry::dilated_inradius(d, delta);
            worst = std::max({worst, std::abs(direct - (R + delta)), std::abs(lib - (R + delta))});
        }
    }
    c.expect(worst <= 1e-8, "convex deviation " + fmt(worst));
    const auto u = DomainSpec::u_shape(3.0, 1.0, 2.0);
    const double R = geometry::inradius(u);
    const double excess = geometry::dilated_inradius(u, 0.75) - (R + 0.75);
    c.expect(excess > 0.01, "U-shape excess " + fmt(excess));
    const auto grid = geometry::dilated_inradius_estimate(
        DomainSpec::polygon(testing_support::u_shape_polygon(3.0, 1.0, 2.0)), 0.75);
    c.expect(grid.value - grid.resolution - (R + 0.75) > 0.01, "grid U-shape excess");
    return "convex max deviation " + fmt(worst, 3) + "; U-shape R_delta - (R + delta) = " + fmt(excess, 6);
}

std::string bessel_substrate(Check& c)
{
    const double a = specfun::bessel_zero(0.5, Family::J, 1).value;
    const double b = specfun::bessel_zero(-0.5, Family::J, 1).value;
    c.expect(std::abs(a - pi) <= 1e-12, "mu_1^(1/2) = " + fmt(a, 17));
    c.expect(std::abs(b - pi / 2) <= 1e-12, "mu_1^(-1/2) = " + fmt(b, 17));
    double worst = 0;
    for (Family f : {Family::J, Family::Y})
        for (double nu : {-0.49, -0.25, 0.0, 0.25, 0.49}) {
            const auto scan = oracle::bessel_zero_scan(nu, f, 70.0, pi / 16);
            if (scan.size() < 21) {
                c.expect(false, "scan found too few zeros");
                continue;
            }
            for (int k = 1; k <= 20; ++k) worst = std::max(worst, std::abs(specfun::bessel_zero(nu, f, k).value - scan[k - 1]));
            // exactly one zero of Z_{ν-1} between consecutive zeros of Z_ν
            const auto lower = oracle::bessel_zero_scan(nu - 1, f, 70.0, pi / 16);
            for (int k = 1; k <= 20; ++k) {
                int inside = 0;
                for (double z : lower) inside += (z > scan[k - 1] && z < scan[k]);
                c.expect(inside == 1, "interlacing fails at nu = " + fmt(nu) + ", k = " + fmt(k));
            }
        }
    c.expect(worst <= 1e-10, "zero deviation " + fmt(worst));
    return "max |zero - scan| " + fmt(worst, 3);
}

std::string certificate_integrity(Check& c)
{
    std::vector<std::pair<OperatorSpec, DomainSpec>> matrix;
    const std::vector<DomainSpec> planar{DomainSpec::box({1.0, 1.0}),     DomainSpec::ball(0.8, 2),
                                         DomainSpec::l_shape(3.0, 1.0),   DomainSpec::u_shape(3.0, 1.0, 2.0),
                                         DomainSpec::stadium(2.0, 0.4),   DomainSpec::inradius_only(1.5, true),
                                         DomainSpec::l_shape(7.0, 1.0)};
    const std::vector<OperatorSpec> planar_ops{radial::Laplacian{2},
                                               radial::HomogeneousPLaplacian{1.5, 2},
                                               radial::HomogeneousPLaplacian{3, 2},
                                               radial::HomogeneousPLaplacian{10, 2},
                                               radial::PucciMaxPlus{1, 2, 2},
                                               radial::PucciMaxPlus{0.5, 0.5, 2},
                                               radial::HomogeneousInfinityLaplacian{},
                                               radial::GradientLimit{}};
    for (const auto& op : planar_ops)
        for (const auto& d : planar) matrix.emplace_back(op, d);
    const std::vector<DomainSpec> spatial{DomainSpec::ball(1.0, 3), DomainSpec::box({1.0, 2.0, 3.0}),
                                          DomainSpec::cylinder(1.0, 20.0)};
    for (const auto& op : std::vector<OperatorSpec>{radial::Laplacian{3}, radial::HomogeneousPLaplacian{2.5, 3},
                                                     radial::HomogeneousPLaplacian{4, 3}, radial::PucciMaxPlus{1, 2, 3}})
        for (const auto& d : spatial) matrix.emplace_back(op, d);

    int certified = 0;
    for (const auto& [op, d] : matrix) {
        const auto rep = bounds::full_report(op, d);
        const auto& cert = rep.certificate;
        const std::string tag = radial::operator_name(op) + " on " + geometry::shape_name(d);
        const auto check = radial::verify_supersolution(op, cert.profile, cert.lambda, 1000);
        c.expect(check.verified, "not verified: " + tag);
        const auto bumped = radial::verify_supersolution(op, cert.profile, 1.05 * cert.lambda, 1000);
        c.expect(bumped.max_residual > 0.0, "+5% stays non-positive: " + tag);
        ++certified;
    }
    return fmt(certified) + " certificates verified, all flip under +5%";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "infinity-Laplacian exactness", 1.0, infinity_exactness},
        {2, "gradient-limit exactness", 1.0, gradient_exactness},
        {3, "p -> infinity convergence", 5.0, p_limit},
        {4, "ball formula vs radial shooting", 10.0, ball_shooting},
        {5, "unit square sandwich", 60.0, square_sandwich},
        {6, "L-shape sandwich", 60.0, l_sandwich},
        {7, "Laplacian n = 3 scanned bound", 5.0, laplacian_three},
        {8, "RFK crossover", 5.0, rfk_crossover},
        {9, "convex dilation and U-shape", 30.0, convex_dilation},
        {10, "Bessel substrate", 10.0, bessel_substrate},
        {11, "certificate integrity", 30.0, certificate_integrity},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            detail = cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs < cr.budget_s, "runtime " + fmt(secs, 3) + " s over budget " + fmt(cr.budget_s) + " s");
        const bool ok = c.failures == 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << cr.id << "  " << cr.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0) << cr.budget_s
                  << " s)" << std::defaultfloat << "  " << (ok ? detail : c.notes.str()) << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
