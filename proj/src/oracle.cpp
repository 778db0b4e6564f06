#include "eigenbound/oracle.hpp"

#include "eigenbound/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace eigenbound::oracle {

using SparseMatrix = Eigen::SparseMatrix<double>;

GridEigenResult fd_laplacian_lambda1(const geometry::DomainSpec& domain, double h, const FdOptions& options)
{
    if (domain.dimension != 2) throw ArgumentError("finite-difference oracle supports 2D domains only");
    if (!(h > 0.0)) throw ArgumentError("grid spacing must be positive");
    const auto bb = geometry::bounding_box(domain);
    const int nx = static_cast<int>(std::lround((bb[2] - bb[0]) / h)) + 1;
    const int ny = static_cast<int>(std::lround((bb[3] - bb[1]) / h)) + 1;

    std::vector<int> index(static_cast<std::size_t>(nx) * ny, -1);
    std::vector<geometry::Point2> nodes;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const geometry::Point2 p{bb[0] + i * h, bb[1] + j * h};
            if (geometry::contains(domain, p)) {
                index[static_cast<std::size_t>(j) * nx + i] = static_cast<int>(nodes.size());
                nodes.push_back(p);
            }
        }
    }
    if (nodes.size() < 100)
        throw ArgumentError("grid too coarse: " + std::to_string(nodes.size()) + " interior nodes (need >= 100)");

    auto at = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
        return index[static_cast<std::size_t>(j) * nx + i];
    };
    const double inv_h2 = 1.0 / (h * h);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(5 * nodes.size());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (int k = at(i, j); k >= 0) {
                entries.emplace_back(k, k, 4.0 * inv_h2);
                for (int m : {at(i - 1, j), at(i + 1, j), at(i, j - 1), at(i, j + 1)})
                    if (m >= 0) entries.emplace_back(k, m, -inv_h2);
            }
    const auto n = static_cast<Eigen::Index>(nodes.size());
    SparseMatrix A(n, n);
    A.setFromTriplets(entries.begin(), entries.end());
    SparseMatrix identity(n, n);
    identity.setIdentity();

    // Shift-invert: A - σI stays positive definite exactly when σ < λ₁, which
    // the signs of the LDLᵀ pivots certify (Sylvester's law of inertia).
    Eigen::SimplicialLDLT<SparseMatrix> solver;
    auto factor = [&](double sigma) {
        solver.compute(SparseMatrix(A - sigma * identity));
        return solver.info() == Eigen::Success && (solver.vectorD().array() > 0.0).all();
    };
    if (!factor(0.0)) throw NumericError("grid Laplacian factorization failed");

    Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
    double lambda = x.dot(A * x);
    GridEigenResult res;
    res.h = h;
    res.interior_nodes = static_cast<int>(n);
    bool converged = false;
    bool shifted = false;
    for (int outer = 1; outer <= options.max_outer; ++outer) {
        Eigen::VectorXd y = solver.solve(x);
        y.normalize();
        const double next = y.dot(A * y);
        x = std::move(y);
        res.iterations = outer;
        const bool done = std::abs(next - lambda) <= options.tol * next;
        lambda = next;
        if (done) {
            converged = true;
            break;
        }
        if (!shifted && outer >= 3) {
            shifted = true;
            double sigma = 0.99 * lambda;
            while (!factor(sigma)) {
                sigma *= 0.97;
                if (sigma < 0.5 * lambda) {
                    sigma = 0.0;
                    if (!factor(0.0)) throw NumericError("grid Laplacian factorization failed");
                    break;
                }
            }
        }
    }
    res.lambda_h = lambda;
    // fix the overall sign, then test positivity
    if (x.sum() < 0.0) x = -x;
    res.positive = (x.array() > 0.0).all();
    if (options.keep_eigenvector) {
        const double top = x.maxCoeff();
        res.eigenvector.reserve(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            res.eigenvector.push_back({nodes[i].x, nodes[i].y, x[static_cast<Eigen::Index>(i)] / top});
    }
    if (!converged)
        throw NumericError("inverse iteration did not converge; last estimate " + std::to_string(lambda));
    return res;
}

namespace {

// Integrates v'' + c v'/r + b v = 0 from r = ε (series start) to R with RK4
// on a fixed mesh: geometric near the regular singular point, then uniform.
// Returns true when v changes sign on (ε, R].
bool has_zero_before(double c, double b, double R)
{
    const double eps = 1e-6 * R;
    const double a = -b / (2.0 * (1.0 + c));
    double r = eps;
    double v = 1.0 + a * eps * eps;
    double w = 2.0 * a * eps;

    auto rhs = [&](double rr, double vv, double ww) { return -c * ww / rr - b * vv; };
    auto step = [&](double hstep) {
        const double k1v = w, k1w = rhs(r, v, w);
        const double k2v = w + 0.5 * hstep * k1w, k2w = rhs(r + 0.5 * hstep, v + 0.5 * hstep * k1v, k2v);
        const double k3v = w + 0.5 * hstep * k2w, k3w = rhs(r + 0.5 * hstep, v + 0.5 * hstep * k2v, k3v);
        const double k4v = w + hstep * k3w, k4w = rhs(r + hstep, v + hstep * k3v, k4v);
        v += hstep / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        w += hstep / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
        r += hstep;
        return v <= 0.0;
    };

    const double switch_r = 0.01 * R;
    while (r < switch_r) {
        if (step(std::min(0.01 * r, switch_r - r))) return true;
    }
    constexpr int uniform_steps = 20000;
    const double hu = (R - r) / uniform_steps;
    for (int i = 0; i < uniform_steps; ++i)
        if (step(hu)) return true;
    return false;
}

} // namespace

double radial_shoot_ball_lambda1(const radial::OperatorSpec& op, double radius, double tol)
{
    if (!(radius > 0.0)) throw ArgumentError("ball radius must be positive");
    if (!std::holds_alternative<radial::Laplacian>(op) && !std::holds_alternative<radial::HomogeneousPLaplacian>(op))
        throw UnsupportedError("radial shooting covers the Laplacian and the homogeneous p-Laplacian");
    const auto ode = radial::radial_ode_coefficients(op);
    const double c = ode.first_order;

    const double mu = specfun::bessel_zero(-ode.alpha(), specfun::Family::J, 1).value;
    const double guess = ode.lambda_for_eta(mu / radius);
    auto hits = [&](double lambda) { return has_zero_before(c, ode.lambda_scale * lambda, radius); };

    double lo = 0.25 * guess, hi = 4.0 * guess;
    if (hits(lo) || !hits(hi)) {
        lo = 0.01 * guess;
        hi = 100.0 * guess;
        if (hits(lo) || !hits(hi)) throw NumericError("shooting: no sign change in the lambda bracket");
    }
    while (hi - lo > tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (hits(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bessel_zero_scan(double nu, specfun::Family family, double upto, double step)
{
    if (!(step > 0.0) || step > std::numbers::pi / 8.0) throw ArgumentError("scan step must lie in (0, pi/8]");
    std::vector<double> zeros;
    auto f = [&](double x) { return specfun::cylinder(family, nu, x); };
    double a = 1e-3;
    double fa = f(a);
    while (a < upto) {
        const double b = std::min(a + step, upto);
        const double fb = f(b);
        if (fb == 0.0) {
            zeros.push_back(b);
        } else if (fa != 0.0 && (fa < 0) != (fb < 0)) {
            double lo = a, hi = b, flo = fa;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

void write_field_csv(const GridEigenResult& result, std::ostream& out)
{
    out << "x,y,value\n";
    out.precision(17);
    for (const auto& s : result.eigenvector) out << s.x << ',' << s.y << ',' << s.value << '\n';
}

} // namespace eigenbound::oracle
