#pragma once

#include "eigenbound/geometry.hpp"
#include "eigenbound/radial.hpp"
#include "eigenbound/specfun.hpp"

#include <iosfwd>
#include <vector>

namespace eigenbound::oracle {

struct FieldSample {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
};

struct GridEigenResult {
    double lambda_h = 0.0;
    double h = 0.0;
    int iterations = 0;
    int interior_nodes = 0;
    /// Every entry of the final iterate is strictly positive.
    bool positive = false;
    /// Interior nodes with the normalized eigenvector (max value 1).
    std::vector<FieldSample> eigenvector;
};

struct FdOptions {
    double tol = 1e-12; ///< relative change of the Rayleigh quotient
    int max_outer = 200;
    bool keep_eigenvector = false;
};

/// Smallest eigenvalue of the 5-point Dirichlet Laplacian on the nodes
/// {xmin + i h, ymin + j h} lying strictly inside a 2D domain, by shifted
/// inverse iteration on a sparse LDLᵀ factorization.
GridEigenResult fd_laplacian_lambda1(const geometry::DomainSpec& domain, double h, const FdOptions& options = {});

/// Principal ball eigenvalue of a Laplacian or homogeneous p-Laplacian by
/// shooting the radial equation from the origin and bisecting on λ until the
/// first zero sits at r = R.
double radial_shoot_ball_lambda1(const radial::OperatorSpec& op, double radius, double tol = 1e-11);

/// Zeros of Z_ν in (0, upto] by sign scanning with `step` and bisection to
/// 1e-10. Independent of specfun's zero finder.
std::vector<double> bessel_zero_scan(double nu, specfun::Family family, double upto, double step);

/// CSV with header "x,y,value".
void write_field_csv(const GridEigenResult& result, std::ostream& out);

} // namespace eigenbound::oracle
