#pragma once

#include <string_view>
#include <utility>

namespace eigenbound::specfun {

/// Which cylinder function: J_ν or Y_ν.
enum class Family { J, Y };

std::string_view to_string(Family f);

/// Orders outside [-max_order, max_order] are rejected.
inline constexpr double max_order = 50.0;
/// Largest zero index served by bessel_zero.
inline constexpr int max_zero_index = 10000;

/// J_ν(x) for real ν and x > 0.
double bessel_j(double nu, double x);
/// Y_ν(x) for real ν and x > 0.
double bessel_y(double nu, double x);
/// Family dispatch.
double cylinder(Family family, double nu, double x);
/// d/dx Z_ν(x) = Z_{ν-1}(x) - (ν/x) Z_ν(x).
double cylinder_derivative(Family family, double nu, double x);

/// A positive zero with a sign-change bracket [lo, hi] around it.
struct Zero {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
};

/// k-th positive zero (k >= 1) of Z_ν, counting every sign change on (0, ∞).
/// The returned bracket is a sign change at most four ulps wide.
Zero bessel_zero(double nu, Family family, int k);

/// Smallest zero of Z_ν strictly greater than x (a zero equal to x up to
/// 1e-9 relative is skipped).
Zero next_zero_after(double nu, Family family, double x);

/// McMahon's large-zero expansion for the m-th zero of J_ν (phase 1/4) or
/// Y_ν (phase 3/4), through the β⁻⁵ term.
double mcmahon(double nu, Family family, int m);

} // namespace eigenbound::specfun
