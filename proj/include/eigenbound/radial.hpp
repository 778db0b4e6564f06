#pragma once

#include "eigenbound/specfun.hpp"

#include <string>
#include <variant>
#include <vector>

namespace eigenbound::radial {

// ---------------------------------------------------------------------------
// Operators

/// Δu, without the 1/p normalization of the homogeneous p-Laplacian.
struct Laplacian {
    int n = 2;

    bool operator==(const Laplacian&) const = default;
};

/// Δ_p^H u = (1/p)|∇u|^{2-p} div(|∇u|^{p-2}∇u) = ((p-2)/p) Δ∞^H u + (1/p) Δu.
struct HomogeneousPLaplacian {
    double p = 2.0;
    int n = 2;

    bool operator==(const HomogeneousPLaplacian&) const = default;
};

/// Δ∞^H u = <D²u ∇u/|∇u|, ∇u/|∇u|>. Dimension free.
struct HomogeneousInfinityLaplacian {
    bool operator==(const HomogeneousInfinityLaplacian&) const = default;
};

/// M⁺(D²u) = Γ Σ_{e_i>0} e_i + γ Σ_{e_i<0} e_i with 0 < γ <= Γ.
struct PucciMaxPlus {
    double gamma_min = 1.0; ///< γ, weight on negative Hessian eigenvalues
    double gamma_max = 1.0; ///< Γ, weight on positive Hessian eigenvalues
    int n = 2;

    bool operator==(const PucciMaxPlus&) const = default;
};

/// The limit problem min{-Δ∞u, |∇u| - λu} = 0 with the un-normalized
/// Δ∞u = <D²u ∇u, ∇u>. Dimension free.
struct GradientLimit {
    bool operator==(const GradientLimit&) const = default;
};

using OperatorSpec =
    std::variant<Laplacian, HomogeneousPLaplacian, HomogeneousInfinityLaplacian, PucciMaxPlus, GradientLimit>;

/// Throws ArgumentError when p <= 1, γ > Γ, γ <= 0 or n < 1.
void validate(const OperatorSpec& op);
std::string operator_name(const OperatorSpec& op);
/// Spatial dimension for dimension-dependent operators, 0 otherwise.
int operator_dimension(const OperatorSpec& op);
/// True for the operators whose radial eigen-equation reduces to the
/// Bessel-type normal form v'' + c v'/r + b v = 0.
bool is_ode_form(const OperatorSpec& op);

/// Normal form v'' + c v'/r + b v = 0 with b = lambda_scale * λ.
struct OdeCoefficients {
    double first_order = 0.0;  ///< c
    double lambda_scale = 1.0; ///< b / λ

    /// Exponent of the r^α prefactor of the general solution.
    double alpha() const { return (1.0 - first_order) / 2.0; }
    double eta(double lambda) const;
    /// Inverse of eta(): the λ at which the frequency equals `eta`.
    double lambda_for_eta(double eta) const { return eta * eta / lambda_scale; }
};

OdeCoefficients radial_ode_coefficients(const OperatorSpec& op);

// ---------------------------------------------------------------------------
// Profiles

enum class ProfileKind { Theorem1, Theorem2, Linear, Sine };

std::string to_string(ProfileKind kind);

/// Radial barrier φ on [r_lo, r_hi].
///
/// Bessel kinds: φ(r) = c1 (ηr)^α J_α(ηr) + c2 (ηr)^α Y_α(ηr). The prefactor
/// is taken in the dimensionless variable ηr so that rescaling the domain
/// rescales the profile exactly; it differs from r^α by the constant η^α.
/// Sine: φ(r) = sin(ηr). Linear: φ(r) = r.
struct RadialProfile {
    ProfileKind kind = ProfileKind::Sine;
    double alpha = 0.0;
    double eta = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double r_lo = 0.0;
    double r_hi = 1.0;

    bool operator==(const RadialProfile&) const = default;
};

struct ProfileValue {
    double phi = 0.0;
    double dphi = 0.0;
    double d2phi = 0.0;
};

/// φ, φ', φ'' at r in (0, r_hi] within the profile interval; RangeError otherwise.
ProfileValue evaluate(const RadialProfile& profile, double r);

/// Barrier with φ(0) = 0 increasing on (0, r_hi]. Sine profile for Δ∞^H,
/// linear profile for GradientLimit, (ηr)^α J_α(ηr) for normal-form
/// operators with α > 0 (RouteError otherwise).
RadialProfile build_theorem1_profile(const OperatorSpec& op, double lambda, double r_hi);

/// Barrier vanishing at r = delta and increasing on (delta, r_hi]: η·delta
/// must be a zero of Z_α and η·r_hi may not pass the next zero of Z_{α-1}.
RadialProfile build_theorem2_profile(const OperatorSpec& op, double lambda, double delta, double r_hi,
                                     specfun::Family family);

/// Radial value of Lφ + λφ at r. Non-positive values mean the supersolution
/// inequality holds at r. For GradientLimit the returned quantity is
/// -min{-Δ∞φ, |∇φ| - λφ}, which has the same sign convention.
double residual(const OperatorSpec& op, const RadialProfile& profile, double lambda, double r);

struct ResidualReport {
    double max_residual = 0.0;
    double worst_r = 0.0;
    double min_slope = 0.0;
    int samples = 0;
    double r_lo = 0.0;
    double r_hi = 0.0;
    bool verified = false;

    bool operator==(const ResidualReport&) const = default;
};

inline constexpr double default_tolerance = 1e-8;

/// Chebyshev-spaced interior points of (lo, hi), kept a relative 1e-9 away
/// from both endpoints.
std::vector<double> chebyshev_interior(double lo, double hi, int count);

ResidualReport verify_supersolution(const OperatorSpec& op, const RadialProfile& profile, double lambda,
                                    int samples = 1000, double tol = default_tolerance);

} // namespace eigenbound::radial
