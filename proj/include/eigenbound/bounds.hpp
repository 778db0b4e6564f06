#pragma once

#include "eigenbound/geometry.hpp"
#include "eigenbound/radial.hpp"
#include "eigenbound/specfun.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eigenbound::bounds {

enum class LowerMethod { Theorem1, Theorem2J, Theorem2Y, Exact };
enum class UpperMethod { BallEigenvalue, Exact };

std::string to_string(LowerMethod m);
std::string to_string(UpperMethod m);

/// Pair of consecutive critical values used by the delta route: x is the k-th
/// zero of Z_α, y the first zero of Z_{α-1} after x.
struct ZeroGap {
    double x = 0.0;
    double y = 0.0;
    int k = 0;
    specfun::Family family = specfun::Family::J;

    bool operator==(const ZeroGap&) const = default;
};

/// Barrier that certifies a lower bound, with its pointwise verification.
struct Certificate {
    radial::RadialProfile profile;
    double lambda = 0.0;
    radial::ResidualReport check;

    bool operator==(const Certificate&) const = default;
};

struct BoundOptions {
    int k_max = 64;
    double tol = radial::default_tolerance;
    int samples = 1000;
    geometry::GridOptions grid;
};

struct LowerBound {
    double value = 0.0;
    LowerMethod method = LowerMethod::Exact;
    double inradius = 0.0;
    std::optional<ZeroGap> gap;
    std::optional<double> delta;
    std::optional<double> dilated_inradius;
    /// Informational limit of the scanned gaps, set only when they were
    /// strictly increasing over the scan. Not part of the certified bound.
    std::optional<double> gap_limit;
    Certificate certificate;
};

struct UpperBound {
    double value = 0.0;
    UpperMethod method = UpperMethod::Exact;
};

struct BoundReport {
    radial::OperatorSpec op;
    double inradius = 0.0;
    double inradius_resolution = 0.0;
    bool convex = false;
    double lower = 0.0;
    LowerMethod lower_method = LowerMethod::Exact;
    std::optional<double> upper;
    std::optional<UpperMethod> upper_method;
    std::optional<ZeroGap> zero_gap;
    std::optional<double> delta_used;
    std::optional<double> dilated_inradius_used;
    std::optional<double> rfk;
    std::optional<double> gap_limit;
    Certificate certificate;

    bool operator==(const BoundReport&) const = default;
};

/// Certified lower bound for λ₁(Ω). Lower bounds on domains whose inradius is
/// a grid estimate use R + resolution.
LowerBound lower_bound(const radial::OperatorSpec& op, const geometry::DomainSpec& domain,
                       const BoundOptions& options = {});

/// λ₁(B_R) upper bound, or nullopt when no ball formula is available (Pucci).
/// Uses R - resolution for grid estimates.
std::optional<UpperBound> upper_bound(const radial::OperatorSpec& op, const geometry::DomainSpec& domain,
                                      const BoundOptions& options = {});

/// |Ω|^{-2/n} C_n^{2/n} (j_{n/2-1,1})², for n in {2, 3}.
double rfk_bound(const geometry::DomainSpec& domain);

/// Lower + upper + RFK (Laplacian) with the certificate checked. Throws
/// ConsistencyError when the certificate fails or lower > upper.
BoundReport full_report(const radial::OperatorSpec& op, const geometry::DomainSpec& domain,
                        const BoundOptions& options = {});

struct PScanRow {
    double p = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct PScan {
    int n = 2;
    double inradius = 1.0;
    double limit = 0.0; ///< (π/2R)²
    std::vector<PScanRow> rows;
    std::vector<double> skipped; ///< entries with p <= n
};

/// Lower and upper bound for the homogeneous p-Laplacian along p_list.
PScan p_limit_scan(int n, double inradius, std::span<const double> p_list);

} // namespace eigenbound::bounds
