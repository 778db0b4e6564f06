#include "eigenbound/specfun.hpp"

#include "eigenbound/errors.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace eigenbound::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStep = kPi / 8.0;
// Brackets are shrunk to a few ulps of the zero, well inside 1e-12.
double target_width(double x)
{
    return 4.0 * (std::nextafter(x, INFINITY) - x);
}

void check_args(double nu, double x)
{
    if (!std::isfinite(nu) || std::abs(nu) > max_order)
        throw ArgumentError("Bessel order " + std::to_string(nu) + " outside supported range");
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("Bessel functions are evaluated for x > 0 only, got " + std::to_string(x));
}

double phase(Family f)
{
    return f == Family::J ? 0.25 : 0.75;
}

// Shrinks a sign-change bracket around a zero of Z_ν to target_width():
// bisection to a coarse width, then Newton steps that fall back to bisection
// whenever they leave the bracket.
Zero refine(double nu, Family family, double lo, double hi)
{
    auto f = [&](double x) { return cylinder(family, nu, x); };
    double flo = f(lo);
    auto shrink = [&](double mid) {
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = std::nextafter(mid, 0.0);
            hi = std::nextafter(mid, INFINITY);
            flo = f(lo);
            return;
        }
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    };

    while (hi - lo > 1e-6 * hi) shrink(0.5 * (lo + hi));

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 60 && hi - lo > target_width(lo); ++it) {
        const double fx = f(x);
        const double dfx = cylinder_derivative(family, nu, x);
        double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        shrink(next);
        // probe a tight bracket around the Newton iterate
        const double w = 0.25 * target_width(next);
        if (next - w > lo && next + w < hi) {
            const double fa = f(next - w), fb = f(next + w);
            if ((fa < 0) != (fb < 0)) {
                lo = next - w;
                hi = next + w;
                flo = fa;
            }
        }
        x = next;
    }
    while (hi - lo > target_width(lo)) shrink(0.5 * (lo + hi));
    return {0.5 * (lo + hi), lo, hi};
}

// First sign change of Z_ν on (from, ∞) scanning with the coarse step.
Zero scan_next(double nu, Family family, double from)
{
    double a = from;
    double fa = cylinder(family, nu, a);
    for (int i = 0; i < 1000000; ++i) {
        const double b = a + kScanStep;
        const double fb = cylinder(family, nu, b);
        if (fa == 0.0) return {a, a, a};
        if ((fa < 0) != (fb < 0)) return refine(nu, family, a, b);
        a = b;
        fa = fb;
    }
    throw NumericError("Bessel zero scan did not find a sign change");
}

bool has_sign_change(double nu, Family family, double lo, double hi)
{
    double prev = cylinder(family, nu, lo);
    const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / kScanStep)));
    for (int i = 1; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double v = cylinder(family, nu, x);
        if ((v < 0) != (prev < 0)) return true;
        prev = v;
    }
    return false;
}

class ZeroTable {
public:
    ZeroTable(double nu, Family family) : nu_(nu), family_(family) {}

    const Zero& at(int k)
    {
        while (static_cast<int>(zeros_.size()) < k) extend();
        return zeros_[k - 1];
    }

private:
    void extend()
    {
        if (zeros_.empty()) {
            // McMahon is unreliable for the first zero at small order; scan.
            const double start = std::max(1e-3, nu_);
            zeros_.push_back(scan_next(nu_, family_, start));
            mcmahon_index_ = static_cast<int>(std::lround(zeros_[0].value / kPi - nu_ / 2.0 + phase(family_)));
            return;
        }
        const Zero& prev = zeros_.back();
        const int m = mcmahon_index_ + static_cast<int>(zeros_.size());
        const double guess = m >= 1 ? mcmahon(nu_, family_, m) : 0.0;
        const double gap_floor = prev.hi * (1.0 + 1e-9);
        double lo = std::max(gap_floor, guess - kPi / 4.0);
        double hi = guess + kPi / 4.0;
        if (hi > lo) {
            const double flo = cylinder(family_, nu_, lo);
            const double fhi = cylinder(family_, nu_, hi);
            if ((flo < 0) != (fhi < 0)) {
                Zero z = refine(nu_, family_, lo, hi);
                // nothing skipped between the previous zero and this one
                if (!has_sign_change(nu_, family_, gap_floor, z.lo)) {
                    zeros_.push_back(z);
                    return;
                }
            }
        }
        zeros_.push_back(scan_next(nu_, family_, gap_floor));
    }

    double nu_;
    Family family_;
    int mcmahon_index_ = 1;
    std::vector<Zero> zeros_;
};

std::mutex cache_mutex;
std::map<std::pair<double, int>, ZeroTable>& cache()
{
    static std::map<std::pair<double, int>, ZeroTable> tables;
    return tables;
}

} // namespace

std::string_view to_string(Family f)
{
    return f == Family::J ? "J" : "Y";
}

double bessel_j(double nu, double x)
{
    check_args(nu, x);
    try {
        return boost::math::cyl_bessel_j(nu, x);
    } catch (const std::exception& e) {
        throw NumericError(std::string("J evaluation failed: ") + e.what());
    }
}

double bessel_y(double nu, double x)
{
    check_args(nu, x);
    try {
        return boost::math::cyl_neumann(nu, x);
    } catch (const std::exception& e) {
        throw NumericError(std::string("Y evaluation failed: ") + e.what());
    }
}

double cylinder(Family family, double nu, double x)
{
    return family == Family::J ? bessel_j(nu, x) : bessel_y(nu, x);
}

double cylinder_derivative(Family family, double nu, double x)
{
    return cylinder(family, nu - 1.0, x) - nu / x * cylinder(family, nu, x);
}

double mcmahon(double nu, Family family, int m)
{
    const double beta = (m + nu / 2.0 - phase(family)) * kPi;
    const double mu = 4.0 * nu * nu;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e) -
           32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * std::pow(e, 5));
}

Zero bessel_zero(double nu, Family family, int k)
{
    if (k < 1 || k > max_zero_index)
        throw ArgumentError("zero index " + std::to_string(k) + " outside [1, " + std::to_string(max_zero_index) + "]");
    if (!std::isfinite(nu) || std::abs(nu) > max_order)
        throw ArgumentError("Bessel order " + std::to_string(nu) + " outside supported range");
    std::lock_guard lock(cache_mutex);
    auto key = std::pair{nu, static_cast<int>(family)};
    auto it = cache().try_emplace(key, nu, family).first;
    return it->second.at(k);
}

Zero next_zero_after(double nu, Family family, double x)
{
    const double threshold = x + 1e-9 * std::max(1.0, std::abs(x));
    for (int k = 1; k <= max_zero_index; ++k) {
        const Zero z = bessel_zero(nu, family, k);
        if (z.value > threshold) return z;
    }
    // beyond the table: continue scanning from the last tabulated zero
    Zero last = bessel_zero(nu, family, max_zero_index);
    while (last.value <= threshold) last = scan_next(nu, family, last.hi * (1.0 + 1e-9));
    return last;
}

} // namespace eigenbound::specfun
