#include "eigenbound/errors.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/specfun.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

using namespace eigenbound;
using specfun::Family;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("specfun") {

TEST_CASE("values against 40-digit references")
{
    CHECK(specfun::bessel_j(0.0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
    CHECK(specfun::bessel_y(0.3, 1.0) == doctest::Approx(-0.24570419535649945).epsilon(1e-13));
    CHECK(specfun::bessel_j(-0.49, 0.7) == doctest::Approx(0.7402861626842398).epsilon(1e-13));
    // half-integer orders are elementary
    for (double x : {0.3, 1.0, 7.5, 40.0}) {
        CHECK(specfun::bessel_j(0.5, x) == doctest::Approx(std::sqrt(2 / (pi * x)) * std::sin(x)).epsilon(1e-13));
        CHECK(specfun::bessel_j(-0.5, x) == doctest::Approx(std::sqrt(2 / (pi * x)) * std::cos(x)).epsilon(1e-13));
        CHECK(specfun::bessel_y(0.5, x) == doctest::Approx(-std::sqrt(2 / (pi * x)) * std::cos(x)).epsilon(1e-13));
    }
}

TEST_CASE("wronskian")
{
    for (double nu : {-0.49, -0.25, 0.0, 0.25, 1.0 / 3.0, 2.5})
        for (double x : {0.05, 0.7, 3.0, 25.0, 180.0}) {
            const double w = specfun::bessel_j(nu + 1, x) * specfun::bessel_y(nu, x) -
                             specfun::bessel_j(nu, x) * specfun::bessel_y(nu + 1, x);
            CHECK(w == doctest::Approx(2 / (pi * x)).epsilon(1e-11));
        }
}

TEST_CASE("derivative matches centered differences")
{
    for (auto f : {Family::J, Family::Y})
        for (double nu : {-0.49, 0.0, 0.8})
            for (double x : {0.6, 2.0, 11.0}) {
                const double h = 1e-5;
                const double fd = (specfun::cylinder(f, nu, x + h) - specfun::cylinder(f, nu, x - h)) / (2 * h);
                CHECK(specfun::cylinder_derivative(f, nu, x) == doctest::Approx(fd).epsilon(1e-8));
            }
}

TEST_CASE("argument errors")
{
    CHECK_THROWS_AS(specfun::bessel_j(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(specfun::bessel_y(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(specfun::bessel_j(51.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(specfun::bessel_zero(0.0, Family::J, 0), ArgumentError);
    CHECK_THROWS_AS(specfun::bessel_zero(0.0, Family::J, specfun::max_zero_index + 1), ArgumentError);
}

TEST_CASE("known zeros")
{
    CHECK(specfun::bessel_zero(0.0, Family::J, 1).value == doctest::Approx(2.4048255576957728).epsilon(1e-14));
    CHECK(specfun::bessel_zero(1.0, Family::J, 1).value == doctest::Approx(3.8317059702075123).epsilon(1e-14));
    CHECK(std::abs(specfun::bessel_zero(0.5, Family::J, 1).value - pi) <= 1e-12);
    CHECK(std::abs(specfun::bessel_zero(-0.5, Family::J, 1).value - pi / 2) <= 1e-12);
    for (int k = 1; k <= 30; ++k) {
        CHECK(std::abs(specfun::bessel_zero(0.5, Family::J, k).value - k * pi) <= 1e-12 * std::max(1.0, k * pi));
        CHECK(std::abs(specfun::bessel_zero(-0.5, Family::J, k).value - (k - 0.5) * pi) <= 1e-12 * k * pi);
    }
    // Y_{-0.49} has a tiny first zero that a scan starting at 0.1 would miss
    CHECK(specfun::bessel_zero(-0.49, Family::Y, 1).value == doctest::Approx(0.02941655583126437).epsilon(1e-11));
}

TEST_CASE("brackets are tight sign changes")
{
    for (auto f : {Family::J, Family::Y})
        for (double nu : {-0.49, 0.0, 0.3})
            for (int k : {1, 2, 10, 64, 500}) {
                const auto z = specfun::bessel_zero(nu, f, k);
                CHECK(z.lo <= z.value);
                CHECK(z.value <= z.hi);
                CHECK(z.width() <= std::max(1e-12, 4 * (std::nextafter(z.value, INFINITY) - z.value)));
                const double a = specfun::cylinder(f, nu, z.lo), b = specfun::cylinder(f, nu, z.hi);
                CHECK(((a <= 0) != (b <= 0) || a == 0 || b == 0));
            }
}

TEST_CASE("agrees with the sign-scan oracle")
{
    for (auto f : {Family::J, Family::Y})
        for (double nu : {-0.49, -0.25, 0.0, 0.25, 0.49}) {
            const auto scan = oracle::bessel_zero_scan(nu, f, 70.0, pi / 16);
            REQUIRE(scan.size() >= 20);
            for (int k = 1; k <= 20; ++k)
                CHECK(std::abs(specfun::bessel_zero(nu, f, k).value - scan[k - 1]) <= 1e-10);
        }
}

TEST_CASE("interlacing over 50 zeros")
{
    for (double nu : {-0.49, 0.0, 0.25, 0.49}) {
        const auto lower = oracle::bessel_zero_scan(nu - 1, Family::J, specfun::bessel_zero(nu, Family::J, 51).value,
                                                    pi / 16);
        for (int k = 1; k <= 50; ++k) {
            const double a = specfun::bessel_zero(nu, Family::J, k).value;
            const double b = specfun::bessel_zero(nu, Family::J, k + 1).value;
            int inside = 0;
            for (double z : lower) inside += (z > a && z < b);
            CHECK_MESSAGE(inside == 1, "nu = " << nu << ", k = " << k);
            const double next = specfun::next_zero_after(nu - 1, Family::J, a).value;
            CHECK(next > a);
            CHECK(next < b);
        }
    }
}

TEST_CASE("large zeros approach McMahon")
{
    for (auto f : {Family::J, Family::Y})
        for (double nu : {-0.3, 0.0, 0.4}) {
            const double z = specfun::bessel_zero(nu, f, 200).value;
            // the zero count may be offset from McMahon's index by a small leading zero
            double best = INFINITY;
            for (int m : {199, 200, 201}) best = std::min(best, std::abs(z - specfun::mcmahon(nu, f, m)));
            CHECK(best < 1e-6);
            CHECK(specfun::bessel_zero(nu, f, 10000).value > specfun::bessel_zero(nu, f, 9999).value);
        }
}

TEST_CASE("concurrent lookups return identical values")
{
    std::vector<double> serial;
    for (int k = 1; k <= 40; ++k) serial.push_back(specfun::bessel_zero(0.137, Family::Y, k).value);
    std::vector<std::vector<double>> seen(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            for (int k = 40; k >= 1; --k) seen[t].push_back(specfun::bessel_zero(0.137 + 1e-3 * (t + 1), Family::J, k).value);
            for (int k = 1; k <= 40; ++k) seen[t].push_back(specfun::bessel_zero(0.137, Family::Y, k).value);
        });
    for (auto& w : workers) w.join();
    for (const auto& s : seen)
        for (int k = 0; k < 40; ++k) CHECK(s[40 + k] == serial[k]);
}

}
