#pragma once

// Helpers shared by the unit and acceptance tests: random convex polygons and
// a direct evaluation of R_δ for convex polygons from the explicit boundary of
// the δ-neighbourhood (offset edges joined by circular arcs).

#include "eigenbound/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace testing_support {

using eigenbound::geometry::Point2;

inline double cross(Point2 o, Point2 a, Point2 b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; counterclockwise, no collinear points.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts)
{
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline std::vector<Point2> random_convex_polygon(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> coord(-1.0, 1.0), scale(0.3, 3.0), stretch(0.2, 1.0);
    std::uniform_int_distribution<int> count(4, 16);
    for (;;) {
        const double sx = scale(rng), sy = sx * stretch(rng);
        std::vector<Point2> pts(count(rng));
        for (auto& p : pts) p = {sx * coord(rng), sy * coord(rng)};
        auto hull = convex_hull(pts);
        if (hull.size() >= 3 && std::abs(eigenbound::geometry::signed_area(hull)) > 0.05 * sx * sy) return hull;
    }
}

inline double segment_distance(Point2 p, Point2 a, Point2 b)
{
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

inline Point2 outward_normal(Point2 a, Point2 b)
{
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    return {(b.y - a.y) / len, -(b.x - a.x) / len};
}

// Distance from p to the boundary of {x : dist(x, P) < δ} for a convex ccw
// polygon P: offset edges plus, at every vertex, the arc of radius δ between
// the outward normals of the two incident edges.
inline double offset_boundary_distance(const std::vector<Point2>& poly, double delta, Point2 p)
{
    const std::size_t n = poly.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i], b = poly[(i + 1) % n];
        const Point2 nrm = outward_normal(a, b);
        const Point2 a2{a.x + delta * nrm.x, a.y + delta * nrm.y}, b2{b.x + delta * nrm.x, b.y + delta * nrm.y};
        best = std::min(best, segment_distance(p, a2, b2));

        const Point2 prev = poly[(i + n - 1) % n];
        const Point2 n0 = outward_normal(prev, a), n1 = nrm;
        const double th0 = std::atan2(n0.y, n0.x);
        double span = std::atan2(n1.y, n1.x) - th0;
        while (span < 0) span += 2 * M_PI;
        const double th = std::atan2(p.y - a.y, p.x - a.x);
        double rel = th - th0;
        while (rel < 0) rel += 2 * M_PI;
        if (rel <= span)
            best = std::min(best, std::abs(std::hypot(p.x - a.x, p.y - a.y) - delta));
        // arc endpoints coincide with offset-edge endpoints, already covered
    }
    return best;
}

// max_x offset_boundary_distance over the polygon: coarse grid, Nelder-Mead,
// then the equidistant points of every triple of offset edges.
inline double dilated_inradius_direct(const std::vector<Point2>& poly, double delta)
{
    auto f = [&](Point2 p) { return offset_boundary_distance(poly, delta, p); };
    double xmin = poly[0].x, xmax = xmin, ymin = poly[0].y, ymax = ymin;
    for (const auto& p : poly) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Point2 best{};
    double fbest = -1;
    constexpr int cells = 60;
    for (int i = 0; i <= cells; ++i)
        for (int j = 0; j <= cells; ++j) {
            const Point2 p{xmin + (xmax - xmin) * i / cells, ymin + (ymax - ymin) * j / cells};
            if (!eigenbound::geometry::polygon_contains(poly, p)) continue;
            if (const double v = f(p); v > fbest) {
                fbest = v;
                best = p;
            }
        }

    // Nelder-Mead on -f
    const double size = 0.05 * std::max(xmax - xmin, ymax - ymin);
    std::array<Point2, 3> s{best, Point2{best.x + size, best.y}, Point2{best.x, best.y + size}};
    std::array<double, 3> v{f(s[0]), f(s[1]), f(s[2])};
    for (int it = 0; it < 2000; ++it) {
        std::array<int, 3> o{0, 1, 2};
        std::sort(o.begin(), o.end(), [&](int a, int b) { return v[a] > v[b]; });
        const Point2 hi = s[o[0]], mid = s[o[1]], lo = s[o[2]];
        const Point2 c{(hi.x + mid.x) / 2, (hi.y + mid.y) / 2};
        const Point2 r{2 * c.x - lo.x, 2 * c.y - lo.y};
        const double fr = f(r);
        if (fr > v[o[0]]) {
            const Point2 e{3 * c.x - 2 * lo.x, 3 * c.y - 2 * lo.y};
            const double fe = f(e);
            s[o[2]] = fe > fr ? e : r;
            v[o[2]] = std::max(fe, fr);
        } else if (fr > v[o[1]]) {
            s[o[2]] = r;
            v[o[2]] = fr;
        } else {
            const Point2 k{(c.x + lo.x) / 2, (c.y + lo.y) / 2};
            const double fk = f(k);
            if (fk > v[o[2]]) {
                s[o[2]] = k;
                v[o[2]] = fk;
            } else {
                for (int q : {o[1], o[2]}) {
                    s[q] = {(s[q].x + hi.x) / 2, (s[q].y + hi.y) / 2};
                    v[q] = f(s[q]);
                }
            }
        }
    }
    fbest = std::max({fbest, v[0], v[1], v[2]});

    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                // n·x + t = n·a + δ for the three edges
                double m[3][4];
                const std::size_t idx[3] = {i, j, k};
                for (int r = 0; r < 3; ++r) {
                    const Point2 a = poly[idx[r]], b = poly[(idx[r] + 1) % n];
                    const Point2 nrm = outward_normal(a, b);
                    m[r][0] = nrm.x;
                    m[r][1] = nrm.y;
                    m[r][2] = 1.0;
                    m[r][3] = nrm.x * a.x + nrm.y * a.y + delta;
                }
                auto det3 = [](double a[3][4], int c0, int c1, int c2) {
                    return a[0][c0] * (a[1][c1] * a[2][c2] - a[1][c2] * a[2][c1]) -
                           a[0][c1] * (a[1][c0] * a[2][c2] - a[1][c2] * a[2][c0]) +
                           a[0][c2] * (a[1][c0] * a[2][c1] - a[1][c1] * a[2][c0]);
                };
                const double d = det3(m, 0, 1, 2);
                if (std::abs(d) < 1e-12) continue;
                const Point2 p{det3(m, 3, 1, 2) / d, det3(m, 0, 3, 2) / d};
                if (!eigenbound::geometry::polygon_contains(poly, p)) continue;
                fbest = std::max(fbest, f(p));
            }
    return fbest;
}

inline std::vector<Point2> l_shape_polygon(double leg, double w)
{
    return {{0, 0}, {leg, 0}, {leg, w}, {w, w}, {w, leg}, {0, leg}};
}

inline std::vector<Point2> u_shape_polygon(double s, double a, double d)
{
    return {{0, 0}, {s, 0}, {s, s}, {(s + a) / 2, s}, {(s + a) / 2, s - d}, {(s - a) / 2, s - d}, {(s - a) / 2, s},
            {0, s}};
}

} // namespace testing_support
