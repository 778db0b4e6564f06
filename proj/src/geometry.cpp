#include "eigenbound/geometry.hpp"

#include "distance_transform.hpp"
#include "eigenbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>

namespace eigenbound::geometry {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw GeometryError(std::string(what) + " must be a finite positive length");
}

double cross(Point2 o, Point2 a, Point2 b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double segment_distance(Point2 p, Point2 a, Point2 b)
{
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

int orientation(Point2 a, Point2 b, Point2 c)
{
    const double v = cross(a, b, c);
    const double scale = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                   std::abs(c.y - a.y), 1e-300});
    if (std::abs(v) <= 1e-14 * scale * scale) return 0;
    return v > 0 ? 1 : -1;
}

bool on_segment(Point2 a, Point2 b, Point2 p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d)
{
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

std::vector<Point2> l_shape_vertices(const LShape& l)
{
    return {{0, 0}, {l.leg, 0}, {l.leg, l.width}, {l.width, l.width}, {l.width, l.leg}, {0, l.leg}};
}

std::vector<Point2> u_shape_vertices(const UShape& u)
{
    const double leg = (u.outer - u.slot_width) / 2.0;
    const double floor = u.outer - u.slot_depth;
    const double s = u.outer;
    return {{0, 0},
            {s, 0},
            {s, s},
            {leg + u.slot_width, s},
            {leg + u.slot_width, floor},
            {leg, floor},
            {leg, s},
            {0, s}};
}

// Largest ball tangent to two perpendicular walls meeting at the origin and
// passing through the point (a, b) of the first quadrant.
double corner_tangent_radius(double a, double b)
{
    return a + b - std::sqrt(2.0 * a * b);
}

// Inradius of the union of a leg (width `leg`) and a bar (thickness `bar`)
// meeting at a right angle, bounded by outer walls `span` apart. Covers the
// L-shape (leg = bar = w, span = l) and one corner of the U-shape.
double corner_inradius(double leg, double bar, double span)
{
    double best = std::max(leg, bar) / 2.0;
    const double rho = corner_tangent_radius(leg, bar);
    if (rho <= std::min(leg, bar) * (1.0 + 1e-15)) best = std::max(best, std::min(rho, span / 2.0));
    return best;
}

double l_shape_inradius(double leg, double width)
{
    return corner_inradius(width, width, leg);
}

double u_shape_inradius(double outer, double slot_width, double slot_depth)
{
    const double leg = (outer - slot_width) / 2.0;
    const double bar = outer - slot_depth;
    return corner_inradius(leg, bar, outer);
}

double l_shape_dilated_inradius(const LShape& l, double delta)
{
    if (l.leg - l.width >= delta) return l_shape_inradius(l.leg + 2 * delta, l.width + 2 * delta);

    // The notch is gone below a cusp where the arcs around (leg, width) and
    // (width, leg) cross on the diagonal.
    const double m = (l.leg + l.width) / 2.0, h = (l.leg - l.width) / 2.0;
    const double a = m + std::sqrt(delta * delta / 2.0 - h * h) + delta;
    return std::max(std::min(corner_tangent_radius(a, a), l.leg / 2.0 + delta), l.width / 2.0 + delta);
}

// Closed form while the dilated floor stays below the notch (or the slot
// bottom); nullopt otherwise.
std::optional<double> u_shape_dilated_inradius(const UShape& u, double delta)
{
    const double s = u.outer;
    const double floor = s - u.slot_depth;
    const double half = u.slot_width / 2.0;
    if (u.slot_width >= 2.0 * delta) {
        if (u.slot_depth < delta) return std::nullopt;
        return u_shape_inradius(s + 2.0 * delta, u.slot_width - 2.0 * delta, u.slot_depth);
    }

    // Slot filled: what remains of it is a notch at the top whose lowest
    // point lies where the two dilated leg-top corners meet.
    const double notch_y = s + std::sqrt(delta * delta - half * half);
    if (floor + delta > notch_y) return std::nullopt;
    const double a = s / 2.0 + delta;
    const double b = notch_y + delta;
    const double rho = corner_tangent_radius(a, b);
    if (rho <= a && rho <= b) return rho;
    return std::min(s / 2.0 + delta, (notch_y + delta) / 2.0);
}

// Minimal Nelder-Mead for maximizing a function of two variables.
Point2 nelder_mead_max(const std::function<double(Point2)>& f, Point2 start, double size, int iters)
{
    std::array<Point2, 3> s{start, {start.x + size, start.y}, {start.x, start.y + size}};
    std::array<double, 3> v{f(s[0]), f(s[1]), f(s[2])};
    for (int it = 0; it < iters; ++it) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
        const int best = idx[0], mid = idx[1], worst = idx[2];
        const Point2 c{(s[best].x + s[mid].x) / 2, (s[best].y + s[mid].y) / 2};
        auto along = [&](double t) { return Point2{c.x + t * (s[worst].x - c.x), c.y + t * (s[worst].y - c.y)}; };

        const Point2 r = along(-1.0);
        const double fr = f(r);
        if (fr > v[best]) {
            const Point2 e = along(-2.0);
            const double fe = f(e);
            if (fe > fr) { s[worst] = e; v[worst] = fe; }
            else { s[worst] = r; v[worst] = fr; }
        } else if (fr > v[mid]) {
            s[worst] = r;
            v[worst] = fr;
        } else {
            const Point2 k = along(0.5);
            const double fk = f(k);
            if (fk > v[worst]) {
                s[worst] = k;
                v[worst] = fk;
            } else {
                for (int i : {mid, worst}) {
                    s[i] = {(s[i].x + s[best].x) / 2, (s[i].y + s[best].y) / 2};
                    v[i] = f(s[i]);
                }
            }
        }
        const double spread = std::max(std::abs(s[0].x - s[1].x) + std::abs(s[0].y - s[1].y),
                                       std::abs(s[0].x - s[2].x) + std::abs(s[0].y - s[2].y));
        if (spread < 1e-15 * (1.0 + std::abs(start.x) + std::abs(start.y))) break;
    }
    return s[std::max_element(v.begin(), v.end()) - v.begin()];
}

struct Raster {
    double x0 = 0, y0 = 0, h = 0;
    int nx = 0, ny = 0;

    Point2 node(int ix, int iy) const { return {x0 + ix * h, y0 + iy * h}; }
};

Raster make_raster(std::array<double, 4> bb, double margin, const GridOptions& grid)
{
    const double extent = std::max(bb[2] - bb[0], bb[3] - bb[1]);
    const double h = grid.spacing > 0.0 ? grid.spacing : extent / grid.default_cells;
    Raster r;
    r.h = h;
    r.x0 = bb[0] - margin - 2 * h;
    r.y0 = bb[1] - margin - 2 * h;
    r.nx = static_cast<int>(std::ceil((bb[2] - bb[0] + 2 * margin) / h)) + 5;
    r.ny = static_cast<int>(std::ceil((bb[3] - bb[1] + 2 * margin) / h)) + 5;
    return r;
}

LengthEstimate polygon_inradius_grid(std::span<const Point2> poly, const GridOptions& grid)
{
    double xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
    for (auto p : poly) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    const Raster r = make_raster({xmin, ymin, xmax, ymax}, 0.0, grid);
    std::vector<std::uint8_t> sites(static_cast<std::size_t>(r.nx) * r.ny);
    for (int iy = 0; iy < r.ny; ++iy)
        for (int ix = 0; ix < r.nx; ++ix)
            sites[static_cast<std::size_t>(iy) * r.nx + ix] = !polygon_contains(poly, r.node(ix, iy));
    const auto d2 = detail::squared_edt(sites, r.nx, r.ny);

    std::vector<std::size_t> order(d2.size());
    std::iota(order.begin(), order.end(), 0);
    const double top = *std::max_element(d2.begin(), d2.end());
    if (!(top > 0.0)) throw GeometryError("polygon has no interior grid nodes at this resolution");
    const double cutoff = std::pow(std::max(0.0, std::sqrt(top) - 2.0), 2);
    std::erase_if(order, [&](std::size_t i) { return d2[i] < cutoff; });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return d2[a] != d2[b] ? d2[a] > d2[b] : a < b;
    });
    if (order.size() > 24) order.resize(24);

    auto f = [&](Point2 p) {
        return polygon_contains(poly, p) ? distance_to_boundary(poly, p) : -distance_to_boundary(poly, p);
    };
    double best = 0.0;
    for (auto i : order) {
        const Point2 start = r.node(static_cast<int>(i % r.nx), static_cast<int>(i / r.nx));
        best = std::max(best, f(start));
        best = std::max(best, f(nelder_mead_max(f, start, r.h, 400)));
    }
    return {best, r.h};
}

LengthEstimate polygon_dilated_inradius_grid(std::span<const Point2> poly, double delta,
                                             const GridOptions& grid)
{
    double xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
    for (auto p : poly) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    GridOptions g = grid;
    if (g.spacing <= 0.0) g.spacing = (std::max(xmax - xmin, ymax - ymin) + 2 * delta) / g.default_cells;
    const Raster r = make_raster({xmin, ymin, xmax, ymax}, delta, g);
    std::vector<std::uint8_t> sites(static_cast<std::size_t>(r.nx) * r.ny);
    for (int iy = 0; iy < r.ny; ++iy) {
        for (int ix = 0; ix < r.nx; ++ix) {
            const Point2 p = r.node(ix, iy);
            const double d = polygon_contains(poly, p) ? 0.0 : distance_to_boundary(poly, p);
            sites[static_cast<std::size_t>(iy) * r.nx + ix] = d >= delta;
        }
    }
    const auto d2 = detail::squared_edt(sites, r.nx, r.ny);
    const double top = *std::max_element(d2.begin(), d2.end());
    // complement sampled on nodes only: error up to half a cell diagonal either way
    return {std::sqrt(top) * r.h, std::numbers::sqrt2 * r.h};
}

std::vector<Point2> as_polygon(const DomainSpec& domain)
{
    return std::visit(overloaded{[](const Polygon& p) { return p.vertices; },
                                 [](const LShape& l) { return l_shape_vertices(l); },
                                 [](const UShape& u) { return u_shape_vertices(u); },
                                 [](const auto&) -> std::vector<Point2> {
                                     throw UnsupportedError("shape has no polygon representation");
                                 }},
                      domain.shape);
}

} // namespace

// ---------------------------------------------------------------------------
// construction and validation

DomainSpec DomainSpec::ball(double radius, int dimension)
{
    DomainSpec d{dimension, Ball{radius}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::box(std::vector<double> sides)
{
    DomainSpec d{static_cast<int>(sides.size()), Box{std::move(sides)}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::stadium(double segment_length, double radius)
{
    DomainSpec d{2, Stadium{segment_length, radius}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::polygon(std::vector<Point2> vertices)
{
    DomainSpec d{2, Polygon{std::move(vertices)}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::l_shape(double leg, double width)
{
    DomainSpec d{2, LShape{leg, width}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::u_shape(double outer, double slot_width, double slot_depth)
{
    DomainSpec d{2, UShape{outer, slot_width, slot_depth}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::cylinder(double radius, double height)
{
    DomainSpec d{3, Cylinder{radius, height}};
    validate(d);
    return d;
}

DomainSpec DomainSpec::inradius_only(double radius, bool convex, int dimension)
{
    DomainSpec d{dimension, InradiusOnly{radius, convex}};
    validate(d);
    return d;
}

void validate(const DomainSpec& domain)
{
    if (domain.dimension < 1) throw GeometryError("dimension must be at least 1");
    auto need_dim = [&](int n) {
        if (domain.dimension != n)
            throw GeometryError(shape_name(domain) + " requires dimension " + std::to_string(n));
    };
    std::visit(overloaded{
                   [&](const Ball& b) { require_positive(b.radius, "ball radius"); },
                   [&](const Box& b) {
                       if (b.sides.empty()) throw GeometryError("box needs at least one side");
                       need_dim(static_cast<int>(b.sides.size()));
                       for (double s : b.sides) require_positive(s, "box side");
                   },
                   [&](const Stadium& s) {
                       need_dim(2);
                       require_positive(s.segment_length, "stadium segment length");
                       require_positive(s.radius, "stadium radius");
                   },
                   [&](const Polygon& p) {
                       need_dim(2);
                       if (p.vertices.size() < 3) throw GeometryError("polygon needs at least 3 vertices");
                       for (auto v : p.vertices)
                           if (!std::isfinite(v.x) || !std::isfinite(v.y))
                               throw GeometryError("polygon vertex is not finite");
                       if (!is_simple(p.vertices)) throw GeometryError("polygon is not simple");
                       if (!(signed_area(p.vertices) > 0.0))
                           throw GeometryError("polygon vertices must be counterclockwise");
                   },
                   [&](const LShape& l) {
                       need_dim(2);
                       require_positive(l.leg, "L-shape leg");
                       require_positive(l.width, "L-shape width");
                       if (l.leg < l.width) throw GeometryError("L-shape requires leg >= width");
                   },
                   [&](const UShape& u) {
                       need_dim(2);
                       require_positive(u.outer, "U-shape outer side");
                       require_positive(u.slot_width, "U-shape slot width");
                       require_positive(u.slot_depth, "U-shape slot depth");
                       if (u.slot_width >= u.outer || u.slot_depth >= u.outer)
                           throw GeometryError("U-shape slot must be smaller than the outer side");
                   },
                   [&](const Cylinder& c) {
                       need_dim(3);
                       require_positive(c.radius, "cylinder radius");
                       require_positive(c.height, "cylinder height");
                   },
                   [&](const InradiusOnly& r) { require_positive(r.radius, "inradius"); },
               },
               domain.shape);
}

std::string shape_name(const DomainSpec& domain)
{
    return std::visit(overloaded{[](const Ball&) { return "ball"; }, [](const Box&) { return "box"; },
                                 [](const Stadium&) { return "stadium"; },
                                 [](const Polygon&) { return "polygon"; },
                                 [](const LShape&) { return "l_shape"; },
                                 [](const UShape&) { return "u_shape"; },
                                 [](const Cylinder&) { return "cylinder"; },
                                 [](const InradiusOnly&) { return "inradius_only"; }},
                      domain.shape);
}

// ---------------------------------------------------------------------------
// polygon helpers

double signed_area(std::span<const Point2> v)
{
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return a / 2.0;
}

bool is_simple(std::span<const Point2> v)
{
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            const Point2 a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
            if (adjacent) {
                // adjacent edges may only share their common vertex
                const Point2 shared = (j == i + 1) ? b : a;
                const Point2 far_a = (j == i + 1) ? a : b;
                const Point2 far_c = (j == i + 1) ? d : c;
                if (orientation(far_a, shared, far_c) == 0 &&
                    (far_c.x - shared.x) * (far_a.x - shared.x) + (far_c.y - shared.y) * (far_a.y - shared.y) > 0)
                    return false;
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

double distance_to_boundary(std::span<const Point2> v, Point2 p)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return best;
}

bool polygon_contains(std::span<const Point2> v, Point2 p)
{
    bool inside = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y)) {
            const double x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside && distance_to_boundary(v, p) > 0.0;
}

std::pair<Point2, double> chebyshev_center(std::span<const Point2> v)
{
    // Constraints  n_i . c + t <= b_i  with n_i the outward unit edge normal.
    struct HalfPlane {
        double nx, ny, b;
    };
    std::vector<HalfPlane> hp;
    double scale = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], b = v[(i + 1) % v.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0.0) throw GeometryError("polygon has a zero-length edge");
        const double nx = (b.y - a.y) / len, ny = -(b.x - a.x) / len;
        hp.push_back({nx, ny, nx * a.x + ny * a.y});
        scale = std::max({scale, std::abs(a.x), std::abs(a.y)});
    }
    const double feas_tol = 1e-12 * std::max(scale, 1.0);

    // The LP optimum sits at a vertex of the feasible polytope in (x, y, t):
    // enumerate all triples of active constraints.
    double best_t = -std::numeric_limits<double>::infinity();
    Point2 best_c{};
    const std::size_t m = hp.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const HalfPlane& A = hp[i];
                const HalfPlane& B = hp[j];
                const HalfPlane& C = hp[k];
                // rows [nx ny 1]; Cramer's rule
                const double det = A.nx * (B.ny - C.ny) - A.ny * (B.nx - C.nx) + (B.nx * C.ny - C.nx * B.ny);
                if (std::abs(det) < 1e-12) continue;
                const double dx = A.b * (B.ny - C.ny) - A.ny * (B.b - C.b) + (B.b * C.ny - C.b * B.ny);
                const double dy = A.nx * (B.b - C.b) - A.b * (B.nx - C.nx) + (B.nx * C.b - C.nx * B.b);
                const double dt = A.nx * (B.ny * C.b - C.ny * B.b) - A.ny * (B.nx * C.b - C.nx * B.b) +
                                  A.b * (B.nx * C.ny - C.nx * B.ny);
                const double x = dx / det, y = dy / det, t = dt / det;
                if (t <= best_t) continue;
                bool feasible = true;
                for (const auto& h : hp) {
                    if (h.nx * x + h.ny * y + t > h.b + feas_tol) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) {
                    best_t = t;
                    best_c = {x, y};
                }
            }
        }
    }
    if (!(best_t > 0.0)) throw GeometryError("inscribed-ball LP is infeasible (degenerate polygon)");
    return {best_c, best_t};
}

// ---------------------------------------------------------------------------
// public operations

bool is_convex(const DomainSpec& domain)
{
    return std::visit(overloaded{[](const Polygon& p) {
                                     const auto& v = p.vertices;
                                     const std::size_t n = v.size();
                                     for (std::size_t i = 0; i < n; ++i)
                                         if (orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]) < 0) return false;
                                     return true;
                                 },
                                 [](const LShape&) { return false; }, [](const UShape&) { return false; },
                                 [](const InradiusOnly& r) { return r.convex; },
                                 [](const auto&) { return true; }},
                      domain.shape);
}

LengthEstimate inradius_estimate(const DomainSpec& domain, const GridOptions& grid)
{
    validate(domain);
    return std::visit(
        overloaded{
            [](const Ball& b) { return LengthEstimate{b.radius, 0.0}; },
            [](const Box& b) { return LengthEstimate{*std::min_element(b.sides.begin(), b.sides.end()) / 2.0, 0.0}; },
            [](const Stadium& s) { return LengthEstimate{s.radius, 0.0}; },
            [&](const Polygon& p) {
                if (is_convex(domain)) return LengthEstimate{chebyshev_center(p.vertices).second, 0.0};
                return polygon_inradius_grid(p.vertices, grid);
            },
            [](const LShape& l) { return LengthEstimate{l_shape_inradius(l.leg, l.width), 0.0}; },
            [](const UShape& u) { return LengthEstimate{u_shape_inradius(u.outer, u.slot_width, u.slot_depth), 0.0}; },
            [](const Cylinder& c) { return LengthEstimate{std::min(c.radius, c.height / 2.0), 0.0}; },
            [](const InradiusOnly& r) { return LengthEstimate{r.radius, 0.0}; },
        },
        domain.shape);
}

double inradius(const DomainSpec& domain, const GridOptions& grid)
{
    return inradius_estimate(domain, grid).value;
}

LengthEstimate dilated_inradius_estimate(const DomainSpec& domain, double delta, const GridOptions& grid)
{
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw ArgumentError("delta must be a finite non-negative length");
    if (delta == 0.0) return inradius_estimate(domain, grid);
    if (is_convex(domain)) {
        const auto r = inradius_estimate(domain, grid);
        return {r.value + delta, r.resolution};
    }
    return std::visit(
        overloaded{
            [&](const LShape& l) { return LengthEstimate{l_shape_dilated_inradius(l, delta), 0.0}; },
            [&](const UShape& u) {
                if (const auto r = u_shape_dilated_inradius(u, delta)) return LengthEstimate{*r, 0.0};
                return polygon_dilated_inradius_grid(u_shape_vertices(u), delta, grid);
            },
            [&](const Polygon& p) { return polygon_dilated_inradius_grid(p.vertices, delta, grid); },
            [](const InradiusOnly&) -> LengthEstimate {
                throw UnsupportedError("dilated inradius of a nonconvex inradius-only domain is unknown");
            },
            [](const auto&) -> LengthEstimate { throw UnsupportedError("unexpected nonconvex shape"); },
        },
        domain.shape);
}

double dilated_inradius(const DomainSpec& domain, double delta, const GridOptions& grid)
{
    return dilated_inradius_estimate(domain, delta, grid).value;
}

double unit_ball_volume(int n)
{
    return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double volume(const DomainSpec& domain)
{
    validate(domain);
    const int n = domain.dimension;
    return std::visit(
        overloaded{
            [&](const Ball& b) { return unit_ball_volume(n) * std::pow(b.radius, n); },
            [](const Box& b) { return std::accumulate(b.sides.begin(), b.sides.end(), 1.0, std::multiplies<>()); },
            [](const Stadium& s) {
                return 2.0 * s.radius * s.segment_length + std::numbers::pi * s.radius * s.radius;
            },
            [](const Polygon& p) { return signed_area(p.vertices); },
            [](const LShape& l) { return 2.0 * l.leg * l.width - l.width * l.width; },
            [](const UShape& u) { return u.outer * u.outer - u.slot_width * u.slot_depth; },
            [](const Cylinder& c) { return std::numbers::pi * c.radius * c.radius * c.height; },
            [](const InradiusOnly&) -> double {
                throw UnsupportedError("volume is unavailable for an inradius-only (possibly unbounded) domain");
            },
        },
        domain.shape);
}

double distance_to_complement(const DomainSpec& domain, std::span<const double> x)
{
    if (std::holds_alternative<InradiusOnly>(domain.shape))
        throw UnsupportedError("inradius-only domains have no point geometry");
    if (static_cast<int>(x.size()) != domain.dimension)
        throw ArgumentError("point dimension " + std::to_string(x.size()) + " does not match domain dimension " +
                            std::to_string(domain.dimension));
    const double d = std::visit(
        overloaded{
            [&](const Ball& b) {
                double r2 = 0.0;
                for (double c : x) r2 += c * c;
                return b.radius - std::sqrt(r2);
            },
            [&](const Box& b) {
                double m = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < x.size(); ++i) m = std::min({m, x[i], b.sides[i] - x[i]});
                return m;
            },
            [&](const Stadium& s) {
                const double half = s.segment_length / 2.0;
                return s.radius - segment_distance({x[0], x[1]}, {-half, 0.0}, {half, 0.0});
            },
            [&](const Cylinder& c) {
                return std::min({c.radius - std::hypot(x[0], x[1]), x[2], c.height - x[2]});
            },
            [&](const InradiusOnly&) { return 0.0; },
            [&](const auto&) {
                const auto poly = as_polygon(domain);
                const Point2 p{x[0], x[1]};
                return polygon_contains(poly, p) ? distance_to_boundary(poly, p) : 0.0;
            },
        },
        domain.shape);
    return std::max(d, 0.0);
}

bool contains(const DomainSpec& domain, Point2 p)
{
    if (domain.dimension != 2) throw ArgumentError("contains() is defined for 2D domains");
    const std::array<double, 2> x{p.x, p.y};
    return distance_to_complement(domain, x) > 0.0;
}

std::array<double, 4> bounding_box(const DomainSpec& domain)
{
    if (domain.dimension != 2) throw ArgumentError("bounding_box() is defined for 2D domains");
    return std::visit(
        overloaded{
            [](const Ball& b) { return std::array<double, 4>{-b.radius, -b.radius, b.radius, b.radius}; },
            [](const Box& b) { return std::array<double, 4>{0.0, 0.0, b.sides[0], b.sides[1]}; },
            [](const Stadium& s) {
                const double hx = s.segment_length / 2.0 + s.radius;
                return std::array<double, 4>{-hx, -s.radius, hx, s.radius};
            },
            [](const LShape& l) { return std::array<double, 4>{0.0, 0.0, l.leg, l.leg}; },
            [](const UShape& u) { return std::array<double, 4>{0.0, 0.0, u.outer, u.outer}; },
            [](const Polygon& p) {
                std::array<double, 4> bb{p.vertices[0].x, p.vertices[0].y, p.vertices[0].x, p.vertices[0].y};
                for (auto v : p.vertices) {
                    bb[0] = std::min(bb[0], v.x); bb[1] = std::min(bb[1], v.y);
                    bb[2] = std::max(bb[2], v.x); bb[3] = std::max(bb[3], v.y);
                }
                return bb;
            },
            [](const auto&) -> std::array<double, 4> { throw UnsupportedError("shape has no 2D bounding box"); },
        },
        domain.shape);
}

DeltaSolution solve_delta_for_ratio(const DomainSpec& domain, double ratio, const GridOptions& grid)
{
    if (!(ratio > 0.0 && ratio < 1.0)) throw ArgumentError("ratio must lie in (0, 1)");
    const auto r = inradius_estimate(domain, grid);
    // R_δ >= R + δ, so the convex answer is always a lower bracket.
    const double convex_delta = r.value * ratio / (1.0 - ratio);
    if (is_convex(domain)) return {convex_delta, r.value + convex_delta, r.resolution};

    auto excess = [&](double delta) {
        const auto rd = dilated_inradius_estimate(domain, delta, grid);
        return std::pair{delta / rd.value - ratio, rd};
    };
    double lo = convex_delta;
    auto [g_lo, est_lo] = excess(lo);
    if (g_lo >= 0.0) return {lo, est_lo.value, est_lo.resolution};
    double hi = 2.0 * lo;
    int doublings = 0;
    while (excess(hi).first < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 80) throw NumericError("delta/R_delta bisection: cannot bracket the ratio");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid).first < 0.0 ? lo : hi) = mid;
    }
    const double delta = 0.5 * (lo + hi);
    const auto [g, est] = excess(delta);
    if (est.exact() && std::abs(g) > 1e-10 * ratio)
        throw NumericError("delta/R_delta bisection did not reach the requested ratio");
    return {delta, est.value, est.resolution};
}

GeometrySummary summarize(const DomainSpec& domain, const GridOptions& grid)
{
    const auto r = inradius_estimate(domain, grid);
    GeometrySummary s;
    s.inradius = r.value;
    s.inradius_resolution = r.resolution;
    s.convex = is_convex(domain);
    s.volume = std::holds_alternative<InradiusOnly>(domain.shape) ? std::numeric_limits<double>::infinity()
                                                                  : volume(domain);
    return s;
}

} // namespace eigenbound::geometry
