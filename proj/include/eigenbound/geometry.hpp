#pragma once

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace eigenbound::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Shape conventions (all lengths > 0):
//   Ball       centred at the origin, any dimension.
//   Box        [0, s_1] x ... x [0, s_n]; dimension = sides.size().
//   Stadium    points within `radius` of the segment [-L/2, L/2] x {0}.
//   Polygon    simple, counterclockwise vertex list.
//   LShape     {0 <= x, y <= leg, min(x, y) <= width}.
//   UShape     [0, outer]^2 minus the slot
//              [(outer - slot_width)/2, (outer + slot_width)/2] x [outer - slot_depth, outer].
//   Cylinder   disk of `radius` in (x, y) times [0, height] in z.
//   InradiusOnly  no geometry, only R and a convexity flag; supports
//              unbounded domains whose bounds depend on R alone.

struct Ball {
    double radius = 1.0;
};

struct Box {
    std::vector<double> sides;
};

struct Stadium {
    double segment_length = 1.0;
    double radius = 1.0;
};

struct Polygon {
    std::vector<Point2> vertices;
};

struct LShape {
    double leg = 1.0;
    double width = 1.0;
};

struct UShape {
    double outer = 3.0;
    double slot_width = 1.0;
    double slot_depth = 2.0;
};

struct Cylinder {
    double radius = 1.0;
    double height = 1.0;
};

struct InradiusOnly {
    double radius = 1.0;
    bool convex = false;
};

using Shape = std::variant<Ball, Box, Stadium, Polygon, LShape, UShape, Cylinder, InradiusOnly>;

/// Geometric description of Ω. Construct through the factory helpers, which
/// validate the shape and set the dimension.
struct DomainSpec {
    int dimension = 2;
    Shape shape;

    static DomainSpec ball(double radius, int dimension);
    static DomainSpec box(std::vector<double> sides);
    static DomainSpec stadium(double segment_length, double radius);
    static DomainSpec polygon(std::vector<Point2> vertices);
    static DomainSpec l_shape(double leg, double width);
    static DomainSpec u_shape(double outer, double slot_width, double slot_depth);
    static DomainSpec cylinder(double radius, double height);
    static DomainSpec inradius_only(double radius, bool convex, int dimension = 2);
};

/// Throws GeometryError when the invariants of the shape are violated.
void validate(const DomainSpec& domain);

std::string shape_name(const DomainSpec& domain);

/// An inradius value with the resolution of the path that produced it.
/// `resolution` is 0 for closed forms and the LP, and the grid spacing h
/// for distance-transform estimates.
struct LengthEstimate {
    double value = 0.0;
    double resolution = 0.0;

    bool exact() const { return resolution == 0.0; }
};

struct GeometrySummary {
    double inradius = 0.0;
    double inradius_resolution = 0.0;
    double volume = 0.0;
    bool convex = false;
};

/// Grid controls for the distance-transform path (nonconvex polygons).
/// A zero spacing selects extent / default_cells.
struct GridOptions {
    double spacing = 0.0;
    int default_cells = 512;
};

LengthEstimate inradius_estimate(const DomainSpec& domain, const GridOptions& grid = {});
double inradius(const DomainSpec& domain, const GridOptions& grid = {});

/// Inradius of Ω_δ = {x : dist(x, Ω) < δ}.
LengthEstimate dilated_inradius_estimate(const DomainSpec& domain, double delta,
                                         const GridOptions& grid = {});
double dilated_inradius(const DomainSpec& domain, double delta, const GridOptions& grid = {});

bool is_convex(const DomainSpec& domain);

double volume(const DomainSpec& domain);

/// Volume of the unit n-ball.
double unit_ball_volume(int dimension);

/// Euclidean distance from `point` to the complement of Ω; 0 outside Ω.
double distance_to_complement(const DomainSpec& domain, std::span<const double> point);

/// Strict interior membership test for 2D domains (used for rasterization).
bool contains(const DomainSpec& domain, Point2 p);

/// Axis-aligned bounding box {xmin, ymin, xmax, ymax} of a 2D domain.
std::array<double, 4> bounding_box(const DomainSpec& domain);

struct DeltaSolution {
    double delta = 0.0;
    double dilated_inradius = 0.0;
    double resolution = 0.0;
};

/// Finds δ with δ / R_δ = ratio.
DeltaSolution solve_delta_for_ratio(const DomainSpec& domain, double ratio,
                                    const GridOptions& grid = {});

GeometrySummary summarize(const DomainSpec& domain, const GridOptions& grid = {});

// Polygon helpers, exposed for testing.
double signed_area(std::span<const Point2> vertices);
bool is_simple(std::span<const Point2> vertices);
double distance_to_boundary(std::span<const Point2> vertices, Point2 p);
bool polygon_contains(std::span<const Point2> vertices, Point2 p);

/// Chebyshev centre of a convex polygon: maximize t subject to every edge
/// half-plane shifted inward by t. Returns {centre, radius}.
std::pair<Point2, double> chebyshev_center(std::span<const Point2> vertices);

} // namespace eigenbound::geometry
