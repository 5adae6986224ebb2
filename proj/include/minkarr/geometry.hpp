#pragma once

#include <Eigen/Dense>

#include <vector>

namespace minkarr::geometry {

using Vec2 = Eigen::Vector2d;

// Global geometric tolerance (in arrangement length units) used for
// tangency / containment / boundary classification throughout the library.
inline constexpr double eps_geom = 1e-9;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

struct Disk {
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
};

bool disk_valid(const Disk& d);

// Counterclockwise circular arc, angles measured from the positive x axis.
// start is normalized to [0, 2*pi); sweep lies in (0, 2*pi].
struct AngleInterval {
    double start = 0.0;
    double sweep = 0.0;
};

enum class CircleRelationKind {
    Disjoint,
    ExternallyTangent,
    Digon,
    InternallyTangent,
    Contained,
};

struct CircleRelation {
    CircleRelationKind kind = CircleRelationKind::Disjoint;
    Vec2 point = Vec2::Zero();    // tangency point for the two tangent kinds
    Vec2 vertex1 = Vec2::Zero();  // digon vertices; walking bd(d1) ccw from
    Vec2 vertex2 = Vec2::Zero();  // vertex2 to vertex1 stays outside d2
};

// Classify the relative position of two circles with tolerance eps on the
// relevant distance comparisons.
CircleRelation circle_relation(const Disk& d1, const Disk& d2, double eps = eps_geom);

struct UnionBoundary {
    double area = 0.0;
    // boundary[i]: maximal arcs of circle i not covered by any other disk.
    std::vector<std::vector<AngleInterval>> boundary;
};

// Area of a union of open disks via Green's theorem over the uncovered
// boundary arcs.  Throws std::invalid_argument on an empty or invalid family.
UnionBoundary union_area(const std::vector<Disk>& disks);

// Origin-symmetric convex polygon acting as the unit ball of a norm.
// Vertices in ccw order; vertex k + n/2 must equal -vertex k.
struct SymmetricGauge {
    std::vector<Vec2> vertices;
};

// Throws std::invalid_argument when the polygon is not convex, not ccw,
// not origin-symmetric, or has fewer than 4 vertices.
void check_gauge(const SymmetricGauge& K);

// Minkowski functional ||v||_K = inf { t > 0 : v in t*K }.
double gauge_norm(const SymmetricGauge& K, const Vec2& v);

SymmetricGauge make_square_gauge(double half_side);
// Regular 2n-gon with given circumradius; first vertex at angle phase.
SymmetricGauge make_regular_gauge(int n_vertices, double circumradius, double phase = 0.0);

struct Triangle {
    Vec2 a, b, c;
};

struct TriangleMetrics {
    double area = 0.0;  // unsigned
    double angle_a = 0.0, angle_b = 0.0, angle_c = 0.0;
    bool degenerate = false;
};

TriangleMetrics triangle_metrics(const Triangle& t);

double polygon_area(const std::vector<Vec2>& vertices);  // shoelace, ccw positive

}  // namespace minkarr::geometry
