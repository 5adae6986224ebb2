#include "minkarr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkarr::geometry {

bool disk_valid(const Disk& d) {
    return std::isfinite(d.center.x()) && std::isfinite(d.center.y()) &&
           std::isfinite(d.radius) && d.radius > 0.0;
}

CircleRelation circle_relation(const Disk& d1, const Disk& d2, double eps) {
    if (!disk_valid(d1) || !disk_valid(d2))
        throw std::invalid_argument("circle_relation: invalid disk");
    const Vec2 delta = d2.center - d1.center;
    const double d = delta.norm();
    const double rsum = d1.radius + d2.radius;
    const double rdiff = std::abs(d1.radius - d2.radius);

    CircleRelation rel;
    if (d >= rsum + eps) {
        rel.kind = CircleRelationKind::Disjoint;
        return rel;
    }
    if (d > rsum - eps) {
        rel.kind = CircleRelationKind::ExternallyTangent;
        rel.point = d1.center + (d1.radius / d) * delta;
        return rel;
    }
    if (d <= rdiff - eps || d <= eps) {
        // concentric circles (d <= eps) can only be nested or coincident here
        rel.kind = CircleRelationKind::Contained;
        return rel;
    }
    if (d < rdiff + eps) {
        rel.kind = CircleRelationKind::InternallyTangent;
        // tangency point lies on the ray from the bigger center through the smaller
        if (d1.radius >= d2.radius)
            rel.point = d1.center + (d1.radius / d) * delta;
        else
            rel.point = d2.center - (d2.radius / d) * delta;
        return rel;
    }

    rel.kind = CircleRelationKind::Digon;
    const double a = (d1.radius * d1.radius - d2.radius * d2.radius + d * d) / (2.0 * d);
    const double h = std::sqrt(std::max(d1.radius * d1.radius - a * a, 0.0));
    const Vec2 u = delta / d;
    const Vec2 mid = d1.center + a * u;
    rel.vertex1 = mid + h * rot90(u);
    rel.vertex2 = mid - h * rot90(u);
    return rel;
}

namespace {

double wrap_angle(double t) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

// Complement of a set of covered angular intervals on a circle, merged with
// tolerance tol (radians).  Intervals are (start, end) with end possibly
// exceeding start by up to 2*pi after normalization.
std::vector<AngleInterval> complement_on_circle(std::vector<std::pair<double, double>> covered,
                                                double tol) {
    std::vector<AngleInterval> out;
    if (covered.empty()) {
        out.push_back({0.0, two_pi});
        return out;
    }
    // normalize to start in [0, 2*pi), then split wrap-around intervals
    std::vector<std::pair<double, double>> unfolded;
    for (auto [a, b] : covered) {
        const double len = b - a;
        if (len <= 0.0) continue;
        if (len >= two_pi) return out;  // fully covered
        const double s = wrap_angle(a);
        const double e = s + len;
        unfolded.emplace_back(s, std::min(e, two_pi));
        if (e > two_pi) unfolded.emplace_back(0.0, e - two_pi);
    }
    std::sort(unfolded.begin(), unfolded.end());
    std::vector<std::pair<double, double>> merged;
    for (auto [a, b] : unfolded) {
        if (!merged.empty() && a <= merged.back().second + tol)
            merged.back().second = std::max(merged.back().second, b);
        else
            merged.emplace_back(a, b);
    }
    // complement within [0, 2*pi), then re-join the wrap gap
    std::vector<std::pair<double, double>> gaps;
    double cursor = 0.0;
    for (auto& [a, b] : merged) {
        if (a > cursor + tol) gaps.emplace_back(cursor, a);
        cursor = std::max(cursor, b);
    }
    if (cursor < two_pi - tol) gaps.emplace_back(cursor, two_pi);
    if (gaps.empty()) return out;
    // join a gap ending at 2*pi with one starting at 0
    if (gaps.size() >= 2 && gaps.front().first <= tol && gaps.back().second >= two_pi - tol) {
        auto first = gaps.front();
        auto last = gaps.back();
        gaps.erase(gaps.begin());
        gaps.pop_back();
        gaps.push_back({last.first, last.second + first.second});
    }
    for (auto& [a, b] : gaps) out.push_back({wrap_angle(a), b - a});
    return out;
}

}  // namespace

UnionBoundary union_area(const std::vector<Disk>& disks) {
    if (disks.empty()) throw std::invalid_argument("union_area: empty disk family");
    for (const auto& d : disks)
        if (!disk_valid(d)) throw std::invalid_argument("union_area: invalid disk");

    const int n = static_cast<int>(disks.size());
    UnionBoundary result;
    result.boundary.resize(n);
    double area = 0.0;

    for (int i = 0; i < n; ++i) {
        const Vec2 ci = disks[i].center;
        const double ri = disks[i].radius;
        bool swallowed = false;
        std::vector<std::pair<double, double>> covered;
        for (int j = 0; j < n && !swallowed; ++j) {
            if (j == i) continue;
            const Vec2 delta = disks[j].center - ci;
            const double d = delta.norm();
            const double rj = disks[j].radius;
            if (d + ri <= rj + eps_geom) {
                // disk i inside disk j; on a mutual tie the lower index survives
                const bool mutual = d + rj <= ri + eps_geom;
                if (!mutual || j < i) swallowed = true;
                continue;
            }
            if (d + rj <= ri + eps_geom) continue;  // j inside i, covers none of bd(i)
            if (d >= ri + rj - eps_geom) continue;  // disjoint or externally tangent
            const double cos_phi =
                std::clamp((d * d + ri * ri - rj * rj) / (2.0 * d * ri), -1.0, 1.0);
            const double phi = std::acos(cos_phi);
            const double theta = std::atan2(delta.y(), delta.x());
            covered.emplace_back(theta - phi, theta + phi);
        }
        if (swallowed) continue;
        auto arcs = complement_on_circle(std::move(covered), eps_geom / ri);
        for (const auto& arc : arcs) {
            const double t0 = arc.start, s = arc.sweep;
            // Green's theorem, x dy - y dx over the ccw arc
            area += 0.5 * (ri * ri * s +
                           ci.x() * ri * (std::sin(t0 + s) - std::sin(t0)) +
                           ci.y() * ri * (std::cos(t0) - std::cos(t0 + s)));
        }
        result.boundary[i] = std::move(arcs);
    }
    result.area = area;
    return result;
}

void check_gauge(const SymmetricGauge& K) {
    const int n = static_cast<int>(K.vertices.size());
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("check_gauge: need an even number (>= 4) of vertices");
    double scale = 0.0;
    for (const auto& v : K.vertices) scale = std::max(scale, v.norm());
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("check_gauge: degenerate vertex set");
    const double tol = 1e-9 * scale;
    for (int k = 0; k < n / 2; ++k)
        if ((K.vertices[k] + K.vertices[k + n / 2]).norm() > tol)
            throw std::invalid_argument("check_gauge: not origin-symmetric");
    for (int k = 0; k < n; ++k) {
        const Vec2& a = K.vertices[k];
        const Vec2& b = K.vertices[(k + 1) % n];
        const Vec2& c = K.vertices[(k + 2) % n];
        if (cross2(b - a, c - b) <= tol * tol * 1e-3)
            throw std::invalid_argument("check_gauge: vertices not in strictly convex ccw position");
    }
}

double gauge_norm(const SymmetricGauge& K, const Vec2& v) {
    // support-form evaluation: ||v|| = max_e (v . n_e) / (v_e . n_e) over edges e
    const int n = static_cast<int>(K.vertices.size());
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec2& a = K.vertices[k];
        const Vec2 e = K.vertices[(k + 1) % n] - a;
        const Vec2 normal(e.y(), -e.x());  // outward for ccw polygons
        const double h = normal.dot(a);
        best = std::max(best, normal.dot(v) / h);
    }
    return std::max(best, 0.0);
}

SymmetricGauge make_square_gauge(double half_side) {
    if (!(half_side > 0.0)) throw std::invalid_argument("make_square_gauge: half_side <= 0");
    SymmetricGauge K;
    K.vertices = {Vec2(half_side, half_side), Vec2(-half_side, half_side),
                  Vec2(-half_side, -half_side), Vec2(half_side, -half_side)};
    return K;
}

SymmetricGauge make_regular_gauge(int n_vertices, double circumradius, double phase) {
    if (n_vertices < 4 || n_vertices % 2 != 0)
        throw std::invalid_argument("make_regular_gauge: need even n >= 4");
    if (!(circumradius > 0.0))
        throw std::invalid_argument("make_regular_gauge: circumradius <= 0");
    SymmetricGauge K;
    for (int k = 0; k < n_vertices; ++k) {
        const double t = phase + two_pi * k / n_vertices;
        K.vertices.emplace_back(circumradius * std::cos(t), circumradius * std::sin(t));
    }
    return K;
}

TriangleMetrics triangle_metrics(const Triangle& t) {
    TriangleMetrics m;
    const Vec2 ab = t.b - t.a, ac = t.c - t.a, bc = t.c - t.b;
    const double cr = cross2(ab, ac);
    m.area = 0.5 * std::abs(cr);
    const double lab = ab.norm(), lac = ac.norm(), lbc = bc.norm();
    m.degenerate = std::abs(cr) <= 1e-12 * std::max(lab * lac, 1e-300);
    auto angle = [](const Vec2& u, const Vec2& v) {
        const double nu = u.norm(), nv = v.norm();
        if (nu == 0.0 || nv == 0.0) return 0.0;
        return std::acos(std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0));
    };
    if (lab == 0.0 || lac == 0.0 || lbc == 0.0) m.degenerate = true;
    m.angle_a = angle(ab, ac);
    m.angle_b = angle(-ab, bc);
    m.angle_c = angle(-ac, -bc);
    return m;
}

double polygon_area(const std::vector<Vec2>& vertices) {
    const int n = static_cast<int>(vertices.size());
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += cross2(vertices[k], vertices[(k + 1) % n]);
    return 0.5 * s;
}

}  // namespace minkarr::geometry
