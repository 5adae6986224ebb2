#include "minkarr/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minkarr::decomposition {

using arrangement::adjacency_pairs;
using arrangement::classify_digon;
using arrangement::containment_sup;
using arrangement::find_digons;
using arrangement::inscribed_disk;
using geometry::cross2;
using geometry::eps_geom;
using geometry::pi;
using geometry::triangle_metrics;
using geometry::union_area;

bool on_union_boundary(const MuArrangement& arr, const Vec2& q, int skip_i, int skip_j) {
    const int n = static_cast<int>(arr.disks.size());
    for (int k = 0; k < n; ++k) {
        if (k == skip_i || k == skip_j) continue;
        if ((q - arr.disks[k].center).norm() < arr.disks[k].radius - eps_geom) return false;
    }
    return true;
}

OuterShell outer_shell(const MuArrangement& arr) {
    arrangement::validate(arr.disks, arr.mu);  // throws on malformed input
    const auto u = union_area(arr.disks);
    OuterShell shell;
    for (int i = 0; i < static_cast<int>(u.boundary.size()); ++i) {
        for (const auto& arc : u.boundary[i]) {
            shell.sectors.push_back({i, arc});
            shell.area += 0.5 * arr.disks[i].radius * arr.disks[i].radius * arc.sweep;
        }
    }
    return shell;
}

InnerShell inner_shell(const MuArrangement& arr) {
    InnerShell shell;
    const int n = static_cast<int>(arr.disks.size());
    for (const auto& dg : find_digons(arr)) {
        const Vec2 xi = arr.disks[dg.i].center;
        const Vec2 xj = arr.disks[dg.j].center;
        for (const Vec2& q : {dg.vertex1, dg.vertex2}) {
            if (!on_union_boundary(arr, q, dg.i, dg.j)) continue;
            // tangency degeneracy: q on the center line spans no triangle
            const Vec2 e = xj - xi;
            if (std::abs(cross2(e, q - xi)) <= eps_geom * e.norm()) continue;
            // the triangle belongs to this pair only when no further disk whose
            // circle passes through q has its center strictly inside the wedge
            // spanned at q by the directions to x_i and x_j
            const Vec2 wi = xi - q, wj = xj - q;
            const double det = cross2(wi, wj);
            bool blocked = false;
            for (int k = 0; k < n && !blocked; ++k) {
                if (k == dg.i || k == dg.j) continue;
                const Disk& dk = arr.disks[k];
                if (std::abs((q - dk.center).norm() - dk.radius) > eps_geom) continue;
                const Vec2 wk = dk.center - q;
                const double s = cross2(wk, wj) / det;
                const double u = cross2(wi, wk) / det;
                if (s > 1e-9 && u > 1e-9) blocked = true;
            }
            if (blocked) continue;
            const auto m = triangle_metrics({xi, xj, q});
            shell.triangles.push_back({dg.i, dg.j, q, m.area});
            shell.area += m.area;
        }
    }
    return shell;
}

namespace {

std::string describe_point(const Vec2& p) {
    std::ostringstream os;
    os << "(" << p.x() << ", " << p.y() << ")";
    return os.str();
}

}  // namespace

CoreSet core_polygons(const MuArrangement& arr) {
    CoreSet core;
    const int n = static_cast<int>(arr.disks.size());
    for (const auto& [i, j] : adjacency_pairs(arr)) {
        const auto dg = classify_digon(arr, i, j);
        const Disk& di = arr.disks[i];
        const Disk& dj = arr.disks[j];
        for (const bool from_v1 : {true, false}) {
            const Vec2 q = from_v1 ? dg.vertex1 : dg.vertex2;
            if (on_union_boundary(arr, q, i, j)) continue;  // only interior vertices
            // deepest family member still inside some disk holding q
            double t0 = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if ((q - arr.disks[k].center).norm() < arr.disks[k].radius - eps_geom)
                    t0 = std::max(t0, containment_sup(di, dj, arr.disks[k], from_v1));
            }
            if (!(t0 > 0.0 && t0 < 1.0)) {
                core.diagnostics.push_back("degenerate inscribed family at " + describe_point(q));
                continue;
            }
            const auto b = inscribed_disk(di, dj, from_v1 ? t0 : 1.0 - t0);
            // disks internally tangent to the maximal member are the polygon vertices
            std::vector<int> members;
            for (int u = 0; u < n; ++u) {
                const double gap =
                    (b.center - arr.disks[u].center).norm() + b.radius - arr.disks[u].radius;
                if (std::abs(gap) <= 1e-7 * std::max(1.0, arr.disks[u].radius))
                    members.push_back(u);
            }
            if (static_cast<int>(members.size()) < 3) {
                core.diagnostics.push_back("fewer than 3 tangent disks at " + describe_point(q));
                continue;
            }
            bool duplicate = false;
            for (const auto& existing : core.polygons)
                if ((existing.inscribed.center - b.center).norm() <= 1e-7) duplicate = true;
            if (duplicate) continue;

            CorePolygon poly;
            poly.inscribed = Disk{b.center, b.radius};
            poly.interior_vertex = q;
            std::sort(members.begin(), members.end(), [&](int u, int v) {
                const Vec2 du = arr.disks[u].center - b.center;
                const Vec2 dv = arr.disks[v].center - b.center;
                return std::atan2(du.y(), du.x()) < std::atan2(dv.y(), dv.x());
            });
            // rotate so the smallest index leads, keeping ccw order
            const auto lead = std::min_element(members.begin(), members.end());
            std::rotate(members.begin(), lead, members.end());
            poly.vertex_disks = members;

            const int k = static_cast<int>(members.size());
            std::vector<Vec2> pts;
            for (int u : members) pts.push_back(arr.disks[u].center);
            bool ok = true;
            if (k > 5) {
                core.diagnostics.push_back("core polygon with " + std::to_string(k) +
                                           " vertices at " + describe_point(q));
                ok = false;
            }
            for (int v = 0; ok && v < k; ++v) {
                const Vec2 a = pts[v], bb = pts[(v + 1) % k], c = pts[(v + 2) % k];
                if (cross2(bb - a, c - bb) <= -1e-12) {
                    core.diagnostics.push_back("non-convex core polygon at " + describe_point(q));
                    ok = false;
                }
            }
            for (int v = 0; ok && v < k; ++v) {
                const Vec2 a = pts[v] - b.center, c = pts[(v + 1) % k] - b.center;
                const double ang = std::acos(std::clamp(a.dot(c) / (a.norm() * c.norm()), -1.0, 1.0));
                if (!(ang > pi / 3.0 - 1e-6)) {
                    core.diagnostics.push_back("central angle not exceeding pi/3 at " +
                                               describe_point(q));
                    ok = false;
                }
            }
            // no further arrangement center may fall strictly inside the polygon
            for (int u = 0; ok && u < n; ++u) {
                if (std::find(members.begin(), members.end(), u) != members.end()) continue;
                const Vec2 p = arr.disks[u].center;
                bool inside = true;
                for (int v = 0; v < k && inside; ++v)
                    if (cross2(pts[(v + 1) % k] - pts[v], p - pts[v]) <= eps_geom) inside = false;
                if (inside) {
                    core.diagnostics.push_back("foreign center inside core polygon at " +
                                               describe_point(q));
                    ok = false;
                }
            }
            if (!ok) continue;
            poly.area = geometry::polygon_area(pts);
            core.area += poly.area;
            core.polygons.push_back(std::move(poly));
        }
    }
    std::sort(core.polygons.begin(), core.polygons.end(),
              [](const CorePolygon& a, const CorePolygon& b) {
                  return a.vertex_disks < b.vertex_disks;
              });
    return core;
}

RegionDecomposition decompose(const MuArrangement& arr) {
    RegionDecomposition dec;
    dec.outer = outer_shell(arr);
    dec.inner = inner_shell(arr);
    dec.core = core_polygons(arr);
    dec.area_U = union_area(arr.disks).area;
    dec.area_O = dec.outer.area;
    dec.area_I = dec.inner.area;
    dec.area_C = dec.area_U - dec.area_O - dec.area_I;
    dec.diagnostics = dec.core.diagnostics;
    if (dec.core.diagnostics.empty() && !dec.core.polygons.empty() &&
        std::abs(dec.core.area - dec.area_C) > 1e-6 * std::max(dec.area_U, 1.0))
        dec.diagnostics.push_back("core polygon area does not match subtraction residual");
    return dec;
}

}  // namespace minkarr::decomposition
