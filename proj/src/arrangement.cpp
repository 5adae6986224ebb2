#include "minkarr/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minkarr::arrangement {

using geometry::CircleRelation;
using geometry::CircleRelationKind;
using geometry::circle_relation;
using geometry::eps_geom;
using geometry::rot90;

ValidationReport validate(const std::vector<Disk>& disks, double mu) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("validate: mu must lie in (0, 1)");
    if (disks.empty())
        throw std::invalid_argument("validate: empty disk family");
    for (const auto& d : disks)
        if (!geometry::disk_valid(d))
            throw std::invalid_argument("validate: disk with non-positive or non-finite radius");

    ValidationReport report;
    const int n = static_cast<int>(disks.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = (disks[j].center - disks[i].center).norm();
            const double lo = std::min(disks[i].radius, disks[j].radius);
            const double hi = std::max(disks[i].radius, disks[j].radius);
            const double required = hi + mu * lo;
            if (d < required - eps_geom || d == 0.0)
                report.violations.push_back({i, j, required, d});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

MuArrangement make_arrangement(std::vector<Disk> disks, double mu) {
    auto report = validate(disks, mu);
    if (!report.valid)
        throw std::invalid_argument("make_arrangement: mu-condition violated for " +
                                    std::to_string(report.violations.size()) + " pair(s)");
    return MuArrangement{mu, std::move(disks)};
}

Digon classify_digon(const MuArrangement& arr, int i, int j) {
    const int n = static_cast<int>(arr.disks.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("classify_digon: bad disk indices");
    if (i > j) std::swap(i, j);
    const Disk& di = arr.disks[i];
    const Disk& dj = arr.disks[j];
    const auto rel = circle_relation(di, dj);
    if (rel.kind != CircleRelationKind::Digon)
        throw std::invalid_argument("classify_digon: disks do not bound a digon");

    Digon dg;
    dg.i = i;
    dg.j = j;
    dg.vertex1 = rel.vertex1;
    dg.vertex2 = rel.vertex2;
    // The digon is contained in closure(dk) iff both vertices are: the lens is
    // the intersection of two convex sets with extreme points at the vertices.
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Disk& dk = arr.disks[k];
        const bool v1 = (dg.vertex1 - dk.center).norm() <= dk.radius + eps_geom;
        const bool v2 = (dg.vertex2 - dk.center).norm() <= dk.radius + eps_geom;
        if (v1 && v2) dg.contained_in.push_back(k);
    }
    dg.free = dg.contained_in.empty();
    const double d = (dj.center - di.center).norm();
    dg.thick = std::abs(di.radius - dj.radius) <= eps_geom &&
               std::abs(d - (1.0 + arr.mu) * di.radius) <= eps_geom;
    return dg;
}

std::vector<Digon> find_digons(const MuArrangement& arr) {
    std::vector<Digon> out;
    const int n = static_cast<int>(arr.disks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (circle_relation(arr.disks[i], arr.disks[j]).kind == CircleRelationKind::Digon)
                out.push_back(classify_digon(arr, i, j));
    return out;
}

InscribedFamilyPoint inscribed_disk(const Disk& di, const Disk& dj, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::invalid_argument("inscribed_disk: t must lie in (0, 1)");
    const auto rel = circle_relation(di, dj);
    if (rel.kind != CircleRelationKind::Digon)
        throw std::invalid_argument("inscribed_disk: disks do not bound a digon");
    const Vec2 delta = dj.center - di.center;
    const double d = delta.norm();
    const Vec2 u = delta / d;
    const double rmax = 0.5 * (di.radius + dj.radius - d);
    // linear radius ramp toward each vertex; side +1 is the vertex1 side
    const double side = (t <= 0.5) ? 1.0 : -1.0;
    const double r = (t <= 0.5) ? 2.0 * t * rmax : 2.0 * (1.0 - t) * rmax;
    const double Ri = di.radius - r;
    const double Rj = dj.radius - r;
    const double a = (Ri * Ri - Rj * Rj + d * d) / (2.0 * d);
    const double h = std::sqrt(std::max(Ri * Ri - a * a, 0.0));
    InscribedFamilyPoint p;
    p.t = t;
    p.radius = r;
    p.center = di.center + a * u + side * h * rot90(u);
    return p;
}

namespace {

bool inscribed_in_disk(const InscribedFamilyPoint& b, const Disk& dk) {
    return (b.center - dk.center).norm() + b.radius <= dk.radius + eps_geom;
}

}  // namespace

double containment_sup(const Disk& di, const Disk& dj, const Disk& dk, bool from_vertex1) {
    auto contains_at = [&](double tau) {
        const double t = from_vertex1 ? tau : 1.0 - tau;
        return inscribed_in_disk(inscribed_disk(di, dj, t), dk);
    };
    const double tau_lo = 1e-12, tau_hi = 1.0 - 1e-12;
    if (!contains_at(tau_lo)) return 0.0;
    if (contains_at(tau_hi)) return 1.0;
    double lo = tau_lo, hi = tau_hi;
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (contains_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::pair<int, int>> adjacency_pairs(const MuArrangement& arr) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(arr.disks.size());
    for (const auto& dg : find_digons(arr)) {
        if (!dg.free) continue;  // a containing disk holds the whole family
        const Disk& di = arr.disks[dg.i];
        const Disk& dj = arr.disks[dg.j];
        double a = 0.0, b = 1.0;  // members with t in (a, b) lie in no other disk
        for (int k = 0; k < n && a < b; ++k) {
            if (k == dg.i || k == dg.j) continue;
            const Disk& dk = arr.disks[k];
            const bool holds1 = (dg.vertex1 - dk.center).norm() <= dk.radius + eps_geom;
            const bool holds2 = (dg.vertex2 - dk.center).norm() <= dk.radius + eps_geom;
            if (holds1 && holds2) {  // tolerance edge case: treat as containing
                a = 1.0;
                break;
            }
            if (holds1)
                a = std::max(a, containment_sup(di, dj, dk, true));
            else if (holds2)
                b = std::min(b, 1.0 - containment_sup(di, dj, dk, false));
            // a disk holding neither vertex contains no family member (a disk
            // containing B(t) must contain one of the digon vertices)
        }
        if (a < b - eps_param) out.emplace_back(dg.i, dg.j);
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const MuArrangement& arr) {
    const int n = static_cast<int>(arr.disks.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto kind = circle_relation(arr.disks[i], arr.disks[j]).kind;
            const bool open_overlap = kind == CircleRelationKind::Digon ||
                                      kind == CircleRelationKind::InternallyTangent ||
                                      kind == CircleRelationKind::Contained;
            if (open_overlap) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

}  // namespace minkarr::arrangement
