#include "minkarr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minkarr::bounds {

using geometry::check_gauge;
using geometry::cross2;
using geometry::eps_geom;
using geometry::gauge_norm;
using geometry::pi;
using geometry::polygon_area;
using geometry::Triangle;
using geometry::triangle_metrics;

Coefficients coefficients(double mu) {
    if (!(mu >= 0.0 && mu < 1.0))
        throw std::invalid_argument("coefficients: mu must lie in [0, 1)");
    Coefficients c;
    c.mu = mu;
    const double om = 1.0 + mu;
    c.sigma_core = 2.0 * pi / (std::sqrt(3.0) * om * om);
    c.sigma_shell = 4.0 * std::acos(om / 2.0) / (om * std::sqrt((3.0 + mu) * (1.0 - mu)));
    return c;
}

BoundReport theorem_bound(const MuArrangement& arr, double tolerance) {
    BoundReport report;
    report.remark3_mode = arr.mu > mu_star + 1e-12;
    report.decomposition = decomposition::decompose(arr);
    for (const auto& dg : arrangement::find_digons(arr))
        if (dg.free && !dg.thick) report.non_thick_free_digons.emplace_back(dg.i, dg.j);

    double T = 0.0;
    for (const auto& d : arr.disks) T += pi * d.radius * d.radius;
    report.total_disk_area = T;

    const auto c = coefficients(arr.mu);
    const auto& dec = report.decomposition;
    report.rhs = (report.remark3_mode ? 0.0 : c.sigma_core * dec.area_C) +
                 c.sigma_shell * dec.area_I + dec.area_O;
    report.slack = report.rhs - T;
    report.equality = std::abs(report.slack) <= tolerance * std::max(T, 1.0) &&
                      report.non_thick_free_digons.empty();
    return report;
}

TriangleCheck shell_triangle_check(double rho_i, double rho_j, double mu,
                                   double center_distance) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("shell_triangle_check: mu must lie in (0, 1)");
    if (!(rho_i > 0.0 && rho_j > 0.0))
        throw std::invalid_argument("shell_triangle_check: radii must be positive");
    const double d = center_distance;
    const double lo = std::min(rho_i, rho_j), hi = std::max(rho_i, rho_j);
    if (d < hi + mu * lo - eps_geom)
        throw std::invalid_argument("shell_triangle_check: mu-condition violated");
    if (d >= rho_i + rho_j - eps_geom)
        throw std::invalid_argument("shell_triangle_check: disks bound no digon");

    const double a = (rho_i * rho_i - rho_j * rho_j + d * d) / (2.0 * d);
    const double h = std::sqrt(std::max(rho_i * rho_i - a * a, 0.0));
    const auto m = triangle_metrics({Vec2(0.0, 0.0), Vec2(d, 0.0), Vec2(a, h)});
    TriangleCheck out;
    out.lhs_over_delta =
        (m.angle_a * rho_i * rho_i + m.angle_b * rho_j * rho_j) / (2.0 * m.area);
    out.bound = coefficients(mu).sigma_shell;
    out.tight = std::abs(rho_i - rho_j) <= eps_geom &&
                std::abs(d - (1.0 + mu) * rho_i) <= eps_geom;
    if (out.lhs_over_delta > out.bound + 1e-9)
        throw std::logic_error("shell_triangle_check: certified inequality violated");
    return out;
}

namespace {

std::string pair_msg(const char* what, int u, int v) {
    std::ostringstream os;
    os << "core_triangle_check: " << what << " for pair (" << u << ", " << v << ")";
    return os.str();
}

}  // namespace

TriangleCheck core_triangle_check(const Disk& bi, const Disk& bj, const Disk& bk, double mu) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("core_triangle_check: mu must lie in (0, 1)");
    const Disk disks[3] = {bi, bj, bk};
    for (const auto& d : disks)
        if (!geometry::disk_valid(d))
            throw std::invalid_argument("core_triangle_check: invalid disk");

    for (int u = 0; u < 3; ++u) {
        for (int v = u + 1; v < 3; ++v) {
            const double d = (disks[v].center - disks[u].center).norm();
            const double lo = std::min(disks[u].radius, disks[v].radius);
            const double hi = std::max(disks[u].radius, disks[v].radius);
            const Vec2 mid = 0.5 * (disks[u].center + disks[v].center);
            if (d < hi + mu * lo - eps_geom)
                throw HypothesisError("pairwise-distance", mid, pair_msg("mu-condition violated", u, v));
            if (d > disks[u].radius + disks[v].radius + eps_geom)
                throw HypothesisError("pairwise-intersection", mid,
                                      pair_msg("closed disks do not intersect", u, v));
        }
    }
    // the lens of each pair must not lie inside the remaining open disk
    for (int w = 0; w < 3; ++w) {
        const int u = (w + 1) % 3, v = (w + 2) % 3;
        const auto rel = geometry::circle_relation(disks[u], disks[v]);
        std::vector<Vec2> probes;
        if (rel.kind == geometry::CircleRelationKind::Digon) {
            probes = {rel.vertex1, rel.vertex2};
        } else if (rel.kind == geometry::CircleRelationKind::ExternallyTangent) {
            probes = {rel.point};
        } else {
            continue;  // within tolerance of tangency; nothing to check
        }
        bool all_inside = true;
        for (const auto& p : probes)
            if ((p - disks[w].center).norm() >= disks[w].radius - eps_geom) all_inside = false;
        if (all_inside)
            throw HypothesisError("lens-containment", probes.front(),
                                  pair_msg("pairwise intersection inside third disk", u, v));
    }

    const Vec2 xa = bi.center, xb = bj.center, xc = bk.center;
    const double doubled = cross2(xb - xa, xc - xa);
    if (std::abs(doubled) <= 1e-12 * std::max((xb - xa).norm() * (xc - xa).norm(), 1e-300))
        throw HypothesisError("non-degenerate", (xa + xb + xc) / 3.0,
                              "core_triangle_check: collinear centers");

    // coverage of the center triangle by the three closed disks: a barycentric
    // lattice exceeding 1e5 points plus the pairwise boundary vertices
    auto covered = [&](const Vec2& p) {
        for (const auto& d : disks)
            if ((p - d.center).norm() <= d.radius + eps_geom) return true;
        return false;
    };
    const int m = 446;  // (m+1)(m+2)/2 = 100128 lattice points
    for (int u = 0; u <= m; ++u) {
        for (int v = 0; v <= m - u; ++v) {
            const double l1 = static_cast<double>(u) / m;
            const double l2 = static_cast<double>(v) / m;
            const Vec2 p = l1 * xa + l2 * xb + (1.0 - l1 - l2) * xc;
            if (!covered(p))
                throw HypothesisError("coverage", p,
                                      "core_triangle_check: uncovered point in center triangle");
        }
    }
    auto in_triangle = [&](const Vec2& p) {
        const double s1 = cross2(xb - xa, p - xa);
        const double s2 = cross2(xc - xb, p - xb);
        const double s3 = cross2(xa - xc, p - xc);
        const double sgn = doubled > 0.0 ? 1.0 : -1.0;
        return sgn * s1 >= -1e-9 && sgn * s2 >= -1e-9 && sgn * s3 >= -1e-9;
    };
    for (int w = 0; w < 3; ++w) {
        const int u = (w + 1) % 3, v = (w + 2) % 3;
        const auto rel = geometry::circle_relation(disks[u], disks[v]);
        if (rel.kind != geometry::CircleRelationKind::Digon) continue;
        for (const Vec2& p : {rel.vertex1, rel.vertex2})
            if (in_triangle(p) && !covered(p))
                throw HypothesisError("coverage", p,
                                      "core_triangle_check: uncovered digon vertex in triangle");
    }

    const auto met = triangle_metrics({xa, xb, xc});
    TriangleCheck out;
    out.lhs_over_delta = 0.5 *
                         (met.angle_a * bi.radius * bi.radius +
                          met.angle_b * bj.radius * bj.radius +
                          met.angle_c * bk.radius * bk.radius) /
                         met.area;
    out.bound = coefficients(mu).sigma_core;
    const double rho = bi.radius;
    bool tight = std::abs(bj.radius - rho) <= eps_geom && std::abs(bk.radius - rho) <= eps_geom;
    for (int u = 0; u < 3 && tight; ++u)
        for (int v = u + 1; v < 3; ++v)
            if (std::abs((disks[v].center - disks[u].center).norm() - (1.0 + mu) * rho) >
                eps_geom)
                tight = false;
    out.tight = tight;
    if (out.lhs_over_delta > out.bound + 1e-9)
        throw std::logic_error("core_triangle_check: certified inequality violated");
    return out;
}

PackingReport prop1_packing_check(const SymmetricGauge& K,
                                  const std::vector<GaugeHomothet>& homothets, double mu,
                                  const Vec2& window_center, double window_radius) {
    check_gauge(K);
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("prop1_packing_check: mu must lie in (0, 1)");
    if (homothets.empty())
        throw std::invalid_argument("prop1_packing_check: empty homothet family");
    if (!(window_radius > 0.0))
        throw std::invalid_argument("prop1_packing_check: window radius must be positive");
    for (const auto& h : homothets)
        if (!(h.lambda > 0.0))
            throw std::invalid_argument("prop1_packing_check: non-positive homothety factor");

    PackingReport report;
    report.density_bound = 4.0 / ((1.0 + mu) * (1.0 + mu));
    const int n = static_cast<int>(homothets.size());
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double norm = gauge_norm(K, homothets[j].center - homothets[i].center);
            const double lo = std::min(homothets[i].lambda, homothets[j].lambda);
            const double hi = std::max(homothets[i].lambda, homothets[j].lambda);
            const double required = hi + mu * lo;
            if (norm < required - 1e-9)
                report.arrangement_violations.push_back({i, j, required, norm});
            const double slack = norm - 0.5 * (1.0 + mu) *
                                            (homothets[i].lambda + homothets[j].lambda);
            if (first || slack < report.min_packing_slack) {
                report.min_packing_slack = slack;
                report.min_pair = {i, j};
                first = false;
            }
        }
    }
    report.arrangement_valid = report.arrangement_violations.empty();
    report.packing_ok = report.min_packing_slack >= -1e-9;

    const double areaK = polygon_area(K.vertices);
    double mass = 0.0;
    for (const auto& h : homothets) {
        if ((h.center - window_center).norm() <= window_radius) {
            ++report.n_in_window;
            mass += h.lambda * h.lambda * areaK;
        }
    }
    report.window_density = mass / (pi * window_radius * window_radius);
    return report;
}

}  // namespace minkarr::bounds
