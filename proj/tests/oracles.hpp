#pragma once

// Independent reference computations used by the test suites: quasi-random
// sampling, Monte-Carlo area estimates, a brute-force gauge norm, and the
// shared random-arrangement corpus.

#include "minkarr/bounds.hpp"
#include "minkarr/constructions.hpp"
#include "minkarr/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracles {

using minkarr::arrangement::MuArrangement;
using minkarr::geometry::Disk;
using minkarr::geometry::Vec2;

inline double halton(long long index, int base) {
    double f = 1.0, r = 0.0;
    for (long long i = index; i > 0; i /= base) {
        f /= base;
        r += f * static_cast<double>(i % base);
    }
    return r;
}

struct Bbox {
    double lo_x = 0.0, lo_y = 0.0, hi_x = 0.0, hi_y = 0.0;
    double area() const { return (hi_x - lo_x) * (hi_y - lo_y); }
};

inline Bbox disk_bbox(const std::vector<Disk>& disks) {
    Bbox b{1e300, 1e300, -1e300, -1e300};
    for (const auto& d : disks) {
        b.lo_x = std::min(b.lo_x, d.center.x() - d.radius);
        b.lo_y = std::min(b.lo_y, d.center.y() - d.radius);
        b.hi_x = std::max(b.hi_x, d.center.x() + d.radius);
        b.hi_y = std::max(b.hi_y, d.center.y() + d.radius);
    }
    return b;
}

struct McEstimate {
    double value = 0.0;
    double sigma = 0.0;  // iid-sampling standard error for the same count
};

// Quasi-random (Halton 2,3) union-area estimate; the reported sigma is the
// binomial standard error, an upper bound for the Halton discrepancy error.
inline McEstimate mc_union_area(const std::vector<Disk>& disks, long long n) {
    const Bbox box = disk_bbox(disks);
    long long hits = 0;
    for (long long s = 1; s <= n; ++s) {
        const Vec2 p(box.lo_x + (box.hi_x - box.lo_x) * halton(s, 2),
                     box.lo_y + (box.hi_y - box.lo_y) * halton(s, 3));
        for (const auto& d : disks) {
            if ((p - d.center).squaredNorm() < d.radius * d.radius) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(n);
    McEstimate est;
    est.value = box.area() * frac;
    est.sigma = box.area() * std::sqrt(std::max(frac * (1.0 - frac), 1e-12) /
                                       static_cast<double>(n));
    return est;
}

struct RegionEstimate {
    McEstimate outer, inner, core, all;  // all = whole union
};

// Classify quasi-random points against the decomposition pieces directly:
// membership in any outer sector, any shell triangle, and (for the core) in
// the union but in neither.  Disagreement with the exact areas flags both
// wrong areas and overlapping pieces.
inline RegionEstimate mc_region_areas(const MuArrangement& arr,
                                      const minkarr::decomposition::RegionDecomposition& dec,
                                      long long n) {
    const Bbox box = disk_bbox(arr.disks);
    long long in_u = 0, in_o = 0, in_i = 0, in_c = 0;
    const double two_pi = minkarr::geometry::two_pi;
    for (long long s = 1; s <= n; ++s) {
        const Vec2 p(box.lo_x + (box.hi_x - box.lo_x) * halton(s, 2),
                     box.lo_y + (box.hi_y - box.lo_y) * halton(s, 3));
        bool in_union = false;
        for (const auto& d : arr.disks)
            if ((p - d.center).squaredNorm() < d.radius * d.radius) {
                in_union = true;
                break;
            }
        if (!in_union) continue;
        ++in_u;
        bool in_sector = false;
        for (const auto& sec : dec.outer.sectors) {
            const Disk& d = arr.disks[sec.disk];
            const Vec2 w = p - d.center;
            if (w.norm() > d.radius) continue;
            double ang = std::atan2(w.y(), w.x()) - sec.arc.start;
            ang = std::fmod(ang, two_pi);
            if (ang < 0.0) ang += two_pi;
            if (ang <= sec.arc.sweep) {
                in_sector = true;
                break;
            }
        }
        bool in_triangle = false;
        for (const auto& t : dec.inner.triangles) {
            const Vec2 a = arr.disks[t.i].center, b = arr.disks[t.j].center, c = t.q;
            const double d1 = minkarr::geometry::cross2(b - a, p - a);
            const double d2 = minkarr::geometry::cross2(c - b, p - b);
            const double d3 = minkarr::geometry::cross2(a - c, p - c);
            const bool neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
            const bool pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
            if (!(neg && pos)) {
                in_triangle = true;
                break;
            }
        }
        if (in_sector) ++in_o;
        if (in_triangle) ++in_i;
        if (!in_sector && !in_triangle) ++in_c;
    }
    auto wrap = [&](long long hits) {
        const double frac = static_cast<double>(hits) / static_cast<double>(n);
        McEstimate est;
        est.value = box.area() * frac;
        est.sigma = box.area() * std::sqrt(std::max(frac * (1.0 - frac), 1e-12) /
                                           static_cast<double>(n));
        return est;
    };
    RegionEstimate est;
    est.all = wrap(in_u);
    est.outer = wrap(in_o);
    est.inner = wrap(in_i);
    est.core = wrap(in_c);
    return est;
}

// Independent gauge norm: solve v = s * (a + u (b - a)) for each polygon
// edge and take the ray-boundary crossing with u in [0, 1].
inline double brute_gauge_norm(const minkarr::geometry::SymmetricGauge& K, const Vec2& v) {
    if (v.norm() == 0.0) return 0.0;
    const int n = static_cast<int>(K.vertices.size());
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec2 a = K.vertices[k];
        const Vec2 e = K.vertices[(k + 1) % n] - a;
        // v = s a + w e with w = s u
        const double det = minkarr::geometry::cross2(a, e);
        if (std::abs(det) < 1e-14) continue;
        const double s = minkarr::geometry::cross2(v, e) / det;
        const double w = minkarr::geometry::cross2(a, v) / det;
        if (s > 0.0 && w >= -1e-12 && w <= s + 1e-12) best = std::max(best, s);
    }
    return best;
}

inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a == b; }),
              pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    std::vector<Vec2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 &&
               minkarr::geometry::cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower &&
               minkarr::geometry::cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Shared randomized corpus: window radius 8, mu cycling over four values
// including the threshold, target size 5..40.
inline MuArrangement corpus_arrangement(int seed) {
    static const double mus[4] = {0.1, 0.25, 0.5, minkarr::bounds::mu_star};
    const double mu = mus[seed % 4];
    const int target = 5 + (7 * seed) % 36;
    minkarr::constructions::Window window{{0.0, 0.0}, 8.0};
    return minkarr::constructions::random_arrangement(mu, window, target,
                                                      static_cast<std::uint64_t>(seed))
        .arrangement;
}

}  // namespace oracles
