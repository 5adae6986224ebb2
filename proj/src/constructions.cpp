#include "minkarr/constructions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace minkarr::constructions {

using geometry::Disk;
using geometry::eps_geom;
using geometry::pi;

namespace {

constexpr double row_height = 0.86602540378443864676;  // sqrt(3)/2

// Unit triangular lattice points k*(1,0) + m*(1/2, sqrt(3)/2) within the
// window, scaled by s; enumerated row-major (m, then k ascending).
std::vector<Vec2> lattice_centers(const Window& window, double s) {
    std::vector<Vec2> pts;
    const double R = window.radius / s;
    const Vec2 wc = window.center / s;
    const int m_lo = static_cast<int>(std::floor((wc.y() - R) / row_height)) - 2;
    const int m_hi = static_cast<int>(std::ceil((wc.y() + R) / row_height)) + 2;
    const double rr = R * R + 1e-12;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double y = m * row_height;
        const double xoff = 0.5 * m;
        const int k_lo = static_cast<int>(std::floor(wc.x() - R - xoff)) - 2;
        const int k_hi = static_cast<int>(std::ceil(wc.x() + R - xoff)) + 2;
        for (int k = k_lo; k <= k_hi; ++k) {
            const Vec2 p(k + xoff, y);
            if ((p - wc).squaredNorm() <= rr) pts.push_back(s * p);
        }
    }
    return pts;
}

void check_window(const Window& window) {
    if (!(window.radius > 0.0))
        throw std::invalid_argument("constructions: window radius must be positive");
}

void check_mu(double mu) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("constructions: mu must lie in (0, 1)");
}

}  // namespace

MuArrangement hex_arrangement(double mu, const Window& window) {
    check_mu(mu);
    check_window(window);
    MuArrangement arr;
    arr.mu = mu;
    const double rho = 1.0 / (1.0 + mu);
    for (const auto& c : lattice_centers(window, 1.0)) arr.disks.push_back({c, rho});
    if (arr.disks.empty())
        throw std::invalid_argument("hex_arrangement: window contains no lattice point");
    return arr;
}

MuArrangement iterate_hex(double mu, double tau, int k, const Window& window) {
    check_mu(mu);
    check_window(window);
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("iterate_hex: tau must lie in (0, 1)");
    if (k < 0) throw std::invalid_argument("iterate_hex: negative stage count");
    MuArrangement arr = hex_arrangement(mu, window);
    const double rho = 1.0 / (1.0 + mu);
    double s = 1.0;
    for (int stage = 1; stage <= k; ++stage) {
        s *= tau;
        const double r = s * rho;
        const std::size_t snapshot = arr.disks.size();
        for (const auto& c : lattice_centers(window, s)) {
            bool ok = true;
            for (std::size_t e = 0; e < snapshot && ok; ++e)
                if ((c - arr.disks[e].center).norm() < arr.disks[e].radius + r - eps_geom)
                    ok = false;
            if (ok) arr.disks.push_back({c, r});
        }
    }
    return arr;
}

RandomResult random_arrangement(double mu, const Window& window, int target_n,
                                std::uint64_t seed) {
    check_mu(mu);
    check_window(window);
    if (target_n < 1) throw std::invalid_argument("random_arrangement: target_n must be >= 1");
    std::mt19937_64 gen(seed);
    auto uniform = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };

    RandomResult out;
    out.arrangement.mu = mu;
    auto& disks = out.arrangement.disks;
    const long long max_proposals = 10000LL * target_n;
    const double log_rmin = std::log(0.3);
    for (long long p = 0; p < max_proposals && static_cast<int>(disks.size()) < target_n; ++p) {
        const double rad = window.radius * std::sqrt(uniform());
        const double ang = 2.0 * pi * uniform();
        const Vec2 c = window.center + rad * Vec2(std::cos(ang), std::sin(ang));
        const double r = std::exp(log_rmin * (1.0 - uniform()));
        bool ok = true;
        for (const auto& d : disks) {
            const double lo = std::min(r, d.radius), hi = std::max(r, d.radius);
            if ((c - d.center).norm() < hi + mu * lo) {
                ok = false;
                break;
            }
        }
        if (ok) disks.push_back({c, r});
    }
    out.shortfall = target_n - static_cast<int>(disks.size());
    return out;
}

DensityEstimate density_estimate(const MuArrangement& arr, const Window& window) {
    check_window(window);
    std::vector<Disk> included;
    for (const auto& d : arr.disks)
        if ((d.center - window.center).norm() + d.radius <= window.radius + eps_geom)
            included.push_back(d);
    if (included.empty())
        throw std::invalid_argument("density_estimate: no disk lies entirely in the window");
    DensityEstimate est;
    est.n_disks = static_cast<int>(included.size());
    double mass = 0.0;
    for (const auto& d : included) mass += pi * d.radius * d.radius;
    est.delta = mass / (pi * window.radius * window.radius);
    est.delta_U = mass / geometry::union_area(included).area;
    return est;
}

}  // namespace minkarr::constructions
