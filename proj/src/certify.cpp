#include "minkarr/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace minkarr::certify {

using geometry::pi;
using geometry::Vec2;

namespace {

constexpr double domain_slop = 1e-12;

void check_domain(double rho, double mu) {
    if (!(rho > 0.0 && rho <= 1.0 + domain_slop))
        throw std::domain_error("shell function: rho outside (0, 1]");
    if (!(mu >= -domain_slop && mu <= mu_star + domain_slop))
        throw std::domain_error("shell function: mu outside [0, sqrt(3)-1]");
}

double safe_acos(double x) {
    if (std::abs(x) > 1.0 + domain_slop)
        throw std::runtime_error("shell function: arccos argument left [-1, 1]");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

}  // namespace

FG shell_fg(double rho, double mu) {
    check_domain(rho, mu);
    const double c = 1.0 + mu * rho;
    const double A = (1.0 + c * c - rho * rho) / (2.0 * c);
    const double B = (rho * rho + c * c - 1.0) / (2.0 * rho * c);
    FG out;
    out.f = 0.5 * safe_acos(A) + 0.5 * rho * rho * safe_acos(B);
    out.g = rho * std::sqrt((2.0 + rho + mu * rho) * (2.0 - rho + mu * rho) * (1.0 - mu * mu));
    return out;
}

double f_partial_rho(double rho, double mu) {
    check_domain(rho, mu);
    const double c = 1.0 + mu * rho;
    const double B = (rho * rho + c * c - 1.0) / (2.0 * rho * c);
    const double g = shell_fg(rho, mu).g;
    return rho * safe_acos(B) +
           rho * (1.0 - mu * mu) * (2.0 + mu * rho - rho * rho) / (2.0 * c * g);
}

double g_partial_rho(double rho, double mu) {
    check_domain(rho, mu);
    const double S = (2.0 + rho + mu * rho) * (2.0 - rho + mu * rho);
    return std::sqrt(1.0 - mu * mu) *
           (8.0 + 12.0 * mu * rho - 4.0 * rho * rho * (1.0 - mu * mu)) / (2.0 * std::sqrt(S));
}

double shell_h(double rho, double mu) {
    const auto [f, g] = shell_fg(rho, mu);
    return (f_partial_rho(rho, mu) * g - g_partial_rho(rho, mu) * f) / 4.0;
}

CertificationGrid certify_h_positive(int n_rho, int n_mu, int threads) {
    if (n_rho < 2 || n_mu < 2)
        throw std::invalid_argument("certify_h_positive: grid needs at least 2x2 points");
    CertificationGrid grid;
    grid.n_rho = n_rho;
    grid.n_mu = n_mu;
    const double drho = (grid.rho_max - grid.rho_min) / (n_rho - 1);
    const double dmu = (grid.mu_max - grid.mu_min) / (n_mu - 1);

    int nthreads = threads > 0
                       ? threads
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = std::min(nthreads, n_rho);

    struct Row {
        double min = std::numeric_limits<double>::infinity();
        int jmin = -1;
        int nan_j = -1;
    };
    std::vector<Row> rows(n_rho);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int r = next.fetch_add(1, std::memory_order_relaxed);
            if (r >= n_rho) return;
            const double rho = (r == n_rho - 1) ? grid.rho_max : grid.rho_min + r * drho;
            Row row;
            for (int j = 0; j < n_mu; ++j) {
                const double mu = (j == n_mu - 1) ? grid.mu_max : grid.mu_min + j * dmu;
                const double h = shell_h(rho, mu);
                if (!std::isfinite(h)) {
                    row.nan_j = j;
                    break;
                }
                if (h < row.min) {
                    row.min = h;
                    row.jmin = j;
                }
            }
            rows[r] = row;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // deterministic reduction in row order, independent of the thread count
    grid.grid_min = std::numeric_limits<double>::infinity();
    int imin = -1, jmin = -1;
    for (int r = 0; r < n_rho; ++r) {
        if (rows[r].nan_j >= 0) {
            const double rho = (r == n_rho - 1) ? grid.rho_max : grid.rho_min + r * drho;
            const double mu =
                (rows[r].nan_j == n_mu - 1) ? grid.mu_max : grid.mu_min + rows[r].nan_j * dmu;
            std::ostringstream os;
            os << "certify_h_positive: h is NaN at rho=" << rho << ", mu=" << mu;
            throw std::runtime_error(os.str());
        }
        if (rows[r].min < grid.grid_min) {
            grid.grid_min = rows[r].min;
            imin = r;
            jmin = rows[r].jmin;
        }
    }
    grid.argmin_rho = (imin == n_rho - 1) ? grid.rho_max : grid.rho_min + imin * drho;
    grid.argmin_mu = (jmin == n_mu - 1) ? grid.mu_max : grid.mu_min + jmin * dmu;
    grid.global_lower_bound = grid.grid_min - grid.lipschitz_rho * drho / 2.0 -
                              grid.lipschitz_mu * dmu / 2.0 - grid.rounding_slack;
    grid.verdict = grid.global_lower_bound > 0.0;
    return grid;
}

RefinedMin refine_minimum(double rho0, double mu0, int rounds) {
    const double rho_lo = 0.2, rho_hi = 1.0, mu_lo = 0.0, mu_hi = mu_star;
    auto clamp_point = [&](double& r, double& m) {
        r = std::clamp(r, rho_lo, rho_hi);
        m = std::clamp(m, mu_lo, mu_hi);
    };
    double r = rho0, m = mu0;
    clamp_point(r, m);
    RefinedMin best{shell_h(r, m), r, m};
    double rad_r = 1e-3, rad_m = 1e-3;
    for (int round = 0; round < rounds; ++round) {
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                double rr = best.rho + rad_r * a / 4.0;
                double mm = best.mu + rad_m * b / 4.0;
                clamp_point(rr, mm);
                const double h = shell_h(rr, mm);
                if (h < best.value) best = {h, rr, mm};
            }
        }
        rad_r *= 0.5;
        rad_m *= 0.5;
    }
    return best;
}

double case1_margin(double mu) {
    if (!(mu >= 0.0 && mu <= mu_star + domain_slop))
        throw std::domain_error("case1_margin: mu outside [0, sqrt(3)-1]");
    const double om = 1.0 + mu;
    const double sigma_shell =
        4.0 * std::acos(om / 2.0) / (om * std::sqrt((3.0 + mu) * (1.0 - mu)));
    return sigma_shell - (7.0 - mu) / (5.0 + mu);
}

double fab(double A, double B, double gamma) {
    if (!(A > 0.0 && B > 0.0))
        throw std::invalid_argument("fab: side lengths must be positive");
    if (!(gamma > 0.0 && gamma < pi))
        throw std::invalid_argument("fab: gamma must lie in (0, pi)");
    const Vec2 z(0.0, 0.0);
    const Vec2 x(A * std::cos(gamma), A * std::sin(gamma));
    const Vec2 y(B, 0.0);
    const auto m = geometry::triangle_metrics({x, y, z});
    return (m.angle_a * A * A + m.angle_b * B * B) / m.area;
}

bool fab_monotonicity(double A, double B, int gamma_samples) {
    if (gamma_samples < 2)
        throw std::invalid_argument("fab_monotonicity: need at least 2 samples");
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= gamma_samples; ++k) {
        const double gamma = pi * k / (gamma_samples + 1);
        const double value = fab(A, B, gamma);
        if (!(value < prev)) return false;
        prev = value;
    }
    return true;
}

namespace {

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

}  // namespace

NocoreProbe nocore_probe(const geometry::Disk& a, const geometry::Disk& b,
                         const geometry::Disk& c) {
    const geometry::Disk disks[3] = {a, b, c};
    for (const auto& d : disks)
        if (!geometry::disk_valid(d)) throw std::invalid_argument("nocore_probe: invalid disk");
    const Vec2 xa = a.center, xb = b.center, xc = c.center;
    if (std::abs(geometry::cross2(xb - xa, xc - xa)) <=
        1e-12 * std::max((xb - xa).norm() * (xc - xa).norm(), 1e-300))
        throw std::invalid_argument("nocore_probe: collinear centers");

    NocoreProbe probe;
    probe.max_nu = std::numeric_limits<double>::infinity();
    probe.pairwise_intersecting = true;
    for (int u = 0; u < 3; ++u) {
        for (int v = u + 1; v < 3; ++v) {
            const double d = (disks[v].center - disks[u].center).norm();
            const double lo = std::min(disks[u].radius, disks[v].radius);
            const double hi = std::max(disks[u].radius, disks[v].radius);
            probe.max_nu = std::min(probe.max_nu, (d - hi) / lo);
            if (d > disks[u].radius + disks[v].radius + geometry::eps_geom)
                probe.pairwise_intersecting = false;
        }
    }

    auto covered = [&](const Vec2& p) {
        for (const auto& d : disks)
            if ((p - d.center).norm() <= d.radius + geometry::eps_geom) return true;
        return false;
    };
    auto in_triangle = [&](const Vec2& p) {
        const double sgn = geometry::cross2(xb - xa, xc - xa) > 0.0 ? 1.0 : -1.0;
        return sgn * geometry::cross2(xb - xa, p - xa) >= -1e-9 &&
               sgn * geometry::cross2(xc - xb, p - xb) >= -1e-9 &&
               sgn * geometry::cross2(xa - xc, p - xc) >= -1e-9;
    };

    bool covers = covered(xa) && covered(xb) && covered(xc);
    // quasi-random interior samples (folded Halton points in barycentric form)
    for (int s = 1; s <= 100000 && covers; ++s) {
        double u = halton(s, 2), v = halton(s, 3);
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        if (!covered(xa + u * (xb - xa) + v * (xc - xa))) covers = false;
    }
    // radical points of each pair (equal power, most distant from both disks
    // along the center line) and the radical center
    for (int u = 0; u < 3 && covers; ++u) {
        for (int v = u + 1; v < 3 && covers; ++v) {
            const Vec2 delta = disks[v].center - disks[u].center;
            const double d = delta.norm();
            const double ru = disks[u].radius, rv = disks[v].radius;
            const double s = (d * d + ru * ru - rv * rv) / (2.0 * d);
            const Vec2 p = disks[u].center + (s / d) * delta;
            if (in_triangle(p) && !covered(p)) covers = false;
            const auto rel = geometry::circle_relation(disks[u], disks[v]);
            if (rel.kind == geometry::CircleRelationKind::Digon)
                for (const Vec2& q : {rel.vertex1, rel.vertex2})
                    if (in_triangle(q) && !covered(q)) covers = false;
        }
    }
    if (covers) {
        // radical center: intersection of the two radical axes
        const Eigen::Matrix2d M = (Eigen::Matrix2d() << 2.0 * (xb - xa).transpose(),
                                   2.0 * (xc - xa).transpose())
                                      .finished();
        const auto power = [&](int u) {
            return disks[u].center.squaredNorm() - disks[u].radius * disks[u].radius;
        };
        const Eigen::Vector2d rhs(power(1) - power(0), power(2) - power(0));
        if (std::abs(M.determinant()) > 1e-14) {
            const Vec2 p = M.colPivHouseholderQr().solve(rhs);
            if (in_triangle(p) && !covered(p)) covers = false;
        }
    }
    probe.covers_center_triangle = covers;
    return probe;
}

}  // namespace minkarr::certify
