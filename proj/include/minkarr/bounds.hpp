#pragma once

#include "minkarr/decomposition.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minkarr::bounds {

using arrangement::MuArrangement;
using geometry::Disk;
using geometry::SymmetricGauge;
using geometry::Vec2;

// Relative tolerance used for the equality verdict of the area bound.
inline constexpr double tol_eq = 1e-6;

// sqrt(3) - 1, the threshold between the proved and the conjectural regime.
inline constexpr double mu_star = 0.73205080756887729352744634150587237;

struct Coefficients {
    double mu = 0.0;
    double sigma_core = 0.0;   // 2*pi / (sqrt(3) (1+mu)^2)
    double sigma_shell = 0.0;  // 4*arccos((1+mu)/2) / ((1+mu) sqrt((3+mu)(1-mu)))
};

Coefficients coefficients(double mu);  // mu in [0, 1)

struct BoundReport {
    double total_disk_area = 0.0;  // T = sum pi r_i^2
    double rhs = 0.0;
    double slack = 0.0;  // rhs - T
    bool equality = false;
    bool remark3_mode = false;  // mu > sqrt(3)-1: core term dropped, conjectural
    std::vector<std::pair<int, int>> non_thick_free_digons;
    decomposition::RegionDecomposition decomposition;
};

// Sharp area bound T <= sigma_core*area(C) + sigma_shell*area(I) + area(O);
// equality holds (within tolerance, relative to max(T, 1)) iff every free
// digon is thick.
BoundReport theorem_bound(const MuArrangement& arr, double tolerance = tol_eq);

struct TriangleCheck {
    double lhs_over_delta = 0.0;  // disk-area functional divided by triangle area
    double bound = 0.0;
    bool tight = false;
};

// Lemma check for a digon pair: (alpha_i r_i^2 + alpha_j r_j^2) / (2 Delta)
// against sigma_shell, over the triangle (x_i, x_j, digon vertex).
// Throws std::invalid_argument when the pair bounds no digon or violates the
// mu-condition, std::logic_error when the certified inequality fails.
TriangleCheck shell_triangle_check(double rho_i, double rho_j, double mu,
                                   double center_distance);

struct HypothesisError : std::runtime_error {
    std::string hypothesis;
    Vec2 witness;
    HypothesisError(std::string hyp, const Vec2& w, const std::string& msg)
        : std::runtime_error(msg), hypothesis(std::move(hyp)), witness(w) {}
};

// Lemma check for a triple covering its center triangle:
// (1/2) sum alpha_u r_u^2 / Delta <= sigma_core.  Hypotheses (pairwise
// mu-condition, pairwise intersection, no lens inside the third disk,
// coverage of the center triangle) are verified first; a failure raises
// HypothesisError naming the hypothesis and a witness point.
TriangleCheck core_triangle_check(const Disk& bi, const Disk& bj, const Disk& bk, double mu);

struct GaugeHomothet {
    Vec2 center = Vec2::Zero();
    double lambda = 1.0;
};

struct PackingReport {
    bool arrangement_valid = true;  // gauge mu-condition holds pairwise
    std::vector<arrangement::Violation> arrangement_violations;
    bool packing_ok = true;  // ||x_i-x_j||_K >= (1+mu)(l_i+l_j)/2 pairwise
    double min_packing_slack = 0.0;
    std::pair<int, int> min_pair{-1, -1};
    int n_in_window = 0;
    double window_density = 0.0;  // sum l_i^2 area(K) / (pi R^2), centers in window
    double density_bound = 0.0;   // 4/(1+mu)^2
};

// Check of the gauge packing statement for homothets x_i + l_i K.
PackingReport prop1_packing_check(const SymmetricGauge& K,
                                  const std::vector<GaugeHomothet>& homothets, double mu,
                                  const Vec2& window_center, double window_radius);

}  // namespace minkarr::bounds
