#pragma once

#include "minkarr/arrangement.hpp"

#include <cstdint>

namespace minkarr::constructions {

using arrangement::MuArrangement;
using geometry::Vec2;

struct Window {
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
};

// Triangular-lattice family of disks of radius 1/(1+mu) on the unit lattice
// spanned by (1, 0) and (1/2, sqrt(3)/2), restricted to centers within the
// window.  Every nearest-neighbor digon of the result is thick.
MuArrangement hex_arrangement(double mu, const Window& window);

// k greedy refinement stages over hex_arrangement: stage m proposes the
// tau^m-scaled lattice family (centers within the window) and keeps every
// member that does not overlap the disks present before the stage
// (d >= r1 + r2 - eps_geom); members of one stage satisfy the mu-condition
// among themselves by scaling.
MuArrangement iterate_hex(double mu, double tau, int k, const Window& window);

struct RandomResult {
    MuArrangement arrangement;
    int shortfall = 0;  // target_n minus the number actually placed
};

// Rejection sampler: centers uniform in the window, radii log-uniform in
// [0.3, 1]; a proposal is kept iff the mu-condition holds against all kept
// disks.  Deterministic for a fixed seed; gives up after 10^4 * target_n
// proposals and reports the shortfall.
RandomResult random_arrangement(double mu, const Window& window, int target_n,
                                std::uint64_t seed);

struct DensityEstimate {
    double delta = 0.0;    // sum pi r^2 over included disks / window area
    double delta_U = 0.0;  // sum pi r^2 / area of the union of included disks
    int n_disks = 0;       // disks entirely inside the window
};

// Window density of the arrangement counting only disks entirely inside the
// window; throws std::invalid_argument when no disk qualifies.
DensityEstimate density_estimate(const MuArrangement& arr, const Window& window);

}  // namespace minkarr::constructions
