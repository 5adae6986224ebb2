#pragma once

#include "minkarr/geometry.hpp"

#include <utility>
#include <vector>

namespace minkarr::arrangement {

using geometry::Disk;
using geometry::Vec2;

// Tolerance for comparisons in the inscribed-family parameter t.
inline constexpr double eps_param = 1e-9;

// Family of open disks satisfying the generalized Minkowski condition
// |x_i - x_j| >= max(r_i, r_j) + mu * min(r_i, r_j) for some mu in (0, 1).
struct MuArrangement {
    double mu = 0.0;
    std::vector<Disk> disks;
};

struct Violation {
    int i = 0, j = 0;
    double required_distance = 0.0;
    double actual_distance = 0.0;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
};

// Open-disk semantics: center distance exactly equal to the bound is legal.
// A pair violates when its distance falls below the bound by more than
// eps_geom (or when centers coincide).  Throws std::invalid_argument for
// mu outside (0, 1), an empty family, or non-positive radii.
ValidationReport validate(const std::vector<Disk>& disks, double mu);

// Convenience constructor; throws std::invalid_argument when validation fails.
MuArrangement make_arrangement(std::vector<Disk> disks, double mu);

// Digon: connected component of B_i ^ B_j (both disks open, properly
// overlapping).  It is free when no third disk contains it, and thick when
// additionally r_i = r_j and |x_i - x_j| = (1 + mu) r_i, up to eps_geom.
struct Digon {
    int i = 0, j = 0;  // i < j
    Vec2 vertex1 = Vec2::Zero();  // circle_relation(disks[i], disks[j]) order
    Vec2 vertex2 = Vec2::Zero();
    bool free = false;
    bool thick = false;
    std::vector<int> contained_in;  // disks whose closure contains the digon
};

Digon classify_digon(const MuArrangement& arr, int i, int j);
std::vector<Digon> find_digons(const MuArrangement& arr);

// One member of the inscribed disk family of a digon: internally tangent to
// both defining disks, degenerating to vertex1 as t -> 0+ and to vertex2 as
// t -> 1-; radius is maximal at t = 1/2.
struct InscribedFamilyPoint {
    double t = 0.0;
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
};

InscribedFamilyPoint inscribed_disk(const Disk& di, const Disk& dj, double t);

// sup { tau in (0,1) : B(t(tau)) subset of closure(dk) } where t(tau) walks the
// family from vertex1 (from_vertex1) or from vertex2 (otherwise).  Returns 0
// when containment already fails arbitrarily close to the vertex and 1 when it
// never fails.
double containment_sup(const Disk& di, const Disk& dj, const Disk& dk, bool from_vertex1);

// Pairs (i, j) whose digon is free and whose inscribed family contains a
// member in no other disk of the arrangement.
std::vector<std::pair<int, int>> adjacency_pairs(const MuArrangement& arr);

// Connected components of the union of the open disks, each sorted
// ascending; components ordered by smallest member.
std::vector<std::vector<int>> connected_components(const MuArrangement& arr);

}  // namespace minkarr::arrangement
