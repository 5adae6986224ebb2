#pragma once

#include "minkarr/arrangement.hpp"

#include <string>
#include <vector>

namespace minkarr::decomposition {

using arrangement::MuArrangement;
using geometry::AngleInterval;
using geometry::Disk;
using geometry::Vec2;

// Circular sector of one disk between the disk center and an uncovered
// boundary arc of the union.
struct OuterSector {
    int disk = 0;
    AngleInterval arc;
};

struct OuterShell {
    std::vector<OuterSector> sectors;
    double area = 0.0;
};

// Triangle spanned by the two centers of a digon pair and one of its
// vertices q lying on the boundary of the union.
struct ShellTriangle {
    int i = 0, j = 0;
    Vec2 q = Vec2::Zero();
    double area = 0.0;
};

struct InnerShell {
    std::vector<ShellTriangle> triangles;
    double area = 0.0;
};

// Convex polygon of disk centers around a hole of the union, discovered from
// the maximal inscribed disk of an adjacent digon pair at an interior vertex.
struct CorePolygon {
    std::vector<int> vertex_disks;  // ccw around the inscribed center, 3..5 entries
    Disk inscribed;                 // maximal inscribed family member B(t0)
    Vec2 interior_vertex = Vec2::Zero();
    double area = 0.0;
};

struct CoreSet {
    std::vector<CorePolygon> polygons;
    double area = 0.0;  // sum of accepted polygon areas
    std::vector<std::string> diagnostics;
};

// q lies on the boundary of the union iff no disk other than skip_i / skip_j
// holds it strictly in its interior (strictness margin eps_geom).
bool on_union_boundary(const MuArrangement& arr, const Vec2& q, int skip_i, int skip_j);

OuterShell outer_shell(const MuArrangement& arr);
InnerShell inner_shell(const MuArrangement& arr);
CoreSet core_polygons(const MuArrangement& arr);

struct RegionDecomposition {
    OuterShell outer;
    InnerShell inner;
    CoreSet core;
    double area_U = 0.0;
    double area_O = 0.0;
    double area_I = 0.0;
    double area_C = 0.0;  // authoritative: area_U - area_O - area_I
    std::vector<std::string> diagnostics;
};

RegionDecomposition decompose(const MuArrangement& arr);

}  // namespace minkarr::decomposition
