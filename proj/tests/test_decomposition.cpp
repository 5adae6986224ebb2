#include "minkarr/decomposition.hpp"

#include "minkarr/constructions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkarr::decomposition;
using minkarr::arrangement::MuArrangement;
using minkarr::constructions::Window;
using minkarr::geometry::Disk;
using minkarr::geometry::Vec2;
using minkarr::geometry::pi;

namespace {

MuArrangement hex_patch(double mu) {
    const double rho = 1.0 / (1.0 + mu);
    MuArrangement arr;
    arr.mu = mu;
    arr.disks.push_back({{0.0, 0.0}, rho});
    for (int k = 0; k < 6; ++k)
        arr.disks.push_back({{std::cos(k * pi / 3.0), std::sin(k * pi / 3.0)}, rho});
    return arr;
}

// three unit disks with centers (1+mu) apart: every digon thick
MuArrangement thick_triple(double mu) {
    const double s = 1.0 + mu;
    MuArrangement arr;
    arr.mu = mu;
    arr.disks = {{{0.0, 0.0}, 1.0},
                 {{s, 0.0}, 1.0},
                 {{0.5 * s, s * std::sqrt(3.0) / 2.0}, 1.0}};
    return arr;
}

}  // namespace

TEST_CASE("single disk: everything is outer shell") {
    MuArrangement arr;
    arr.mu = 0.5;
    arr.disks = {{{2.0, -1.0}, 0.75}};
    const auto dec = decompose(arr);
    CHECK(dec.area_U == doctest::Approx(pi * 0.5625).epsilon(1e-12));
    CHECK(dec.area_O == doctest::Approx(pi * 0.5625).epsilon(1e-12));
    CHECK(dec.area_I == 0.0);
    CHECK(std::abs(dec.area_C) < 1e-12);
    REQUIRE(dec.outer.sectors.size() == 1);
    CHECK(dec.outer.sectors[0].arc.sweep == doctest::Approx(2.0 * pi).epsilon(1e-12));
    CHECK(dec.inner.triangles.empty());
    CHECK(dec.core.polygons.empty());
    CHECK(dec.diagnostics.empty());
}

TEST_CASE("two-disk digon: frozen areas") {
    MuArrangement arr;
    arr.mu = 0.5;
    arr.disks = {{{0.0, 0.0}, 1.0}, {{1.5, 0.0}, 1.0}};
    const auto dec = decompose(arr);
    CHECK(dec.area_U == doctest::Approx(5.829873553201976).epsilon(1e-13));
    CHECK(dec.area_O == doctest::Approx(4.837716811552759).epsilon(1e-12));
    CHECK(dec.area_I == doctest::Approx(0.992156741649221).epsilon(1e-12));
    CHECK(std::abs(dec.area_C) < 1e-12);
    CHECK(dec.core.polygons.empty());
    REQUIRE(dec.inner.triangles.size() == 2);
    // both digon vertices lie on the union boundary; each triangle has
    // base d = 1.5 and height h = sqrt(1 - 0.5625)
    const double h = std::sqrt(1.0 - 0.5625);
    for (const auto& t : dec.inner.triangles)
        CHECK(t.area == doctest::Approx(0.75 * h).epsilon(1e-12));
    CHECK(on_union_boundary(arr, dec.inner.triangles[0].q, 0, 1));
    CHECK_FALSE(on_union_boundary(arr, Vec2(0.0, 0.0), -1, -1));
    CHECK(on_union_boundary(arr, Vec2(-1.0, 0.0), -1, -1));
}

TEST_CASE("thick triple: core polygon equals the center triangle") {
    const double mu = 0.3;
    const auto arr = thick_triple(mu);
    const auto dec = decompose(arr);
    CHECK(dec.diagnostics.empty());
    CHECK(dec.core.diagnostics.empty());

    const double s = 1.0 + mu;
    const double tri = std::sqrt(3.0) / 4.0 * s * s;
    REQUIRE(dec.core.polygons.size() == 1);
    const auto& poly = dec.core.polygons[0];
    CHECK(poly.vertex_disks == std::vector<int>{0, 1, 2});
    CHECK(poly.area == doctest::Approx(tri).epsilon(1e-12));
    CHECK(dec.area_C == doctest::Approx(tri).epsilon(1e-9));
    CHECK(dec.core.area == doctest::Approx(tri).epsilon(1e-12));

    // maximal inscribed disk is internally tangent to all three members
    const double r_in = 1.0 - s / std::sqrt(3.0);
    CHECK(poly.inscribed.radius == doctest::Approx(r_in).epsilon(1e-7));
    for (int u : poly.vertex_disks)
        CHECK((poly.inscribed.center - arr.disks[u].center).norm() +
                  poly.inscribed.radius ==
              doctest::Approx(1.0).epsilon(1e-7));

    // one shell triangle per digon, at the outer vertex
    REQUIRE(dec.inner.triangles.size() == 3);
    const double h = std::sqrt(1.0 - 0.25 * s * s);
    for (const auto& t : dec.inner.triangles)
        CHECK(t.area == doctest::Approx(0.5 * s * h).epsilon(1e-12));
}

TEST_CASE("hex patch at mu = 0.3: shell and core census") {
    const auto arr = hex_patch(0.3);
    const auto dec = decompose(arr);
    CHECK(dec.diagnostics.empty());
    CHECK(dec.core.diagnostics.empty());
    CHECK(dec.area_U == doctest::Approx(8.722835195903).epsilon(1e-11));

    // 6 outer ring digon vertices; spoke digon vertices are interior
    CHECK(dec.inner.triangles.size() == 6);
    // one core triangle per lattice triangle of centers
    REQUIRE(dec.core.polygons.size() == 6);
    const double tri = std::sqrt(3.0) / 4.0;
    for (const auto& poly : dec.core.polygons) {
        CHECK(poly.vertex_disks.size() == 3);
        CHECK(poly.vertex_disks[0] == 0);  // each triangle touches the center disk
        CHECK(poly.area == doctest::Approx(tri).epsilon(1e-12));
        for (int u : poly.vertex_disks)
            CHECK(std::abs((poly.inscribed.center - arr.disks[u].center).norm() +
                           poly.inscribed.radius - arr.disks[u].radius) < 1e-6);
    }
    CHECK(dec.core.area == doctest::Approx(6.0 * tri).epsilon(1e-12));
    CHECK(dec.area_C == doctest::Approx(6.0 * tri).epsilon(1e-9));
}

TEST_CASE("hex patch at mu = sqrt(3) - 1: ties route everything to the shell") {
    const double mu_star = std::sqrt(3.0) - 1.0;
    const auto arr = hex_patch(mu_star);
    const auto dec = decompose(arr);
    CHECK(dec.diagnostics.empty());
    CHECK(dec.core.polygons.empty());
    CHECK(std::abs(dec.area_C) < 1e-9);
    // every lattice triangle splits into three triangles at its circumcenter,
    // plus the 6 outer ring triangles: 24 in total, each of area sqrt(3)/12
    CHECK(dec.inner.triangles.size() == 24);
    CHECK(dec.area_I == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("decomposition additivity and sector budget on the corpus") {
    for (int seed = 1; seed <= 20; ++seed) {
        const auto arr = oracles::corpus_arrangement(seed);
        const auto dec = decompose(arr);
        CHECK(dec.diagnostics.empty());
        CHECK(dec.area_O + dec.area_I + dec.area_C ==
              doctest::Approx(dec.area_U).epsilon(1e-12));
        CHECK(dec.area_C >= -1e-9);
        CHECK(dec.area_C ==
              doctest::Approx(dec.core.area).epsilon(1e-6).scale(dec.area_U));
        for (const auto& poly : dec.core.polygons) {
            CHECK(poly.vertex_disks.size() >= 3);
            CHECK(poly.vertex_disks.size() <= 5);
        }
        // per-disk sector sweeps stay within one full turn
        std::vector<double> sweep(arr.disks.size(), 0.0);
        for (const auto& sec : dec.outer.sectors) sweep[sec.disk] += sec.arc.sweep;
        for (double s : sweep) CHECK(s <= 2.0 * pi + 1e-9);
    }
}

TEST_CASE("monte carlo classification agrees with the exact areas") {
    for (int seed : {3, 7, 11}) {
        const auto arr = oracles::corpus_arrangement(seed);
        const auto dec = decompose(arr);
        const auto est = oracles::mc_region_areas(arr, dec, 400000);
        CHECK(std::abs(est.all.value - dec.area_U) < 3.0 * est.all.sigma + 1e-9);
        CHECK(std::abs(est.outer.value - dec.area_O) < 3.0 * est.outer.sigma + 1e-9);
        CHECK(std::abs(est.inner.value - dec.area_I) < 3.0 * est.inner.sigma + 1e-9);
        CHECK(std::abs(est.core.value - dec.area_C) < 3.0 * est.core.sigma + 1e-9);
    }
    // and on the structured patch with a sizable core
    const auto arr = hex_patch(0.3);
    const auto dec = decompose(arr);
    const auto est = oracles::mc_region_areas(arr, dec, 600000);
    CHECK(std::abs(est.outer.value - dec.area_O) < 3.0 * est.outer.sigma + 1e-9);
    CHECK(std::abs(est.inner.value - dec.area_I) < 3.0 * est.inner.sigma + 1e-9);
    CHECK(std::abs(est.core.value - dec.area_C) < 3.0 * est.core.sigma + 1e-9);
}

TEST_CASE("no core above mu = sqrt(3) - 1") {
    const Window win{{0.0, 0.0}, 8.0};
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto res = minkarr::constructions::random_arrangement(0.8, win, 24, seed);
        const auto dec = decompose(res.arrangement);
        CHECK(dec.diagnostics.empty());
        CHECK(dec.core.polygons.empty());
        CHECK(std::abs(dec.area_C) <= 1e-7 * std::max(dec.area_U, 1.0));
    }
    // the dense extremal family at mu = 0.8 likewise has no core
    const auto hex = minkarr::constructions::hex_arrangement(0.8, {{0.0, 0.0}, 6.0});
    const auto dec = decompose(hex);
    CHECK(dec.core.polygons.empty());
    CHECK(std::abs(dec.area_C) <= 1e-7 * std::max(dec.area_U, 1.0));
}
