#include "doctest.h"
#include "specnet/forest.hpp"
#include "specnet/soliton.hpp"
#include "specnet/wkb.hpp"

#include <algorithm>
#include <set>
#include <numbers>

using namespace specnet;

namespace {

std::string data(const std::string& rel) { return std::string(SPECNET_DATA_DIR) + "/" + rel; }

const double pi = std::numbers::pi;

double wrap(double a) { return std::remainder(a, 2 * pi); }

WkbNetwork airy(double theta) {
    WkbConfig cfg;
    cfg.theta = theta;
    cfg.mass = 20;
    cfg.radius = 5;
    return build_wkb(parse_curve("w^2 - z"), cfg);
}

WkbNetwork bnr(double theta) {
    WkbConfig cfg;
    cfg.theta = theta;
    cfg.mass = 30;
    cfg.radius = 6;
    return build_wkb(parse_curve("w^3 - 3*w + x"), cfg);
}

// Phase of the central charge and monotone mass along a traced wall.
void check_trajectory(const TracedWall& t, double theta) {
    for (std::size_t k = 0; k < t.charge.size(); ++k) {
        cplx rotated = std::polar(1.0, -theta) * t.charge[k];
        CHECK(std::abs(rotated.imag()) <= 1e-6 * (1 + std::abs(rotated)));
        CHECK(rotated.real() > 0);
        if (k > 0) CHECK(t.mass_at(k) > t.mass_at(k - 1));
    }
}

}  // namespace

TEST_CASE("initial rays of the Airy curve") {
    auto c = parse_curve("w^2 - z");
    for (double theta : {0.0, 0.3, -1.0}) {
        auto seeds = initial_rays(c, 0, theta);
        REQUIRE(seeds.size() == 3);
        // z^{3/2} has real phase theta along arg z = (2/3) theta + 2 pi m / 3
        std::vector<double> want, got;
        for (int m = 0; m < 3; ++m) want.push_back(wrap(2 * theta / 3 + 2 * pi * m / 3));
        for (const auto& s : seeds) {
            got.push_back(wrap(std::arg(s.z)));
            CHECK(std::abs(s.z) == doctest::Approx(1e-6));
            CHECK(std::abs((std::polar(1.0, -theta) * s.charge).imag()) <= 1e-12);
        }
        std::sort(want.begin(), want.end()), std::sort(got.begin(), got.end());
        for (int m = 0; m < 3; ++m) CHECK(got[m] == doctest::Approx(want[m]).epsilon(1e-6));
    }
}

TEST_CASE("Airy network") {
    for (double theta : {0.0, 0.3}) {
        CAPTURE(theta);
        auto w = airy(theta);
        REQUIRE(w.walls.size() == 3);
        CHECK(w.joints.empty());
        std::vector<double> dirs;
        for (const auto& t : w.walls) {
            check_trajectory(t, theta);
            // walls of w^2 = z are straight rays
            for (cplx z : t.z) CHECK(std::abs(wrap(std::arg(z) - std::arg(t.z.back()))) < 1e-3);
            CHECK(std::abs(t.z.back()) == doctest::Approx(5).epsilon(1e-6));
            dirs.push_back(wrap(std::arg(t.z.back()) - 2 * theta / 3));
        }
        std::sort(dirs.begin(), dirs.end());
        CHECK(dirs[0] == doctest::Approx(-2 * pi / 3).epsilon(1e-3));
        CHECK(dirs[1] == doctest::Approx(0).epsilon(1e-3));
        CHECK(dirs[2] == doctest::Approx(2 * pi / 3).epsilon(1e-3));
        CHECK(w.network.walls.size() == 3);
        CHECK(w.network.vertices_of_kind(VertexKind::initial).size() == 1);
        CHECK(network_violations(w.network).empty());
    }
    // mass cut before the radius: |Z| = (4/3) r^{3/2}
    WkbConfig cfg;
    cfg.mass = 2;
    cfg.radius = 5;
    auto short_walls = build_wkb(parse_curve("w^2 - z"), cfg);
    for (const auto& t : short_walls.walls) {
        CHECK(t.end == EndKind::cutoff);
        CHECK(std::abs(t.z.back()) == doctest::Approx(std::pow(1.5, 2.0 / 3)).epsilon(1e-3));
    }
}

TEST_CASE("BNR network") {
    auto w = bnr(0.1);
    REQUIRE(w.branch_points.size() == 2);
    CHECK(w.primary_count() == 6);
    CHECK(w.walls.size() == 8);
    int created = 0;
    for (const auto& j : w.joints)
        if (j.composable && j.child >= 0) {
            ++created;
            // central charges add where two walls create a third
            const auto& child = w.walls[static_cast<std::size_t>(j.child)];
            CHECK(std::abs(child.charge.front() - (j.charge_a + j.charge_b)) <= 1e-6 * (1 + std::abs(child.charge.front())));
            CHECK(std::abs(child.z.front() - j.z) < 1e-6);
        }
    CHECK(created == 2);
    for (const auto& t : w.walls) check_trajectory(t, 0.1);
    CHECK(network_violations(w.network).empty());
    CHECK(is_flow_acyclic(w.network));
    CHECK(is_creative(w.network));

    auto reduced = suppress_non_interaction(w.network);
    for (std::string name : {"bnr_a", "bnr_b"}) {
        CAPTURE(name);
        auto f = build_forest(bend_weave(load_weave(data("weaves/" + name + ".weave"))));
        CHECK(isomorphic(reduced, f.network));
    }
}

TEST_CASE("BNR truncation keeps only primary walls below the first joint") {
    auto w = bnr(0.1);
    double primary = 0, secondary = std::numeric_limits<double>::infinity();
    for (const auto& j : w.joints) primary = std::max({primary, j.t_a, j.t_b});
    for (const auto& wl : w.network.walls)
        if (wl.stage > 0) secondary = std::min(secondary, wl.mass);
    REQUIRE(primary < secondary);
    auto t = energy_truncate(w.network, 0.5 * (primary + secondary));
    std::set<int> flowlines;
    for (const auto& wl : t.walls) {
        flowlines.insert(wl.flowline);
        CHECK(wl.stage == 0);
    }
    CHECK(flowlines.size() == 6);
    CHECK(t.vertices_of_kind(VertexKind::initial).size() == 2);
}

TEST_CASE("BNR network varies continuously with the phase") {
    auto a = bnr(0.1), b = bnr(0.101);
    REQUIRE(a.walls.size() == b.walls.size());
    CHECK(isomorphic(a.network, b.network));
    for (std::size_t i = 0; i < a.walls.size(); ++i) CHECK(std::abs(a.walls[i].z.front() - b.walls[i].z.front()) < 0.05);
    for (double theta : {0.05, 0.5, 1.0}) CHECK(bnr(theta).joints.size() == 2);
}

TEST_CASE("degenerate phases and curves") {
    // the two branch points are joined by a saddle connection at theta = 0
    CHECK_THROWS_AS(bnr(0), NonGenericPhase);
    auto flat = build_wkb(parse_curve("w^2 - 1"), WkbConfig{});
    CHECK(flat.walls.empty());
    CHECK(flat.network.walls.empty());
    CHECK(flat.network.vertices.empty());
    WkbConfig bad;
    bad.mass = -1;
    CHECK_THROWS(build_wkb(parse_curve("w^2 - z"), bad));
}

TEST_CASE("BPS indices on the WKB network") {
    auto net = bnr(0.1).network;
    auto rec = bps_indices(net), enumd = bps_by_enumeration(net);
    CHECK(rec == enumd);
    auto a = airy(0).network;
    CHECK(bps_indices(a) == bps_by_enumeration(a));
}
