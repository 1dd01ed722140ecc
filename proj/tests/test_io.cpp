#include "doctest.h"
#include "specnet/io.hpp"

#include <regex>

using namespace specnet;

namespace {

std::string data(const std::string& rel) { return std::string(SPECNET_DATA_DIR) + "/" + rel; }

Forest forest(const std::string& name) { return build_forest(bend_weave(load_weave(data("weaves/" + name + ".weave")))); }

SpectralNetwork bnr_wkb() {
    WkbConfig cfg;
    cfg.theta = 0.1;
    cfg.mass = 30;
    cfg.radius = 6;
    return build_wkb(parse_curve("w^3 - 3*w + x"), cfg).network;
}

SpectralNetwork round_trip(const SpectralNetwork& net) {
    return network_from_json(nlohmann::json::parse(network_to_json(net).dump()));
}

}  // namespace

TEST_CASE("network JSON round-trip") {
    std::vector<SpectralNetwork> nets{forest("sigma1_6").network, forest("three_strand").network,
                                      forest("double_r3").network, bnr_wkb()};
    for (const auto& net : nets) {
        auto back = round_trip(net);
        CHECK(back == net);
        CHECK(network_to_json(back).dump() == network_to_json(net).dump());
        // ids are positions
        for (std::size_t i = 0; i < back.walls.size(); ++i) CHECK(back.walls[i].id == static_cast<int>(i));
    }
    auto truncated = energy_truncate(nets[1], 2);
    CHECK(round_trip(truncated) == truncated);
    CHECK(network_to_json(truncated)["cutoff"] == 2.0);
    CHECK(network_to_json(nets[0])["cutoff"].is_null());
}

TEST_CASE("malformed network documents are rejected") {
    auto j = nlohmann::json::parse(network_to_json(forest("sigma1_6").network).dump());
    auto bad = j;
    bad["schema"] = "something-else";
    CHECK_THROWS(network_from_json(bad));
    bad = j;
    bad["walls"][0]["id"] = 7;
    CHECK_THROWS(network_from_json(bad));
    bad = j;
    bad["vertices"][0]["kind"] = "pentavalent";
    CHECK_THROWS(network_from_json(bad));
    CHECK_THROWS(network_from_json(nlohmann::json::array()));
}

TEST_CASE("output is byte-deterministic") {
    auto a = forest("three_strand"), b = forest("three_strand");
    CHECK(network_to_json(a.network).dump(2) == network_to_json(b.network).dump(2));
    CHECK(export_svg(a.network) == export_svg(b.network));
    CHECK(export_svg(bnr_wkb()) == export_svg(bnr_wkb()));
    auto x = augmentation(a), y = augmentation(b);
    CHECK(augmentation_to_json(x, "three_strand.weave").dump(2) == augmentation_to_json(y, "three_strand.weave").dump(2));
}

TEST_CASE("augmentation documents") {
    auto a = augmentation(forest("sigma1_6"));
    auto j = augmentation_to_json(a, "sigma1_6.weave");
    CHECK(j["weave"] == "sigma1_6.weave");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j["augmentation"].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"z1", "z2", "z3", "z4", "z5", "z6", "w1", "t1", "t2"});

    auto fixture = read_json_file(data("fixtures/sigma1_6.json"));
    CHECK_FALSE(first_difference(nlohmann::json::parse(j.dump()), fixture).has_value());

    auto changed = fixture;
    changed["augmentation"]["z4"] = "s4";
    CHECK(first_difference(changed, fixture) == std::optional<std::string>("z4"));
    // a missing chord counts as zero
    auto missing = fixture;
    missing["augmentation"].erase("w1");
    CHECK(first_difference(missing, fixture) == std::optional<std::string>("w1"));
    auto zero = fixture;
    zero["augmentation"]["x9"] = "0";
    CHECK_FALSE(first_difference(zero, fixture).has_value());
    // equal up to how the polynomial is written
    auto rewritten = fixture;
    rewritten["augmentation"]["z4"] = "-s3^-1 + s4";
    CHECK_FALSE(first_difference(rewritten, fixture).has_value());

    auto broken = fixture;
    broken["augmentation"]["z1"] = "s1 +";
    CHECK_THROWS_AS(read_augmentation(broken), IoError);
    CHECK_THROWS_AS(read_augmentation(nlohmann::json::object()), IoError);
}

TEST_CASE("SVG export") {
    SpectralNetwork empty;
    auto svg = export_svg(empty);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<path") == std::string::npos);

    auto net = forest("three_strand").network;
    auto full = export_svg(net);
    auto count = [&](const std::regex& r) {
        return std::distance(std::sregex_iterator(full.begin(), full.end(), r), std::sregex_iterator());
    };
    CHECK(count(std::regex("<path")) >= static_cast<long>(net.walls.size()));
    CHECK(full.find("</svg>") != std::string::npos);

    auto broken = net;
    broken.walls[0].route.clear();
    CHECK_THROWS(export_svg(broken));
}

TEST_CASE("BPS and WKB documents") {
    auto net = forest("sigma1_6").network;
    auto j = bps_to_json(net, bps_indices(net));
    CHECK(j["walls"].size() == net.walls.size());
    for (const auto& w : j["walls"])
        for (const auto& e : w["indices"]) CHECK(e["mu"].get<long long>() != 0);

    WkbConfig cfg;
    cfg.mass = 20;
    auto wj = wkb_to_json(build_wkb(parse_curve("w^2 - z"), cfg));
    CHECK(wj.contains("network"));
}
