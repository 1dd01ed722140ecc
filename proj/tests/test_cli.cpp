#include "doctest.h"
#include "specnet/cli.hpp"
#include "specnet/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace specnet;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& rel) { return std::string(SPECNET_DATA_DIR) + "/" + rel; }

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("specnet_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

const std::vector<std::string> kFixtures{"sigma1_6", "mutation_w1", "mutation_w2", "three_strand"};

}  // namespace

TEST_CASE("augmentation matches every shipped fixture") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        auto computed = (scratch() / (name + ".json")).string();
        auto r = run({"augmentation", "examples/" + name + ".weave", "--out", computed});
        REQUIRE(r.code == 0);
        auto cmp = run({"compare", computed, data("fixtures/" + name + ".json")});
        CHECK(cmp.code == 0);
        CHECK(cmp.out == "match\n");
    }
}

TEST_CASE("mutation pair has equal marked-point values") {
    auto a = read_augmentation(read_json_file(data("fixtures/mutation_w1.json")));
    auto b = read_augmentation(read_json_file(data("fixtures/mutation_w2.json")));
    auto value = [](const auto& table, const std::string& chord) {
        for (const auto& [c, v] : table)
            if (c == chord) return v;
        FAIL("missing chord " << chord);
        return LaurentPoly();
    };
    for (std::string t : {"t1", "t2"}) CHECK(value(a, t) == value(b, t));
    CHECK(value(a, "t1") == parse_laurent("-1/(s1*s2)"));
    CHECK(value(a, "t2") == parse_laurent("-s1*s2"));
}

TEST_CASE("compare reports the first differing chord") {
    auto path = (scratch() / "wrong.json").string();
    auto j = read_json_file(data("fixtures/three_strand.json"));
    j["augmentation"]["z7"] = "1";
    write_text_file(path, j.dump(2));
    auto r = run({"compare", path, data("fixtures/three_strand.json")});
    CHECK(r.code == 1);
    CHECK(r.out == "mismatch at chord z7\n");
}

TEST_CASE("fixture lookup through the environment") {
    auto root = scratch() / "fixtures";
    fs::create_directories(root);
    fs::copy_file(data("fixtures/sigma1_6.json"), root / "renamed.json", fs::copy_options::overwrite_existing);
    auto computed = (scratch() / "s6.json").string();
    REQUIRE(run({"augmentation", "sigma1_6.weave", "-o", computed}).code == 0);
    ::setenv("SPECNET_FIXTURES", root.c_str(), 1);
    CHECK(run({"compare", computed, "renamed.json"}).code == 0);
    ::unsetenv("SPECNET_FIXTURES");
    auto missing = run({"compare", computed, "renamed.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("fixture not found") != std::string::npos);
}

TEST_CASE("augmentation table format") {
    auto r = run({"augmentation", "mutation_w1.weave", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("z1 = ", 0) == 0);
    CHECK(r.out.find("w1 = -s1^-1\n") != std::string::npos);
}

TEST_CASE("wkb-trace writes an SVG of the Airy network") {
    auto path = (scratch() / "airy.svg").string();
    auto r = run({"wkb-trace", "--curve", "w^2 - z", "--theta", "0", "--mass", "10", "--radius", "5", "--out", path});
    REQUIRE(r.code == 0);
    auto svg = read_text_file(path);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t paths = 0;
    for (auto k = svg.find("<path"); k != std::string::npos; k = svg.find("<path", k + 1)) ++paths;
    CHECK(paths >= 3);

    auto json = run({"wkb-trace", "--curve", "w^2 - z", "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(nlohmann::json::parse(json.out)["network"]["walls"].size() == 3);
}

TEST_CASE("config file overrides defaults") {
    auto cfg = scratch() / "bnr.ini";
    write_text_file(cfg.string(), "[wkb-trace]\ntheta=0.1\nmass=30\nradius=6\nformat=json\n");
    auto r = run({"--config", cfg.string(), "wkb-trace", "--curve", "w^3 - 3*w + x"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["network"]["walls"].size() == 12);
    CHECK(j["theta"] == 0.1);

    // flags on the command line win over the file
    auto flagged = run({"--config", cfg.string(), "wkb-trace", "--curve", "w^3 - 3*w + x", "--theta", "0.2"});
    REQUIRE(flagged.code == 0);
    auto k = nlohmann::json::parse(flagged.out);
    CHECK(k["theta"] == 0.2);
    CHECK(k["mass"] == 30.0);
}

TEST_CASE("errors exit non-zero") {
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    auto bad_curve = run({"wkb-trace", "--curve", "2*w^2 - z"});
    CHECK(bad_curve.code == 2);
    CHECK(bad_curve.err.rfind("error: ", 0) == 0);
    CHECK(run({"wkb-trace", "--curve", "w^3 - 3*w + x", "--theta", "0"}).code == 2);
    CHECK(run({"augmentation", "no_such.weave"}).code == 2);
    CHECK(run({"wkb-trace", "--curve", "w^2 - z", "--mass", "-1"}).code != 0);
    CHECK(run({"bps"}).code != 0);
}

TEST_CASE("other subcommands") {
    auto na = run({"nonabelianize", "sigma1_6.weave", "--systems", "3", "--pairs", "10"});
    REQUIRE(na.code == 0);
    auto j = nlohmann::json::parse(na.out);
    CHECK(j["loop_failures"] == 0);
    CHECK(j["pair_failures"] == 0);

    auto bps = run({"bps", "three_strand.weave"});
    REQUIRE(bps.code == 0);
    CHECK(nlohmann::json::parse(bps.out)["walls"].size() > 0);
    CHECK(run({"bps", "--curve", "w^2 - z"}).code == 0);

    auto net = run({"weave-network", "bnr_a.weave"});
    REQUIRE(net.code == 0);
    auto parsed = network_from_json(nlohmann::json::parse(net.out));
    CHECK(is_flow_acyclic(parsed));
    CHECK(run({"weave-network", "bnr_a.weave", "--format", "svg"}).out.rfind("<svg", 0) == 0);
    // the same run twice is byte-identical
    CHECK(run({"weave-network", "three_strand.weave"}).out == run({"weave-network", "three_strand.weave"}).out);
}
