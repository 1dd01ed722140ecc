#include "specnet/cli.hpp"

#include "specnet/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef SPECNET_DATA_DIR
#define SPECNET_DATA_DIR "data"
#endif

namespace specnet {

namespace fs = std::filesystem;

std::string resolve_weave_path(const std::string& path) {
    if (fs::exists(path)) return path;
    fs::path shipped = fs::path(SPECNET_DATA_DIR) / "weaves" / fs::path(path).filename();
    if (fs::exists(shipped)) return shipped.string();
    throw IoError("weave file not found: " + path);
}

std::string resolve_fixture_path(const std::string& path) {
    if (fs::exists(path)) return path;
    if (const char* root = std::getenv("SPECNET_FIXTURES")) {
        fs::path p = fs::path(root) / path;
        if (fs::exists(p)) return p.string();
        p = fs::path(root) / fs::path(path).filename();
        if (fs::exists(p)) return p.string();
    }
    fs::path shipped = fs::path(SPECNET_DATA_DIR) / "fixtures" / fs::path(path).filename();
    if (fs::exists(shipped)) return shipped.string();
    throw IoError("fixture not found: " + path);
}

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string format;
    bool cobordism = false;
    std::string curve;
    double theta = 0, mass = 10, radius = 5, step = 0;
    int max_rounds = 64, free_rounds = 8;
    double min_growth = 0;
    int systems = 20, pairs = 100;
    std::uint64_t seed = 1;
    std::string computed, fixture;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty() || o.out == "-") out << text;
    else write_text_file(o.out, text);
}

Forest load_forest(const Options& o) {
    Weave w = load_weave(resolve_weave_path(o.input));
    bool cob = o.cobordism || w.mode == WeaveMode::cobordism;
    return build_forest(cob ? cobordism_weave(w) : bend_weave(w));
}

std::string weave_name(const Options& o) { return fs::path(o.input).filename().string(); }

WkbNetwork trace(const Options& o) {
    WkbConfig cfg;
    cfg.theta = o.theta;
    cfg.mass = o.mass;
    cfg.radius = o.radius;
    cfg.step = o.step;
    cfg.guard.max_rounds = o.max_rounds;
    cfg.guard.free_rounds = o.free_rounds;
    cfg.guard.min_growth = o.min_growth;
    return build_wkb(parse_curve(o.curve), cfg);
}

int cmd_weave_network(const Options& o, std::ostream& out) {
    Forest f = load_forest(o);
    if (o.format == "svg") emit(export_svg(f.network), o, out);
    else emit(network_to_json(f.network).dump(2) + "\n", o, out);
    return 0;
}

int cmd_augmentation(const Options& o, std::ostream& out) {
    Forest f = load_forest(o);
    Augmentation a = f.weave.bent() ? augmentation(f) : chord_map(f);
    if (o.format == "table") {
        std::string text;
        for (const auto& [chord, v] : read_augmentation(augmentation_to_json(a, weave_name(o))))
            text += chord + " = " + v.to_string(a.variables) + "\n";
        emit(text, o, out);
    } else {
        emit(augmentation_to_json(a, weave_name(o)).dump(2) + "\n", o, out);
    }
    return 0;
}

int cmd_nonabelianize(const Options& o, std::ostream& out) {
    Forest f = load_forest(o);
    const auto& net = f.network;
    int n = f.atlas.strands;
    std::mt19937_64 rng(o.seed);
    auto loops = branch_point_loops(f.atlas);
    auto joints = joint_loops(f.atlas);
    auto pairs = homotopic_pairs(f.atlas, o.pairs, rng);
    int loop_failures = 0, pair_failures = 0;
    for (int s = 0; s < o.systems; ++s) {
        auto V = random_local_system(net.variables.size(), rng);
        for (const auto* set : {&loops, &joints})
            for (const auto& p : *set) loop_failures += !is_identity(transport_path(p, V, net, n));
    }
    auto U = universal_local_system(net.variables.size());
    for (const auto& [a, b] : pairs) pair_failures += !(transport_path(a, U, net, n) == transport_path(b, U, net, n));
    ojson j{{"weave", weave_name(o)},
            {"rank", n},
            {"local_systems", o.systems},
            {"branch_point_loops", loops.size()},
            {"joint_loops", joints.size()},
            {"loop_failures", loop_failures},
            {"homotopic_pairs", pairs.size()},
            {"pair_failures", pair_failures}};
    if (f.weave.bent()) {
        ojson chords = ojson::object();
        for (int q = 0; q < static_cast<int>(f.atlas.strips.front().word.size()); ++q) {
            auto M = transport_path(atlas_path(f.atlas, {0, q}, {Step::right}), U, net, n);
            ojson rows = ojson::array();
            for (int r = 0; r < n; ++r) {
                ojson row = ojson::array();
                for (int c = 0; c < n; ++c) row.push_back(M(r, c).to_string(net.variables));
                rows.push_back(row);
            }
            chords[std::to_string(q)] = rows;
        }
        j["top_crossings"] = chords;
    }
    emit(j.dump(2) + "\n", o, out);
    return loop_failures || pair_failures ? 1 : 0;
}

int cmd_bps(const Options& o, std::ostream& out) {
    SpectralNetwork net = o.curve.empty() ? load_forest(o).network : trace(o).network;
    emit(bps_to_json(net, bps_indices(net)).dump(2) + "\n", o, out);
    return 0;
}

int cmd_wkb(const Options& o, std::ostream& out) {
    WkbNetwork w = trace(o);
    if (o.format == "json") emit(wkb_to_json(w).dump(2) + "\n", o, out);
    else emit(export_svg(w.network), o, out);
    return 0;
}

int cmd_compare(const Options& o, std::ostream& out) {
    auto computed = read_json_file(o.computed);
    auto fixture = read_json_file(resolve_fixture_path(o.fixture));
    if (auto d = first_difference(computed, fixture)) {
        out << "mismatch at chord " << *d << "\n";
        return 1;
    }
    out << "match\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral networks from weaves and WKB curves", "specnet"};
    app.set_config("--config", "", "key=value file overriding flags");
    app.require_subcommand(1);
    Options o;
    std::map<std::string, std::string> format; // per subcommand

    auto add_output = [&](CLI::App* c, const std::string& formats, const std::string& def) {
        c->add_option("--out,-o", o.out, "output file (default stdout)");
        auto& f = format[c->get_name()] = def;
        c->add_option("--format", f, "output format")->check(CLI::IsMember(CLI::detail::split(formats, ',')));
    };
    auto add_wkb = [&](CLI::App* c, bool required) {
        auto* curve = c->add_option("--curve", o.curve, "spectral curve, e.g. \"w^3 - 3*w + x\"");
        if (required) curve->required();
        c->add_option("--theta", o.theta, "phase");
        c->add_option("--mass", o.mass, "mass cutoff")->check(CLI::PositiveNumber);
        c->add_option("--radius", o.radius, "domain bound")->check(CLI::PositiveNumber);
        c->add_option("--step", o.step, "integration step in |Z| (0: mass/1000)")->check(CLI::NonNegativeNumber);
        c->add_option("--max-rounds", o.max_rounds, "extension rounds allowed")->check(CLI::PositiveNumber);
        c->add_option("--free-rounds", o.free_rounds, "rounds before birth-mass growth is required");
        c->add_option("--min-growth", o.min_growth, "required growth of the minimal birth mass");
    };

    auto* wn = app.add_subcommand("weave-network", "spectral network of a weave");
    wn->add_option("weave", o.input, "weave file")->required();
    wn->add_flag("--cobordism", o.cobordism, "keep the bottom boundary as chords");
    add_output(wn, "json,svg", "json");

    auto* aug = app.add_subcommand("augmentation", "augmentation (or chord map) of a weave");
    aug->add_option("weave", o.input, "weave file")->required();
    aug->add_flag("--cobordism", o.cobordism, "treat the weave as a cobordism");
    add_output(aug, "json,table", "json");

    auto* na = app.add_subcommand("nonabelianize", "monodromy and homotopy checks of the non-abelianization");
    na->add_option("weave", o.input, "weave file")->required();
    na->add_option("--systems", o.systems, "random rank-1 local systems")->check(CLI::PositiveNumber);
    na->add_option("--pairs", o.pairs, "homotopic path pairs")->check(CLI::PositiveNumber);
    na->add_option("--seed", o.seed, "random seed");
    add_output(na, "json", "json");

    auto* bps = app.add_subcommand("bps", "2d-4d BPS indices of every wall");
    bps->add_option("weave", o.input, "weave file");
    add_wkb(bps, false);
    add_output(bps, "json", "json");

    auto* wkb = app.add_subcommand("wkb-trace", "trace the WKB spectral network of a curve");
    add_wkb(wkb, true);
    add_output(wkb, "svg,json", "svg");

    auto* cmp = app.add_subcommand("compare", "compare an augmentation table with a fixture");
    cmp->add_option("computed", o.computed, "computed augmentation JSON")->required();
    cmp->add_option("fixture", o.fixture, "fixture JSON")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    for (const auto* sub : app.get_subcommands()) o.format = format[sub->get_name()];
    try {
        if (*bps && o.input.empty() && o.curve.empty()) throw CLI::ValidationError("bps needs a weave file or --curve");
        if (*wn) return cmd_weave_network(o, out);
        if (*aug) return cmd_augmentation(o, out);
        if (*na) return cmd_nonabelianize(o, out);
        if (*bps) return cmd_bps(o, out);
        if (*wkb) return cmd_wkb(o, out);
        if (*cmp) return cmd_compare(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace specnet
