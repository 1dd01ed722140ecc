#include "doctest.h"
#include "specnet/forest.hpp"
#include "specnet/soliton.hpp"

#include <random>

using namespace specnet;

namespace {

Forest forest_of(const std::string& name) {
    Weave w = load_weave(std::string(SPECNET_DATA_DIR) + "/weaves/" + name + ".weave");
    return build_forest(w.mode == WeaveMode::cobordism ? cobordism_weave(w) : bend_weave(w));
}

}  // namespace

TEST_CASE("recursive indices agree with tree enumeration") {
    for (std::string name : {"mutation_w1", "mutation_w2", "sigma1_6", "bnr_a", "bnr_b", "three_strand", "double_r3"}) {
        CAPTURE(name);
        Forest f = forest_of(name);
        CHECK(bps_indices(f.network) == bps_by_enumeration(f.network));
    }
}

TEST_CASE("creative networks have one tree per wall point") {
    Forest f = forest_of("three_strand");
    for (const auto& w : f.network.walls) CHECK(extract_d4_trees(f.network, w.id, 0.5).size() == 1);
}

TEST_CASE("tree classes match the classes carried by the walls") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::string name : {"sigma1_6", "bnr_a", "three_strand"}) {
        Forest f = forest_of(name);
        for (const auto& w : f.network.walls)
            for (int t = 0; t < 3; ++t) {
                double p = u(rng);
                auto trees = extract_d4_trees(f.network, w.id, p);
                REQUIRE(trees.size() == 1);
                CHECK(soliton_class(f.network, trees[0]) == w.class_at(p));
            }
    }
}

TEST_CASE("initial walls have index one and creation is additive") {
    Forest f = forest_of("bnr_a");
    auto t = bps_indices(f.network);
    for (const auto& v : f.network.vertices) {
        if (v.kind == VertexKind::initial)
            for (int w : v.outgoing) CHECK(t.mu(w, *f.network.wall(w).start_class) == 1);
        if (v.kind == VertexKind::interaction_creation) {
            SolitonClass c = f.network.wall(v.incoming[0]).end_class() * f.network.wall(v.incoming[1]).end_class();
            if (v.twist) c = c * SolitonClass{Monomial{}, 1, 1};
            CHECK(c == *f.network.wall(v.created).start_class);
            SolitonClass flipped = c * SolitonClass{Monomial{}, 1, 1};
            CHECK(t.mu(v.created, flipped) == -t.mu(v.created, c));
        }
    }
}

TEST_CASE("initial ray tree is a single edge") {
    Forest f = forest_of("mutation_w1");
    int v = f.network.vertices_of_kind(VertexKind::initial).front();
    int w = f.network.vertex(v).outgoing.front();
    auto trees = extract_d4_trees(f.network, w, 0.0);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].nodes.size() == 1);
}

TEST_CASE("double braid move: the two created walls cancel") {
    Forest f = forest_of("double_r3");
    auto t = bps_indices(f.network);
    std::vector<SolitonClass> created;
    for (const auto& v : f.network.vertices)
        if (v.kind == VertexKind::interaction_creation) created.push_back(*f.network.wall(v.created).start_class);
    REQUIRE(created.size() == 2);
    CHECK(created[0].exps == created[1].exps);
    CHECK(created[0].folded_sign() == -created[1].folded_sign());
    for (const auto& c : f.weave.chords.beta_chords)
        CHECK(chord_value(f.network, t, c) == parse_laurent(c, f.network.variables));
}
