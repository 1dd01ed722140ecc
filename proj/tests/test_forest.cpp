#include "doctest.h"
#include "json.hpp"
#include "specnet/forest.hpp"

#include <fstream>
#include <map>

using namespace specnet;

namespace {

std::string data(const std::string& rel) { return std::string(SPECNET_DATA_DIR) + "/" + rel; }

BentWeave bent(const std::string& name) { return bend_weave(load_weave(data("weaves/" + name + ".weave"))); }

std::map<std::string, LaurentPoly> chord_sums(const Forest& f) {
    std::map<std::string, LaurentPoly> out;
    for (const auto& c : f.weave.chords.beta_chords) out[c] = LaurentPoly();
    for (const auto& c : f.weave.chords.delta_chords) out[c] = LaurentPoly();
    for (const auto& w : f.network.walls)
        if (w.end.kind == EndKind::chord) out[w.end.name] = out[w.end.name] + w.end_class().value();
    return out;
}

nlohmann::json fixture(const std::string& name) {
    std::ifstream in(data("fixtures/" + name + ".json"));
    return nlohmann::json::parse(in);
}

// Independent check of an augmentation: the product of the crossing blocks
// along beta then delta, times diag(t_n, ..., t_1), is minus the identity.
void check_block_identity(const BentWeave& bw, const std::map<std::string, LaurentPoly>& eps) {
    int n = bw.weave.strands();
    using Mat = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;
    Mat P = Mat::Identity(n, n);
    auto block = [&](int g, const LaurentPoly& x) {
        Mat B = Mat::Identity(n, n);
        int r = n - g - 1;
        B(r, r) = x;
        B(r, r + 1) = LaurentPoly(1);
        B(r + 1, r) = LaurentPoly(1);
        B(r + 1, r + 1) = LaurentPoly(0);
        return B;
    };
    BraidWord top = bw.weave.top();
    for (std::size_t q = 0; q < top.size(); ++q) P = P * block(top.letters[q], eps.at(bw.chords.beta_chords[q]));
    for (std::size_t q = 0; q < bw.delta.size(); ++q)
        P = P * block(bw.delta.letters[q], eps.at(bw.chords.delta_chords[q]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly t = eps.at("t" + std::to_string(n - j));
            CHECK(P(i, j) * t == LaurentPoly(i == j ? -1 : 0));
        }
}

}  // namespace

TEST_CASE("chord sums of the forest reproduce the augmentation tables") {
    for (std::string name : {"sigma1_6", "mutation_w1", "mutation_w2", "three_strand"}) {
        CAPTURE(name);
        auto fx = fixture(name);
        BentWeave bw = bent(name);
        Forest f = build_forest(bw);
        auto sums = chord_sums(f);
        std::map<std::string, LaurentPoly> expected;
        for (auto& [chord, text] : fx["augmentation"].items())
            expected[chord] = parse_laurent(text.get<std::string>(), f.network.variables);
        for (auto& [chord, value] : sums) {
            CAPTURE(chord);
            CHECK(value.to_string(f.network.variables) == expected.at(chord).to_string(f.network.variables));
        }
        check_block_identity(bw, expected);
    }
}

TEST_CASE("forest networks are structurally sound") {
    for (std::string name : {"sigma1_6", "mutation_w1", "mutation_w2", "three_strand", "bnr_a", "bnr_b"}) {
        CAPTURE(name);
        Forest f = build_forest(bent(name));
        auto v = network_violations(f.network);
        CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
        CHECK(is_flow_acyclic(f.network));
        CHECK(is_creative(f.network));
        CHECK(f.network.vertices_of_kind(VertexKind::initial).size() == f.weave.weave.trivalent_moves().size());
    }
}
