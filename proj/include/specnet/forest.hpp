#pragma once

#include "specnet/network.hpp"
#include "specnet/weave.hpp"

#include <array>
#include <map>

namespace specnet {

struct ForestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sheet rows are 0-based top-first; sigma_g acts on rows (row(g), row(g)+1).
inline int letter_row(int strands, int g) { return strands - g - 1; }

struct FlowlineSeed {
    int move = 0;         // trivalent vertex (move index)
    char branch = 'a';    // 'a', 'b' up the weave; 'c' to the right
    int strip = 0;        // strip the flowline is in (the upper strip of the move)
    int letter = 0;       // edge for a/b, interval (left of this letter) for c
    SheetPair label;      // local rows, 1-based
};

std::array<FlowlineSeed, 3> seed_flowlines(const BentWeave& w, int move);

// Route of one flowline ignoring every interaction. The end is a chord with
// the label it arrives with.
Wall propagate(const BentWeave& w, const FlowlineSeed& seed);

// Data for parallel transport on the cell complex cut out by the weave lines
// and the dual-cut rays. Cell (k, i) is interval i of strip k.
struct AtlasPiece {
    int wall = -1;
    double param = 0;
    int row_i = 0, row_j = 0; // 0-based entry of the unipotent
};

struct AtlasStrip {
    BraidWord word;
    std::vector<std::vector<AtlasPiece>> edge; // walls just left of letter q
};

struct AtlasCut {
    MoveKind kind = MoveKind::tetravalent;
    int position = 0;
    // indexed by upper interval; only set for trivalent moves, i >= position + 2
    std::vector<std::vector<AtlasPiece>> walls;
    std::vector<std::vector<SolitonClass>> diag;
};

struct TransportAtlas {
    int strands = 0;
    std::vector<AtlasStrip> strips; // strip k = slice k (+ delta letters when bent)
    std::vector<AtlasCut> cuts;     // one per move
    // Marked-point term: t_k = sign * (far-right downward holonomy)[n-k][n-k]
    int marked_sign = -1;

    int intervals(int k) const { return static_cast<int>(strips.at(static_cast<std::size_t>(k)).word.size()) + 1; }
    // Lower interval under upper interval i of strip k, or -1 inside a vertex wedge.
    int below(int k, int i) const;
    int above(int k, int i) const;
};

struct Forest {
    BentWeave weave;
    std::vector<CycleGenerator> generators;
    SpectralNetwork network;
    TransportAtlas atlas;

    // Flowline level data; the network is materialized from it.
    struct Flowline {
        int id = -1;
        char branch = 'a';   // a, b, c at a vertex; j at a joint; y from a concave chord
        int vertex = -1;     // flowline-level birth vertex
        int stage = 0;       // scan index (1-based) of the trivalent vertex it belongs to
        int mass = 1;        // number of initial flowlines in its tree
        SheetPair label;     // at birth, birth vertex frame
        SheetPair end_label;
        std::string chord;
        std::string source_chord; // concave boundary chord for branch y
        SolitonClass birth_class;
        std::vector<Eigen::Vector2d> route;
        struct Event {
            bool cut = false;
            int vertex = -1;
            SheetPair label; // label in the vertex frame (vertex events)
            SolitonClass factor;
            std::size_t index = 0; // route point
        };
        std::vector<Event> events;
    };
    struct Joint {
        int id = -1;
        bool initial = false;
        int move = -1;
        Eigen::Vector2d position = Eigen::Vector2d::Zero();
        std::vector<int> parents;  // flowlines entering (joints only)
        std::vector<int> children; // flowlines born here
        int twist = 0;
    };
    std::vector<Flowline> flowlines;
    std::vector<Joint> joints;
    // per flowline, the wall id of each segment (full network)
    std::vector<std::vector<int>> segments;
};

Forest build_forest(const BentWeave& w, const GappedGuard& guard = {});

// The pre-spectral network F_i (stage i flowlines freshly seeded, their
// crossings with older walls inconsistent) and its consistent extension W_i.
SpectralNetwork forest_prespectral(const Forest& f, int stage);
SpectralNetwork forest_stage(const Forest& f, int stage);
// Continuation rule for consistent_extension on forest pre-spectral networks.
WallSeeder forest_seeder(const Forest& f);

}  // namespace specnet
