#pragma once

#include "specnet/laurent.hpp"

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace specnet {

struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered sheet pair (i j), 1-based.
struct SheetPair {
    int i = 0, j = 0;
    bool valid() const { return i != j && i > 0 && j > 0; }
    friend bool operator==(const SheetPair&, const SheetPair&) = default;
    std::string to_string() const { return "(" + std::to_string(i) + std::to_string(j) + ")"; }
};

// (ij) then (jk) gives (ik); std::nullopt when the pair does not compose.
std::optional<SheetPair> compose(const SheetPair& a, const SheetPair& b);

// Signed monomial in the cycle generators plus the fiber-class parity.
struct SolitonClass {
    Monomial exps;
    int sign = 1;
    int h = 0;

    SolitonClass operator*(const SolitonClass& o) const {
        return {exps * o.exps, sign * o.sign, (h + o.h) & 1};
    }
    SolitonClass inverse() const { return {exps.inverse(), sign, h}; }
    // sign with the fiber class specialized to -1
    int folded_sign() const { return h ? -sign : sign; }
    LaurentPoly value() const { return LaurentPoly::term(exps, folded_sign()); }
    friend bool operator==(const SolitonClass&, const SolitonClass&) = default;
};

enum class VertexKind { initial, interaction_creation, interaction_hexavalent, non_interaction, inconsistent };
const char* to_string(VertexKind k);
VertexKind vertex_kind_from_string(const std::string& s);

struct Stub {
    SheetPair label;
    bool incoming = false;
};

// Matches incident stubs against the local models; throws on no match.
VertexKind classify_vertex(const std::vector<Stub>& stubs);

struct NetworkVertex {
    int id = -1;
    VertexKind kind = VertexKind::initial;
    Eigen::Vector2d position = Eigen::Vector2d::Zero();
    std::vector<int> incoming;
    std::vector<int> outgoing;
    int created = -1; // new (ik) wall at a creation joint
    int twist = 0;    // fiber parity picked up at a creation joint
    int anchor = -1;  // pipeline-specific key (weave move, flowline crossing)
    int stage = 0;
};

enum class EndKind { vertex, chord, asymptote, cutoff };
const char* to_string(EndKind k);

struct WallEnd {
    EndKind kind = EndKind::cutoff;
    int vertex = -1;
    std::string name; // chord name or asymptote ray id
};

// A wall class changes by `factor` where the route crosses a dual cut.
struct CutFactor {
    double param = 0; // position along the route, in [0, 1]
    SolitonClass factor;
};

struct Wall {
    int id = -1;
    SheetPair label;     // at the source point, in the local frame there
    SheetPair end_label; // at the end point
    int source = -1;          // -1 when the wall enters through a concave boundary chord
    std::string source_chord;
    WallEnd end;
    int flowline = -1; // segments of one physical flowline share this
    int stage = 0;
    double mass = 0;   // at the source point
    std::vector<Eigen::Vector2d> route;

    // combinatorial pipeline
    std::optional<SolitonClass> start_class;
    std::vector<CutFactor> cut_factors;

    // numerical pipeline: central charge and tracked roots at route points
    std::vector<std::complex<double>> charges;
    std::vector<std::complex<double>> root_i, root_j;

    SolitonClass class_at(double param) const;
    SolitonClass end_class() const { return class_at(2.0); }
};

struct GappedGuard {
    int max_rounds = 64;
    int free_rounds = 8;       // M: rounds allowed before growth is required
    double min_growth = 0.0;   // hbar: required increase of the minimal birth mass
};

class SpectralNetwork {
public:
    std::string origin; // "weave" or "wkb"
    std::vector<NetworkVertex> vertices;
    std::vector<Wall> walls;
    VariableNames variables;
    double cutoff = std::numeric_limits<double>::infinity();
    std::vector<std::string> warnings;

    int add_vertex(NetworkVertex v);
    int add_wall(Wall w);
    const Wall& wall(int id) const { return walls.at(static_cast<std::size_t>(id)); }
    Wall& wall(int id) { return walls.at(static_cast<std::size_t>(id)); }
    const NetworkVertex& vertex(int id) const { return vertices.at(static_cast<std::size_t>(id)); }
    NetworkVertex& vertex(int id) { return vertices.at(static_cast<std::size_t>(id)); }

    std::vector<int> vertices_of_kind(VertexKind k) const;
    // Stubs at a vertex: incoming walls with their end labels, outgoing with
    // their start labels.
    std::vector<Stub> stubs(int vertex) const;
    // The outgoing wall continuing the same flowline as an incoming one.
    int continuation(int vertex, int incoming_wall) const;

    friend bool operator==(const SpectralNetwork&, const SpectralNetwork&);
};

// Structural problems: bad labels, kinds that disagree with their stubs,
// dangling ids, decoration propagation failures.
std::vector<std::string> network_violations(const SpectralNetwork& net);
bool is_flow_acyclic(const SpectralNetwork& net);
bool is_creative(const SpectralNetwork& net);
// Walls in a flow-compatible order (parents before children); throws on cycles.
std::vector<int> flow_order(const SpectralNetwork& net);

// Keeps the walls of mass <= E. Vertices left without walls are dropped and
// ids are compacted.
SpectralNetwork energy_truncate(const SpectralNetwork& net, double E);

// Grows the new (ik) wall at one inconsistent vertex; may add vertices and
// walls and split existing walls. Stage is the current round.
using WallSeeder = std::function<void(SpectralNetwork& net, int vertex, int stage)>;

SpectralNetwork consistent_extension(SpectralNetwork net, const WallSeeder& seeder,
                                     const GappedGuard& guard = {});

struct GappedGuardViolation : NetworkError {
    using NetworkError::NetworkError;
};

// Merges walls through every non-interaction vertex (used before comparing
// networks up to irrelevant crossings).
SpectralNetwork suppress_non_interaction(const SpectralNetwork& net);

// Decorated-graph isomorphism: vertex kinds, incidence, flowline continuation
// and which outgoing wall is created at each joint. Labels are compared as
// relations at each vertex, since frames are local.
bool isomorphic(const SpectralNetwork& a, const SpectralNetwork& b);

}  // namespace specnet
