#pragma once

#include "specnet/network.hpp"

#include <map>

namespace specnet {

struct SolitonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rooted tree of wall segments. Node 0 is the root edge; a node's children
// are the walls entering its source vertex that it is built from.
struct D4Tree {
    struct Node {
        int wall = -1;
        std::vector<int> children;
        int twist = 0; // fiber parity picked up where the children merge
    };
    std::vector<Node> nodes;
    int root_wall = -1;
    double root_param = 1.0;

    // Leaves: walls starting at an initial vertex or entering through a chord.
    std::vector<int> leaves() const;
};

// All maximal backward extensions of the wall point (wall, param).
std::vector<D4Tree> extract_d4_trees(const SpectralNetwork& net, int wall, double param = 1.0);

// Class of the tree's boundary, recomputed from its leaves.
SolitonClass soliton_class(const SpectralNetwork& net, const D4Tree& tree);

// mu per wall, keyed by soliton class at the start of the wall. The fiber
// class is normalized away: mu(H rho) = -mu(rho), so keys carry h = 0.
class BpsTable {
public:
    using Key = std::pair<std::vector<int>, int>; // exponents, sign

    long long mu(int wall, const SolitonClass& cls) const;
    void add(int wall, const SolitonClass& cls, long long mu);
    // Nonzero entries at the wall start, h = 0.
    std::vector<std::pair<SolitonClass, long long>> entries(int wall) const;
    // Entries moved to a point of the wall (cut factors applied).
    std::vector<std::pair<SolitonClass, long long>> entries_at(const Wall& w, double param) const;
    std::vector<int> walls() const;

    friend bool operator==(const BpsTable& a, const BpsTable& b) { return a.table_ == b.table_; }

private:
    std::map<int, std::map<Key, long long>> table_;
};

BpsTable bps_indices(const SpectralNetwork& net);

// Brute force: every wall's trees, summed with their signs.
BpsTable bps_by_enumeration(const SpectralNetwork& net);

// Signed sum of the classes of all walls ending at a chord.
LaurentPoly chord_value(const SpectralNetwork& net, const BpsTable& table, const std::string& chord);

}  // namespace specnet
