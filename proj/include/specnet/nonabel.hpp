#pragma once

#include "specnet/forest.hpp"
#include "specnet/soliton.hpp"

#include <Eigen/Core>

#include <random>

namespace specnet {

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
Scalar scalar_inverse(const Scalar& x) {
    return Scalar(1) / x;
}
template <>
inline LaurentPoly scalar_inverse(const LaurentPoly& x) {
    return x.inverse();
}

// Values on the cycle generators; the fiber class is evaluated at -1.
template <class Scalar>
struct LocalSystemRank1 {
    std::vector<Scalar> values;

    Scalar operator()(const SolitonClass& c) const {
        Scalar r(c.folded_sign());
        const auto& e = c.exps.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (i >= values.size()) throw TransportError("local system has no value for generator " + std::to_string(i + 1));
            Scalar base = e[i] > 0 ? values[i] : scalar_inverse(values[i]);
            for (int k = 0; k < std::abs(e[i]); ++k) r = r * base;
        }
        return r;
    }
};

LocalSystemRank1<LaurentPoly> universal_local_system(std::size_t nvars);
// Nonzero rationals p/q with |p|, q <= 9.
LocalSystemRank1<Rational> random_local_system(std::size_t nvars, std::mt19937_64& rng);

struct Crossing {
    enum class Kind { wall, sheet_swap, dual_cut };
    Kind kind = Kind::wall;
    int wall = -1;
    int direction = 1; // +1: rightward across an upward wall, downward across a rightward one
    int row_i = 0, row_j = 0;
    double param = 0;
    std::vector<SolitonClass> diag;
};

// A short segment crosses exactly one wall; free segments cross none.
struct PathSegment {
    bool short_segment = false;
    std::vector<Crossing> crossings;
};

struct Cell {
    int strip = 0, interval = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

struct NetworkPath {
    Cell start, end;
    std::vector<PathSegment> segments;
};

enum class Step { left, right, up, down };

// The path through the transport atlas taking the given unit steps.
NetworkPath atlas_path(const TransportAtlas& atlas, Cell start, const std::vector<Step>& steps);
std::vector<Step> parse_steps(const std::string& text); // "RRDLU"

// Small loops around every trivalent vertex.
std::vector<NetworkPath> branch_point_loops(const TransportAtlas& atlas);
// Small loops around each crossing of the dual cut with a weave line (where
// joints sit) and around each 6- and 4-valent vertex.
std::vector<NetworkPath> joint_loops(const TransportAtlas& atlas);
// Pairs of paths with equal endpoints: a random walk and a shortest path.
std::vector<std::pair<NetworkPath, NetworkPath>> homotopic_pairs(const TransportAtlas& atlas, int count,
                                                                 std::mt19937_64& rng);

namespace detail {

template <class Scalar>
Matrix<Scalar> identity(int n) {
    Matrix<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
    return m;
}

// Plain triple loop: Eigen's product kernels do not instantiate for
// boost::multiprecision rationals with this Boost version.
template <class Scalar>
Matrix<Scalar> mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    Matrix<Scalar> r(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Scalar s(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

template <class Scalar>
Matrix<Scalar> free_crossing(const Crossing& c, const LocalSystemRank1<Scalar>& V, int n) {
    Matrix<Scalar> m = identity<Scalar>(n);
    if (c.kind == Crossing::Kind::sheet_swap) {
        m(c.row_i, c.row_i) = Scalar(0);
        m(c.row_j, c.row_j) = Scalar(0);
        m(c.row_i, c.row_j) = Scalar(1);
        m(c.row_j, c.row_i) = Scalar(1);
    } else if (c.kind == Crossing::Kind::dual_cut) {
        for (int i = 0; i < n && i < static_cast<int>(c.diag.size()); ++i) {
            Scalar d = V(c.diag[static_cast<std::size_t>(i)]);
            m(i, i) = c.direction > 0 ? d : scalar_inverse(d);
        }
    } else {
        throw TransportError("free segment crosses wall " + std::to_string(c.wall));
    }
    return m;
}

}  // namespace detail

template <class Scalar>
Matrix<Scalar> transport_free(const PathSegment& seg, const LocalSystemRank1<Scalar>& V, int n) {
    Matrix<Scalar> m = detail::identity<Scalar>(n);
    for (const auto& c : seg.crossings) m = detail::mul(m, detail::free_crossing(c, V, n));
    return m;
}

// Identity plus the detour term mu * V(class) in entry (row_i, row_j); the
// inverse when crossed against the coorientation. Without a table the index
// is 1 on the wall's own class.
template <class Scalar>
Matrix<Scalar> transport_short(const PathSegment& seg, const LocalSystemRank1<Scalar>& V, const SpectralNetwork& net,
                               int n, const BpsTable* table = nullptr) {
    const Crossing* hit = nullptr;
    for (const auto& c : seg.crossings)
        if (c.kind == Crossing::Kind::wall) {
            if (hit) throw TransportError("short segment crosses more than one wall");
            hit = &c;
        }
    if (!hit) throw TransportError("short segment crosses no wall");
    Matrix<Scalar> m = detail::identity<Scalar>(n);
    for (const auto& c : seg.crossings) {
        if (&c != hit) {
            m = detail::mul(m, detail::free_crossing(c, V, n));
            continue;
        }
        const Wall& w = net.wall(c.wall);
        Scalar x(0);
        if (table) {
            for (const auto& [cls, mu] : table->entries_at(w, c.param)) x = x + Scalar(static_cast<int>(mu)) * V(cls);
        } else {
            x = V(w.class_at(c.param));
        }
        Matrix<Scalar> u = detail::identity<Scalar>(n);
        u(c.row_i, c.row_j) = c.direction > 0 ? x : Scalar(0) - x;
        m = detail::mul(m, u);
    }
    return m;
}

template <class Scalar>
Matrix<Scalar> transport_path(const NetworkPath& path, const LocalSystemRank1<Scalar>& V, const SpectralNetwork& net,
                              int n, const BpsTable* table = nullptr) {
    Matrix<Scalar> m = detail::identity<Scalar>(n);
    for (const auto& seg : path.segments)
        m = detail::mul(m, seg.short_segment ? transport_short(seg, V, net, n, table) : transport_free(seg, V, n));
    return m;
}

// Permutation expansion; no division, so exact over any commutative ring.
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
    int n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    Scalar total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        Scalar term(inversions % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <class Scalar>
bool is_identity(const Matrix<Scalar>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == Scalar(i == j ? 1 : 0))) return false;
    return true;
}

// Chord values from the top-boundary transport and marked-point values
// t_k = -(downward holonomy along the right edge)[n-k][n-k].
struct Augmentation {
    VariableNames variables;
    std::vector<std::string> chords; // canonical order z.., w.., t..
    std::map<std::string, LaurentPoly> values;
};

Augmentation augmentation(const Forest& f);
// Cobordism weaves: chord map from the walls arriving at each top chord.
Augmentation chord_map(const Forest& f);

}  // namespace specnet
