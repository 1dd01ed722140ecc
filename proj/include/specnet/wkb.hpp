#pragma once

#include "specnet/curve.hpp"
#include "specnet/network.hpp"

namespace specnet {

struct WkbError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the phase is not generic: a wall runs into a branch point or
// three walls meet. Retrying at a nearby phase usually helps.
struct NonGenericPhase : WkbError {
    using WkbError::WkbError;
};

struct WkbConfig {
    double theta = 0;
    double mass = 10;    // cutoff on |Z|
    double radius = 5;   // domain bound
    double step = 0;     // step in |Z|; 0 means 1e-3 * mass
    double seed_radius = 1e-6;
    GappedGuard guard;
};

// Start of a wall: position, the two tracked roots (wall label (ij) means
// lambda_i then lambda_j) and the charge there.
struct WallSeed {
    cplx z;
    cplx li, lj;
    cplx charge;
    int branch = -1; // source branch point, -1 at a joint
    int ray = -1;
};

struct TracedWall {
    WallSeed seed;
    std::vector<cplx> z, charge, li, lj; // samples, seed first
    EndKind end = EndKind::cutoff;
    std::string asymptote;               // anti-Stokes ray id when end == asymptote

    double mass_at(std::size_t k) const { return std::abs(charge[k]); }
};

// Three seeds at a simple branch point, directed outward.
std::vector<WallSeed> initial_rays(const SpectralCurve& c, cplx b, double theta, double seed_radius = 1e-6);

TracedWall trace_wall(const SpectralCurve& c, const WallSeed& seed, const WkbConfig& cfg,
                      const std::vector<cplx>& branch_points = {});

// Direction at infinity of the anti-Stokes ray nearest to z, for the pair
// with root difference d at z.
double anti_stokes_direction(const SpectralCurve& c, cplx z, cplx d, double theta);

struct WkbJoint {
    int wall_a = -1, wall_b = -1; // a then b composes; for non-interactions the order is arbitrary
    double t_a = 0, t_b = 0;      // |Z| along each wall at the crossing
    cplx z;
    cplx charge_a, charge_b;
    bool composable = false;
    int child = -1;               // traced wall born here
    int round = 0;
};

struct WkbNetwork {
    SpectralCurve curve;
    WkbConfig config;
    std::vector<cplx> branch_points;
    std::vector<TracedWall> walls;
    std::vector<WkbJoint> joints;   // below the mass cutoff
    int joints_above_cutoff = 0;
    SpectralNetwork network;

    int primary_count() const { return static_cast<int>(branch_points.size()) * 3; }
};

WkbNetwork build_wkb(const SpectralCurve& c, const WkbConfig& cfg);
SpectralNetwork build_wkb_network(const SpectralCurve& c, double theta, double mass, double radius);

}  // namespace specnet
