#pragma once

#include <cstdint>
#include <vector>

#include "hyplat/interfaces.hpp"
#include "hyplat/lattice.hpp"
#include "hyplat/spin.hpp"

namespace hyplat {

/// Boundary condition for a finite-volume measure on ball(radius, o).
struct Boundary {
    enum class Kind { all_plus, all_minus, dobrushin, explicit_cfg };
    Kind kind = Kind::all_plus;
    const DualInterface* iface = nullptr;  ///< for dobrushin
    SpinConfiguration cfg;                 ///< for explicit_cfg

    static Boundary plus() { return {}; }
    static Boundary minus() { return {Kind::all_minus, nullptr, {}}; }
    static Boundary dobrushin_bc(const DualInterface& i) {
        return {Kind::dobrushin, &i, {}};
    }
    static Boundary from_config(SpinConfiguration c) {
        return {Kind::explicit_cfg, nullptr, std::move(c)};
    }
};

struct SimulationConfig {
    double beta = 1.0;
    int radius = 2;
    long long sweeps = 2000;
    long long burn_in = 500;
    std::uint64_t seed = 1;
    Boundary boundary;
    int chains = 2;
};

struct Observables {
    std::vector<VertexId> lambda;      ///< window vertices, fixed order
    std::vector<double> mean;          ///< per-vertex mean spin
    std::vector<double> se;            ///< batch-means standard error
    double origin_magnetization = 0.0;
    std::vector<double> energy_trace;  ///< per-batch mean energy
    long long flips = 0;               ///< sites whose spin changed on update
    long long updates = 0;
};

/// Exact per-vertex means by full enumeration of the 2^|Lambda| states under
/// the indicator-form Hamiltonian. Throws ResourceLimitError for |Lambda|
/// above 22.
std::vector<double> exact_gibbs(const HyperbolicLattice& lat,
                                std::span<const VertexId> lambda,
                                const SpinConfiguration& omega, double beta);

/// Resolves a Boundary into shell values for the given window.
SpinConfiguration resolve_boundary(const HyperbolicLattice& lat,
                                   std::span<const VertexId> lambda,
                                   const Boundary& boundary);

/// Heat-bath sampler: `chains` independent chains from counter-derived
/// streams, batch-means errors, deterministic for fixed config. Negating
/// the boundary condition negates all outputs exactly (the dynamics are
/// gauge-canonicalized).
Observables sample(const HyperbolicLattice& lat, const SimulationConfig& config);

/// Single heat-bath update probability P(spin = +1 | neighbors): exposed for
/// the detailed-balance unit test.
double heat_bath_prob_plus(double beta, int field);

struct RigidityReport {
    std::vector<VertexId> lambda;
    std::vector<int> distance_to_interface;  ///< graph distance to nearest crossed endpoint
    std::vector<int> side;                   ///< Dobrushin side (+1/-1)
    std::vector<double> mean;
    std::vector<double> agreement;           ///< P(sign(spin) == side) per vertex
    double min_agreement_far = 1.0;          ///< min over vertices at distance >= 2
    int n_far = 0;
};

/// Samples under the Dobrushin boundary condition of `iface` and reports
/// per-vertex side-agreement rates and the two-sided magnetization profile.
RigidityReport interface_rigidity_probe(const HyperbolicLattice& lat,
                                        const DualInterface& iface, double beta,
                                        int radius, long long sweeps,
                                        std::uint64_t seed);

struct RadiusConsistencyReport {
    std::vector<int> radii;
    std::vector<VertexId> core;              ///< ball(r_small, o)
    std::vector<std::vector<double>> means;  ///< means[i][k]: radius i, core vertex k
    double max_discrepancy = 0.0;            ///< max over pairs and core vertices
};

/// Estimates the ball(r_small, o) marginals under the same boundary induced
/// on windows of several radii; reports how far they drift apart.
RadiusConsistencyReport radius_consistency(const HyperbolicLattice& lat,
                                           const Boundary& boundary, double beta,
                                           int r_small, std::span<const int> radii,
                                           long long sweeps, std::uint64_t seed);

}  // namespace hyplat
