#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hyplat/lattice.hpp"

namespace hyplat {

/// Spins on a finite window plus its boundary shell. `region` lists the
/// window Lambda; `values` maps every vertex of Lambda and every exterior
/// neighbor of Lambda to +1 or -1.
struct SpinConfiguration {
    std::vector<VertexId> region;
    std::unordered_map<VertexId, std::int8_t> values;

    std::int8_t at(VertexId v) const {
        auto it = values.find(v);
        if (it == values.end()) {
            throw MissingValueError("spin undefined at vertex " + std::to_string(v));
        }
        return it->second;
    }
    bool defined(VertexId v) const { return values.count(v) != 0; }
};

/// A finite connected vertex region marked for flipping, with its edge
/// boundary cached at construction.
struct Contour {
    std::vector<VertexId> support;
    std::vector<std::pair<VertexId, VertexId>> boundary_edges;

    /// Validates connectivity and caches the boundary.
    Contour(const HyperbolicLattice& lat, std::vector<VertexId> verts);
};

struct BrokenBondReport {
    std::vector<EdgeKey> broken_edges;
    std::vector<VertexId> broken_vertices;
    int delta_broken = 0;
};

struct GroundStateClass {
    int delta_max = 0;
};

/// Indicator-form Hamiltonian: disagreeing interior pairs within Lambda plus
/// disagreeing (interior, exterior) pairs across the boundary. The coupling
/// form -sum(sigma sigma) equals twice this plus a constant, so all energy
/// differences agree between the two conventions.
long long hamiltonian(const HyperbolicLattice& lat, std::span<const VertexId> lambda,
                      const SpinConfiguration& sigma, const SpinConfiguration& omega);

/// Coupling-form energy -sum_{edges} sigma_v sigma_w over the same edge set;
/// provided only to test the form-equivalence identity.
long long coupling_energy(const HyperbolicLattice& lat, std::span<const VertexId> lambda,
                          const SpinConfiguration& sigma, const SpinConfiguration& omega);

/// Broken bonds of sigma over all edges with both endpoints defined and at
/// least one endpoint in sigma.region.
BrokenBondReport broken_bonds(const HyperbolicLattice& lat, const SpinConfiguration& sigma);

bool in_ground_state_class(const BrokenBondReport& report, GroundStateClass cls);

/// Returns sigma0 with spins negated on the contour support.
/// Throws OutOfRegionError if the support leaves sigma0's region.
SpinConfiguration flip_contour(const SpinConfiguration& sigma0, const Contour& gamma);

/// Contours are compatible iff their supports are disjoint.
bool compatible(const Contour& gamma, const Contour& gamma_prime);

struct ExcessEnergy {
    long long delta_h = 0;         ///< H(flipped) - H(sigma0)
    long long boundary_size = 0;   ///< |edge boundary of gamma|
    long long broken_crossing = 0; ///< boundary edges already broken in sigma0
};

/// Computes the flip energy both directly and through the identity
/// delta_h = boundary_size - 2 * broken_crossing, asserting agreement.
ExcessEnergy excess_energy(const HyperbolicLattice& lat, const SpinConfiguration& sigma0,
                           const Contour& gamma);

/// Lower bound (ic_formula(p,q) - 2*delta_broken) * contour_size.
double excess_energy_bound(int p, int q, int delta_broken, long long contour_size);

}  // namespace hyplat
