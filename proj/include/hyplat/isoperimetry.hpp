#pragma once

#include <vector>

#include "hyplat/lattice.hpp"

namespace hyplat {

/// Everything the sparsity condition of the main theorem needs in one place.
struct SparsityReport {
    int p = 0;
    int q = 0;
    double ic = 0.0;        ///< edge-isoperimetric constant, closed form
    int delta_max = 0;
    bool condition_holds = false;   ///< delta_max < ic/2
    bool validity_region = false;   ///< p > 4 and hyperbolic and ic > 2
};

/// Closed-form edge-isoperimetric constant of the infinite {p,q} tiling:
/// (q-2) * sqrt(1 - 4/((p-2)(q-2))). Zero exactly on the Euclidean lattices
/// (3,6), (4,4), (6,3). Throws DomainError when (p-2)(q-2) < 4.
double ic_formula(int p, int q);

struct BruteForceIcResult {
    double ratio = 0.0;
    std::vector<VertexId> argmin;
};

/// Minimizes |boundary edges| / |vertices| over connected vertex sets that
/// contain the origin vertex, with 1 <= size <= max_size. The infinite
/// lattice is vertex-transitive, so rooting at the origin loses nothing.
/// Throws ResourceLimitError past `budget` enumerated sets.
BruteForceIcResult brute_force_ic(const HyperbolicLattice& lat, int max_size,
                                  std::size_t budget = 200'000'000);

/// Fills a SparsityReport for (p, q, delta_max).
SparsityReport sparsity_check(int p, int q, int delta_max);

/// True iff p > 4, 1/p + 1/q < 1/2 and ic_formula(p,q) > 2.
bool validity_region(int p, int q);

}  // namespace hyplat
