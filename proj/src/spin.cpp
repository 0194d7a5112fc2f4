#include "hyplat/spin.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "hyplat/isoperimetry.hpp"

namespace hyplat {

Contour::Contour(const HyperbolicLattice& lat, std::vector<VertexId> verts)
    : support(std::move(verts)) {
    if (support.empty()) throw DomainError("Contour: support must be non-empty");
    std::unordered_set<VertexId> in(support.begin(), support.end());
    if (in.size() != support.size()) throw DomainError("Contour: duplicate vertices");

    // Connectivity within the support.
    std::queue<VertexId> queue;
    std::unordered_set<VertexId> seen;
    queue.push(support.front());
    seen.insert(support.front());
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (VertexId w : lat.neighbors(v)) {
            if (in.count(w) && seen.insert(w).second) queue.push(w);
        }
    }
    if (seen.size() != support.size()) {
        throw DomainError("Contour: support is not connected");
    }
    boundary_edges = lat.edge_boundary(support);
}

namespace {

// Sums indicator disagreements over interior and boundary edges of lambda.
long long energy_sum(const HyperbolicLattice& lat, std::span<const VertexId> lambda,
                     const SpinConfiguration& sigma, const SpinConfiguration& omega,
                     bool coupling) {
    std::unordered_set<VertexId> in(lambda.begin(), lambda.end());
    long long h = 0;
    for (VertexId v : lambda) {
        const int sv = sigma.at(v);
        for (VertexId w : lat.neighbors(v)) {
            if (in.count(w)) {
                if (w < v) continue;  // interior edge once
                const int sw = sigma.at(w);
                h += coupling ? -(sv * sw) : (sv != sw ? 1 : 0);
            } else {
                const int sw = omega.at(w);
                h += coupling ? -(sv * sw) : (sv != sw ? 1 : 0);
            }
        }
    }
    return h;
}

}  // namespace

long long hamiltonian(const HyperbolicLattice& lat, std::span<const VertexId> lambda,
                      const SpinConfiguration& sigma, const SpinConfiguration& omega) {
    return energy_sum(lat, lambda, sigma, omega, false);
}

long long coupling_energy(const HyperbolicLattice& lat, std::span<const VertexId> lambda,
                          const SpinConfiguration& sigma, const SpinConfiguration& omega) {
    return energy_sum(lat, lambda, sigma, omega, true);
}

BrokenBondReport broken_bonds(const HyperbolicLattice& lat, const SpinConfiguration& sigma) {
    std::unordered_set<VertexId> region(sigma.region.begin(), sigma.region.end());
    std::unordered_set<EdgeKey, EdgeKeyHash> broken;
    for (VertexId v : sigma.region) {
        const int sv = sigma.at(v);
        for (VertexId w : lat.neighbors(v)) {
            if (!region.count(w) && !sigma.defined(w)) continue;
            if (sigma.at(w) != sv) broken.insert(EdgeKey(v, w));
        }
    }

    BrokenBondReport report;
    report.broken_edges.assign(broken.begin(), broken.end());
    std::sort(report.broken_edges.begin(), report.broken_edges.end());

    std::unordered_map<VertexId, int> incidence;
    for (const EdgeKey& e : report.broken_edges) {
        ++incidence[e.u];
        ++incidence[e.v];
    }
    for (const auto& [v, d] : incidence) {
        report.broken_vertices.push_back(v);
        report.delta_broken = std::max(report.delta_broken, d);
    }
    std::sort(report.broken_vertices.begin(), report.broken_vertices.end());
    return report;
}

bool in_ground_state_class(const BrokenBondReport& report, GroundStateClass cls) {
    return report.delta_broken <= cls.delta_max;
}

SpinConfiguration flip_contour(const SpinConfiguration& sigma0, const Contour& gamma) {
    std::unordered_set<VertexId> region(sigma0.region.begin(), sigma0.region.end());
    SpinConfiguration sigma = sigma0;
    for (VertexId v : gamma.support) {
        if (!region.count(v)) {
            throw OutOfRegionError("flip_contour: vertex " + std::to_string(v) +
                                   " outside the configuration's region");
        }
        sigma.values[v] = static_cast<std::int8_t>(-sigma0.at(v));
    }
    return sigma;
}

bool compatible(const Contour& gamma, const Contour& gamma_prime) {
    std::unordered_set<VertexId> a(gamma.support.begin(), gamma.support.end());
    for (VertexId v : gamma_prime.support) {
        if (a.count(v)) return false;
    }
    return true;
}

ExcessEnergy excess_energy(const HyperbolicLattice& lat, const SpinConfiguration& sigma0,
                           const Contour& gamma) {
    // Direct difference. The window is sigma0's region; all spins outside it
    // act as the boundary condition, so pass sigma0 itself as omega.
    const SpinConfiguration sigma = flip_contour(sigma0, gamma);
    const long long h0 = hamiltonian(lat, sigma0.region, sigma0, sigma0);
    const long long h1 = hamiltonian(lat, sigma.region, sigma, sigma);

    ExcessEnergy out;
    out.delta_h = h1 - h0;
    out.boundary_size = static_cast<long long>(gamma.boundary_edges.size());
    for (const auto& [v, w] : gamma.boundary_edges) {
        if (sigma0.at(v) != sigma0.at(w)) ++out.broken_crossing;
    }
    if (out.delta_h != out.boundary_size - 2 * out.broken_crossing) {
        throw InternalError("excess_energy: direct difference disagrees with the identity");
    }
    return out;
}

double excess_energy_bound(int p, int q, int delta_broken, long long contour_size) {
    if (delta_broken < 0 || contour_size < 0) {
        throw DomainError("excess_energy_bound: negative argument");
    }
    return (ic_formula(p, q) - 2.0 * delta_broken) * static_cast<double>(contour_size);
}

}  // namespace hyplat
