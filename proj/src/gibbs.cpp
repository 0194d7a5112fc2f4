#include "hyplat/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>

#include "hyplat/rng.hpp"

namespace hyplat {

double heat_bath_prob_plus(double beta, int field) {
    return 1.0 / (1.0 + std::exp(-beta * field));
}

std::vector<double> exact_gibbs(const HyperbolicLattice& lat,
                                std::span<const VertexId> lambda,
                                const SpinConfiguration& omega, double beta) {
    const int n = static_cast<int>(lambda.size());
    if (n == 0) return {};
    if (n > 22) {
        throw ResourceLimitError("exact_gibbs: window of " + std::to_string(n) +
                                 " vertices exceeds the enumeration budget of 22");
    }
    if (beta < 0) throw DomainError("exact_gibbs: beta must be >= 0");

    std::unordered_map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index.emplace(lambda[i], i);

    std::vector<std::pair<int, int>> interior;             // bit pairs
    std::vector<std::pair<int, int>> boundary;             // (bit, omega spin)
    for (int i = 0; i < n; ++i) {
        for (VertexId w : lat.neighbors(lambda[i])) {
            auto it = index.find(w);
            if (it != index.end()) {
                if (it->second > i) interior.emplace_back(i, it->second);
            } else {
                boundary.emplace_back(i, omega.at(w));
            }
        }
    }

    std::vector<double> num(n, 0.0);
    double z = 0.0;
    const std::uint32_t states = 1u << n;
    for (std::uint32_t mask = 0; mask < states; ++mask) {
        int h = 0;  // indicator-form energy, exact integer
        for (const auto& [i, j] : interior) {
            h += ((mask >> i) ^ (mask >> j)) & 1u;
        }
        for (const auto& [i, s] : boundary) {
            const int spin = (mask >> i) & 1u ? 1 : -1;
            h += spin != s;
        }
        const double w = std::exp(-beta * h);
        z += w;
        for (int i = 0; i < n; ++i) {
            num[i] += ((mask >> i) & 1u ? 1.0 : -1.0) * w;
        }
    }
    if (!(z > 0.0)) throw InternalError("exact_gibbs: partition function not positive");
    for (double& x : num) x /= z;
    return num;
}

SpinConfiguration resolve_boundary(const HyperbolicLattice& lat,
                                   std::span<const VertexId> lambda,
                                   const Boundary& boundary) {
    if (boundary.kind == Boundary::Kind::dobrushin) {
        if (boundary.iface == nullptr) {
            throw DomainError("resolve_boundary: dobrushin boundary without an interface");
        }
        return dobrushin_configuration(lat, *boundary.iface, lambda);
    }

    std::unordered_map<VertexId, std::int8_t> shell;
    std::unordered_map<VertexId, char> in;
    for (VertexId v : lambda) in.emplace(v, 1);
    for (VertexId v : lambda) {
        for (VertexId w : lat.neighbors(v)) {
            if (in.count(w)) continue;
            std::int8_t s = 1;
            switch (boundary.kind) {
                case Boundary::Kind::all_plus: s = 1; break;
                case Boundary::Kind::all_minus: s = -1; break;
                case Boundary::Kind::explicit_cfg: s = boundary.cfg.at(w); break;
                default: throw InternalError("resolve_boundary: unreachable");
            }
            shell.emplace(w, s);
        }
    }
    SpinConfiguration omega;
    for (const auto& [v, s] : shell) omega.region.push_back(v);
    std::sort(omega.region.begin(), omega.region.end());
    omega.values = std::move(shell);
    return omega;
}

namespace {

/// Precomputed window structure for sequential heat-bath sweeps.
struct Sim {
    const HyperbolicLattice& lat;
    std::vector<VertexId> lambda;
    std::vector<std::vector<int>> nbr_in;     // window neighbors as indices
    std::vector<int> field_out;               // frozen boundary contribution
    double beta;

    Sim(const HyperbolicLattice& l, std::span<const VertexId> lam,
        const SpinConfiguration& omega, double b)
        : lat(l), lambda(lam.begin(), lam.end()), beta(b) {
        std::unordered_map<VertexId, int> index;
        for (int i = 0; i < static_cast<int>(lambda.size()); ++i) index.emplace(lambda[i], i);
        nbr_in.resize(lambda.size());
        field_out.assign(lambda.size(), 0);
        for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
            for (VertexId w : lat.neighbors(lambda[i])) {
                auto it = index.find(w);
                if (it != index.end()) {
                    nbr_in[i].push_back(it->second);
                } else {
                    field_out[i] += omega.at(w);
                }
            }
        }
    }

    long long energy(const std::vector<std::int8_t>& spin) const {
        long long h = 0;
        for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
            for (int j : nbr_in[i]) {
                if (j > i) h += spin[i] != spin[j];
            }
            // Boundary disagreements from the frozen field: with b plus- and
            // m minus-neighbors outside, field_out = b - m and b + m is the
            // outside degree; disagreements = (deg_out - spin*field)/2.
            const int deg_out = static_cast<int>(lat.degree(lambda[i])) -
                                static_cast<int>(nbr_in[i].size());
            h += (deg_out - spin[i] * field_out[i]) / 2;
        }
        return h;
    }

    /// Runs `chains` chains; calls `measure(chain, sweep_index, spin)` after
    /// every post-burn-in sweep. Also reports flip statistics.
    template <typename F>
    void run(int chains, long long sweeps, long long burn_in, std::uint64_t seed,
             long long* flips, long long* updates, F&& measure) const {
        const int n = static_cast<int>(lambda.size());
        for (int c = 0; c < chains; ++c) {
            RngStream rng(seed, static_cast<std::uint64_t>(c));
            std::vector<std::int8_t> spin(n, 1);
            for (long long t = 0; t < sweeps; ++t) {
                for (int i = 0; i < n; ++i) {
                    int f = field_out[i];
                    for (int j : nbr_in[i]) f += spin[j];
                    const std::int8_t s =
                        rng.next_double() < heat_bath_prob_plus(beta, f) ? 1 : -1;
                    if (flips && s != spin[i]) ++*flips;
                    if (updates) ++*updates;
                    spin[i] = s;
                }
                if (t >= burn_in) measure(c, t - burn_in, spin);
            }
        }
    }
};

constexpr int kBatchesPerChain = 16;

}  // namespace

Observables sample(const HyperbolicLattice& lat, const SimulationConfig& config) {
    if (config.beta < 0) throw DomainError("sample: beta must be >= 0");
    if (config.chains < 1) throw DomainError("sample: chains must be >= 1");
    if (config.burn_in < 0 || config.sweeps <= config.burn_in) {
        throw DomainError("sample: need sweeps > burn_in >= 0");
    }
    const std::vector<VertexId> lambda = lat.ball(config.radius, lat.origin_vertex());
    SpinConfiguration omega = resolve_boundary(lat, lambda, config.boundary);

    // Gauge canonicalization: simulate with the boundary whose lowest-id
    // shell spin is +1 and negate the outputs if we negated the input. This
    // makes spin-flip equivariance exact, not just statistical.
    bool negated = false;
    if (!omega.region.empty() && omega.at(omega.region.front()) == -1) {
        negated = true;
        for (auto& [v, s] : omega.values) s = static_cast<std::int8_t>(-s);
    }

    const Sim sim(lat, lambda, omega, config.beta);
    const int n = static_cast<int>(lambda.size());
    const long long measured = config.sweeps - config.burn_in;
    const long long batch_len = std::max<long long>(1, measured / kBatchesPerChain);
    const int batches_per_chain = static_cast<int>((measured + batch_len - 1) / batch_len);
    const int total_batches = batches_per_chain * config.chains;

    // batch sums: [chain batch][vertex]
    std::vector<std::vector<double>> batch_mean(total_batches, std::vector<double>(n, 0.0));
    std::vector<long long> batch_count(total_batches, 0);
    std::vector<double> energy_batch(total_batches, 0.0);

    Observables obs;
    sim.run(config.chains, config.sweeps, config.burn_in, config.seed, &obs.flips,
            &obs.updates, [&](int chain, long long t, const std::vector<std::int8_t>& spin) {
                const int b = chain * batches_per_chain + static_cast<int>(t / batch_len);
                for (int i = 0; i < n; ++i) batch_mean[b][i] += spin[i];
                if (t % batch_len == 0) energy_batch[b] = static_cast<double>(sim.energy(spin));
                ++batch_count[b];
            });

    obs.lambda = lambda;
    obs.mean.assign(n, 0.0);
    obs.se.assign(n, 0.0);
    for (int b = 0; b < total_batches; ++b) {
        for (int i = 0; i < n; ++i) batch_mean[b][i] /= static_cast<double>(batch_count[b]);
    }
    for (int i = 0; i < n; ++i) {
        double m = 0.0;
        for (int b = 0; b < total_batches; ++b) m += batch_mean[b][i];
        m /= total_batches;
        double var = 0.0;
        for (int b = 0; b < total_batches; ++b) {
            var += (batch_mean[b][i] - m) * (batch_mean[b][i] - m);
        }
        var /= (total_batches - 1);
        obs.mean[i] = negated ? -m : m;
        obs.se[i] = std::sqrt(var / total_batches);
    }
    obs.energy_trace.assign(energy_batch.begin(), energy_batch.end());
    // The origin vertex is id 0 and ball() returns ascending ids.
    obs.origin_magnetization = obs.mean[0];
    return obs;
}

RigidityReport interface_rigidity_probe(const HyperbolicLattice& lat,
                                        const DualInterface& iface, double beta,
                                        int radius, long long sweeps,
                                        std::uint64_t seed) {
    const std::vector<VertexId> lambda = lat.ball(radius, lat.origin_vertex());
    const SpinConfiguration dob = dobrushin_configuration(lat, iface, lambda);
    const int n = static_cast<int>(lambda.size());

    std::unordered_map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index.emplace(lambda[i], i);

    // Multi-source BFS from crossed-edge endpoints, inside the window.
    std::vector<int> dist(n, std::numeric_limits<int>::max());
    std::queue<int> queue;
    for (const EdgeKey& e : iface.crossed_primal_edges) {
        for (VertexId v : {e.u, e.v}) {
            auto it = index.find(v);
            if (it != index.end() && dist[it->second] != 0) {
                dist[it->second] = 0;
                queue.push(it->second);
            }
        }
    }
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop();
        for (VertexId w : lat.neighbors(lambda[i])) {
            auto it = index.find(w);
            if (it != index.end() && dist[it->second] > dist[i] + 1) {
                dist[it->second] = dist[i] + 1;
                queue.push(it->second);
            }
        }
    }

    const Sim sim(lat, lambda, dob, beta);
    const long long burn_in = sweeps / 5;
    std::vector<double> mean(n, 0.0);
    std::vector<double> agree(n, 0.0);
    long long count = 0;
    sim.run(2, sweeps, burn_in, seed, nullptr, nullptr,
            [&](int chain, long long, const std::vector<std::int8_t>& spin) {
                if (chain == 0) ++count;
                for (int i = 0; i < n; ++i) {
                    mean[i] += spin[i];
                    agree[i] += spin[i] == dob.at(lambda[i]);
                }
            });
    const double total = 2.0 * static_cast<double>(count);

    RigidityReport rep;
    rep.lambda = lambda;
    rep.distance_to_interface = dist;
    for (int i = 0; i < n; ++i) {
        rep.side.push_back(dob.at(lambda[i]));
        rep.mean.push_back(mean[i] / total);
        rep.agreement.push_back(agree[i] / total);
        if (dist[i] >= 2) {
            ++rep.n_far;
            rep.min_agreement_far = std::min(rep.min_agreement_far, rep.agreement.back());
        }
    }
    return rep;
}

RadiusConsistencyReport radius_consistency(const HyperbolicLattice& lat,
                                           const Boundary& boundary, double beta,
                                           int r_small, std::span<const int> radii,
                                           long long sweeps, std::uint64_t seed) {
    if (radii.empty()) throw DomainError("radius_consistency: no radii given");
    for (int r : radii) {
        if (r_small + 2 > r) {
            throw DomainError("radius_consistency: need r_small + 2 <= every radius");
        }
    }
    RadiusConsistencyReport rep;
    rep.radii.assign(radii.begin(), radii.end());
    rep.core = lat.ball(r_small, lat.origin_vertex());

    for (int r : radii) {
        SimulationConfig cfg;
        cfg.beta = beta;
        cfg.radius = r;
        cfg.sweeps = sweeps;
        cfg.burn_in = sweeps / 5;
        cfg.seed = seed;
        cfg.boundary = boundary;
        cfg.chains = 2;
        const Observables obs = sample(lat, cfg);
        std::unordered_map<VertexId, int> index;
        for (int i = 0; i < static_cast<int>(obs.lambda.size()); ++i) {
            index.emplace(obs.lambda[i], i);
        }
        std::vector<double> core_means;
        for (VertexId v : rep.core) core_means.push_back(obs.mean.at(index.at(v)));
        rep.means.push_back(std::move(core_means));
    }
    for (std::size_t a = 0; a < rep.means.size(); ++a) {
        for (std::size_t b = a + 1; b < rep.means.size(); ++b) {
            for (std::size_t k = 0; k < rep.core.size(); ++k) {
                rep.max_discrepancy = std::max(
                    rep.max_discrepancy, std::abs(rep.means[a][k] - rep.means[b][k]));
            }
        }
    }
    return rep;
}

}  // namespace hyplat
