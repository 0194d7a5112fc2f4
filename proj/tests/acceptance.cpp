// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each criterion re-derives its expectations from scratch
// (closed forms, exhaustive enumeration, exact identities) rather than from
// recorded outputs, so a pass certifies the library end to end.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyplat/gibbs.hpp"
#include "hyplat/interfaces.hpp"
#include "hyplat/isoperimetry.hpp"
#include "hyplat/lattice.hpp"
#include "hyplat/rng.hpp"
#include "hyplat/spin.hpp"

using namespace hyplat;

namespace {

int failures = 0;
std::string detail;  // populated by a failing criterion

void check(bool ok, const std::string& msg) {
    if (!ok && detail.empty()) detail = msg;
    if (!ok) throw std::runtime_error(msg);
}

void run_criterion(int number, const std::string& name, const std::function<void()>& fn) {
    detail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
        fn();
    } catch (const std::exception& e) {
        ok = false;
        if (detail.empty()) detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d. %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
                ok ? "" : " -- ", ok ? "" : detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

SpinConfiguration random_window_config(const HyperbolicLattice& lat,
                                       const std::vector<VertexId>& window, RngStream& rng) {
    SpinConfiguration cfg;
    cfg.region = window;
    std::unordered_set<VertexId> in(window.begin(), window.end());
    for (VertexId v : window) {
        if (!cfg.values.count(v)) {
            cfg.values[v] = rng.next_double() < 0.5 ? std::int8_t{1} : std::int8_t{-1};
        }
        for (VertexId w : lat.neighbors(v)) {
            if (!in.count(w) && !cfg.values.count(w)) {
                cfg.values[w] = rng.next_double() < 0.5 ? std::int8_t{1} : std::int8_t{-1};
            }
        }
    }
    return cfg;
}

std::vector<VertexId> random_connected_support(const HyperbolicLattice& lat,
                                               const std::vector<VertexId>& window,
                                               RngStream& rng, int max_size) {
    std::unordered_set<VertexId> in(window.begin(), window.end());
    std::vector<VertexId> support{window[rng.next_below(window.size())]};
    std::unordered_set<VertexId> chosen(support.begin(), support.end());
    const int target = 1 + static_cast<int>(rng.next_below(max_size));
    while (static_cast<int>(support.size()) < target) {
        const VertexId v = support[rng.next_below(support.size())];
        std::vector<VertexId> options;
        for (VertexId w : lat.neighbors(v)) {
            if (in.count(w) && !chosen.count(w)) options.push_back(w);
        }
        if (options.empty()) break;
        const VertexId w = options[rng.next_below(options.size())];
        support.push_back(w);
        chosen.insert(w);
    }
    return support;
}

/// Connected components of the window's induced graph minus `removed` edges.
int component_count(const HyperbolicLattice& lat, const std::vector<VertexId>& window,
                    const std::set<EdgeKey>& removed) {
    std::unordered_map<VertexId, int> comp;
    for (VertexId v : window) comp[v] = -1;
    int n = 0;
    for (VertexId s : window) {
        if (comp[s] != -1) continue;
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = n;
        while (!q.empty()) {
            const VertexId v = q.front();
            q.pop();
            for (VertexId w : lat.neighbors(v)) {
                auto it = comp.find(w);
                if (it == comp.end() || it->second != -1) continue;
                if (removed.count(EdgeKey{v, w})) continue;
                it->second = n;
                q.push(w);
            }
        }
        ++n;
    }
    return n;
}

// Criterion 3 runs the randomized sweep; criterion 4 certifies the lemma
// bound over the exact same trials, so the sweep stashes its results here.
struct SweepResult {
    int identity_ok = 0;
    int bound_ok = 0;
    int total = 0;
};
SweepResult sweep;

void criterion_1_closed_form() {
    check(std::abs(ic_formula(5, 5) - std::sqrt(5.0)) < 1e-12, "ic(5,5) != sqrt(5)");
    check(ic_formula(4, 4) == 0.0, "ic(4,4) != 0");
    check(ic_formula(3, 6) == 0.0, "ic(3,6) != 0");
    check(ic_formula(6, 3) == 0.0, "ic(6,3) != 0");
    for (int q = 3; q <= 10; ++q) {
        check(std::abs(ic_formula(1'000'000, q) - (q - 2)) < 1e-4,
              "large-p limit off for q=" + std::to_string(q));
    }
}

void criterion_2_brute_force_lower_bound() {
    for (auto [p, q] : {std::pair{5, 4}, {4, 5}, {5, 5}, {7, 3}, {3, 7}}) {
        const auto lat = HyperbolicLattice::generate({p, q}, 8);
        const auto res = brute_force_ic(lat, 8);
        check(res.ratio >= ic_formula(p, q) - 1e-9,
              "brute-force ratio below closed form for (" + std::to_string(p) + "," +
                  std::to_string(q) + ")");
    }
}

void criterion_3_excess_energy_identity() {
    sweep = {};
    for (auto [p, q] : {std::pair{5, 4}, {5, 5}, {4, 5}}) {
        const auto lat = HyperbolicLattice::generate({p, q}, 6);
        const auto window = lat.ball(4, lat.origin_vertex());
        RngStream rng(7, static_cast<std::uint64_t>(p * 100 + q));
        for (int trial = 0; trial < 200; ++trial) {
            const auto sigma0 = random_window_config(lat, window, rng);
            const Contour gamma(lat, random_connected_support(lat, window, rng, 6));
            const auto e = excess_energy(lat, sigma0, gamma);
            ++sweep.total;
            sweep.identity_ok += e.delta_h == e.boundary_size - 2 * e.broken_crossing;
            const int d = broken_bonds(lat, sigma0).delta_broken;
            const double bound =
                excess_energy_bound(p, q, d, static_cast<long long>(gamma.support.size()));
            sweep.bound_ok += static_cast<double>(e.delta_h) >= bound - 1e-9;
        }
    }
    check(sweep.total == 600, "sweep did not complete");
    check(sweep.identity_ok == sweep.total,
          std::to_string(sweep.total - sweep.identity_ok) + " identity violations");
}

void criterion_4_lemma_bound() {
    check(sweep.total == 600, "sweep was not run");
    check(sweep.bound_ok == sweep.total,
          std::to_string(sweep.total - sweep.bound_ok) + " bound violations");
}

void criterion_5_interface_sparsity() {
    for (auto [p, q] : {std::pair{5, 5}, {5, 6}}) {
        const auto lat = HyperbolicLattice::generate({p, q}, 6);
        const DualLattice dual(lat);
        const CoronaGraph corona(dual, 2);
        const int D = corona.tree_count();
        std::vector<std::vector<VertexId>> windows;
        for (int r = 2; r <= 4; ++r) windows.push_back(lat.ball(r, lat.origin_vertex()));
        RngStream rng(23, static_cast<std::uint64_t>(p * 10 + q));
        for (int trial = 0; trial < 50; ++trial) {
            const int tree_a = static_cast<int>(rng.next_below(D));
            const int tree_b = (tree_a + 2 + static_cast<int>(rng.next_below(D - 3))) % D;
            std::vector<int> ba, bb;
            for (int i = 0; i < 5; ++i) {
                ba.push_back(static_cast<int>(rng.next_below(corona.branching())));
                bb.push_back(static_cast<int>(rng.next_below(corona.branching())));
            }
            const auto iface = build_interface(corona, tree_a, ba, tree_b, bb, 6);
            const std::set<EdgeKey> crossed(iface.crossed_primal_edges.begin(),
                                            iface.crossed_primal_edges.end());
            for (const auto& window : windows) {
                const auto sigma = dobrushin_configuration(lat, iface, window);
                const auto rep = broken_bonds(lat, sigma);
                check(rep.delta_broken == 1, "delta_broken != 1");
                check(component_count(lat, window, crossed) == 2, "component count != 2");
            }
        }
    }
}

// ic_formula is undefined below the hyperbolic threshold; the region scan
// treats those cells as having no positive constant.
double ic_formula_or_zero(int p, int q) {
    if (static_cast<long long>(p - 2) * (q - 2) < 4) return 0.0;
    return ic_formula(p, q);
}

void criterion_6_validity_region() {
    for (int p = 3; p <= 10; ++p) {
        for (int q = 3; q <= 10; ++q) {
            const bool hyper = 2 * (p + q) < p * q;
            const bool expected = p > 4 && hyper && ic_formula_or_zero(p, q) > 2.0;
            check(validity_region(p, q) == expected,
                  "region mismatch at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    }
    check(validity_region(5, 5), "(5,5) should be in-region");
    check(!validity_region(5, 4), "(5,4) should be out of region");
    check(!validity_region(4, 9), "(4,9) should be out of region");
}

void criterion_7_sampler_vs_oracle() {
    const auto lat = HyperbolicLattice::generate({5, 4}, 4);
    SimulationConfig cfg;
    cfg.radius = 2;  // |ball(2,o)| = 17 <= 18 on (5,4)
    cfg.sweeps = 24000;
    cfg.burn_in = 4000;
    cfg.seed = 42;
    cfg.chains = 2;
    int combos = 0;
    for (double beta : {0.0, 0.5, 1.0}) {
        for (auto boundary : {Boundary::plus(), Boundary::minus()}) {
            cfg.beta = beta;
            cfg.boundary = boundary;
            const auto obs = sample(lat, cfg);
            check(obs.lambda.size() <= 18, "window too large for the oracle criterion");
            const auto omega = resolve_boundary(lat, obs.lambda, boundary);
            const auto exact = exact_gibbs(lat, obs.lambda, omega, beta);
            for (std::size_t i = 0; i < exact.size(); ++i) {
                std::ostringstream msg;
                msg << "beta " << beta << " vertex " << obs.lambda[i] << ": |" << obs.mean[i]
                    << " - " << exact[i] << "| >= 3*" << obs.se[i];
                check(std::abs(obs.mean[i] - exact[i]) < 3.0 * obs.se[i], msg.str());
            }
            ++combos;
        }
    }
    check(combos >= 5, "fewer than 5 (beta, boundary) combinations");
}

void criterion_8_low_temperature_rigidity() {
    const auto lat = HyperbolicLattice::generate({5, 5}, 6);

    SimulationConfig cfg;
    cfg.beta = 2.0;
    cfg.radius = 4;
    cfg.sweeps = 3000;
    cfg.burn_in = 600;
    cfg.seed = 11;
    cfg.chains = 2;
    cfg.boundary = Boundary::plus();
    const auto obs = sample(lat, cfg);
    check(obs.origin_magnetization > 0.9, "all-plus origin magnetization " +
                                              std::to_string(obs.origin_magnetization) +
                                              " <= 0.9");

    const DualLattice dual(lat);
    const CoronaGraph corona(dual, 2);
    const std::vector<int> z{0, 0, 0, 0, 0};
    const auto iface = build_interface(corona, 0, z, 2, z, 6);
    const auto rep = interface_rigidity_probe(lat, iface, 2.0, 4, 3000, 11);
    check(rep.n_far > 0, "no vertices at distance >= 2 from the interface");
    check(rep.min_agreement_far > 0.95, "side agreement " +
                                            std::to_string(rep.min_agreement_far) +
                                            " <= 0.95 at distance >= 2");
}

void criterion_9_lattice_integrity() {
    for (auto [p, q] : {std::pair{5, 4}, {4, 5}, {5, 5}, {7, 3}, {3, 7}}) {
        const std::string tag = " for (" + std::to_string(p) + "," + std::to_string(q) + ")";
        const auto lat = HyperbolicLattice::generate({p, q}, 6);
        for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
            if (lat.layer(v) < lat.n_layers()) {
                check(lat.degree(v) == q, "sub-frontier degree != q" + tag);
            }
        }
        for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
            check(lat.face(f).size() == static_cast<std::size_t>(p), "face side count != p" + tag);
        }
        const auto lc = lat.layer_counts();  // independent face-incidence relabeling
        for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
            check(lc.relabel[v] == lat.layer(v), "independent layer label mismatch" + tag);
        }
        std::vector<long long> s(lc.S.begin(), lc.S.end());
        const auto rec = fit_linear_recurrence(s, 1, 4);
        check(rec.order <= 2, "recurrence order > 2" + tag);
        long long s5 = rec.next(s[3], s[4]);
        long long s6 = rec.next(s[4], s5);
        check(s5 == s[5] && s6 == s[6], "recurrence prediction wrong at n=5,6" + tag);
    }
}

void criterion_10_interface_counting() {
    for (auto [p, q] : {std::pair{5, 5}, {6, 5}}) {  // dual degrees 5 and 6
        const auto lat = HyperbolicLattice::generate({p, q}, 5);
        const DualLattice dual(lat);
        const CoronaGraph corona(dual, 2);
        const int D = corona.tree_count();
        const int B = corona.branching();
        for (int depth = 1; depth <= 3; ++depth) {
            std::vector<std::vector<int>> branches{{}};
            for (int len = 0; len < depth - 1; ++len) {
                std::vector<std::vector<int>> next;
                for (const auto& b : branches) {
                    for (int c = 0; c < B; ++c) {
                        auto ext = b;
                        ext.push_back(c);
                        next.push_back(std::move(ext));
                    }
                }
                branches = std::move(next);
            }
            long long enumerated = 0;
            std::set<std::set<EdgeKey>> edge_sets;
            for (int ta = 0; ta < D; ++ta) {
                for (int tb = 0; tb < D; ++tb) {
                    const int gap = std::min((ta - tb + D) % D, (tb - ta + D) % D);
                    if (gap < 2) continue;
                    for (const auto& ba : branches) {
                        for (const auto& bb : branches) {
                            if (std::tie(ta, ba) > std::tie(tb, bb)) continue;
                            ++enumerated;
                            const auto iface = build_interface(corona, ta, ba, tb, bb, depth);
                            edge_sets.insert(
                                std::set<EdgeKey>(iface.crossed_primal_edges.begin(),
                                                  iface.crossed_primal_edges.end()));
                        }
                    }
                }
            }
            const std::string tag = " (D=" + std::to_string(D) +
                                    ", depth=" + std::to_string(depth) + ")";
            check(count_interface_prefixes(corona, depth) == enumerated,
                  "count formula != enumeration" + tag);
            check(static_cast<long long>(edge_sets.size()) == enumerated,
                  "crossed-edge sets not distinct" + tag);
        }
    }
}

}  // namespace

int main() {
    run_criterion(1, "closed-form isoperimetric constant", criterion_1_closed_form);
    run_criterion(2, "brute-force isoperimetric lower bound", criterion_2_brute_force_lower_bound);
    run_criterion(3, "excess-energy exact identity", criterion_3_excess_energy_identity);
    run_criterion(4, "excess-energy lemma bound", criterion_4_lemma_bound);
    run_criterion(5, "interface sparsity (delta_broken = 1, two sides)",
                  criterion_5_interface_sparsity);
    run_criterion(6, "validity region scan", criterion_6_validity_region);
    run_criterion(7, "sampler vs exact-enumeration oracle", criterion_7_sampler_vs_oracle);
    run_criterion(8, "low-temperature rigidity", criterion_8_low_temperature_rigidity);
    run_criterion(9, "lattice integrity and growth recurrence", criterion_9_lattice_integrity);
    run_criterion(10, "interface prefix counting", criterion_10_interface_counting);

    if (failures) {
        std::printf("%d of 10 criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
