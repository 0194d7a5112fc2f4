// hyplat: command-line front end for the hyperbolic-lattice library.
//
// Subcommands map 1:1 onto the library modules: lattice generation and layer
// counts, the isoperimetric constant and sparsity condition, excess-energy
// sweeps, sparse dual interfaces, and finite-volume Gibbs sampling. With
// --out-dir every artifact (CSV/JSON/SVG) is written to disk together with a
// manifest listing content digests, so re-running a command reproduces the
// same digests byte for byte.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyplat/gibbs.hpp"
#include "hyplat/interfaces.hpp"
#include "hyplat/io.hpp"
#include "hyplat/isoperimetry.hpp"
#include "hyplat/lattice.hpp"
#include "hyplat/rng.hpp"
#include "hyplat/spin.hpp"

using namespace hyplat;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

/// Collects artifacts for one invocation; writes files (plus the manifest)
/// when an output directory is configured, otherwise prints to stdout.
struct Emitter {
    std::string out_dir;
    bool json_mode = false;
    RunManifest manifest;

    void param(const std::string& flag, const std::string& value) {
        manifest.parameters.emplace_back(flag, value);
    }

    /// Primary payload: JSON goes to stdout under --json, human text
    /// otherwise; with --out-dir the JSON is also written to `name`.
    void primary(const std::string& name, const json& machine, const std::string& human) {
        if (!out_dir.empty()) {
            file(name, machine.dump(2) + "\n");
        }
        if (json_mode) {
            std::cout << machine.dump(2) << "\n";
        } else {
            std::cout << human;
        }
    }

    /// Side artifact (CSV/SVG/JSON): written only when --out-dir is set.
    void file(const std::string& name, const std::string& data) {
        if (out_dir.empty()) return;
        const std::string path = out_dir + "/" + name;
        manifest.outputs.emplace_back(name, write_file(path, data));
    }

    void finish() {
        if (out_dir.empty()) return;
        write_file(out_dir + "/manifest.json", manifest.to_json());
    }
};

std::string join_ints(std::span<const int> xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

/// A Boundary plus the objects it borrows (interface, host structures).
struct BoundarySpec {
    Boundary boundary;
    std::unique_ptr<DualLattice> dual;
    std::unique_ptr<CoronaGraph> corona;
    std::unique_ptr<DualInterface> iface;
};

/// `dobrushin:<tree_a>/<branch_a>/<tree_b>/<branch_b>/<depth>` with the
/// branch lists comma-separated (and possibly empty for depth 1).
DualInterface parse_interface_selector(const CoronaGraph& corona, const std::string& sel) {
    std::vector<std::string> parts;
    std::stringstream ss(sel);
    for (std::string part; std::getline(ss, part, '/');) parts.push_back(part);
    if (parts.size() != 5) {
        throw DomainError("interface selector must be tree_a/branch_a/tree_b/branch_b/depth");
    }
    auto ints = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream is(s);
        for (std::string tok; std::getline(is, tok, ',');) out.push_back(std::stoi(tok));
        return out;
    };
    return build_interface(corona, std::stoi(parts[0]), ints(parts[1]), std::stoi(parts[2]),
                           ints(parts[3]), std::stoi(parts[4]));
}

/// Depth field of a dobrushin selector, 0 for other boundary kinds; used to
/// size the host lattice before the interface itself can be built.
int selector_depth(const std::string& spec) {
    if (!spec.starts_with("dobrushin:")) return 0;
    const auto pos = spec.find_last_of('/');
    if (pos == std::string::npos) return 0;
    return std::atoi(spec.c_str() + pos + 1);
}

BoundarySpec parse_boundary(const HyperbolicLattice& lat, const std::string& spec) {
    BoundarySpec out;
    if (spec == "plus") {
        out.boundary = Boundary::plus();
    } else if (spec == "minus") {
        out.boundary = Boundary::minus();
    } else if (spec.starts_with("dobrushin:")) {
        out.dual = std::make_unique<DualLattice>(lat);
        out.corona = std::make_unique<CoronaGraph>(*out.dual, 2);
        out.iface = std::make_unique<DualInterface>(
            parse_interface_selector(*out.corona, spec.substr(10)));
        out.boundary = Boundary::dobrushin_bc(*out.iface);
    } else if (spec.starts_with("file:")) {
        std::ifstream in(spec.substr(5));
        if (!in) throw DomainError("cannot open boundary file " + spec.substr(5));
        json j;
        in >> j;
        SpinConfiguration cfg;
        for (const auto& [key, val] : j.items()) {
            const VertexId v = std::stoll(key);
            const int s = val.get<int>();
            if (s != 1 && s != -1) throw DomainError("boundary spins must be +1 or -1");
            cfg.region.push_back(v);
            cfg.values[v] = static_cast<std::int8_t>(s);
        }
        std::sort(cfg.region.begin(), cfg.region.end());
        out.boundary = Boundary::from_config(std::move(cfg));
    } else {
        throw DomainError("boundary must be plus, minus, dobrushin:<selector>, or file:<path>");
    }
    return out;
}

json observables_json(const HyperbolicLattice& lat, const Observables& obs) {
    json j;
    j["origin_magnetization"] = obs.origin_magnetization;
    j["flips"] = obs.flips;
    j["updates"] = obs.updates;
    json verts = json::array();
    for (std::size_t i = 0; i < obs.lambda.size(); ++i) {
        verts.push_back({{"id", obs.lambda[i]},
                         {"layer", lat.layer(obs.lambda[i])},
                         {"mean", obs.mean[i]},
                         {"se", obs.se[i]}});
    }
    j["vertices"] = std::move(verts);
    return j;
}

std::string observables_csv(const HyperbolicLattice& lat, const Observables& obs) {
    std::ostringstream csv;
    csv << "vertex,layer,mean,se\n";
    for (std::size_t i = 0; i < obs.lambda.size(); ++i) {
        csv << obs.lambda[i] << "," << lat.layer(obs.lambda[i]) << "," << obs.mean[i] << ","
            << obs.se[i] << "\n";
    }
    return csv.str();
}

int run(int argc, char** argv) {
    CLI::App app{"hyperbolic lattice toolkit: tilings, isoperimetry, interfaces, Gibbs sampling"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Emitter em;
    if (const char* env = std::getenv("HYPLAT_OUT_DIR")) em.out_dir = env;
    app.add_option("--out-dir", em.out_dir, "directory for artifacts plus a digest manifest");
    app.add_flag("--json", em.json_mode, "machine-readable output on stdout");

    int p = 5, q = 5, layers = 3, radius = 2, depth = 2;
    int trials = 100, max_contour = 6, chains = 2, r_small = 1;
    int brute_max_size = 0, p_max = 10, q_max = 10, delta_max = 1;
    long long sweeps = 2000, burn_in = 500;
    std::uint64_t seed = 1;
    double beta = 1.0;
    bool svg = false;
    int tree_a = 0, tree_b = 2;
    std::string branch_a_str, branch_b_str, boundary_str = "plus", radii_str = "3,4";

    auto add_pq = [&](CLI::App* cmd) {
        cmd->fallthrough();  // let --json / --out-dir appear after the subcommand
        cmd->add_option("--p", p, "face side count")->required();
        cmd->add_option("--q", q, "vertex degree")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a truncated tiling");
    add_pq(gen);
    gen->add_option("--layers", layers, "generation depth");
    gen->add_flag("--svg", svg, "emit a radial-layout SVG");

    CLI::App* counts = app.add_subcommand("counts", "per-layer sphere and ball counts");
    add_pq(counts);
    counts->add_option("--layers", layers, "generation depth");

    CLI::App* ic = app.add_subcommand("ic", "isoperimetric constant and sparsity condition");
    add_pq(ic);
    ic->add_option("--delta-max", delta_max, "sparsity level to test");
    ic->add_option("--brute-max-size", brute_max_size,
                   "also brute-force the constant over sets up to this size");

    CLI::App* region = app.add_subcommand("region-scan", "validity region over a (p,q) grid");
    region->fallthrough();
    region->add_option("--p-max", p_max, "largest p");
    region->add_option("--q-max", q_max, "largest q");

    CLI::App* energy = app.add_subcommand("energy", "randomized excess-energy sweep");
    add_pq(energy);
    energy->add_option("--radius", radius, "window radius around the origin");
    energy->add_option("--trials", trials, "number of random (config, contour) pairs");
    energy->add_option("--seed", seed, "RNG seed");
    energy->add_option("--max-contour", max_contour, "largest contour support");

    CLI::App* iface_cmd = app.add_subcommand("interface", "sparse dual interface prefix");
    add_pq(iface_cmd);
    iface_cmd->add_option("--depth", depth, "interface depth (dual circles per side)");
    iface_cmd->add_option("--tree-a", tree_a, "first glued tree");
    iface_cmd->add_option("--branch-a", branch_a_str, "comma-separated branch choices");
    iface_cmd->add_option("--tree-b", tree_b, "second glued tree");
    iface_cmd->add_option("--branch-b", branch_b_str, "comma-separated branch choices");
    iface_cmd->add_flag("--svg", svg, "emit an SVG overlay with crossed edges dashed");

    CLI::App* sim = app.add_subcommand("simulate", "finite-volume heat-bath sampling");
    add_pq(sim);
    sim->add_option("--radius", radius, "window radius");
    sim->add_option("--beta", beta, "inverse temperature");
    sim->add_option("--sweeps", sweeps, "sweeps per chain");
    sim->add_option("--burn-in", burn_in, "discarded initial sweeps");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--chains", chains, "independent chains");
    sim->add_option("--boundary", boundary_str,
                    "plus | minus | dobrushin:<ta/ba/tb/bb/depth> | file:<path>");

    CLI::App* probe = app.add_subcommand("probe-rigidity", "interface side-agreement probe");
    add_pq(probe);
    probe->add_option("--depth", depth, "interface depth");
    probe->add_option("--tree-a", tree_a, "first glued tree");
    probe->add_option("--branch-a", branch_a_str, "comma-separated branch choices");
    probe->add_option("--tree-b", tree_b, "second glued tree");
    probe->add_option("--branch-b", branch_b_str, "comma-separated branch choices");
    probe->add_option("--radius", radius, "window radius");
    probe->add_option("--beta", beta, "inverse temperature");
    probe->add_option("--sweeps", sweeps, "sweeps per chain");
    probe->add_option("--seed", seed, "RNG seed");

    CLI::App* rc = app.add_subcommand("radius-consistency", "core marginals across window sizes");
    add_pq(rc);
    rc->add_option("--beta", beta, "inverse temperature");
    rc->add_option("--r-small", r_small, "core radius");
    rc->add_option("--radii", radii_str, "comma-separated window radii");
    rc->add_option("--sweeps", sweeps, "sweeps per chain");
    rc->add_option("--seed", seed, "RNG seed");
    rc->add_option("--boundary", boundary_str, "plus | minus | dobrushin:<selector>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto ints = [](const std::string& s) {
        std::vector<int> out;
        std::stringstream is(s);
        for (std::string tok; std::getline(is, tok, ',');) out.push_back(std::stoi(tok));
        return out;
    };

    if (!em.out_dir.empty()) std::filesystem::create_directories(em.out_dir);
    em.manifest.version = kVersion;
    em.manifest.seed = seed;

    if (*gen) {
        em.manifest.command = "gen";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("layers", std::to_string(layers));
        const auto lat = HyperbolicLattice::generate({p, q}, layers);
        const std::string j = lattice_to_json(lat);
        if (!em.out_dir.empty()) em.file("lattice.json", j);
        if (svg || !em.out_dir.empty()) em.file("lattice.svg", lattice_to_svg(lat));
        std::ostringstream human;
        human << "{" << p << "," << q << "} depth " << layers << ": " << lat.n_vertices()
              << " vertices, " << lat.n_edges() << " edges, " << lat.n_faces() << " faces\n";
        if (em.json_mode) {
            std::cout << j << "\n";
        } else {
            std::cout << human.str();
        }
    } else if (*counts) {
        em.manifest.command = "counts";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("layers", std::to_string(layers));
        const auto lat = HyperbolicLattice::generate({p, q}, layers);
        const auto lc = lat.layer_counts();
        std::ostringstream csv, human;
        csv << "n,S,B\n";
        human << "  n          S_n          B_n\n";
        json jl = json::array();
        for (std::size_t n = 0; n < lc.S.size(); ++n) {
            csv << n << "," << lc.S[n] << "," << lc.B[n] << "\n";
            human << std::setw(3) << n << std::setw(13) << lc.S[n] << std::setw(13) << lc.B[n]
                  << "\n";
            jl.push_back({{"n", n}, {"S", lc.S[n]}, {"B", lc.B[n]}});
        }
        em.file("counts.csv", csv.str());
        em.primary("counts.json", {{"p", p}, {"q", q}, {"layers", jl}}, human.str());
    } else if (*ic) {
        em.manifest.command = "ic";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("delta-max", std::to_string(delta_max));
        const auto rep = sparsity_check(p, q, delta_max);
        json j{{"p", rep.p},
               {"q", rep.q},
               {"ic", rep.ic},
               {"delta_max", rep.delta_max},
               {"condition_holds", rep.condition_holds},
               {"validity_region", rep.validity_region}};
        std::ostringstream human;
        human << "IC(" << p << "," << q << ") = " << rep.ic << "\n"
              << "condition delta_max=" << delta_max << " < IC/2: "
              << (rep.condition_holds ? "true" : "false") << "\n"
              << "validity region: " << (rep.validity_region ? "true" : "false") << "\n";
        if (brute_max_size > 0) {
            em.param("brute-max-size", std::to_string(brute_max_size));
            const auto lat = HyperbolicLattice::generate({p, q}, brute_max_size + 1);
            const auto bf = brute_force_ic(lat, brute_max_size);
            j["brute_force"] = {{"max_size", brute_max_size},
                                {"ratio", bf.ratio},
                                {"argmin", bf.argmin}};
            human << "brute force (size <= " << brute_max_size << "): " << bf.ratio << "\n";
        }
        em.primary("ic.json", j, human.str());
    } else if (*region) {
        em.manifest.command = "region-scan";
        em.param("p-max", std::to_string(p_max));
        em.param("q-max", std::to_string(q_max));
        std::ostringstream csv;
        csv << "p,q,ic,in_region\n";
        json rows = json::array();
        for (int pp = 3; pp <= p_max; ++pp) {
            for (int qq = 3; qq <= q_max; ++qq) {
                const bool hyper = 2 * (pp + qq) < pp * qq;
                const double icv =
                    (static_cast<long long>(pp - 2) * (qq - 2) >= 4) ? ic_formula(pp, qq) : 0.0;
                const bool in = validity_region(pp, qq);
                csv << pp << "," << qq << "," << (hyper ? icv : 0.0) << "," << (in ? 1 : 0)
                    << "\n";
                rows.push_back({{"p", pp}, {"q", qq}, {"ic", hyper ? icv : 0.0}, {"in_region", in}});
            }
        }
        em.file("region.csv", csv.str());
        em.primary("region.json", {{"rows", rows}}, csv.str());
    } else if (*energy) {
        em.manifest.command = "energy";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("radius", std::to_string(radius));
        em.param("trials", std::to_string(trials));
        em.param("seed", std::to_string(seed));
        const auto lat = HyperbolicLattice::generate({p, q}, radius + 2);
        const auto window = lat.ball(radius, lat.origin_vertex());
        RngStream rng(seed, 0);
        std::ostringstream csv;
        csv << "trial,contour_size,delta_broken,delta_h,boundary_size,broken_crossing,bound,"
               "bound_satisfied\n";
        int satisfied = 0;
        for (int t = 0; t < trials; ++t) {
            SpinConfiguration sigma0;
            sigma0.region = window;
            std::unordered_set<VertexId> in(window.begin(), window.end());
            for (VertexId v : window) {
                sigma0.values[v] = rng.next_double() < 0.5 ? std::int8_t{1} : std::int8_t{-1};
                for (VertexId w : lat.neighbors(v)) {
                    if (!in.count(w) && !sigma0.values.count(w)) {
                        sigma0.values[w] =
                            rng.next_double() < 0.5 ? std::int8_t{1} : std::int8_t{-1};
                    }
                }
            }
            // Random connected contour support grown from a random seed.
            std::vector<VertexId> support{window[rng.next_below(window.size())]};
            std::unordered_set<VertexId> chosen(support.begin(), support.end());
            const int target = 1 + static_cast<int>(rng.next_below(max_contour));
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
            const Contour gamma(lat, support);
            const auto e = excess_energy(lat, sigma0, gamma);
            const int d = broken_bonds(lat, sigma0).delta_broken;
            const double bound =
                excess_energy_bound(p, q, d, static_cast<long long>(support.size()));
            const bool ok = static_cast<double>(e.delta_h) >= bound - 1e-9;
            satisfied += ok;
            csv << t << "," << support.size() << "," << d << "," << e.delta_h << ","
                << e.boundary_size << "," << e.broken_crossing << "," << bound << ","
                << (ok ? 1 : 0) << "\n";
        }
        em.file("energy.csv", csv.str());
        std::ostringstream human;
        human << trials << " trials on {" << p << "," << q << "} ball(" << radius
              << "): bound satisfied in " << satisfied << "\n";
        em.primary("energy.json",
                   {{"p", p}, {"q", q}, {"trials", trials}, {"bound_satisfied", satisfied}},
                   human.str());
    } else if (*iface_cmd) {
        em.manifest.command = "interface";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("depth", std::to_string(depth));
        em.param("tree-a", std::to_string(tree_a));
        em.param("branch-a", branch_a_str);
        em.param("tree-b", std::to_string(tree_b));
        em.param("branch-b", branch_b_str);
        const auto lat = HyperbolicLattice::generate({p, q}, depth + 2);
        const DualLattice dual(lat);
        const CoronaGraph corona(dual, 2);
        const auto iface = build_interface(corona, tree_a, ints(branch_a_str), tree_b,
                                           ints(branch_b_str), depth);
        const auto window = lat.ball(std::max(1, depth / 2), lat.origin_vertex());
        bool separated = true;
        int db = -1;
        try {
            const auto sigma = dobrushin_configuration(lat, iface, window);
            db = broken_bonds(lat, sigma).delta_broken;
        } catch (const NotSeparatingError&) {
            separated = false;
        }
        json edges = json::array();
        for (const EdgeKey& e : iface.crossed_primal_edges) edges.push_back({e.u, e.v});
        json j{{"crossed_edges", edges}, {"delta_broken", db}, {"separated", separated}};
        if (svg || !em.out_dir.empty()) {
            em.file("interface.svg", lattice_to_svg(lat, iface.crossed_primal_edges));
        }
        std::ostringstream human;
        human << "interface depth " << depth << ": " << iface.crossed_primal_edges.size()
              << " crossed edges, delta_broken " << db << ", separated "
              << (separated ? "true" : "false") << "\n";
        em.primary("interface.json", j, human.str());
    } else if (*sim) {
        em.manifest.command = "simulate";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("radius", std::to_string(radius));
        em.param("beta", std::to_string(beta));
        em.param("sweeps", std::to_string(sweeps));
        em.param("burn-in", std::to_string(burn_in));
        em.param("seed", std::to_string(seed));
        em.param("chains", std::to_string(chains));
        em.param("boundary", boundary_str);
        const auto lat = HyperbolicLattice::generate(
            {p, q}, std::max(radius, selector_depth(boundary_str)) + 2);
        const BoundarySpec bs = parse_boundary(lat, boundary_str);
        SimulationConfig cfg;
        cfg.beta = beta;
        cfg.radius = radius;
        cfg.sweeps = sweeps;
        cfg.burn_in = burn_in;
        cfg.seed = seed;
        cfg.chains = chains;
        cfg.boundary = bs.boundary;
        const auto obs = sample(lat, cfg);
        em.file("observables.csv", observables_csv(lat, obs));
        if (bs.iface) {
            // Interface boundary: also report the side-resolved profile.
            const auto rep = interface_rigidity_probe(lat, *bs.iface, beta, radius, sweeps, seed);
            std::ostringstream prof;
            prof << "vertex,distance_to_interface,side,mean\n";
            for (std::size_t i = 0; i < rep.lambda.size(); ++i) {
                prof << rep.lambda[i] << "," << rep.distance_to_interface[i] << ","
                     << rep.side[i] << "," << rep.mean[i] << "\n";
            }
            em.file("profile.csv", prof.str());
        }
        std::ostringstream human;
        human << "beta " << beta << ", window ball(" << radius << ") of " << obs.lambda.size()
              << " vertices, " << chains << " chains x " << sweeps
              << " sweeps\norigin magnetization " << obs.origin_magnetization << "\n";
        em.primary("observables.json", observables_json(lat, obs), human.str());
    } else if (*probe) {
        em.manifest.command = "probe-rigidity";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("depth", std::to_string(depth));
        em.param("radius", std::to_string(radius));
        em.param("beta", std::to_string(beta));
        em.param("sweeps", std::to_string(sweeps));
        em.param("seed", std::to_string(seed));
        const auto lat = HyperbolicLattice::generate({p, q}, std::max(radius, depth) + 2);
        const DualLattice dual(lat);
        const CoronaGraph corona(dual, 2);
        const auto iface = build_interface(corona, tree_a, ints(branch_a_str), tree_b,
                                           ints(branch_b_str), depth);
        const auto rep = interface_rigidity_probe(lat, iface, beta, radius, sweeps, seed);
        std::ostringstream prof;
        prof << "vertex,distance_to_interface,side,mean,agreement\n";
        for (std::size_t i = 0; i < rep.lambda.size(); ++i) {
            prof << rep.lambda[i] << "," << rep.distance_to_interface[i] << "," << rep.side[i]
                 << "," << rep.mean[i] << "," << rep.agreement[i] << "\n";
        }
        em.file("profile.csv", prof.str());
        json j{{"min_agreement_far", rep.min_agreement_far}, {"n_far", rep.n_far}};
        std::ostringstream human;
        human << "window ball(" << radius << "), " << rep.n_far
              << " vertices at distance >= 2 from the interface\nmin side agreement among them: "
              << rep.min_agreement_far << "\n";
        em.primary("rigidity.json", j, human.str());
    } else if (*rc) {
        em.manifest.command = "radius-consistency";
        validate_params(p, q);
        em.param("p", std::to_string(p));
        em.param("q", std::to_string(q));
        em.param("beta", std::to_string(beta));
        em.param("r-small", std::to_string(r_small));
        em.param("radii", radii_str);
        em.param("sweeps", std::to_string(sweeps));
        em.param("seed", std::to_string(seed));
        em.param("boundary", boundary_str);
        const std::vector<int> radii = ints(radii_str);
        int r_max = r_small;
        for (int r : radii) r_max = std::max(r_max, r);
        const auto lat = HyperbolicLattice::generate(
            {p, q}, std::max(r_max, selector_depth(boundary_str)) + 2);
        const BoundarySpec bs = parse_boundary(lat, boundary_str);
        const auto rep = radius_consistency(lat, bs.boundary, beta, r_small, radii, sweeps, seed);
        std::ostringstream csv;
        csv << "radius,vertex,mean\n";
        for (std::size_t i = 0; i < rep.radii.size(); ++i) {
            for (std::size_t k = 0; k < rep.core.size(); ++k) {
                csv << rep.radii[i] << "," << rep.core[k] << "," << rep.means[i][k] << "\n";
            }
        }
        em.file("consistency.csv", csv.str());
        json j{{"radii", rep.radii},
               {"core", rep.core},
               {"max_discrepancy", rep.max_discrepancy}};
        std::ostringstream human;
        human << "core ball(" << r_small << ") across radii " << join_ints(rep.radii)
              << ": max marginal discrepancy " << rep.max_discrepancy << "\n";
        em.primary("consistency.json", j, human.str());
    }

    em.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
