#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyplat/lattice.hpp"

namespace hyplat {

/// Lattice as RFC-8259 JSON: {p, q, n_layers, vertices:[{id,layer,kind}],
/// edges:[[u,v],...], faces:[[...],...]} with ids sorted.
std::string lattice_to_json(const HyperbolicLattice& lat);

/// Radial "corona" layout: radius proportional to layer, angular position by
/// in-layer order. Pure shapes (no text), so the output is digest-stable.
/// `highlight_edges` are drawn dashed red on top (used for broken bonds).
std::string lattice_to_svg(const HyperbolicLattice& lat,
                           const std::vector<EdgeKey>& highlight_edges = {});

/// FNV-1a 64-bit content digest, hex-encoded.
std::string fnv1a_hex(const std::string& data);

/// Writes `data` to `path` (creating parent directories is the caller's
/// job) and returns its digest.
std::string write_file(const std::string& path, const std::string& data);

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // flag, value
    std::uint64_t seed = 0;
    std::string version;
    std::vector<std::pair<std::string, std::string>> outputs;  // file, digest

    std::string to_json() const;
};

}  // namespace hyplat
