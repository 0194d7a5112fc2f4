#include "hyplat/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace hyplat {

using nlohmann::json;

std::string lattice_to_json(const HyperbolicLattice& lat) {
    json j;
    j["p"] = lat.p();
    j["q"] = lat.q();
    j["n_layers"] = lat.n_layers();
    json verts = json::array();
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        verts.push_back({{"id", v},
                         {"layer", lat.layer(v)},
                         {"kind", lat.kind(v) == VertexKind::black ? "black" : "blue"}});
    }
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& [u, v] : lat.edge_list()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    json faces = json::array();
    for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
        json face = json::array();
        for (VertexId v : lat.face(f)) face.push_back(v);
        faces.push_back(std::move(face));
    }
    j["faces"] = std::move(faces);
    return j.dump();
}

namespace {

struct Point {
    double x, y;
};

// Radial layout: layer n on a circle of radius n+... with angular positions
// spread by in-layer id order.
std::vector<Point> radial_layout(const HyperbolicLattice& lat, double scale) {
    std::vector<long long> layer_size(lat.n_layers() + 2, 0);
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        ++layer_size[lat.layer(v)];
    }
    std::vector<long long> seen(lat.n_layers() + 2, 0);
    std::vector<Point> pos(lat.n_vertices());
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        const int l = lat.layer(v);
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(seen[l]++) / layer_size[l];
        const double r = scale * (l + (l ? 0.0 : 0.35));
        pos[v] = {r * std::cos(angle), r * std::sin(angle)};
    }
    return pos;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

std::string lattice_to_svg(const HyperbolicLattice& lat,
                           const std::vector<EdgeKey>& highlight_edges) {
    const double scale = 60.0;
    const double extent = scale * (lat.n_layers() + 1);
    const std::vector<Point> pos = radial_layout(lat, scale);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(-extent) + " " +
           fmt(-extent) + " " + fmt(2 * extent) + " " + fmt(2 * extent) + "\">\n";
    for (const auto& [u, v] : lat.edge_list()) {
        svg += "<line x1=\"" + fmt(pos[u].x) + "\" y1=\"" + fmt(pos[u].y) + "\" x2=\"" +
               fmt(pos[v].x) + "\" y2=\"" + fmt(pos[v].y) +
               "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }
    for (const EdgeKey& e : highlight_edges) {
        svg += "<line x1=\"" + fmt(pos[e.u].x) + "\" y1=\"" + fmt(pos[e.u].y) + "\" x2=\"" +
               fmt(pos[e.v].x) + "\" y2=\"" + fmt(pos[e.v].y) +
               "\" stroke=\"#c22\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        const bool black = lat.kind(v) == VertexKind::black;
        svg += "<circle cx=\"" + fmt(pos[v].x) + "\" cy=\"" + fmt(pos[v].y) +
               "\" r=\"2.5\" fill=\"" + (black ? "#000" : "#26c") + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.close();
    if (!out) throw std::runtime_error("write failed: " + path);
    return fnv1a_hex(data);
}

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    json params = json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["seed"] = seed;
    j["version"] = version;
    json outs = json::object();
    for (const auto& [file, digest] : outputs) outs[file] = digest;
    j["outputs"] = std::move(outs);
    return j.dump(2) + "\n";
}

}  // namespace hyplat
