#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyplat/errors.hpp"

namespace hyplat {

using VertexId = std::int32_t;
using FaceId = std::int32_t;

/// Schlafli parameters {p,q}: p-gonal faces, vertex degree q.
struct TilingParams {
    int p = 0;
    int q = 0;
};

/// Accepts (p,q) iff the tiling is hyperbolic, i.e. 1/p + 1/q < 1/2.
/// Throws EuclideanOrSphericalError otherwise, naming the regime.
TilingParams validate_params(int p, int q);

enum class VertexKind : std::uint8_t { black = 0, blue = 1 };

/// Normalized undirected edge, u < v.
struct EdgeKey {
    VertexId u;
    VertexId v;
    EdgeKey(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& e) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
            static_cast<std::uint32_t>(e.v));
    }
};

/// Finite face-centered truncation of the hyperbolic tiling {p,q}.
///
/// Layer 0 is the vertex set of the central face; layer n+1 collects the
/// vertices of all faces incident to layers <= n that are not yet present.
/// Vertices in layers < n_layers have their full degree-q neighborhood and
/// all q incident faces generated ("interior"); the outermost layer is an
/// incomplete frontier.
///
/// Construction is deterministic: ids are dense integers in creation order
/// (layer-major). Neighbor lists are stored in rotation (cyclic embedding)
/// order with a globally consistent orientation; recorded faces are closed
/// p-cycles in traversal order. Immutable after generation.
class HyperbolicLattice {
public:
    static constexpr std::size_t kDefaultVertexCap = 80'000'000;

    static HyperbolicLattice generate(TilingParams params, int n_layers,
                                      std::size_t vertex_cap = kDefaultVertexCap);

    int p() const { return params_.p; }
    int q() const { return params_.q; }
    TilingParams params() const { return params_; }
    int n_layers() const { return n_layers_; }

    std::size_t n_vertices() const { return layer_.size(); }
    std::size_t n_faces() const { return face_verts_.size() / params_.p; }
    std::size_t n_edges() const;

    int layer(VertexId v) const { return layer_[v]; }
    VertexKind kind(VertexId v) const { return static_cast<VertexKind>(kind_[v]); }
    int degree(VertexId v) const { return deg_[v]; }

    /// True iff all q edges and all q faces around v are generated.
    bool interior(VertexId v) const { return closed_[v] != 0; }

    /// Neighbors of v in rotation order (partial arc for frontier vertices).
    std::span<const VertexId> neighbors(VertexId v) const {
        return {arc_.data() + static_cast<std::size_t>(v) * params_.q, static_cast<std::size_t>(deg_[v])};
    }
    bool adjacent(VertexId v, VertexId w) const;

    /// Vertices of closed face f as a p-cycle.
    std::span<const VertexId> face(FaceId f) const {
        return {face_verts_.data() + static_cast<std::size_t>(f) * params_.p,
                static_cast<std::size_t>(params_.p)};
    }

    FaceId origin_face() const { return 0; }
    /// First vertex of the central face; interior whenever n_layers >= 1.
    VertexId origin_vertex() const { return 0; }

    /// All generated edges as normalized pairs, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

    // -- graph metric -------------------------------------------------------

    /// BFS distance. Throws TruncationTooShallowError if the answer cannot be
    /// certified on this truncation.
    int graph_distance(VertexId v, VertexId w) const;
    /// B(r,v): all vertices at distance <= r. Every vertex expanded at
    /// distance < r must be interior, otherwise TruncationTooShallowError.
    std::vector<VertexId> ball(int r, VertexId v) const;
    /// dB(r,v): vertices at distance exactly r.
    std::vector<VertexId> sphere(int r, VertexId v) const;

    // -- boundaries ---------------------------------------------------------

    /// Emanating edges of G (exactly one endpoint in G). All of G must be
    /// interior; throws FrontierContaminationError otherwise.
    std::vector<std::pair<VertexId, VertexId>> edge_boundary(std::span<const VertexId> g) const;
    /// Vertices of G with a neighbor outside G.
    std::vector<VertexId> inner_boundary(std::span<const VertexId> g) const;

    // -- layer counts -------------------------------------------------------

    struct LayerCounts {
        std::vector<long long> S;  ///< S[n] = #layer-n vertices
        std::vector<long long> B;  ///< B[n] = sum of S[0..n]
        std::vector<int> relabel;  ///< independently re-derived layer per vertex
    };

    /// Re-derives layer labels by face-incidence BFS from the central face,
    /// independent of the labels assigned during generation.
    LayerCounts layer_counts() const;

private:
    HyperbolicLattice() = default;

    TilingParams params_;
    int n_layers_ = 0;
    std::vector<std::uint16_t> layer_;
    std::vector<std::uint8_t> kind_;
    std::vector<std::uint8_t> deg_;
    std::vector<std::uint8_t> closed_;
    std::vector<VertexId> arc_;        // q slots per vertex
    std::vector<VertexId> face_verts_; // p per face

    friend class Generator;
};

/// Dual graph over the closed faces of a truncation: faces as vertices,
/// adjacent when they share a primal edge. Dual neighbor lists follow the
/// face boundary order, so slot k of face f sits across primal edge
/// (face(f)[k], face(f)[k+1]); that correspondence is the crossing map.
class DualLattice {
public:
    explicit DualLattice(const HyperbolicLattice& lat);

    const HyperbolicLattice& primal() const { return *primal_; }
    std::size_t n_vertices() const { return nbr_.size() / side_; }
    int side() const { return side_; }  // boundary length p of a dual vertex

    /// Dual neighbors of face f in boundary order; -1 where the adjacent
    /// face is not generated.
    std::span<const FaceId> neighbors(FaceId f) const {
        return {nbr_.data() + static_cast<std::size_t>(f) * side_,
                static_cast<std::size_t>(side_)};
    }
    int degree(FaceId f) const;
    /// True iff all p neighboring faces of f are generated.
    bool interior(FaceId f) const;

    /// Primal edge crossed by the dual edge in slot k of f.
    EdgeKey crossing(FaceId f, int k) const;
    /// Slot of g in f's neighbor list, or -1.
    int slot_of(FaceId f, FaceId g) const;

private:
    const HyperbolicLattice* primal_;
    int side_;
    std::vector<FaceId> nbr_;
};

/// Constant-coefficient linear recurrence of order <= 2 with rational
/// coefficients: s[n+1] = (a*s[n] + b*s[n-1]) / den.
struct LinearRecurrence {
    int order = 0;
    long long a = 0;
    long long b = 0;
    long long den = 1;

    /// Next term after (s_prev, s_cur); throws DomainError if non-integral.
    long long next(long long s_prev, long long s_cur) const;
};

/// Fits an order <= 2 recurrence to s[lo..hi] (inclusive), preferring the
/// lowest order that reproduces the fitted range exactly.
/// Throws DomainError if no such recurrence exists.
LinearRecurrence fit_linear_recurrence(std::span<const long long> s, int lo, int hi);

}  // namespace hyplat
