#include "hyplat/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace hyplat {

TilingParams validate_params(int p, int q) {
    if (p < 3 || q < 3) {
        throw DomainError("validate_params: need p >= 3 and q >= 3, got p=" +
                          std::to_string(p) + " q=" + std::to_string(q));
    }
    // 1/p + 1/q < 1/2  <=>  2(p+q) < pq, in exact integer arithmetic.
    const long long lhs = 2LL * (p + q);
    const long long rhs = static_cast<long long>(p) * q;
    if (lhs >= rhs) {
        const char* regime = (lhs == rhs) ? "Euclidean" : "spherical";
        throw EuclideanOrSphericalError("(" + std::to_string(p) + "," + std::to_string(q) +
                                        ") is " + regime + ", not hyperbolic: 1/p + 1/q " +
                                        (lhs == rhs ? "=" : ">") + " 1/2");
    }
    return TilingParams{p, q};
}

namespace {

/// Layer-by-layer builder for the face-centered truncation.
///
/// Invariants maintained throughout:
///  - each vertex's known neighbors form one contiguous arc in rotation
///    order, with the face between every consecutive arc pair already
///    recorded; the single gap runs from the arc's back around to its front;
///  - every recorded face is a complete p-cycle;
///  - a face trace arrives at an existing vertex only through that vertex's
///    arc-back edge.
class Builder {
public:
    Builder(TilingParams params, int n_layers, std::size_t cap)
        : p_(params.p), q_(params.q), n_layers_(n_layers), cap_(cap) {}

    void run() {
        seed_central_face();
        for (int n = 0; n < n_layers_; ++n) {
            const VertexId lo = layer_start_[n];
            const VertexId hi = static_cast<VertexId>(layer_.size());
            layer_start_.push_back(hi);
            cur_layer_ = n;
            for (VertexId v = lo; v < hi; ++v) complete_vertex(v);
        }
    }

    int p_, q_, n_layers_;
    std::size_t cap_;
    int cur_layer_ = 0;
    std::vector<std::uint16_t> layer_;
    std::vector<std::uint8_t> deg_;
    std::vector<std::uint8_t> closed_;
    std::vector<VertexId> arc_;
    std::vector<VertexId> face_verts_;
    std::vector<VertexId> layer_start_{0};  // first id of each layer
    std::vector<VertexId> trace_;           // scratch for the current face

private:
    VertexId new_vertex(int layer) {
        if (layer_.size() >= cap_) {
            throw ResourceLimitError("generate: vertex cap " + std::to_string(cap_) +
                                     " exceeded at layer " + std::to_string(layer));
        }
        layer_.push_back(static_cast<std::uint16_t>(layer));
        deg_.push_back(0);
        closed_.push_back(0);
        arc_.resize(arc_.size() + q_, -1);
        return static_cast<VertexId>(layer_.size() - 1);
    }

    VertexId* arc(VertexId v) { return arc_.data() + static_cast<std::size_t>(v) * q_; }

    void append_neighbor(VertexId v, VertexId w) {
        if (deg_[v] >= q_) throw InternalError("arc overflow");
        arc(v)[deg_[v]++] = w;
    }

    void prepend_neighbor(VertexId v, VertexId w) {
        if (deg_[v] >= q_) throw InternalError("arc overflow (prepend)");
        VertexId* a = arc(v);
        std::memmove(a + 1, a, sizeof(VertexId) * deg_[v]);
        a[0] = w;
        ++deg_[v];
    }

    void seed_central_face() {
        for (int i = 0; i < p_; ++i) new_vertex(0);
        for (VertexId i = 0; i < p_; ++i) {
            append_neighbor(i, (i + p_ - 1) % p_);
            append_neighbor(i, (i + 1) % p_);
            face_verts_.push_back(i);
        }
    }

    void complete_vertex(VertexId v) {
        for (int guard = 0; !closed_[v]; ++guard) {
            if (guard > q_) throw InternalError("fan completion did not terminate");
            trace_face_at_gap(v);
        }
    }

    // Advance the face trace out of `cur`, entered via `prev`. The arrival
    // edge must be cur's arc-back; the continuation either wraps to the
    // arc front (closing cur's fan) or creates a fresh vertex.
    VertexId step(VertexId cur, VertexId prev) {
        VertexId* a = arc(cur);
        const int d = deg_[cur];
        if (d == 0 || a[d - 1] != prev) {
            throw InternalError("face trace arrived off the arc back");
        }
        if (d == q_) {
            closed_[cur] = 1;
            return a[0];
        }
        const VertexId w = new_vertex(cur_layer_ + 1);
        append_neighbor(cur, w);
        append_neighbor(w, cur);
        return w;
    }

    void trace_face_at_gap(VertexId apex) {
        const VertexId a0 = arc(apex)[deg_[apex] - 1];

        // When a0 already has all q edges, its single missing face is this
        // one, so the face's far corner next to a0 is already present: a0's
        // wrap-side neighbor. The forward trace must stop one step short and
        // stitch onto it instead of inventing a new vertex.
        VertexId fixed_last = -1;
        if (deg_[a0] == q_) {
            if (arc(a0)[0] != apex) {
                throw InternalError("full fan vertex does not front the apex");
            }
            fixed_last = arc(a0)[q_ - 1];
        }

        trace_.clear();
        trace_.push_back(a0);
        trace_.push_back(apex);
        VertexId prev = a0;
        VertexId cur = apex;
        const int forward_target = (fixed_last >= 0) ? p_ - 1 : p_;
        while (static_cast<int>(trace_.size()) < forward_target) {
            const VertexId nxt = step(cur, prev);
            trace_.push_back(nxt);
            prev = cur;
            cur = nxt;
        }

        if (fixed_last >= 0) {
            attach_fixed_last(a0, apex, cur, prev, fixed_last);
            trace_.push_back(fixed_last);
        } else {
            close_face(a0, apex, cur, prev);
        }
        face_verts_.insert(face_verts_.end(), trace_.begin(), trace_.end());
    }

    // Joins the forward trace (ending at `last`) to the pre-existing far
    // corner, then closes the full fan at a0.
    void attach_fixed_last(VertexId a0, VertexId apex, VertexId last, VertexId prev_of_last,
                           VertexId fixed_last) {
        VertexId* al = arc(last);
        const int dl = deg_[last];
        if (dl == 0 || al[dl - 1] != prev_of_last) {
            throw InternalError("fixed-last step off the arc back");
        }
        if (dl == q_) {
            if (al[0] != fixed_last) throw InternalError("fixed-last wrap mismatch");
            closed_[last] = 1;
        } else {
            if (arc(fixed_last)[0] != a0) {
                throw InternalError("far corner does not front the fan vertex");
            }
            append_neighbor(last, fixed_last);
            prepend_neighbor(fixed_last, last);
        }
        closed_[a0] = 1;
    }

    // Add or verify the closing edge between the last traced vertex and a0.
    void close_face(VertexId a0, VertexId apex, VertexId last, VertexId prev_of_last) {
        VertexId* al = arc(last);
        const int dl = deg_[last];
        if (dl == 0 || al[dl - 1] != prev_of_last) {
            throw InternalError("closing step off the arc back");
        }
        if (dl == q_) {
            // Edge to a0 must already exist as the wrap of last's fan.
            if (al[0] != a0) throw InternalError("face closure mismatch");
            closed_[last] = 1;
            return;
        }
        if (arc(a0)[0] != apex) {
            throw InternalError("closing edge target is not the gap-front of a0");
        }
        append_neighbor(last, a0);
        prepend_neighbor(a0, last);
    }
};

}  // namespace

HyperbolicLattice HyperbolicLattice::generate(TilingParams params, int n_layers,
                                              std::size_t vertex_cap) {
    validate_params(params.p, params.q);
    if (n_layers < 0) throw DomainError("generate: n_layers must be >= 0");
    if (n_layers > std::numeric_limits<std::uint16_t>::max() - 1) {
        throw DomainError("generate: n_layers too large");
    }

    Builder b(params, n_layers, vertex_cap);
    b.run();

    HyperbolicLattice lat;
    lat.params_ = params;
    lat.n_layers_ = n_layers;
    lat.layer_ = std::move(b.layer_);
    lat.deg_ = std::move(b.deg_);
    lat.closed_ = std::move(b.closed_);
    lat.arc_ = std::move(b.arc_);
    lat.face_verts_ = std::move(b.face_verts_);

    // A vertex is black if it has a neighbor one layer in; blue otherwise.
    // Layer 0 counts as black by convention.
    lat.kind_.assign(lat.layer_.size(), static_cast<std::uint8_t>(VertexKind::blue));
    for (VertexId v = 0; v < static_cast<VertexId>(lat.layer_.size()); ++v) {
        if (lat.layer_[v] == 0) {
            lat.kind_[v] = static_cast<std::uint8_t>(VertexKind::black);
            continue;
        }
        for (VertexId w : lat.neighbors(v)) {
            if (lat.layer_[w] + 1 == lat.layer_[v]) {
                lat.kind_[v] = static_cast<std::uint8_t>(VertexKind::black);
                break;
            }
        }
    }
    return lat;
}

std::size_t HyperbolicLattice::n_edges() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < layer_.size(); ++v) total += deg_[v];
    return total / 2;
}

bool HyperbolicLattice::adjacent(VertexId v, VertexId w) const {
    for (VertexId x : neighbors(v))
        if (x == w) return true;
    return false;
}

std::vector<std::pair<VertexId, VertexId>> HyperbolicLattice::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n_edges());
    for (VertexId v = 0; v < static_cast<VertexId>(n_vertices()); ++v) {
        for (VertexId w : neighbors(v)) {
            if (v < w) edges.emplace_back(v, w);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

// BFS with interiority certification: every vertex expanded strictly below
// the target radius must have its full neighborhood generated.
std::vector<int> certified_bfs(const HyperbolicLattice& lat, VertexId src, int r_max) {
    std::vector<int> dist(lat.n_vertices(), -1);
    std::queue<VertexId> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        if (dist[v] >= r_max) continue;
        if (!lat.interior(v)) {
            throw TruncationTooShallowError(
                "BFS reached a frontier vertex at distance " + std::to_string(dist[v]) +
                " < " + std::to_string(r_max) + "; deepen the truncation");
        }
        for (VertexId w : lat.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

int HyperbolicLattice::graph_distance(VertexId v, VertexId w) const {
    if (v == w) return 0;
    // Expand without a radius bound; certify every expanded vertex until w
    // is reached.
    std::vector<int> dist(n_vertices(), -1);
    std::queue<VertexId> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop();
        if (dist[w] >= 0 && dist[x] >= dist[w]) return dist[w];
        if (!interior(x)) {
            throw TruncationTooShallowError("graph_distance: path certification hit the frontier");
        }
        for (VertexId y : neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
        }
    }
    if (dist[w] < 0) throw InternalError("graph_distance: lattice not connected");
    return dist[w];
}

std::vector<VertexId> HyperbolicLattice::ball(int r, VertexId v) const {
    if (r < 0) throw DomainError("ball: radius must be >= 0");
    const std::vector<int> dist = certified_bfs(*this, v, r);
    std::vector<VertexId> out;
    for (VertexId w = 0; w < static_cast<VertexId>(n_vertices()); ++w) {
        if (dist[w] >= 0 && dist[w] <= r) out.push_back(w);
    }
    return out;
}

std::vector<VertexId> HyperbolicLattice::sphere(int r, VertexId v) const {
    if (r < 0) throw DomainError("sphere: radius must be >= 0");
    const std::vector<int> dist = certified_bfs(*this, v, r);
    std::vector<VertexId> out;
    for (VertexId w = 0; w < static_cast<VertexId>(n_vertices()); ++w) {
        if (dist[w] == r) out.push_back(w);
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> HyperbolicLattice::edge_boundary(
    std::span<const VertexId> g) const {
    std::unordered_set<VertexId> in(g.begin(), g.end());
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId v : g) {
        if (!interior(v)) {
            throw FrontierContaminationError("edge_boundary: vertex " + std::to_string(v) +
                                             " touches the frontier");
        }
        for (VertexId w : neighbors(v)) {
            if (!in.count(w)) out.emplace_back(v, w);
        }
    }
    return out;
}

std::vector<VertexId> HyperbolicLattice::inner_boundary(std::span<const VertexId> g) const {
    std::unordered_set<VertexId> in(g.begin(), g.end());
    std::vector<VertexId> out;
    for (VertexId v : g) {
        if (!interior(v)) {
            throw FrontierContaminationError("inner_boundary: vertex " + std::to_string(v) +
                                             " touches the frontier");
        }
        for (VertexId w : neighbors(v)) {
            if (!in.count(w)) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

HyperbolicLattice::LayerCounts HyperbolicLattice::layer_counts() const {
    const std::size_t nv = n_vertices();
    const std::size_t nf = n_faces();
    std::vector<int> label(nv, -1);
    std::vector<std::uint8_t> face_done(nf, 0);

    for (VertexId v : face(origin_face())) label[v] = 0;

    // Face-incidence rounds: vertices of any face touching a labeled vertex
    // get the next label. Independent of the generator's layer field.
    for (int n = 0; n < n_layers_; ++n) {
        for (FaceId f = 0; f < static_cast<FaceId>(nf); ++f) {
            if (face_done[f]) continue;
            bool touches = false;
            for (VertexId v : face(f)) {
                if (label[v] >= 0 && label[v] <= n) {
                    touches = true;
                    break;
                }
            }
            if (!touches) continue;
            face_done[f] = 1;
            for (VertexId v : face(f)) {
                if (label[v] < 0) label[v] = n + 1;
            }
        }
    }

    LayerCounts out;
    out.relabel = std::move(label);
    out.S.assign(static_cast<std::size_t>(n_layers_) + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        const int l = out.relabel[v];
        if (l < 0 || l > n_layers_) {
            throw InternalError("layer_counts: unlabeled or out-of-range vertex");
        }
        ++out.S[l];
    }
    out.B.resize(out.S.size());
    long long acc = 0;
    for (std::size_t n = 0; n < out.S.size(); ++n) {
        acc += out.S[n];
        out.B[n] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------

DualLattice::DualLattice(const HyperbolicLattice& lat) : primal_(&lat), side_(lat.p()) {
    if (lat.n_faces() == 0) throw DomainError("dual: lattice has no closed face");
    const std::size_t nf = lat.n_faces();
    nbr_.assign(nf * side_, -1);

    // For each primal edge, remember the (face, slot) that owns it; when the
    // second face shows up, link both directions.
    std::unordered_map<EdgeKey, std::pair<FaceId, int>, EdgeKeyHash> owner;
    owner.reserve(nf * side_);
    for (FaceId f = 0; f < static_cast<FaceId>(nf); ++f) {
        const auto verts = lat.face(f);
        for (int k = 0; k < side_; ++k) {
            const EdgeKey e(verts[k], verts[(k + 1) % side_]);
            auto [it, fresh] = owner.try_emplace(e, f, k);
            if (fresh) continue;
            const auto [g, j] = it->second;
            if (nbr_[static_cast<std::size_t>(f) * side_ + k] != -1 ||
                nbr_[static_cast<std::size_t>(g) * side_ + j] != -1) {
                throw InternalError("dual: primal edge shared by more than two faces");
            }
            nbr_[static_cast<std::size_t>(f) * side_ + k] = g;
            nbr_[static_cast<std::size_t>(g) * side_ + j] = f;
        }
    }
}

int DualLattice::degree(FaceId f) const {
    int d = 0;
    for (FaceId g : neighbors(f))
        if (g >= 0) ++d;
    return d;
}

bool DualLattice::interior(FaceId f) const { return degree(f) == side_; }

EdgeKey DualLattice::crossing(FaceId f, int k) const {
    const auto verts = primal_->face(f);
    return EdgeKey(verts[k], verts[(k + 1) % side_]);
}

int DualLattice::slot_of(FaceId f, FaceId g) const {
    const auto ns = neighbors(f);
    for (int k = 0; k < side_; ++k)
        if (ns[k] == g) return k;
    return -1;
}

// ---------------------------------------------------------------------------

long long LinearRecurrence::next(long long s_prev, long long s_cur) const {
    const __int128 num = static_cast<__int128>(a) * s_cur + static_cast<__int128>(b) * s_prev;
    if (den == 0) throw InternalError("recurrence with zero denominator");
    if (num % den != 0) throw DomainError("recurrence prediction is not an integer");
    const __int128 val = num / den;
    if (val > std::numeric_limits<long long>::max() || val < std::numeric_limits<long long>::min()) {
        throw DomainError("recurrence prediction overflows");
    }
    return static_cast<long long>(val);
}

LinearRecurrence fit_linear_recurrence(std::span<const long long> s, int lo, int hi) {
    if (lo < 0 || hi >= static_cast<int>(s.size()) || hi - lo < 3) {
        throw DomainError("fit_linear_recurrence: need at least 4 terms in range");
    }

    // Order 1: s[n+1] = (a/den) * s[n], exact on the whole fitted range.
    if (s[lo] != 0) {
        const long long a = s[lo + 1];
        const long long den = s[lo];
        bool ok = true;
        for (int n = lo + 1; n < hi; ++n) {
            if (static_cast<__int128>(s[n + 1]) * den != static_cast<__int128>(a) * s[n]) {
                ok = false;
                break;
            }
        }
        if (ok) return LinearRecurrence{1, a, 0, den};
    }

    // Order 2: solve the 2x2 system from four consecutive terms.
    //   s[lo+2]*den = a*s[lo+1] + b*s[lo]
    //   s[lo+3]*den = a*s[lo+2] + b*s[lo+1]
    const long long det = s[lo + 1] * s[lo + 1] - s[lo + 2] * s[lo];
    if (det == 0) throw DomainError("fit_linear_recurrence: singular system");
    const long long a = s[lo + 2] * s[lo + 1] - s[lo + 3] * s[lo];
    const long long b = s[lo + 1] * s[lo + 3] - s[lo + 2] * s[lo + 2];
    const LinearRecurrence rec{2, a, b, det};
    for (int n = lo + 1; n < hi; ++n) {
        if (rec.next(s[n - 1], s[n]) != s[n + 1]) {
            throw DomainError("fit_linear_recurrence: no order <= 2 recurrence fits the range");
        }
    }
    return rec;
}

}  // namespace hyplat
