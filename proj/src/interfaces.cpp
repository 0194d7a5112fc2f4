#include "hyplat/interfaces.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace hyplat {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

VertexId shared_corner(const EdgeKey& a, const EdgeKey& b) {
    if (a == b) throw InternalError("shared_corner: identical edges");
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    throw InternalError("shared_corner: edges share no endpoint");
}

// One step of the dual-face walk around primal vertex w: enter the face
// behind slot k of f, leave through that face's other edge incident to w.
std::pair<FaceId, int> next_around(const DualLattice& dual, VertexId w, FaceId f, int k) {
    const FaceId g = dual.neighbors(f)[k];
    if (g < 0) {
        throw TruncationTooShallowError("corona: dual walk left the generated region");
    }
    const EdgeKey entry = dual.crossing(f, k);
    const auto verts = dual.primal().face(g);
    const int p = dual.side();
    int j = -1;
    for (int i = 0; i < p; ++i) {
        if (verts[i] == w) {
            j = i;
            break;
        }
    }
    if (j < 0) throw InternalError("corona: corner vertex missing from face");
    const int s1 = j;                 // edge (w, next corner)
    const int s2 = mod(j - 1, p);     // edge (previous corner, w)
    const bool via1 = dual.crossing(g, s1) == entry;
    const bool via2 = dual.crossing(g, s2) == entry;
    if (via1 == via2) throw InternalError("corona: ambiguous walk continuation");
    return {g, via1 ? s2 : s1};
}

}  // namespace

CoronaGraph::CoronaGraph(const DualLattice& dual, int depth)
    : dual_(&dual), depth_(depth), degree_(dual.side()), side_(dual.primal().q()) {
    if (depth < 1) throw DomainError("corona: depth must be >= 1");
    if (degree_ <= 4) {
        throw DegenerateParameterError(
            "corona: dual degree " + std::to_string(degree_) +
            " <= 4 admits no glued-tree decomposition");
    }
    if (side_ < 4) {
        throw DomainError("corona: dual faces with fewer than 4 sides are not supported");
    }

    Node origin;
    origin.id = dual.primal().origin_face();
    origin.black = true;
    circles_.push_back({origin});
    seen_.insert(origin.id);

    for (int n = 0; n < depth; ++n) build_circle(n);
    seen_.clear();
}

const CoronaGraph::Node* CoronaGraph::find(FaceId id) const {
    for (const auto& circle : circles_) {
        for (const Node& node : circle) {
            if (node.id == id) return &node;
        }
    }
    return nullptr;
}

FaceId CoronaGraph::child(FaceId b, int parent_slot, int branch) const {
    if (branch < 0 || branch >= branching()) {
        throw BranchOutOfRangeError("branch choice " + std::to_string(branch) +
                                    " outside 0.." + std::to_string(branching() - 1));
    }
    if (dual_->degree(b) != degree_) {
        throw TruncationTooShallowError("corona: spine vertex is not interior in the dual");
    }
    const int slot = mod(parent_slot + orient_ * (2 + branch), degree_);
    return dual_->neighbors(b)[slot];
}

// Builds circle n+1 from circle n: first all black children in sweep order,
// then the blue vertices filled into each gap by walking the dual face
// around the gap's corner.
void CoronaGraph::build_circle(int n) {
    const DualLattice& dual = *dual_;
    const int D = degree_;
    const std::vector<Node>& cur = circles_[n];

    struct Black {
        Node node;
        int contributor;  // index into cur
        int slot;         // slot of this child within the contributor
    };
    std::vector<Black> blacks;

    for (int ci = 0; ci < static_cast<int>(cur.size()); ++ci) {
        const Node& v = cur[ci];
        if (dual.degree(v.id) != D) {
            throw TruncationTooShallowError("corona: circle vertex is not interior in the dual");
        }
        std::vector<int> slots;
        if (n == 0) {
            for (int k = 0; k < D; ++k) slots.push_back(k);
        } else if (v.black) {
            for (int i = 2; i <= D - 2; ++i) slots.push_back(mod(v.parent_slot + orient_ * i, D));
        } else {
            for (int i = 1; i <= D - 2; ++i) slots.push_back(mod(v.lat_prev_slot + orient_ * i, D));
            if (mod(v.lat_prev_slot + orient_ * (D - 1), D) != v.lat_next_slot) {
                throw InternalError("corona: blue lateral slots are not rotation-adjacent");
            }
        }
        for (int k : slots) {
            const FaceId c = dual.neighbors(v.id)[k];
            if (c < 0) throw TruncationTooShallowError("corona: missing dual neighbor");
            if (!seen_.insert(c).second) {
                throw InternalError("corona: child already present in an earlier circle");
            }
            Black b;
            b.node.id = c;
            b.node.black = true;
            b.node.circle = n + 1;
            b.node.parent = v.id;
            b.node.parent_slot = dual.slot_of(c, v.id);
            b.node.tree = (n == 0) ? k : (v.black ? v.tree : -1);
            b.contributor = ci;
            b.slot = k;
            blacks.push_back(b);
            radial_.push_back({v.id, c, b.node.tree});
        }
    }

    const int step = (n == 0) ? 1 : orient_;
    std::vector<Node> next;
    for (std::size_t i = 0; i < blacks.size(); ++i) {
        const Black& bi = blacks[i];
        const Black& bj = blacks[(i + 1) % blacks.size()];
        next.push_back(bi.node);

        // Corner of the gap between bi and bj: between bi's child edge and
        // either the next sibling edge or the contributor's lateral edge.
        const FaceId v = cur[bi.contributor].id;
        const EdgeKey e1 = dual.crossing(v, bi.slot);
        const EdgeKey e2 = dual.crossing(v, mod(bi.slot + step, D));
        const VertexId w = shared_corner(e1, e2);

        // Walk around w: v -> bi -> blues... -> bj.
        FaceId f = v;
        int k = bi.slot;
        bool first = true;
        for (int guard = 0;; ++guard) {
            if (guard > side_) throw InternalError("corona: gap walk did not close");
            auto [g, k2] = next_around(dual, w, f, k);
            f = g;
            k = k2;
            if (first) {
                if (f != bi.node.id) throw InternalError("corona: gap walk started wrong");
                first = false;
                continue;
            }
            if (f == bj.node.id) break;
            if (!seen_.insert(f).second) {
                throw InternalError("corona: blue vertex already present");
            }
            Node blue;
            blue.id = f;
            blue.black = false;
            blue.circle = n + 1;
            next.push_back(blue);
        }
    }

    // Chain bookkeeping: lateral slots and circle edges.
    const int m = static_cast<int>(next.size());
    for (int i = 0; i < m; ++i) {
        Node& u = next[i];
        Node& w2 = next[(i + 1) % m];
        u.pos = i;
        u.lat_next_slot = dual.slot_of(u.id, w2.id);
        w2.lat_prev_slot = dual.slot_of(w2.id, u.id);
        if (m > 1 && (u.lat_next_slot < 0 || w2.lat_prev_slot < 0)) {
            throw InternalError("corona: consecutive circle vertices not adjacent");
        }
        if (m > 1) circle_edges_.emplace_back(u.id, w2.id);
    }

    circles_.push_back(std::move(next));

    // The sweep direction in rotation coordinates is fixed by the first
    // completed circle: for the first black, the lateral edge toward its
    // chain successor sits at parent_slot -/+ 1.
    if (n == 0) {
        const Node& b0 = circles_[1][0];
        if (b0.lat_next_slot == mod(b0.parent_slot - 1, D)) {
            orient_ = 1;
        } else if (b0.lat_next_slot == mod(b0.parent_slot + 1, D)) {
            orient_ = -1;
        } else {
            throw InternalError("corona: cannot determine sweep orientation");
        }
    }
}

DualInterface build_interface(const CoronaGraph& corona, int tree_a,
                              std::span<const int> branch_a, int tree_b,
                              std::span<const int> branch_b, int depth) {
    const DualLattice& dual = corona.dual();
    const int D = corona.tree_count();
    if (depth < 1) throw DomainError("build_interface: depth must be >= 1");
    for (int t : {tree_a, tree_b}) {
        if (t < 0 || t >= D) {
            throw DomainError("build_interface: tree index out of range");
        }
    }
    const int gap = std::min(mod(tree_a - tree_b, D), mod(tree_b - tree_a, D));
    if (gap < 2) {
        throw NeighboringTreesError("trees " + std::to_string(tree_a) + " and " +
                                    std::to_string(tree_b) +
                                    " are cyclically adjacent or equal");
    }
    if (static_cast<int>(branch_a.size()) < depth - 1 ||
        static_cast<int>(branch_b.size()) < depth - 1) {
        throw DomainError("build_interface: branch sequences shorter than depth-1");
    }

    const FaceId origin = dual.primal().origin_face();
    auto spine = [&](int tree, std::span<const int> branch) {
        std::vector<FaceId> out;
        FaceId f = dual.neighbors(origin)[tree];
        if (f < 0) throw TruncationTooShallowError("build_interface: missing root face");
        int parent_slot = dual.slot_of(f, origin);
        out.push_back(f);
        for (int i = 1; i < depth; ++i) {
            const FaceId g = corona.child(f, parent_slot, branch[i - 1]);
            if (g < 0) throw TruncationTooShallowError("build_interface: spine left the dual");
            parent_slot = dual.slot_of(g, f);
            f = g;
            out.push_back(f);
        }
        return out;
    };

    DualInterface iface;
    iface.tree_a = tree_a;
    iface.tree_b = tree_b;
    iface.branch_a.assign(branch_a.begin(), branch_a.begin() + (depth - 1));
    iface.branch_b.assign(branch_b.begin(), branch_b.begin() + (depth - 1));
    iface.depth = depth;

    const std::vector<FaceId> sa = spine(tree_a, branch_a);
    const std::vector<FaceId> sb = spine(tree_b, branch_b);
    iface.path.assign(sa.rbegin(), sa.rend());
    iface.path.push_back(origin);
    iface.path.insert(iface.path.end(), sb.begin(), sb.end());

    std::unordered_set<FaceId> distinct(iface.path.begin(), iface.path.end());
    if (distinct.size() != iface.path.size()) {
        throw InternalError("build_interface: dual path is not simple");
    }

    std::unordered_map<VertexId, int> incidence;
    for (std::size_t i = 0; i + 1 < iface.path.size(); ++i) {
        const int k = dual.slot_of(iface.path[i], iface.path[i + 1]);
        if (k < 0) throw InternalError("build_interface: consecutive path faces not adjacent");
        const EdgeKey e = dual.crossing(iface.path[i], k);
        iface.crossed_primal_edges.push_back(e);
        if (++incidence[e.u] > 1 || ++incidence[e.v] > 1) {
            throw InternalError("build_interface: a primal vertex meets two crossed edges");
        }
    }
    return iface;
}

SpinConfiguration dobrushin_configuration(const HyperbolicLattice& lat,
                                          const DualInterface& iface,
                                          std::span<const VertexId> window) {
    std::unordered_set<EdgeKey, EdgeKeyHash> crossed(iface.crossed_primal_edges.begin(),
                                                     iface.crossed_primal_edges.end());
    std::unordered_map<VertexId, int> comp;
    comp.reserve(window.size());
    for (VertexId v : window) {
        if (!lat.interior(v)) {
            throw FrontierContaminationError("dobrushin_configuration: window touches frontier");
        }
        comp.emplace(v, -1);
    }

    // Components of the window graph with the crossed edges removed.
    int n_comp = 0;
    for (VertexId s : window) {
        if (comp[s] != -1) continue;
        const int c = n_comp++;
        if (n_comp > 2) break;
        std::queue<VertexId> queue;
        comp[s] = c;
        queue.push(s);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop();
            for (VertexId w : lat.neighbors(v)) {
                auto it = comp.find(w);
                if (it == comp.end() || it->second != -1) continue;
                if (crossed.count(EdgeKey(v, w))) continue;
                it->second = c;
                queue.push(w);
            }
        }
    }
    if (n_comp != 2) {
        throw NotSeparatingError("dobrushin_configuration: interface prefix splits the window into " +
                                 std::to_string(n_comp) + " components, need exactly 2");
    }

    // Reference convention: the tree_a-side endpoint of the origin face's
    // tree_a edge carries +1.
    const VertexId ref = lat.face(lat.origin_face())[iface.tree_a];
    auto ref_it = comp.find(ref);
    if (ref_it == comp.end()) {
        throw DomainError("dobrushin_configuration: reference vertex outside the window");
    }
    const int plus_comp = ref_it->second;

    SpinConfiguration sigma;
    sigma.region.assign(window.begin(), window.end());
    for (const auto& [v, c] : comp) {
        sigma.values[v] = static_cast<std::int8_t>(c == plus_comp ? 1 : -1);
    }

    // Color the boundary shell through its window edges.
    for (VertexId v : window) {
        const std::int8_t sv = sigma.values[v];
        for (VertexId w : lat.neighbors(v)) {
            if (comp.count(w)) continue;
            const std::int8_t want =
                crossed.count(EdgeKey(v, w)) ? static_cast<std::int8_t>(-sv) : sv;
            auto [it, fresh] = sigma.values.try_emplace(w, want);
            if (!fresh && it->second != want) {
                throw NotSeparatingError(
                    "dobrushin_configuration: boundary shell not consistently two-sided "
                    "(interface prefix too shallow for this window)");
            }
        }
    }
    return sigma;
}

long long count_interface_prefixes(const CoronaGraph& corona, int depth) {
    if (depth < 1) throw DomainError("count_interface_prefixes: depth must be >= 1");
    const long long D = corona.tree_count();
    const long long br = D - 3;
    long long count = D * (D - 3) / 2;  // unordered non-adjacent tree pairs
    for (int i = 0; i < 2 * (depth - 1); ++i) count *= br;
    return count;
}

}  // namespace hyplat
