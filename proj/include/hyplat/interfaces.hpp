#pragma once

#include <array>
#include <unordered_set>
#include <vector>

#include "hyplat/lattice.hpp"
#include "hyplat/spin.hpp"

namespace hyplat {

/// Corona (circles + radial edges) redrawing of a dual truncation around the
/// origin face. Vertices are the dual lattice's own face ids, so the corona
/// is by construction a relabeling of the dual truncation it covers.
///
/// With D the dual interior degree and s the dual face side count:
///  - circle-(n+1) black vertices hang from circle n by one radial edge and
///    emit D-3 radial edges outward; blue vertices emit D-2;
///  - between consecutive blacks sit s-3 blues (same parent) or s-4 blues
///    (adjacent parents).
/// Radial edges below black vertices whose ancestry starts at an origin edge
/// carry that origin edge's tree index 0..D-1; radial edges that enter a
/// blue-rooted subtree carry tree index -1 (they belong to no glued tree).
class CoronaGraph {
public:
    struct Node {
        FaceId id = -1;
        bool black = false;
        int circle = 0;
        int pos = 0;          ///< position within the circle's cyclic order
        FaceId parent = -1;   ///< radial parent (blacks only; -1 on circle 0/blues)
        int parent_slot = -1; ///< slot of parent within this vertex's rotation
        int tree = -1;        ///< glued-tree index of the parent radial edge
        int lat_prev_slot = -1;  ///< slot of the circle edge toward the previous vertex
        int lat_next_slot = -1;  ///< slot of the circle edge toward the next vertex
    };

    /// Builds `depth` circles around the dual origin (circle 0 = origin
    /// face). Throws DegenerateParameterError when the dual degree is <= 4
    /// (no tree decomposition), DomainError when dual faces have fewer than
    /// 4 sides, TruncationTooShallowError when the dual truncation runs out.
    CoronaGraph(const DualLattice& dual, int depth);

    const DualLattice& dual() const { return *dual_; }
    int depth() const { return depth_; }
    int tree_count() const { return degree_; }          ///< = dual degree D
    int branching() const { return degree_ - 3; }       ///< children per black
    /// +1 or -1: which rotation direction corresponds to the circle sweep.
    int orientation() const { return orient_; }

    int n_circles() const { return static_cast<int>(circles_.size()); }
    const std::vector<Node>& circle(int n) const { return circles_[n]; }
    const Node* find(FaceId id) const;

    /// Radial edges as (parent, child, tree_index); circle edges as pairs.
    const std::vector<std::array<FaceId, 3>>& radial_edges() const { return radial_; }
    const std::vector<std::pair<FaceId, FaceId>>& circle_edges() const { return circle_edges_; }

    /// Child of black vertex b under branch choice c in 0..branching()-1:
    /// the rotation neighbor at offset 2+c from b's parent slot. Works for
    /// any black spine vertex regardless of built depth, as long as the dual
    /// vertex is interior.
    FaceId child(FaceId b, int parent_slot, int branch) const;

private:
    void build_circle(int n);

    const DualLattice* dual_;
    int depth_;
    int degree_;
    int side_;
    int orient_ = 1;
    std::vector<std::vector<Node>> circles_;
    std::vector<std::array<FaceId, 3>> radial_;
    std::vector<std::pair<FaceId, FaceId>> circle_edges_;
    std::unordered_set<FaceId> seen_;  // construction-time scratch
};

/// Finite prefix of a bi-infinite sparse dual interface: two radial branches
/// joined through the origin face.
struct DualInterface {
    int tree_a = 0;
    int tree_b = 0;
    std::vector<int> branch_a;
    std::vector<int> branch_b;
    int depth = 0;
    /// Dual path a-side outward ... origin ... b-side outward (2*depth+1).
    std::vector<FaceId> path;
    /// Primal edges crossed by the path's dual edges (2*depth of them).
    std::vector<EdgeKey> crossed_primal_edges;
};

/// Walks both branches and derives the crossed primal edges. The two trees
/// must be distinct and not cyclically adjacent (NeighboringTreesError);
/// branch entries must lie in 0..branching-1 (BranchOutOfRangeError) and the
/// sequences must be at least `depth` long. Asserts that no primal vertex
/// meets more than one crossed edge.
DualInterface build_interface(const CoronaGraph& corona, int tree_a,
                              std::span<const int> branch_a, int tree_b,
                              std::span<const int> branch_b, int depth);

/// Deletes the crossed edges from the window's induced graph, checks that
/// exactly two components remain (NotSeparatingError otherwise), and colors
/// the component of the reference vertex — the tree_a-side endpoint of the
/// origin face's tree_a edge — with +1, the other with -1. The boundary
/// shell is colored through non-crossed edges; an inconsistently colorable
/// shell also raises NotSeparatingError (prefix too shallow for the window).
SpinConfiguration dobrushin_configuration(const HyperbolicLattice& lat,
                                          const DualInterface& iface,
                                          std::span<const VertexId> window);

/// Number of distinct unordered interface selectors at the given depth:
/// D(D-3)/2 tree pairings times (D-3)^(2(depth-1)) branch choices.
long long count_interface_prefixes(const CoronaGraph& corona, int depth);

}  // namespace hyplat
