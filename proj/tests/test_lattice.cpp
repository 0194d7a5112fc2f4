#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "hyplat/lattice.hpp"

using namespace hyplat;

TEST_CASE("validate_params splits the three regimes") {
    CHECK_NOTHROW(validate_params(5, 5));
    CHECK_NOTHROW(validate_params(7, 3));
    CHECK_NOTHROW(validate_params(3, 7));
    CHECK_NOTHROW(validate_params(5, 4));
    CHECK_THROWS_AS(validate_params(4, 4), EuclideanOrSphericalError);
    CHECK_THROWS_AS(validate_params(3, 6), EuclideanOrSphericalError);
    CHECK_THROWS_AS(validate_params(6, 3), EuclideanOrSphericalError);
    CHECK_THROWS_AS(validate_params(3, 3), EuclideanOrSphericalError);
    CHECK_THROWS_AS(validate_params(3, 5), EuclideanOrSphericalError);
    CHECK_THROWS_AS(validate_params(2, 9), DomainError);
    CHECK_THROWS_AS(HyperbolicLattice::generate({4, 4}, 2), EuclideanOrSphericalError);
}

TEST_CASE("depth-0 lattice is the central face") {
    const auto lat = HyperbolicLattice::generate({5, 5}, 0);
    CHECK(lat.n_vertices() == 5);
    CHECK(lat.n_faces() == 1);
    CHECK(lat.n_edges() == 5);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(lat.layer(v) == 0);
        CHECK(lat.degree(v) == 2);
        CHECK_FALSE(lat.interior(v));
    }
}

namespace {

// Structural invariants every truncation must satisfy.
void check_invariants(const HyperbolicLattice& lat) {
    const int p = lat.p();
    const int q = lat.q();
    const int n = lat.n_layers();

    // Simple symmetric adjacency; layers differ by at most 1.
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        std::set<VertexId> seen;
        for (VertexId w : lat.neighbors(v)) {
            CHECK(w != v);
            CHECK(seen.insert(w).second);
            CHECK(lat.adjacent(w, v));
            CHECK(std::abs(lat.layer(v) - lat.layer(w)) <= 1);
        }
        CHECK(lat.degree(v) <= q);
        if (lat.interior(v)) CHECK(lat.degree(v) == q);
        // Every vertex below the frontier layer is interior with degree q.
        if (lat.layer(v) < n) {
            CHECK(lat.interior(v));
            CHECK(lat.degree(v) == q);
        }
    }

    // Faces are p-cycles of distinct vertices with all edges present.
    for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
        const auto verts = lat.face(f);
        CHECK(static_cast<int>(verts.size()) == p);
        std::set<VertexId> distinct(verts.begin(), verts.end());
        CHECK(static_cast<int>(distinct.size()) == p);
        for (int i = 0; i < p; ++i) {
            CHECK(lat.adjacent(verts[i], verts[(i + 1) % p]));
        }
    }

    // No duplicate faces.
    std::set<std::set<VertexId>> face_sets;
    for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
        const auto verts = lat.face(f);
        CHECK(face_sets.insert({verts.begin(), verts.end()}).second);
    }

    // Interior vertices carry exactly q distinct incident faces.
    std::map<VertexId, int> incident;
    for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
        for (VertexId v : lat.face(f)) ++incident[v];
    }
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        if (lat.interior(v)) CHECK(incident[v] == q);
    }

    // Connectivity by plain BFS.
    std::vector<char> vis(lat.n_vertices(), 0);
    std::queue<VertexId> bfs;
    bfs.push(0);
    vis[0] = 1;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        const VertexId v = bfs.front();
        bfs.pop();
        for (VertexId w : lat.neighbors(v)) {
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                bfs.push(w);
            }
        }
    }
    CHECK(reached == lat.n_vertices());
}

}  // namespace

TEST_CASE("structural invariants hold for several (p,q) at depth 4") {
    for (auto [p, q] : {std::pair{5, 4}, {4, 5}, {5, 5}, {7, 3}, {3, 7}, {5, 6}, {6, 5}}) {
        CAPTURE(p);
        CAPTURE(q);
        check_invariants(HyperbolicLattice::generate({p, q}, 4));
    }
}

TEST_CASE("layer labels match an independent face-incidence BFS") {
    for (auto [p, q] : {std::pair{5, 4}, {4, 5}, {5, 5}, {3, 7}}) {
        CAPTURE(p);
        CAPTURE(q);
        const auto lat = HyperbolicLattice::generate({p, q}, 4);
        const auto counts = lat.layer_counts();
        for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
            CHECK(counts.relabel[v] == lat.layer(v));
        }
        long long total = 0;
        for (std::size_t n = 0; n < counts.S.size(); ++n) {
            total += counts.S[n];
            CHECK(counts.B[n] == total);
        }
        CHECK(counts.B.back() == static_cast<long long>(lat.n_vertices()));
        CHECK(counts.S[0] == p);
    }
}

TEST_CASE("(5,4) two-layer picture: every layer-0/1 vertex has degree 4") {
    const auto lat = HyperbolicLattice::generate({5, 4}, 2);
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        if (lat.layer(v) <= 1) CHECK(lat.degree(v) == 4);
    }
}

TEST_CASE("generation is deterministic") {
    const auto a = HyperbolicLattice::generate({5, 5}, 3);
    const auto b = HyperbolicLattice::generate({5, 5}, 3);
    CHECK(a.n_vertices() == b.n_vertices());
    CHECK(a.edge_list() == b.edge_list());
    for (VertexId v = 0; v < static_cast<VertexId>(a.n_vertices()); ++v) {
        CHECK(a.layer(v) == b.layer(v));
        CHECK(a.kind(v) == b.kind(v));
    }
}

TEST_CASE("vertex cap raises a resource error") {
    CHECK_THROWS_AS(HyperbolicLattice::generate({5, 5}, 4, 100), ResourceLimitError);
}

TEST_CASE("graph metric basics") {
    const auto lat = HyperbolicLattice::generate({5, 4}, 4);
    const VertexId o = lat.origin_vertex();
    CHECK(lat.graph_distance(o, o) == 0);
    CHECK(lat.sphere(0, o) == std::vector<VertexId>{o});
    CHECK(lat.sphere(1, o).size() == 4);

    // ball(2, o) cross-checked against an independent adjacency closure.
    std::set<VertexId> closure{o};
    for (int step = 0; step < 2; ++step) {
        std::set<VertexId> next = closure;
        for (VertexId v : closure) {
            for (VertexId w : lat.neighbors(v)) next.insert(w);
        }
        closure = std::move(next);
    }
    const auto ball2 = lat.ball(2, o);
    CHECK(std::set<VertexId>(ball2.begin(), ball2.end()) == closure);

    // Distances are symmetric and satisfy |d(u,x)-d(v,x)| <= 1 on edges.
    for (VertexId w : lat.ball(2, o)) {
        CHECK(lat.graph_distance(o, w) == lat.graph_distance(w, o));
    }

    CHECK_THROWS_AS(lat.ball(20, o), TruncationTooShallowError);
}

TEST_CASE("edge and inner boundaries") {
    const auto lat = HyperbolicLattice::generate({5, 5}, 3);
    const VertexId o = lat.origin_vertex();

    CHECK(lat.edge_boundary(std::vector<VertexId>{}).empty());

    const std::vector<VertexId> single{o};
    CHECK(lat.edge_boundary(single).size() == 5);
    CHECK(lat.inner_boundary(single) == single);

    // One closed face of (5,5): |edge boundary| = p (q - 2) = 15.
    const auto face = lat.face(lat.origin_face());
    const std::vector<VertexId> g(face.begin(), face.end());
    CHECK(lat.edge_boundary(g).size() == 15);
    CHECK(lat.inner_boundary(g).size() == 5);

    // Frontier vertices are rejected.
    VertexId frontier = -1;
    for (VertexId v = 0; v < static_cast<VertexId>(lat.n_vertices()); ++v) {
        if (!lat.interior(v)) frontier = v;
    }
    REQUIRE(frontier >= 0);
    CHECK_THROWS_AS(lat.edge_boundary(std::vector<VertexId>{frontier}),
                    FrontierContaminationError);
}

TEST_CASE("dual lattice structure and crossing map") {
    const auto lat = HyperbolicLattice::generate({4, 5}, 4);
    const DualLattice dual(lat);
    CHECK(dual.side() == 4);
    CHECK(dual.n_vertices() == lat.n_faces());

    // Dual of (4,5) is a truncation of the (5,4) tiling: interior degree 4.
    CHECK(dual.interior(lat.origin_face()));
    CHECK(dual.degree(lat.origin_face()) == 4);

    std::size_t interior_count = 0;
    for (FaceId f = 0; f < static_cast<FaceId>(dual.n_vertices()); ++f) {
        const auto ns = dual.neighbors(f);
        for (int k = 0; k < dual.side(); ++k) {
            if (ns[k] < 0) continue;
            // Mutual adjacency and the crossing round-trip: the crossed
            // primal edge is on the boundary of both faces.
            CHECK(dual.slot_of(ns[k], f) >= 0);
            const EdgeKey e = dual.crossing(f, k);
            CHECK(dual.crossing(ns[k], dual.slot_of(ns[k], f)) == e);
            const auto fv = lat.face(f);
            CHECK(std::count(fv.begin(), fv.end(), e.u) == 1);
            CHECK(std::count(fv.begin(), fv.end(), e.v) == 1);
        }
        if (dual.interior(f)) ++interior_count;
    }
    CHECK(interior_count > 0);
}

TEST_CASE("dual faces around an interior primal vertex number q") {
    const auto lat = HyperbolicLattice::generate({5, 5}, 3);
    const DualLattice dual(lat);
    // Count faces containing the origin vertex.
    int n = 0;
    for (FaceId f = 0; f < static_cast<FaceId>(lat.n_faces()); ++f) {
        const auto fv = lat.face(f);
        if (std::count(fv.begin(), fv.end(), lat.origin_vertex())) ++n;
    }
    CHECK(n == 5);
}

TEST_CASE("recurrence fitting recovers exact sequences") {
    // Geometric sequence: order 1.
    const std::vector<long long> geo{3, 6, 12, 24, 48, 96};
    const auto r1 = fit_linear_recurrence(geo, 0, 5);
    CHECK(r1.order == 1);
    CHECK(r1.next(24, 48) == 96);

    // Fibonacci-like: order 2.
    const std::vector<long long> fib{1, 1, 2, 3, 5, 8, 13};
    const auto r2 = fit_linear_recurrence(fib, 0, 6);
    CHECK(r2.order == 2);
    CHECK(r2.next(8, 13) == 21);

    // No order <= 2 recurrence.
    const std::vector<long long> bad{1, 2, 4, 9, 16, 25};
    CHECK_THROWS_AS(fit_linear_recurrence(bad, 0, 5), DomainError);
}

TEST_CASE("layer counts of (5,5) satisfy a predictive order-2 recurrence") {
    const auto lat = HyperbolicLattice::generate({5, 5}, 6);
    const auto counts = lat.layer_counts();
    REQUIRE(counts.S.size() == 7);

    // Exponential growth of S_n.
    for (std::size_t n = 2; n + 1 < counts.S.size(); ++n) {
        CHECK(counts.S[n + 1] > counts.S[n]);
    }

    // Fit on n = 1..4, predict n = 5, 6 exactly.
    const auto rec = fit_linear_recurrence(counts.S, 1, 4);
    CHECK(rec.order <= 2);
    CHECK(rec.next(counts.S[3], counts.S[4]) == counts.S[5]);
    CHECK(rec.next(counts.S[4], counts.S[5]) == counts.S[6]);
}
