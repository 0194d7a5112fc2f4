#include "hyplat/isoperimetry.hpp"

#include <algorithm>
#include <cmath>

namespace hyplat {

double ic_formula(int p, int q) {
    if (p < 3 || q < 3) throw DomainError("ic_formula: need p >= 3 and q >= 3");
    const long long m = static_cast<long long>(p - 2) * (q - 2);
    if (m < 4) throw DomainError("ic_formula: (p-2)(q-2) < 4, constant undefined");
    if (m == 4) return 0.0;  // exactly the Euclidean lattices
    return (q - 2) * std::sqrt(1.0 - 4.0 / static_cast<double>(m));
}

namespace {

/// Canonical rooted enumeration of connected supersets: a set may only grow
/// by neighbors of its members, and each growth step may only add vertices
/// with id greater than the step at which their "parent frontier" was
/// opened... Simpler and still canonical: enumerate connected sets
/// containing the root by the standard "allowed frontier" scheme — when a
/// vertex is skipped it stays forbidden in that subtree, so every connected
/// set is visited exactly once.
class Enumerator {
public:
    Enumerator(const HyperbolicLattice& lat, int max_size, std::size_t budget)
        : lat_(lat), max_size_(max_size), budget_(budget) {}

    BruteForceIcResult run(VertexId root) {
        if (!lat_.interior(root)) {
            throw FrontierContaminationError("brute_force_ic: root is not interior");
        }
        in_set_.assign(lat_.n_vertices(), 0);
        forbidden_.assign(lat_.n_vertices(), 0);
        set_ = {root};
        in_set_[root] = 1;
        boundary_ = lat_.degree(root);
        forbidden_[root] = 1;
        best_ratio_ = static_cast<double>(boundary_);
        best_set_ = set_;
        std::vector<VertexId> frontier;
        for (VertexId w : lat_.neighbors(root)) frontier.push_back(w);
        recurse(frontier);
        return {best_ratio_, best_set_};
    }

private:
    void consider() {
        const double ratio = static_cast<double>(boundary_) / set_.size();
        if (ratio < best_ratio_ ||
            (ratio == best_ratio_ && set_ < best_set_ && set_.size() == best_set_.size())) {
            best_ratio_ = ratio;
            best_set_ = set_;
        }
    }

    // frontier: candidate extension vertices, each adjacent to the current
    // set, none forbidden. Branch on the first candidate: include or forbid.
    void recurse(std::vector<VertexId> frontier) {
        if (static_cast<int>(set_.size()) >= max_size_) return;
        std::vector<VertexId> forbade;  // flags owned by this call, undone on exit
        while (!frontier.empty()) {
            const VertexId v = frontier.back();
            frontier.pop_back();
            if (forbidden_[v]) continue;

            // Branch 1: include v.
            if (++visited_ > budget_) {
                throw ResourceLimitError("brute_force_ic: enumeration budget exceeded");
            }
            if (!lat_.interior(v)) {
                throw TruncationTooShallowError(
                    "brute_force_ic: enumeration reached the frontier; deepen the lattice");
            }
            forbidden_[v] = 1;
            forbade.push_back(v);
            int inside = 0;
            for (VertexId w : lat_.neighbors(v)) inside += in_set_[w];
            set_.push_back(v);
            in_set_[v] = 1;
            boundary_ += lat_.degree(v) - 2 * inside;
            consider();

            std::vector<VertexId> next = frontier;
            for (VertexId w : lat_.neighbors(v)) {
                if (!in_set_[w] && !forbidden_[w]) next.push_back(w);
            }
            recurse(std::move(next));

            set_.pop_back();
            in_set_[v] = 0;
            boundary_ -= lat_.degree(v) - 2 * inside;
            // Branch 2: v stays forbidden for the rest of this call's loop.
        }
        for (VertexId v : forbade) forbidden_[v] = 0;
    }

    const HyperbolicLattice& lat_;
    int max_size_;
    std::size_t budget_;
    std::size_t visited_ = 0;
    std::vector<std::uint8_t> in_set_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<VertexId> set_;
    long long boundary_ = 0;
    double best_ratio_ = 0.0;
    std::vector<VertexId> best_set_;
};

}  // namespace

BruteForceIcResult brute_force_ic(const HyperbolicLattice& lat, int max_size,
                                  std::size_t budget) {
    if (max_size < 1) throw DomainError("brute_force_ic: max_size must be >= 1");
    Enumerator e(lat, max_size, budget);
    BruteForceIcResult res = e.run(lat.origin_vertex());
    std::sort(res.argmin.begin(), res.argmin.end());
    return res;
}

SparsityReport sparsity_check(int p, int q, int delta_max) {
    validate_params(p, q);
    if (delta_max < 0) throw DomainError("sparsity_check: delta_max must be >= 0");
    SparsityReport r;
    r.p = p;
    r.q = q;
    r.ic = ic_formula(p, q);
    r.delta_max = delta_max;
    r.condition_holds = delta_max < r.ic / 2.0;
    r.validity_region = validity_region(p, q);
    return r;
}

bool validity_region(int p, int q) {
    if (p < 3 || q < 3) throw DomainError("validity_region: need p >= 3 and q >= 3");
    if (p <= 4) return false;
    if (2LL * (p + q) >= static_cast<long long>(p) * q) return false;  // not hyperbolic
    return ic_formula(p, q) > 2.0;
}

}  // namespace hyplat
