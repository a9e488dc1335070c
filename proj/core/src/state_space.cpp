#include "regraph/state_space.hpp"

#include <algorithm>

namespace regraph {

StateSpace::StateSpace(int n, int d, std::vector<RegularGraph> states)
    : n_(n), d_(d), states_(std::move(states)) {
    for (size_t i = 0; i < states_.size(); ++i) {
        const auto& g = states_[i];
        if (g.n() != n_ || g.d() != d_)
            throw MismatchedParametersError("state has wrong (n, d)");
        auto [it, inserted] = index_.emplace(
            std::vector<Edge>(g.edges().begin(), g.edges().end()), i);
        if (!inserted)
            throw DuplicateEdgeError("state appears twice");
    }
}

size_t StateSpace::index_of(const RegularGraph& g) const {
    if (g.n() != n_ || g.d() != d_)
        throw MismatchedParametersError("graph has wrong (n, d)");
    auto it = index_.find(std::vector<Edge>(g.edges().begin(), g.edges().end()));
    if (it == index_.end())
        throw Error("graph is not in the state space");
    return it->second;
}

namespace {

// Backtracking enumerator.  Vertices are saturated in increasing
// order; the smallest unsaturated vertex chooses all its remaining
// neighbours among strictly larger unsaturated vertices, so every
// edge set is generated exactly once.
struct Enumerator {
    int n;
    int d;
    uint64_t cap;
    std::vector<int> residual;
    std::vector<Edge> edges;
    std::vector<RegularGraph> out;

    void emit() {
        if (out.size() >= cap)
            throw StateSpaceTooLargeError("more than " + std::to_string(cap) +
                                          " states; raise the cap to enumerate");
        out.push_back(RegularGraph::build(n, d, edges));
    }

    void extend() {
        int u = 0;
        for (int v = 1; v <= n; ++v)
            if (residual[static_cast<size_t>(v)] > 0) {
                u = v;
                break;
            }
        if (u == 0) {
            emit();
            return;
        }
        std::vector<int> candidates;
        for (int w = u + 1; w <= n; ++w)
            if (residual[static_cast<size_t>(w)] > 0)
                candidates.push_back(w);
        choose(u, residual[static_cast<size_t>(u)], candidates, 0);
    }

    // Pick `need` partners for u from candidates[from..].
    void choose(int u, int need, const std::vector<int>& candidates, size_t from) {
        if (need == 0) {
            int saved = residual[static_cast<size_t>(u)];
            residual[static_cast<size_t>(u)] = 0;
            extend();
            residual[static_cast<size_t>(u)] = saved;
            return;
        }
        if (candidates.size() - from < static_cast<size_t>(need))
            return;
        for (size_t i = from; i + static_cast<size_t>(need) <= candidates.size(); ++i) {
            int w = candidates[i];
            edges.emplace_back(u, w);
            --residual[static_cast<size_t>(w)];
            choose(u, need - 1, candidates, i + 1);
            ++residual[static_cast<size_t>(w)];
            edges.pop_back();
        }
    }
};

} // namespace

StateSpace enumerate_state_space(int n, int d, uint64_t cap) {
    validate_parameters(n, d);
    Enumerator e;
    e.n = n;
    e.d = d;
    e.cap = cap;
    e.residual.assign(static_cast<size_t>(n) + 1, d);
    e.extend();
    std::sort(e.out.begin(), e.out.end());
    return StateSpace(n, d, std::move(e.out));
}

bool complement_bijection_check(const StateSpace& s1, const StateSpace& s2) {
    if (s2.n() != s1.n() || s2.d() != s1.n() - 1 - s1.d())
        throw MismatchedParametersError("second space must have parameters (n, n-1-d)");
    if (s1.size() != s2.size())
        return false;
    for (const auto& g : s1.states()) {
        try {
            s2.index_of(complement_graph(g));
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

} // namespace regraph
