#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

// The complete set of d-regular simple graphs on {1,..,n}, in a fixed
// canonical order (sorted edge lists).
class StateSpace {
public:
    StateSpace(int n, int d, std::vector<RegularGraph> states);

    int n() const { return n_; }
    int d() const { return d_; }
    size_t size() const { return states_.size(); }
    const std::vector<RegularGraph>& states() const { return states_; }
    const RegularGraph& state(size_t i) const { return states_[i]; }

    // Position of a graph in the enumeration; throws Error when the
    // graph is not a member (wrong parameters or not found).
    size_t index_of(const RegularGraph& g) const;

private:
    int n_;
    int d_;
    std::vector<RegularGraph> states_;
    std::map<std::vector<Edge>, size_t> index_;
};

inline constexpr uint64_t default_state_cap = 1000000;

// Every labeled d-regular simple graph on {1,..,n}, by backtracking
// over sorted adjacency choices.  Each graph is produced exactly
// once.  Throws StateSpaceTooLargeError when more than `cap` states
// exist.
StateSpace enumerate_state_space(int n, int d, uint64_t cap = default_state_cap);

// True iff edge-complementation maps s1's states onto s2's states
// bijectively.  s2 must have parameters (n, n-1-d) of s1.
bool complement_bijection_check(const StateSpace& s1, const StateSpace& s2);

} // namespace regraph
