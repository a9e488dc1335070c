#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

// Exact transition kernel of the lazy switch chain over an enumerated
// state space.  Probabilities are integer counts over the common
// denominator 6M, M = nonincident_pair_count(n, d): a step spends 3M
// units on the lazy hold and one unit per (pair, matching) choice.
// Only off-diagonal entries are stored; the diagonal is the
// complement, so rows sum to one by construction.  When M = 0 the
// denominator degenerates to 1 (the chain never moves).
struct TransitionMatrix {
    int n = 0;
    int d = 0;
    uint64_t pair_count = 0; // M
    uint64_t denom = 1;      // 6M, or 1 when M = 0
    // rows[i]: (column, count) sorted by column, i excluded.  Each
    // count is 1: a neighbour is reachable by exactly one choice,
    // since the symmetric difference of the two states determines the
    // switch.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> rows;

    size_t size() const { return rows.size(); }
    uint64_t offdiag_total(size_t i) const;
    uint64_t diagonal_count(size_t i) const { return denom - offdiag_total(i); }
    // Count of choice units moving i to j (diagonal included).
    uint64_t count(size_t i, size_t j) const;
    double prob(size_t i, size_t j) const {
        return static_cast<double>(count(i, j)) / static_cast<double>(denom);
    }

    bool symmetric() const;
    // Column sums all equal the denominator, i.e. the uniform vector
    // is exactly fixed.  Integer check, zero residual.
    bool uniform_exactly_stationary() const;
    // Diagonal counts are at least denom/2 (laziness).
    bool lazy() const;

    std::vector<std::vector<double>> dense() const;
};

inline constexpr uint64_t default_matrix_cap = 25000;

// Builds the exact kernel over a complete enumeration of the state
// space.  Throws StateSpaceTooLargeError past the cap and Error when
// a switch leads outside `states` (incomplete enumeration) or a
// neighbour is reached twice.
TransitionMatrix build_transition_matrix(std::span<const RegularGraph> states,
                                         uint64_t cap = default_matrix_cap);

} // namespace regraph
