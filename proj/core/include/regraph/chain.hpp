#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "regraph/graph.hpp"

namespace regraph {

// Deterministic 64-bit generator.  All sampling goes through
// uniform_below below, so trajectories are reproducible across
// platforms for a fixed seed.
using Rng = std::mt19937_64;

// Parameters of one chain run.
struct ChainConfig {
    int n = 0;
    int d = 0;
    uint64_t seed = 0;
    uint64_t steps = 0;
};

// Independent per-instance seed derived from a master seed by a fixed
// splitting rule (splitmix64 over master + index).
uint64_t derive_seed(uint64_t master, uint64_t index);

// Uniform integer in [0, bound) by rejection; bound must be positive.
// Used instead of std::uniform_int_distribution, whose mapping is
// implementation-defined.
uint64_t uniform_below(Rng& rng, uint64_t bound);

// M = C(nd/2, 2) - n*C(d, 2): the number of unordered pairs of
// distinct non-incident edges in any d-regular graph on n vertices.
// Depends only on (n, d) because every vertex sees exactly C(d, 2)
// incident edge pairs.
uint64_t nonincident_pair_count(int n, int d);

// One proposal of the lazy chain.  With probability exactly 1/2
// returns nothing (hold).  Otherwise picks a uniform non-incident
// edge pair and a uniform one of the 3 perfect matchings of its four
// endvertices, the identity matching included.  When M = 0 the chain
// can only hold.
std::optional<SwitchMove> propose(const RegularGraph& z, Rng& rng);

// One transition: applies the proposal when it is a real switch that
// does not create a multi-edge; hold, identity and rejected proposals
// all return z unchanged.
RegularGraph step(RegularGraph z, Rng& rng);

// Iterates step() `steps` times from z0 with a fresh generator seeded
// by `seed`.  The callback, when given, sees every state after each
// step.
RegularGraph run(RegularGraph z0, uint64_t steps, uint64_t seed,
                 const std::function<void(uint64_t, const RegularGraph&)>& callback = {});

} // namespace regraph
