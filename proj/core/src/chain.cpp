#include "regraph/chain.hpp"

namespace regraph {

uint64_t derive_seed(uint64_t master, uint64_t index) {
    // splitmix64 step; distinct (master, index) give well-separated
    // streams.
    uint64_t x = master + 0x9E3779B97F4A7C15ull * (index + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t uniform_below(Rng& rng, uint64_t bound) {
    if (bound == 0)
        throw Error("uniform_below needs a positive bound");
    if ((bound & (bound - 1)) == 0) // power of two: mask suffices
        return rng() & (bound - 1);
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

uint64_t nonincident_pair_count(int n, int d) {
    validate_parameters(n, d);
    uint64_t m = static_cast<uint64_t>(n) * static_cast<uint64_t>(d) / 2;
    uint64_t all_pairs = m * (m - 1) / 2;
    uint64_t incident = static_cast<uint64_t>(n) * (static_cast<uint64_t>(d) *
                                                    (static_cast<uint64_t>(d) - 1) / 2);
    return all_pairs - incident;
}

std::optional<SwitchMove> propose(const RegularGraph& z, Rng& rng) {
    if (rng() & 1) // lazy half
        return std::nullopt;
    uint64_t pairs = nonincident_pair_count(z.n(), z.d());
    if (pairs == 0)
        return std::nullopt;
    auto edges = z.edges();
    uint64_t m = edges.size();
    // Uniform unordered pair of distinct edges, rejected until
    // non-incident; every non-incident pair keeps equal probability.
    Edge e1 = edges[0], e2 = edges[0];
    do {
        uint64_t a = uniform_below(rng, m);
        uint64_t b = uniform_below(rng, m - 1);
        if (b >= a)
            ++b;
        e1 = edges[a];
        e2 = edges[b];
    } while (e1.shares_endpoint(e2));
    // The three perfect matchings of {e1.u, e1.v, e2.u, e2.v}.
    switch (uniform_below(rng, 3)) {
    case 0:
        return SwitchMove(e1, e2, e1, e2); // identity
    case 1:
        return SwitchMove(e1, e2, Edge(e1.u, e2.u), Edge(e1.v, e2.v));
    default:
        return SwitchMove(e1, e2, Edge(e1.u, e2.v), Edge(e1.v, e2.u));
    }
}

RegularGraph step(RegularGraph z, Rng& rng) {
    auto move = propose(z, rng);
    if (!move || move->is_identity())
        return z;
    if (z.has_edge(move->f1) || z.has_edge(move->f2)) // would create a multi-edge
        return z;
    return apply_switch(std::move(z), *move);
}

RegularGraph run(RegularGraph z0, uint64_t steps, uint64_t seed,
                 const std::function<void(uint64_t, const RegularGraph&)>& callback) {
    Rng rng(seed);
    for (uint64_t t = 1; t <= steps; ++t) {
        z0 = step(std::move(z0), rng);
        if (callback)
            callback(t, z0);
    }
    return z0;
}

} // namespace regraph
