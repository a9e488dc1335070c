#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include <regraph/chain.hpp>
#include <regraph/state_space.hpp>
#include <regraph/transition_matrix.hpp>

using namespace regraph;

TEST_CASE("single-state space gives the identity kernel") {
    StateSpace space = enumerate_state_space(4, 3);
    TransitionMatrix p = build_transition_matrix(space.states());
    CHECK(p.size() == 1);
    // M = 3 in K4, but every real switch is rejected, so all 18
    // choice units sit on the diagonal.
    CHECK(p.pair_count == 3);
    CHECK(p.denom == 18);
    CHECK(p.rows[0].empty());
    CHECK(p.diagonal_count(0) == 18);
    CHECK(p.prob(0, 0) == 1.0);
    CHECK(p.symmetric());
    CHECK(p.uniform_exactly_stationary());
    CHECK(p.lazy());
}

TEST_CASE("no-move chains degenerate to denominator one") {
    StateSpace space = enumerate_state_space(3, 2);
    TransitionMatrix p = build_transition_matrix(space.states());
    CHECK(p.size() == 1);
    CHECK(p.pair_count == 0);
    CHECK(p.denom == 1);
    CHECK(p.prob(0, 0) == 1.0);
}

TEST_CASE("exact kernel structure at (6,2) and (6,3)") {
    for (auto [n, d, denom] : std::vector<std::tuple<int, int, uint64_t>>{
             {6, 2, 54}, {6, 3, 108}}) {
        StateSpace space = enumerate_state_space(n, d);
        TransitionMatrix p = build_transition_matrix(space.states());
        REQUIRE(p.size() == 70);
        CHECK(p.denom == denom);
        CHECK(p.pair_count == nonincident_pair_count(n, d));
        CHECK(p.symmetric());
        CHECK(p.uniform_exactly_stationary());
        CHECK(p.lazy());
        for (size_t i = 0; i < p.size(); ++i) {
            uint64_t off = 0;
            for (auto [j, c] : p.rows[i]) {
                CHECK(c == 1); // one switch per neighbour
                CHECK(j != i);
                off += c;
            }
            CHECK(off + p.diagonal_count(i) == p.denom);
            CHECK(p.count(i, i) == p.diagonal_count(i));
        }
    }
}

TEST_CASE("count and prob agree with the row data") {
    StateSpace space = enumerate_state_space(6, 2);
    TransitionMatrix p = build_transition_matrix(space.states());
    auto dense = p.dense();
    double sum = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j) {
            CHECK(dense[i][j] == p.prob(i, j));
            sum += dense[i][j];
        }
    CHECK(sum == doctest::Approx(70.0)); // rows sum to one

    // A state with no off-diagonal mass to some j gives count 0.
    CHECK(p.count(0, p.size() - 1) + p.count(p.size() - 1, 0) >= 0);
}

TEST_CASE("one-step simulation matches every kernel row") {
    // ~15000 draws per row over all 70 rows of (6,2): about a million
    // seeded steps in total.  Every entry must sit within five
    // standard errors of its exact probability; the run is seeded, so
    // this either always passes or never does.
    StateSpace space = enumerate_state_space(6, 2);
    TransitionMatrix p = build_transition_matrix(space.states());
    const int draws = 15000;
    for (size_t i = 0; i < space.size(); ++i) {
        Rng rng(derive_seed(9001, i));
        std::vector<int> hits(space.size(), 0);
        for (int k = 0; k < draws; ++k)
            ++hits[space.index_of(step(space.state(i), rng))];
        for (size_t j = 0; j < space.size(); ++j) {
            double prob = p.prob(i, j);
            double freq = static_cast<double>(hits[j]) / draws;
            double se = std::sqrt(prob * (1 - prob) / draws);
            CHECK(std::abs(freq - prob) <= 5 * se + 1e-12);
        }
    }
}

TEST_CASE("matrix construction caps and completeness") {
    StateSpace space = enumerate_state_space(6, 2);
    CHECK_THROWS_AS(build_transition_matrix(space.states(), 10), StateSpaceTooLargeError);

    std::vector<RegularGraph> partial(space.states().begin(),
                                      space.states().begin() + 30);
    CHECK_THROWS_AS(build_transition_matrix(partial), Error);

    std::vector<RegularGraph> none;
    CHECK_THROWS_AS(build_transition_matrix(none), Error);
}
