#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include <regraph/mixing.hpp>

using namespace regraph;

namespace {

// Frozen regression values, cross-checked by exact big-integer
// powering of the kernels in an independent implementation.
constexpr uint64_t tau62_quarter = 11;
constexpr uint64_t tau62_hundredth = 35;
constexpr uint64_t tau63_quarter = 23;
constexpr uint64_t tau63_hundredth = 72;

TransitionMatrix kernel(int n, int d) {
    auto space = enumerate_state_space(n, d);
    return build_transition_matrix(space.states());
}

// Two isolated states: a legal-looking kernel with no transitions.
TransitionMatrix split_kernel() {
    TransitionMatrix p;
    p.n = 6;
    p.d = 2;
    p.pair_count = 9;
    p.denom = 54;
    p.rows.resize(2);
    return p;
}

} // namespace

TEST_CASE("connectivity of the kernel") {
    CHECK(kernel_connected(kernel(6, 2)));
    CHECK(kernel_connected(kernel(6, 3)));
    CHECK(kernel_connected(kernel(4, 3)));
    CHECK_FALSE(kernel_connected(split_kernel()));
}

TEST_CASE("the eight-vertex cubic kernel is exact and connected") {
    TransitionMatrix p = kernel(8, 3);
    CHECK(p.size() == 19355);
    CHECK(p.denom == 252);
    CHECK(p.symmetric());
    CHECK(p.uniform_exactly_stationary());
    CHECK(p.lazy());
    CHECK(kernel_connected(p));
}

TEST_CASE("exact mixing times at desk scale") {
    TransitionMatrix p62 = kernel(6, 2);
    TransitionMatrix p63 = kernel(6, 3);
    CHECK(exact_mixing_time(p62, 0.25) == tau62_quarter);
    CHECK(exact_mixing_time(p62, 0.01) == tau62_hundredth);
    CHECK(exact_mixing_time(p63, 0.25) == tau63_quarter);
    CHECK(exact_mixing_time(p63, 0.01) == tau63_hundredth);

    // Looser targets cannot take longer.
    CHECK(exact_mixing_time(p62, 0.4) <= tau62_quarter);
    CHECK(exact_mixing_time(p62, 0.1) >= tau62_quarter);
    CHECK(exact_mixing_time(p62, 0.1) <= tau62_hundredth);

    // A single state is already mixed.
    CHECK(exact_mixing_time(kernel(4, 3), 0.25) == 0);
    CHECK(exact_mixing_time(kernel(3, 2), 0.25) == 0);

    CHECK_THROWS_AS(exact_mixing_time(p62, 0.0), Error);
    CHECK_THROWS_AS(exact_mixing_time(p62, 1.0), Error);
    CHECK_THROWS_AS(exact_mixing_time(p62, -0.5), Error);
    CHECK_THROWS_AS(exact_mixing_time(p62, 2.0), Error);
}

TEST_CASE("disconnected kernels cannot mix") {
    TransitionMatrix p = split_kernel();
    CHECK_THROWS_AS(exact_mixing_time(p, 0.25), NotConnectedError);
    // ... unless the target is weaker than the unreachable mass: TV
    // starts at 1 - 1/2 and stays there.
    CHECK(exact_mixing_time(p, 0.6) == 0);
}

TEST_CASE("the exact tv curve brackets the mixing time") {
    TransitionMatrix p = kernel(6, 2);
    auto curve = exact_tv_curve(p, tau62_quarter + 3);
    REQUIRE(curve.size() == tau62_quarter + 4);
    CHECK(curve[0] == doctest::Approx(1.0 - 1.0 / 70.0).epsilon(1e-12));
    for (size_t t = 1; t < curve.size(); ++t)
        CHECK(curve[t] <= curve[t - 1] + 1e-12);
    CHECK(curve[tau62_quarter - 1] > 0.25);
    CHECK(curve[tau62_quarter] <= 0.25);
    CHECK(curve[tau62_quarter] == doctest::Approx(0.24166820399687436).epsilon(1e-9));
}

TEST_CASE("spectral gap and the relaxation-time sandwich") {
    CHECK(spectral_gap(kernel(4, 3)) == 1.0);
    CHECK(spectral_gap(kernel(3, 2)) == 1.0);

    double gap62 = spectral_gap(kernel(6, 2));
    double gap63 = spectral_gap(kernel(6, 3));
    CHECK(gap62 == doctest::Approx(0.12881922845202587).epsilon(1e-10));
    CHECK(gap63 == doctest::Approx(0.064409614226009659).epsilon(1e-10));

    // (1/gap - 1) ln 2 <= tau(1/4) <= ln(4 |Omega|) / gap for a lazy
    // reversible chain with uniform stationary distribution.
    for (auto [gap, tau] : {std::pair<double, uint64_t>{gap62, tau62_quarter},
                            {gap63, tau63_quarter}}) {
        CHECK(static_cast<double>(tau) >= (1.0 / gap - 1.0) * std::log(2.0) - 1e-9);
        CHECK(static_cast<double>(tau) <= std::log(4.0 * 70.0) / gap + 1e-9);
    }
}

TEST_CASE("empirical tv starts at the point-mass distance") {
    auto space = enumerate_state_space(6, 2);
    double tv0 = empirical_tv(6, 2, 0, 500, 3, &space);
    CHECK(tv0 == doctest::Approx(1.0 - 1.0 / 70.0).epsilon(1e-12));
}

TEST_CASE("empirical tv is reproducible and thread-count independent") {
    auto space = enumerate_state_space(6, 2);
    setenv("REGRAPH_THREADS", "4", 1);
    double a = empirical_tv(6, 2, 20, 4000, 99, &space);
    setenv("REGRAPH_THREADS", "1", 1);
    double b = empirical_tv(6, 2, 20, 4000, 99, &space);
    setenv("REGRAPH_THREADS", "3", 1);
    double c = empirical_tv(6, 2, 20, 4000, 99, &space);
    unsetenv("REGRAPH_THREADS");
    double d = empirical_tv(6, 2, 20, 4000, 99, &space);
    CHECK(a == b);
    CHECK(b == c);
    CHECK(c == d);
    CHECK(empirical_tv(6, 2, 20, 4000, 100, &space) != a);
}

TEST_CASE("an ensemble run past the mixing time is near uniform") {
    auto space = enumerate_state_space(6, 3);
    double tv = empirical_tv(6, 3, tau63_hundredth, 100000, 12345, &space);
    CHECK(tv <= 0.05);
    CHECK(tv >= 0.0);
}

TEST_CASE("empirical and exact curves agree along the way down") {
    auto space = enumerate_state_space(6, 3);
    TransitionMatrix p = build_transition_matrix(space.states());
    std::vector<uint64_t> grid = {0, 2, 5, 10, 20, 40, 72};
    auto exact = exact_tv_curve(p, 72);
    auto measured = empirical_tv_curve(6, 3, grid, 100000, 777, &space);
    REQUIRE(measured.size() == grid.size());
    // The worst-start exact value bounds the single-start ensemble
    // from above; sampling noise keeps the floor near 0.01.
    for (size_t i = 0; i < grid.size(); ++i) {
        CHECK(measured[i] <= exact[grid[i]] + 0.05);
        CHECK(measured[i] >= 0.0);
    }
    CHECK(measured[0] == doctest::Approx(1.0 - 1.0 / 70.0).epsilon(1e-12));
    CHECK(measured.back() < 0.05);
    CHECK(measured[1] > measured.back());
}

TEST_CASE("curve grids must be sorted") {
    auto space = enumerate_state_space(6, 2);
    CHECK_THROWS_AS(empirical_tv_curve(6, 2, {5, 3}, 100, 1, &space), Error);
}

TEST_CASE("bound formulas") {
    BoundsReport b62 = bounds_report(6, 2, 0.25, 70.0);
    CHECK(b62.ratio == 256.0);
    CHECK(b62.theorem_bound == b62.old_bound * b62.ratio); // exact by construction
    CHECK(b62.theorem_bound == doctest::Approx(439669676726020.88).epsilon(1e-14));
    CHECK(b62.old_bound == doctest::Approx(1717459674711.019).epsilon(1e-14));
    CHECK(b62.load_bound == 2348273369088.0);
    REQUIRE(b62.flow_bound.has_value());
    CHECK(*b62.flow_bound == doctest::Approx(232963627.88571429).epsilon(1e-14));

    BoundsReport b63 = bounds_report(6, 3, 0.25, 70.0);
    CHECK(b63.ratio == 6561.0);
    CHECK(b63.theorem_bound == b63.old_bound * b63.ratio);
    CHECK(b63.theorem_bound == doctest::Approx(8.4458958003954883e+18).epsilon(1e-14));
    CHECK(b63.load_bound == 17569376605410048.0);
    CHECK(*b63.flow_bound == doctest::Approx(774663871490.7428).epsilon(1e-14));

    BoundsReport plain = bounds_report(6, 3, 0.01);
    CHECK_FALSE(plain.flow_bound.has_value());
    CHECK(plain.theorem_bound == doctest::Approx(8.9548785749139231e+18).epsilon(1e-14));

    // Tighter targets and larger instances only grow the bounds.
    CHECK(bounds_report(6, 3, 0.01).theorem_bound > b63.theorem_bound);
    CHECK(bounds_report(8, 3, 0.25).theorem_bound > b63.theorem_bound);

    CHECK_THROWS_AS(bounds_report(6, 3, 0.0), Error);
    CHECK_THROWS_AS(bounds_report(6, 3, 1.0), Error);
    CHECK_THROWS_AS(bounds_report(6, 0, 0.25), Error);
    CHECK_THROWS_AS(bounds_report(5, 3, 0.25), ParityError);
}

TEST_CASE("the ratio between the bounds is the eighth power of the degree") {
    // Exactness is structural (one multiplication), so it holds for
    // arbitrary parameters, not just showcases.
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {6, 2}, {6, 3}, {8, 3}, {10, 4}, {12, 5}, {50, 7}, {100, 9}}) {
        BoundsReport b = bounds_report(n, d, 0.125);
        double dd = static_cast<double>(d);
        CHECK(b.ratio == dd * dd * dd * dd * dd * dd * dd * dd);
        CHECK(b.theorem_bound == b.old_bound * b.ratio);
    }
}

TEST_CASE("mixing time respects the theorem bound at desk scale") {
    CHECK(static_cast<double>(tau62_quarter) <= bounds_report(6, 2, 0.25).theorem_bound);
    CHECK(static_cast<double>(tau63_quarter) <= bounds_report(6, 3, 0.25).theorem_bound);
    CHECK(static_cast<double>(tau63_hundredth) <=
          bounds_report(6, 3, 0.01).theorem_bound);
}
