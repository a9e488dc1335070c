#include "regraph/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "regraph/chain.hpp"

namespace regraph {

namespace {

using bigint = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<bigint>>;

Matrix to_numerators(const TransitionMatrix& p) {
    size_t n = p.size();
    Matrix m(n, std::vector<bigint>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = p.diagonal_count(i);
        for (const auto& [j, c] : p.rows[i])
            m[i][j] = c;
    }
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<bigint>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            const bigint& aik = a[i][k];
            if (aik == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0)
                    out[i][j] += aik * b[k][j];
        }
    return out;
}

// eps as the exact binary rational p/2^k of the double.
struct ExactEps {
    bigint num;
    bigint den;
};

ExactEps exact_eps(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw Error("eps must lie in (0,1)");
    int exp = 0;
    double frac = std::frexp(eps, &exp); // eps = frac * 2^exp, frac in [1/2, 1)
    auto mant = static_cast<uint64_t>(std::ldexp(frac, 53));
    ExactEps e;
    e.num = mant;
    e.den = bigint(1) << (53 - exp);
    return e;
}

// Worst-start TV <= eps, all-integer.  Per row the test
//   (1/2) sum_j |num[i][j]/denom - 1/n| <= eps_num/eps_den
// clears to
//   eps_den * sum_j |n*num[i][j] - denom| <= 2 * eps_num * n * denom.
bool tv_within(const Matrix& num, const bigint& denom, const ExactEps& eps) {
    size_t n = num.size();
    bigint bound = 2 * eps.num * static_cast<int64_t>(n) * denom;
    for (size_t i = 0; i < n; ++i) {
        bigint sum = 0;
        for (size_t j = 0; j < n; ++j) {
            bigint diff = static_cast<int64_t>(n) * num[i][j] - denom;
            sum += diff < 0 ? -diff : diff;
        }
        if (eps.den * sum > bound)
            return false;
    }
    return true;
}

size_t thread_count(uint64_t work_items) {
    unsigned threads = 0;
    if (const char* env = std::getenv("REGRAPH_THREADS"))
        threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<size_t>(std::min<uint64_t>(threads, std::max<uint64_t>(work_items, 1)));
}

} // namespace

bool kernel_connected(const TransitionMatrix& p) {
    size_t n = p.size();
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack = {0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (const auto& [j, c] : p.rows[i])
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == n;
}

uint64_t exact_mixing_time(const TransitionMatrix& p, double eps) {
    ExactEps e = exact_eps(eps);
    size_t n = p.size();
    if (n == 1)
        return 0;
    // TV can never drop below 1 - |C|/n when a start is confined to a
    // communicating class C.
    {
        std::vector<int> cls(n, -1);
        int classes = 0;
        size_t smallest = n;
        for (size_t s = 0; s < n; ++s) {
            if (cls[s] >= 0)
                continue;
            size_t size = 0;
            std::vector<size_t> stack = {s};
            cls[s] = classes;
            while (!stack.empty()) {
                size_t i = stack.back();
                stack.pop_back();
                ++size;
                for (const auto& [j, c] : p.rows[i])
                    if (cls[j] < 0) {
                        cls[j] = classes;
                        stack.push_back(j);
                    }
            }
            smallest = std::min(smallest, size);
            ++classes;
        }
        if (classes > 1) {
            // floor = 1 - smallest/n > eps  <=>  den*(n-smallest) > num*n
            if (e.den * static_cast<int64_t>(n - smallest) >
                e.num * static_cast<int64_t>(n))
                throw NotConnectedError("chain has " + std::to_string(classes) +
                                        " communicating classes; TV floor exceeds eps");
        }
    }

    // t = 0: identity matrix.
    Matrix identity(n, std::vector<bigint>(n, 0));
    for (size_t i = 0; i < n; ++i)
        identity[i][i] = 1;
    if (tv_within(identity, 1, e))
        return 0;

    // Square up to a passing power of two.
    std::vector<Matrix> squares = {to_numerators(p)};
    std::vector<bigint> denoms = {bigint(p.denom)};
    while (!tv_within(squares.back(), denoms.back(), e)) {
        if (squares.size() > 60)
            throw Error("mixing time exceeds 2^60 steps");
        squares.push_back(multiply(squares.back(), squares.back()));
        denoms.push_back(denoms.back() * denoms.back());
    }
    size_t k = squares.size() - 1; // 2^k passes
    if (k == 0)
        return 1;

    // Greedy bits below 2^k: keep the largest failing t, answer t+1.
    Matrix cur = squares[k - 1];
    bigint cur_denom = denoms[k - 1];
    uint64_t t = uint64_t(1) << (k - 1);
    for (size_t j = k - 1; j-- > 0;) {
        Matrix cand = multiply(cur, squares[j]);
        bigint cand_denom = cur_denom * denoms[j];
        if (!tv_within(cand, cand_denom, e)) {
            cur = std::move(cand);
            cur_denom = std::move(cand_denom);
            t += uint64_t(1) << j;
        }
    }
    return t + 1;
}

std::vector<double> exact_tv_curve(const TransitionMatrix& p, uint64_t t_end) {
    size_t n = p.size();
    auto dense = p.dense();
    std::vector<std::vector<double>> power(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        power[i][i] = 1.0;
    std::vector<double> out;
    out.reserve(t_end + 1);
    double uniform = 1.0 / static_cast<double>(n);
    for (uint64_t t = 0;; ++t) {
        double worst = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double tv = 0.0;
            for (size_t j = 0; j < n; ++j)
                tv += std::abs(power[i][j] - uniform);
            worst = std::max(worst, tv / 2.0);
        }
        out.push_back(worst);
        if (t == t_end)
            break;
        std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                double pik = power[i][k];
                if (pik == 0.0)
                    continue;
                for (size_t j = 0; j < n; ++j)
                    next[i][j] += pik * dense[k][j];
            }
        power = std::move(next);
    }
    return out;
}

double spectral_gap(const TransitionMatrix& p) {
    size_t n = p.size();
    if (n == 1)
        return 1.0;
    Eigen::MatrixXd m(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 0.0;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            static_cast<double>(p.diagonal_count(i)) / static_cast<double>(p.denom);
        for (const auto& [j, c] : p.rows[i])
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                static_cast<double>(c) / static_cast<double>(p.denom);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("eigensolver did not converge");
    // Eigenvalues come out ascending.
    return 1.0 - solver.eigenvalues()(static_cast<Eigen::Index>(n) - 2);
}

std::vector<double> empirical_tv_curve(int n, int d, const std::vector<uint64_t>& t_grid,
                                       uint64_t chains, uint64_t seed,
                                       const StateSpace* space) {
    if (t_grid.empty())
        return {};
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw Error("t grid must be sorted");
    if (chains == 0)
        throw Error("need at least one chain");
    std::optional<StateSpace> own;
    if (!space) {
        own.emplace(enumerate_state_space(n, d));
        space = &*own;
    }
    const RegularGraph start = circulant_start(n, d);
    size_t points = t_grid.size();
    size_t states = space->size();

    size_t workers = thread_count(chains);
    std::vector<std::vector<uint64_t>> histograms(
        workers, std::vector<uint64_t>(points * states, 0));
    std::vector<std::thread> pool;
    uint64_t per = chains / workers, extra = chains % workers;
    uint64_t first = 0;
    for (size_t w = 0; w < workers; ++w) {
        uint64_t count = per + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, first, count] {
            auto& hist = histograms[w];
            for (uint64_t c = first; c < first + count; ++c) {
                Rng rng(derive_seed(seed, c));
                RegularGraph z = start;
                uint64_t t = 0;
                for (size_t g = 0; g < points; ++g) {
                    for (; t < t_grid[g]; ++t)
                        z = step(std::move(z), rng);
                    hist[g * states + space->index_of(z)] += 1;
                }
            }
        });
        first += count;
    }
    for (auto& th : pool)
        th.join();

    std::vector<double> out(points, 0.0);
    double uniform = 1.0 / static_cast<double>(states);
    for (size_t g = 0; g < points; ++g) {
        double tv = 0.0;
        for (size_t s = 0; s < states; ++s) {
            uint64_t total = 0;
            for (size_t w = 0; w < workers; ++w)
                total += histograms[w][g * states + s];
            tv += std::abs(static_cast<double>(total) / static_cast<double>(chains) -
                           uniform);
        }
        out[g] = tv / 2.0;
    }
    return out;
}

double empirical_tv(int n, int d, uint64_t t, uint64_t chains, uint64_t seed,
                    const StateSpace* space) {
    return empirical_tv_curve(n, d, {t}, chains, seed, space)[0];
}

namespace {

double ipow(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace

BoundsReport bounds_report(int n, int d, double eps, std::optional<double> omega_size) {
    validate_parameters(n, d);
    if (d < 1)
        throw Error("bound formulas need degree at least 1");
    if (!(eps > 0.0) || !(eps < 1.0))
        throw Error("eps must lie in (0,1)");
    double dn = static_cast<double>(d) * static_cast<double>(n);
    double common = dn * std::log(dn) + std::log(1.0 / eps);
    BoundsReport r;
    r.old_bound = ipow(d, 15) * ipow(n, 8) * common;
    r.ratio = ipow(d, 8);
    r.theorem_bound = r.old_bound * r.ratio;
    r.load_bound = 2.0 * ipow(d, 22) * ipow(n, 7);
    if (omega_size)
        r.flow_bound = 2.0 * ipow(d, 20) * ipow(n, 5) / *omega_size;
    return r;
}

} // namespace regraph
