#include "regraph/transition_matrix.hpp"

#include <algorithm>
#include <map>

#include "regraph/chain.hpp"

namespace regraph {

uint64_t TransitionMatrix::offdiag_total(size_t i) const {
    uint64_t total = 0;
    for (const auto& [j, c] : rows[i])
        total += c;
    return total;
}

uint64_t TransitionMatrix::count(size_t i, size_t j) const {
    if (i == j)
        return diagonal_count(i);
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), std::pair<uint32_t, uint32_t>(
                                                           static_cast<uint32_t>(j), 0));
    if (it == row.end() || it->first != j)
        return 0;
    return it->second;
}

bool TransitionMatrix::symmetric() const {
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, c] : rows[i])
            if (count(j, i) != c)
                return false;
    return true;
}

bool TransitionMatrix::uniform_exactly_stationary() const {
    std::vector<uint64_t> column(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        column[i] += diagonal_count(i);
        for (const auto& [j, c] : rows[i])
            column[j] += c;
    }
    return std::all_of(column.begin(), column.end(),
                       [this](uint64_t s) { return s == denom; });
}

bool TransitionMatrix::lazy() const {
    for (size_t i = 0; i < rows.size(); ++i)
        if (2 * diagonal_count(i) < denom)
            return false;
    return true;
}

std::vector<std::vector<double>> TransitionMatrix::dense() const {
    std::vector<std::vector<double>> p(rows.size(), std::vector<double>(rows.size(), 0.0));
    for (size_t i = 0; i < rows.size(); ++i) {
        p[i][i] = static_cast<double>(diagonal_count(i)) / static_cast<double>(denom);
        for (const auto& [j, c] : rows[i])
            p[i][j] = static_cast<double>(c) / static_cast<double>(denom);
    }
    return p;
}

TransitionMatrix build_transition_matrix(std::span<const RegularGraph> states,
                                         uint64_t cap) {
    if (states.empty())
        throw Error("empty state list");
    if (states.size() > cap)
        throw StateSpaceTooLargeError("matrix over " + std::to_string(states.size()) +
                                      " states exceeds the cap of " + std::to_string(cap));
    TransitionMatrix tm;
    tm.n = states[0].n();
    tm.d = states[0].d();
    tm.pair_count = nonincident_pair_count(tm.n, tm.d);
    tm.denom = tm.pair_count == 0 ? 1 : 6 * tm.pair_count;
    tm.rows.resize(states.size());

    std::map<std::vector<Edge>, uint32_t> index;
    for (size_t i = 0; i < states.size(); ++i) {
        const auto& g = states[i];
        if (g.n() != tm.n || g.d() != tm.d)
            throw MismatchedParametersError("state has wrong (n, d)");
        if (!index.emplace(std::vector<Edge>(g.edges().begin(), g.edges().end()),
                           static_cast<uint32_t>(i))
                 .second)
            throw DuplicateEdgeError("state appears twice");
    }

    std::vector<Edge> work;
    for (size_t i = 0; i < states.size(); ++i) {
        auto edges = states[i].edges();
        for (size_t a = 0; a < edges.size(); ++a) {
            for (size_t b = a + 1; b < edges.size(); ++b) {
                const Edge e1 = edges[a], e2 = edges[b];
                if (e1.shares_endpoint(e2))
                    continue;
                const Edge repl[2][2] = {
                    {Edge(e1.u, e2.u), Edge(e1.v, e2.v)},
                    {Edge(e1.u, e2.v), Edge(e1.v, e2.u)},
                };
                for (const auto& pair : repl) {
                    if (states[i].has_edge(pair[0]) || states[i].has_edge(pair[1]))
                        continue; // rejected: stays on the diagonal
                    work.assign(edges.begin(), edges.end());
                    work.erase(std::lower_bound(work.begin(), work.end(), e1));
                    work.erase(std::lower_bound(work.begin(), work.end(), e2));
                    work.insert(std::lower_bound(work.begin(), work.end(), pair[0]), pair[0]);
                    work.insert(std::lower_bound(work.begin(), work.end(), pair[1]), pair[1]);
                    auto it = index.find(work);
                    if (it == index.end())
                        throw Error("switch leads outside the state list; "
                                    "enumeration is incomplete");
                    tm.rows[i].emplace_back(it->second, 1);
                }
            }
        }
        auto& row = tm.rows[i];
        std::sort(row.begin(), row.end());
        for (size_t k = 1; k < row.size(); ++k)
            if (row[k].first == row[k - 1].first)
                throw Error("two distinct switches join the same pair of states");
    }
    return tm;
}

} // namespace regraph
