#include "regraph/pairing.hpp"

#include <algorithm>
#include <optional>

namespace regraph {

namespace {

std::optional<uint64_t> checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a)
        return std::nullopt;
    return a * b;
}

uint64_t require_fit(std::optional<uint64_t> v, const char* what) {
    if (!v)
        throw TooLargeError(std::string(what) + " does not fit in 64 bits");
    return *v;
}

std::optional<uint64_t> checked_pow(uint64_t base, int exp) {
    uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        auto next = checked_mul(out, base);
        if (!next)
            return std::nullopt;
        out = *next;
    }
    return out;
}

uint64_t factorial(int k) {
    uint64_t out = 1;
    for (int i = 2; i <= k; ++i)
        out = require_fit(checked_mul(out, static_cast<uint64_t>(i)), "factorial");
    return out;
}

uint64_t odd_double_factorial(int k) { // (k)!! for odd k; (-1)!! = 1
    uint64_t out = 1;
    for (int i = 3; i <= k; i += 2)
        out = require_fit(checked_mul(out, static_cast<uint64_t>(i)), "double factorial");
    return out;
}

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        // out * (n-k+i) is divisible by i: out holds C(n-k+i-1, i-1).
        out = require_fit(checked_mul(out, static_cast<uint64_t>(n - k + i)), "binomial");
        out /= static_cast<uint64_t>(i);
    }
    return out;
}

} // namespace

uint64_t count_vertex_pairings(int g, int y) {
    if (g < 0 || y < 0)
        throw Error("arc counts cannot be negative");
    if ((g + y) % 2 != 0)
        throw ParityError("cannot pair an odd number of arcs (" + std::to_string(g) +
                          " green + " + std::to_string(y) + " yellow)");
    if (g < y)
        std::swap(g, y);
    int kk = g - y; // 2k majority arcs pair among themselves
    uint64_t out = binomial(g, kk);
    out = require_fit(checked_mul(out, odd_double_factorial(kk - 1)), "pairing count");
    out = require_fit(checked_mul(out, factorial(y)), "pairing count");
    return out;
}

namespace {

struct VertexArcs {
    std::vector<Edge> edges;
    std::vector<EdgeColor> colors;
};

// All perfect matchings of the arcs at one vertex, smallest free arc
// paired first, partners in increasing order.  `forbidden` is the
// colour that may not pair with itself (or nullopt for none).
void vertex_matchings(const VertexArcs& arcs, std::optional<EdgeColor> forbidden,
                      bool alternating, std::vector<bool>& used,
                      std::vector<ArcPair>& current,
                      std::vector<std::vector<ArcPair>>& out) {
    size_t first = 0;
    while (first < used.size() && used[first])
        ++first;
    if (first == used.size()) {
        out.push_back(current);
        return;
    }
    used[first] = true;
    for (size_t j = first + 1; j < used.size(); ++j) {
        if (used[j])
            continue;
        bool same = arcs.colors[first] == arcs.colors[j];
        if (alternating && same)
            continue;
        if (same && forbidden && arcs.colors[first] == *forbidden)
            continue;
        used[j] = true;
        current.emplace_back(arcs.edges[first], arcs.edges[j]);
        vertex_matchings(arcs, forbidden, alternating, used, current, out);
        current.pop_back();
        used[j] = false;
    }
    used[first] = false;
}

} // namespace

PairingEnumerator::PairingEnumerator(const ColoredDifference& h, PairingMode mode,
                                     uint64_t cap) {
    for (VertexId v : h.support()) {
        VertexArcs arcs;
        for (size_t i = 0; i < h.edges().size(); ++i) {
            if (!h.edges()[i].incident_to(v))
                continue;
            arcs.edges.push_back(h.edges()[i]);
            arcs.colors.push_back(h.color(i));
        }
        int g = h.green_arcs(v), y = h.yellow_arcs(v);
        if ((g + y) % 2 != 0)
            throw ParityError("vertex " + std::to_string(v) + " has odd arc count");
        if (mode == PairingMode::alternating && g != y)
            throw UnbalancedError("vertex " + std::to_string(v) + " has " +
                                  std::to_string(g) + " green but " + std::to_string(y) +
                                  " yellow arcs");
        std::optional<EdgeColor> forbidden;
        if (mode == PairingMode::allow_bad)
            forbidden = g >= y ? EdgeColor::yellow : EdgeColor::green;
        std::vector<std::vector<ArcPair>> matchings;
        std::vector<bool> used(arcs.edges.size(), false);
        std::vector<ArcPair> current;
        vertex_matchings(arcs, forbidden, mode == PairingMode::alternating, used,
                         current, matchings);
        auto total = checked_mul(count_, matchings.size());
        if (!total || *total > cap)
            throw TooLargeError("pairing count exceeds the cap of " + std::to_string(cap));
        count_ = *total;
        vertices_.push_back(v);
        options_.push_back(std::move(matchings));
    }
    cursor_.assign(vertices_.size(), 0);
    done_ = count_ == 0;
}

bool PairingEnumerator::next(Pairing& out) {
    if (done_)
        return false;
    out.at.clear();
    for (size_t i = 0; i < vertices_.size(); ++i)
        out.at[vertices_[i]] = options_[i][cursor_[i]];
    // Advance the odometer, least significant position last.
    size_t i = vertices_.size();
    while (i > 0) {
        --i;
        if (++cursor_[i] < options_[i].size())
            return true;
        cursor_[i] = 0;
    }
    done_ = true;
    return true;
}

namespace {

Edge pairing_partner(const Pairing& psi, VertexId v, const Edge& e) {
    auto it = psi.at.find(v);
    if (it == psi.at.end())
        throw Error("pairing has no matching at vertex " + std::to_string(v));
    for (const ArcPair& p : it->second) {
        if (p.a == e)
            return p.b;
        if (p.b == e)
            return p.a;
    }
    throw Error("pairing does not cover an arc at vertex " + std::to_string(v));
}

Circuit canonical_rotation(const std::vector<VertexId>& verts,
                           const std::vector<Edge>& edges) {
    size_t k = edges.size();
    VertexId min_v = *std::min_element(verts.begin(), verts.end());
    // The smallest circuit edge at min_v; its single traversal fixes
    // the start position and direction.
    std::optional<Edge> first;
    for (const Edge& e : edges)
        if (e.incident_to(min_v) && (!first || e < *first))
            first = e;
    size_t pos = static_cast<size_t>(
        std::find(edges.begin(), edges.end(), *first) - edges.begin());
    Circuit out;
    out.vertices.reserve(k);
    out.edges.reserve(k);
    if (verts[pos] == min_v) { // forward: edges[pos], edges[pos+1], ...
        for (size_t i = 0; i < k; ++i) {
            out.vertices.push_back(verts[(pos + i) % k]);
            out.edges.push_back(edges[(pos + i) % k]);
        }
    } else { // backward: start at the far end of edges[pos]
        for (size_t i = 0; i < k; ++i) {
            out.vertices.push_back(verts[(pos + 1 + k - i) % k]);
            out.edges.push_back(edges[(pos + k - i) % k]);
        }
    }
    return out;
}

} // namespace

CircuitDecomposition decompose_circuits(const ColoredDifference& h, const Pairing& psi) {
    const auto& all = h.edges();
    std::vector<bool> used(all.size(), false);
    auto edge_index = [&all](const Edge& e) {
        return static_cast<size_t>(
            std::lower_bound(all.begin(), all.end(), e) - all.begin());
    };
    CircuitDecomposition out;
    for (size_t start = 0; start < all.size(); ++start) {
        if (used[start])
            continue;
        const Edge e0 = all[start];
        std::vector<VertexId> verts;
        std::vector<Edge> edges;
        Edge cur = e0;
        VertexId from = e0.u;
        while (true) {
            size_t idx = edge_index(cur);
            if (used[idx])
                throw Error("pairing walks an edge twice; matching is inconsistent");
            used[idx] = true;
            verts.push_back(from);
            edges.push_back(cur);
            VertexId to = cur.other(from);
            Edge nxt = pairing_partner(psi, to, cur);
            if (nxt == e0 && to == e0.u)
                break;
            cur = nxt;
            from = to;
        }
        out.circuits.push_back(canonical_rotation(verts, edges));
    }
    std::sort(out.circuits.begin(), out.circuits.end(),
              [](const Circuit& a, const Circuit& b) { return a.edges[0] < b.edges[0]; });
    return out;
}

const VertexPairStats* BadPairReport::stats(VertexId v) const {
    for (const auto& s : per_vertex)
        if (s.v == v)
            return &s;
    return nullptr;
}

std::string BadPairReport::to_csv() const {
    std::string out = "vertex,green_arcs,yellow_arcs,yellow_yellow,green_green\n";
    for (const auto& s : per_vertex)
        out += std::to_string(s.v) + "," + std::to_string(s.green_arcs) + "," +
               std::to_string(s.yellow_arcs) + "," + std::to_string(s.yellow_yellow) +
               "," + std::to_string(s.green_green) + "\n";
    out += "total," + std::to_string(total_bad_pairs) + "," +
           std::to_string(interesting.size()) + "," + std::to_string(bad_vertices.size()) +
           "\n";
    return out;
}

BadPairReport bad_pair_report(const ColoredDifference& h, const Pairing& psi,
                              std::span<const TaggedEdge> interesting) {
    BadPairReport report;
    report.interesting.assign(interesting.begin(), interesting.end());
    std::sort(report.interesting.begin(), report.interesting.end());
    for (VertexId v : h.support()) {
        VertexPairStats s;
        s.v = v;
        s.green_arcs = h.green_arcs(v);
        s.yellow_arcs = h.yellow_arcs(v);
        auto it = psi.at.find(v);
        size_t matched = it == psi.at.end() ? 0 : it->second.size();
        if (2 * matched != static_cast<size_t>(s.green_arcs + s.yellow_arcs))
            throw Error("pairing does not cover the arcs at vertex " + std::to_string(v));
        if (it != psi.at.end()) {
            for (const ArcPair& p : it->second) {
                if (!p.a.incident_to(v) || !p.b.incident_to(v))
                    throw Error("paired arc is not incident to vertex " +
                                std::to_string(v));
                EdgeColor ca = h.color_of(p.a), cb = h.color_of(p.b);
                if (ca == cb) {
                    if (ca == EdgeColor::green)
                        ++s.green_green;
                    else
                        ++s.yellow_yellow;
                }
            }
        }
        report.per_vertex.push_back(s);
        if (s.bad_pairs() > 0)
            report.bad_vertices.push_back(v);
        report.total_bad_pairs += s.bad_pairs();
    }
    if (report.interesting.size() > static_cast<size_t>(max_interesting_edges))
        throw LimitViolationError(std::to_string(report.interesting.size()) +
                                  " interesting edges, limit " +
                                  std::to_string(max_interesting_edges));
    if (report.bad_vertices.size() > static_cast<size_t>(max_bad_vertices))
        throw LimitViolationError(std::to_string(report.bad_vertices.size()) +
                                  " bad vertices, limit " +
                                  std::to_string(max_bad_vertices));
    if (report.total_bad_pairs > max_bad_pairs)
        throw LimitViolationError(std::to_string(report.total_bad_pairs) +
                                  " bad pairs, limit " + std::to_string(max_bad_pairs));
    for (const auto& s : report.per_vertex)
        if (s.green_green > max_same_color_pairs_per_vertex ||
            s.yellow_yellow > max_same_color_pairs_per_vertex)
            throw LimitViolationError("vertex " + std::to_string(s.v) +
                                      " has more than " +
                                      std::to_string(max_same_color_pairs_per_vertex) +
                                      " bad pairs of one colour");
    return report;
}

RatioCheckReport check_pairing_ratio(
    std::span<const std::pair<ColoredDifference, BadPairReport>> states, int d,
    uint64_t cap) {
    if (d < 0)
        throw Error("degree cannot be negative");
    RatioCheckReport out;
    out.all_pass = true;
    for (const auto& [h, report] : states) {
        RatioCheckRow row;
        row.bad_pairs = report.total_bad_pairs;
        row.n_state = 1;
        row.n_balanced = 1;
        for (VertexId v : h.support()) {
            auto state = checked_mul(
                row.n_state, count_vertex_pairings(h.green_arcs(v), h.yellow_arcs(v)));
            auto balanced = checked_mul(row.n_balanced, factorial(h.theta(v)));
            if (!state || *state > cap || !balanced || *balanced > cap)
                throw TooLargeError("pairing-count product exceeds the cap of " +
                                    std::to_string(cap));
            row.n_state = *state;
            row.n_balanced = *balanced;
        }
        // An overflowing bound exceeds any in-cap product, so it holds.
        auto reported = checked_pow(static_cast<uint64_t>(d), row.bad_pairs);
        auto bound = reported ? checked_mul(*reported, row.n_balanced) : std::nullopt;
        row.within_reported = !bound || row.n_state <= *bound;
        auto limit = checked_pow(static_cast<uint64_t>(d), max_bad_pairs);
        auto limit_bound = limit ? checked_mul(*limit, row.n_balanced) : std::nullopt;
        row.within_limit = !limit_bound || row.n_state <= *limit_bound;
        out.all_pass = out.all_pass && row.within_reported && row.within_limit;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace regraph
