#include "regraph/graph.hpp"

#include <algorithm>
#include <sstream>

namespace regraph {

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

} // namespace

SwitchMove::SwitchMove(Edge del1, Edge del2, Edge ins1, Edge ins2)
    : e1(del1), e2(del2), f1(ins1), f2(ins2) {
    if (e1.shares_endpoint(e2))
        throw IncidentEdgesError("deleted edges " + edge_str(e1) + " and " + edge_str(e2) +
                                 " share an endvertex");
    // The inserted pair must re-match exactly the four endvertices.
    VertexId ends[4] = {e1.u, e1.v, e2.u, e2.v};
    std::sort(ends, ends + 4);
    VertexId ins[4] = {f1.u, f1.v, f2.u, f2.v};
    std::sort(ins, ins + 4);
    if (!std::equal(ends, ends + 4, ins) || f1.shares_endpoint(f2))
        throw InvalidReplacementError("inserted edges " + edge_str(f1) + " and " +
                                      edge_str(f2) +
                                      " do not match the deleted endvertices");
}

RegularGraph RegularGraph::build(int n, int d, std::vector<Edge> edges) {
    validate_parameters(n, d);
    std::sort(edges.begin(), edges.end());
    std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 1 || e.v > n)
            throw InvalidVertexError("edge " + edge_str(e) + " is outside 1.." +
                                     std::to_string(n));
        if (i > 0 && edges[i - 1] == e)
            throw DuplicateEdgeError("edge " + edge_str(e) + " appears twice");
        ++degree[static_cast<size_t>(e.u)];
        ++degree[static_cast<size_t>(e.v)];
    }
    for (int v = 1; v <= n; ++v)
        if (degree[static_cast<size_t>(v)] != d)
            throw NotRegularError("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(degree[static_cast<size_t>(v)]) +
                                  ", expected " + std::to_string(d));
    return RegularGraph(n, d, std::move(edges));
}

bool RegularGraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void validate_parameters(int n, int d) {
    if (n < 1)
        throw InvalidVertexError("need at least one vertex, got n=" + std::to_string(n));
    if (d < 0 || d > n - 1)
        throw DegreeTooLargeError("degree " + std::to_string(d) +
                                  " is impossible on " + std::to_string(n) + " vertices");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw ParityError("n*d must be even, got n=" + std::to_string(n) +
                          " d=" + std::to_string(d));
}

RegularGraph circulant_start(int n, int d) {
    validate_parameters(n, d);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(d) / 2);
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 1; v <= n; ++v)
            edges.emplace_back(v, (v - 1 + off) % n + 1);
    if (d % 2 == 1) {
        // d odd forces n even; add the antipodal matching.
        for (int v = 1; v <= n / 2; ++v)
            edges.emplace_back(v, v + n / 2);
    }
    return RegularGraph::build(n, d, std::move(edges));
}

std::vector<Edge> symmetric_difference(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n() || g.d() != h.d())
        throw MismatchedParametersError("graphs have different (n, d)");
    std::vector<Edge> out;
    auto a = g.edges().begin(), ae = g.edges().end();
    auto b = h.edges().begin(), be = h.edges().end();
    while (a != ae && b != be) {
        if (*a < *b)
            out.push_back(*a++);
        else if (*b < *a)
            out.push_back(*b++);
        else {
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return out;
}

RegularGraph apply_switch(RegularGraph z, const SwitchMove& move) {
    if (!z.has_edge(move.e1))
        throw EdgeAbsentError("edge " + edge_str(move.e1) + " is not in the graph");
    if (!z.has_edge(move.e2))
        throw EdgeAbsentError("edge " + edge_str(move.e2) + " is not in the graph");
    if (move.is_identity())
        return z;
    if (z.has_edge(move.f1))
        throw WouldCreateMultiEdgeError("edge " + edge_str(move.f1) + " is already present");
    if (z.has_edge(move.f2))
        throw WouldCreateMultiEdgeError("edge " + edge_str(move.f2) + " is already present");
    std::vector<Edge> edges(z.edges().begin(), z.edges().end());
    auto drop = [&edges](const Edge& e) {
        edges.erase(std::lower_bound(edges.begin(), edges.end(), e));
    };
    drop(move.e1);
    drop(move.e2);
    edges.push_back(move.f1);
    edges.push_back(move.f2);
    return RegularGraph::build(z.n(), z.d(), std::move(edges));
}

RegularGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, d = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue; // blank or comment-only line
        std::istringstream fields(line);
        long long a, b;
        if (!(fields >> a) || !(fields >> b))
            throw ParseError("expected two integers", line_no);
        std::string rest;
        if (fields >> rest)
            throw ParseError("trailing content '" + rest + "'", line_no);
        if (a < INT32_MIN || a > INT32_MAX || b < INT32_MIN || b > INT32_MAX)
            throw ParseError("value out of range", line_no);
        if (n < 0) {
            n = static_cast<int>(a);
            d = static_cast<int>(b);
        } else {
            if (a == b)
                throw ParseError("loop edge", line_no);
            edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
    }
    if (n < 0)
        throw ParseError("missing header", line_no + 1);
    return RegularGraph::build(n, d, std::move(edges));
}

std::string serialize_graph(const RegularGraph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.d()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

RegularGraph complement_graph(const RegularGraph& g) {
    std::vector<Edge> edges;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (!g.has_edge(Edge(u, v)))
                edges.emplace_back(u, v);
    return RegularGraph::build(g.n(), g.n() - 1 - g.d(), std::move(edges));
}

} // namespace regraph
