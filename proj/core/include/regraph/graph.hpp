#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "regraph/error.hpp"

namespace regraph {

// Vertices are 1-based: a graph on n vertices uses ids 1..n.
using VertexId = int;

// Undirected simple edge, stored with u < v.  Construction normalizes
// the order and rejects loops.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw LoopError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                            "} is a loop");
    }

    auto operator<=>(const Edge&) const = default;

    bool incident_to(VertexId w) const { return u == w || v == w; }

    bool shares_endpoint(const Edge& o) const {
        return incident_to(o.u) || incident_to(o.v);
    }

    // The endpoint that is not w; w must be an endpoint.
    VertexId other(VertexId w) const {
        if (w == u) return v;
        if (w == v) return u;
        throw InvalidVertexError("vertex " + std::to_string(w) + " is not an endpoint");
    }
};

// One move of the chain: delete e1 and e2, insert f1 and f2.  The
// deleted pair must be non-incident, and {f1, f2} must be one of the
// three perfect matchings of the four endvertices (the identity
// matching {e1, e2} is allowed).
struct SwitchMove {
    Edge e1;
    Edge e2;
    Edge f1;
    Edge f2;

    SwitchMove(Edge del1, Edge del2, Edge ins1, Edge ins2);

    bool is_identity() const { return (f1 == e1 && f2 == e2) || (f1 == e2 && f2 == e1); }
};

// A d-regular simple graph on vertices 1..n with a sorted edge list.
// Use build() to construct; the default constructor gives the empty
// graph on zero vertices.
class RegularGraph {
public:
    RegularGraph() = default;

    // Validates (n, d), sorts the edges, and checks simplicity and
    // regularity.  Throws ParityError, DegreeTooLargeError,
    // InvalidVertexError, LoopError, DuplicateEdgeError or
    // NotRegularError.
    static RegularGraph build(int n, int d, std::vector<Edge> edges);

    int n() const { return n_; }
    int d() const { return d_; }
    std::span<const Edge> edges() const { return edges_; }
    bool has_edge(const Edge& e) const;

    auto operator<=>(const RegularGraph&) const = default;

private:
    RegularGraph(int n, int d, std::vector<Edge> edges)
        : n_(n), d_(d), edges_(std::move(edges)) {}

    int n_ = 0;
    int d_ = 0;
    std::vector<Edge> edges_;
};

// Checks n >= 1, 0 <= d <= n-1 and n*d even.  Throws
// InvalidVertexError, DegreeTooLargeError or ParityError.
void validate_parameters(int n, int d);

// The circulant graph on 1..n with offsets 1..floor(d/2), plus the
// antipodal matching when d is odd.  A canonical member of every
// non-empty state space.
RegularGraph circulant_start(int n, int d);

// Edges in exactly one of g and h, sorted.  Both graphs must share
// (n, d).
std::vector<Edge> symmetric_difference(const RegularGraph& g, const RegularGraph& h);

// Applies a switch to a copy of z and returns the result.  Throws
// EdgeAbsentError if a deleted edge is missing and
// WouldCreateMultiEdgeError if an inserted edge is already present
// (inserting over the deleted pair's own slots is fine).  An identity
// move returns z unchanged.
RegularGraph apply_switch(RegularGraph z, const SwitchMove& move);

// Reads "n d" then one "u v" pair per line.  Blank lines are skipped;
// "#" starts a comment.  Edge order and endpoint order are free.
// Throws ParseError with a 1-based line number on malformed input,
// then the usual build() errors on an invalid graph.
RegularGraph parse_graph(const std::string& text);

// "n d\n" then the sorted edge list, one "u v\n" per edge with u < v.
std::string serialize_graph(const RegularGraph& g);

// The complement: same vertices, edge set inverted.  (n-1-d)-regular.
RegularGraph complement_graph(const RegularGraph& g);

} // namespace regraph
