#pragma once

#include <map>
#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

// Arc colour in the two-coloured symmetric difference: green arcs lie
// in the current graph, yellow arcs do not.
enum class EdgeColor { yellow, green };

// Sparse integer labels on edges; unstored edges have label 0.
class EdgeLabeling {
public:
    EdgeLabeling() = default;
    explicit EdgeLabeling(std::map<Edge, int> labels);

    int label(const Edge& e) const;

    // Edges whose label is -1 or 2, sorted.  These carry more or less
    // mass than a graph edge can, so they are the edges an observer of
    // the current graph cannot infer.
    std::vector<Edge> bad_edges() const;

    const std::map<Edge, int>& labels() const { return labels_; }

private:
    std::map<Edge, int> labels_; // nonzero labels only
};

// The label L(e) = G(e) + G'(e) - Z(e) for every edge where it is
// nonzero, with G(e) etc. being 0/1 membership indicators.  All three
// graphs must share (n, d).  Labels lie in {-1, 0, 1, 2}, and the bad
// labels -1 and 2 can only occur off the symmetric difference of G
// and G'.
EdgeLabeling encode(const RegularGraph& g, const RegularGraph& g2, const RegularGraph& z);

// The symmetric difference of two graphs with each edge coloured by
// membership in a third.  Arc counts are per endpoint: an edge
// contributes one arc of its colour at each endvertex.
class ColoredDifference {
public:
    ColoredDifference() = default;
    ColoredDifference(int n, std::vector<Edge> edges, std::vector<EdgeColor> colors);

    int n() const { return n_; }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    EdgeColor color(size_t i) const { return colors_[i]; }
    EdgeColor color_of(const Edge& e) const;

    int green_arcs(VertexId v) const;
    int yellow_arcs(VertexId v) const;
    // theta(v) = (green + yellow) / 2; throws ParityError when the
    // total arc count at v is odd.
    int theta(VertexId v) const;

    // True when every vertex has equally many green and yellow arcs.
    bool balanced() const;

    // Vertices with at least one arc, sorted.
    std::vector<VertexId> support() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_; // sorted
    std::vector<EdgeColor> colors_;
    std::vector<int> green_; // per vertex, index 0 unused
    std::vector<int> yellow_;
};

// Colours the edge set h by membership in z: green when z contains
// the edge.  h must be a set of edges on z's vertices.
ColoredDifference color_difference(std::span<const Edge> h, const RegularGraph& z);

} // namespace regraph
