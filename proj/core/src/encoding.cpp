#include "regraph/encoding.hpp"

#include <algorithm>

namespace regraph {

EdgeLabeling::EdgeLabeling(std::map<Edge, int> labels) : labels_(std::move(labels)) {
    for (auto it = labels_.begin(); it != labels_.end();) {
        if (it->second == 0)
            it = labels_.erase(it);
        else
            ++it;
    }
}

int EdgeLabeling::label(const Edge& e) const {
    auto it = labels_.find(e);
    return it == labels_.end() ? 0 : it->second;
}

std::vector<Edge> EdgeLabeling::bad_edges() const {
    std::vector<Edge> out;
    for (const auto& [e, l] : labels_)
        if (l == -1 || l == 2)
            out.push_back(e);
    return out;
}

EdgeLabeling encode(const RegularGraph& g, const RegularGraph& g2, const RegularGraph& z) {
    if (g.n() != g2.n() || g.d() != g2.d() || g.n() != z.n() || g.d() != z.d())
        throw MismatchedParametersError("graphs have different (n, d)");
    std::map<Edge, int> labels;
    for (const Edge& e : g.edges())
        labels[e] += 1;
    for (const Edge& e : g2.edges())
        labels[e] += 1;
    for (const Edge& e : z.edges())
        labels[e] -= 1;
    return EdgeLabeling(std::move(labels));
}

ColoredDifference::ColoredDifference(int n, std::vector<Edge> edges,
                                     std::vector<EdgeColor> colors)
    : n_(n),
      green_(static_cast<size_t>(n) + 1, 0),
      yellow_(static_cast<size_t>(n) + 1, 0) {
    if (edges.size() != colors.size())
        throw Error("edge and colour lists differ in length");
    // Sort edges and colours together.
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&edges](size_t a, size_t b) { return edges[a] < edges[b]; });
    edges_.reserve(edges.size());
    colors_.reserve(colors.size());
    for (size_t i : order) {
        edges_.push_back(edges[i]);
        colors_.push_back(colors[i]);
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 1 || e.v > n_)
            throw InvalidVertexError("edge endpoint outside 1.." + std::to_string(n_));
        if (i > 0 && edges_[i - 1] == e)
            throw DuplicateEdgeError("edge appears twice");
        auto& side = colors_[i] == EdgeColor::green ? green_ : yellow_;
        ++side[static_cast<size_t>(e.u)];
        ++side[static_cast<size_t>(e.v)];
    }
}

EdgeColor ColoredDifference::color_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        throw EdgeAbsentError("edge is not in the difference");
    return colors_[static_cast<size_t>(it - edges_.begin())];
}

int ColoredDifference::green_arcs(VertexId v) const {
    if (v < 1 || v > n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(n_));
    return green_[static_cast<size_t>(v)];
}

int ColoredDifference::yellow_arcs(VertexId v) const {
    if (v < 1 || v > n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(n_));
    return yellow_[static_cast<size_t>(v)];
}

int ColoredDifference::theta(VertexId v) const {
    int total = green_arcs(v) + yellow_arcs(v);
    if (total % 2 != 0)
        throw ParityError("vertex " + std::to_string(v) + " has odd arc count " +
                          std::to_string(total));
    return total / 2;
}

bool ColoredDifference::balanced() const {
    for (int v = 1; v <= n_; ++v)
        if (green_[static_cast<size_t>(v)] != yellow_[static_cast<size_t>(v)])
            return false;
    return true;
}

std::vector<VertexId> ColoredDifference::support() const {
    std::vector<VertexId> out;
    for (int v = 1; v <= n_; ++v)
        if (green_[static_cast<size_t>(v)] + yellow_[static_cast<size_t>(v)] > 0)
            out.push_back(v);
    return out;
}

ColoredDifference color_difference(std::span<const Edge> h, const RegularGraph& z) {
    std::vector<Edge> edges(h.begin(), h.end());
    std::vector<EdgeColor> colors;
    colors.reserve(edges.size());
    for (const Edge& e : edges)
        colors.push_back(z.has_edge(e) ? EdgeColor::green : EdgeColor::yellow);
    return ColoredDifference(z.n(), std::move(edges), std::move(colors));
}

} // namespace regraph
