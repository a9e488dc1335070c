#include <doctest.h>

#include <algorithm>
#include <vector>

#include <regraph/graph.hpp>

using namespace regraph;

namespace {

RegularGraph make(int n, int d, std::vector<Edge> edges) {
    return RegularGraph::build(n, d, std::move(edges));
}

// Hexagon 1-2-3-4-5-6-1 and the two disjoint triangles {1,2,3},
// {4,5,6}: the standard pair of (6,2) states used throughout.
RegularGraph hexagon() {
    return make(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
}

RegularGraph two_triangles() {
    return make(6, 2, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
}

} // namespace

TEST_CASE("edges normalize their endpoint order") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e == Edge(2, 5));
    CHECK(Edge(1, 2) < Edge(1, 3));
    CHECK(Edge(1, 9) < Edge(2, 3));
    CHECK_THROWS_AS(Edge(4, 4), LoopError);
}

TEST_CASE("edge incidence helpers") {
    Edge e(2, 7);
    CHECK(e.incident_to(2));
    CHECK(e.incident_to(7));
    CHECK_FALSE(e.incident_to(3));
    CHECK(e.shares_endpoint(Edge(7, 9)));
    CHECK_FALSE(e.shares_endpoint(Edge(3, 9)));
    CHECK(e.other(2) == 7);
    CHECK(e.other(7) == 2);
    CHECK_THROWS_AS(e.other(1), InvalidVertexError);
}

TEST_CASE("switch moves validate their four endvertices") {
    Edge e1(1, 2), e2(4, 5);
    // All three matchings of {1,2,4,5} are accepted, the identity too.
    SwitchMove identity(e1, e2, e1, e2);
    CHECK(identity.is_identity());
    SwitchMove crossing(e1, e2, Edge(1, 4), Edge(2, 5));
    CHECK_FALSE(crossing.is_identity());
    SwitchMove other(e1, e2, Edge(1, 5), Edge(2, 4));
    CHECK_FALSE(other.is_identity());

    CHECK_THROWS_AS(SwitchMove(Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(2, 2)), LoopError);
    CHECK_THROWS_AS(SwitchMove(Edge(1, 2), Edge(2, 5), Edge(1, 2), Edge(2, 5)),
                    IncidentEdgesError);
    // Replacement must re-match the same four vertices.
    CHECK_THROWS_AS(SwitchMove(e1, e2, Edge(1, 4), Edge(2, 6)), InvalidReplacementError);
    CHECK_THROWS_AS(SwitchMove(e1, e2, Edge(1, 2), Edge(4, 6)), InvalidReplacementError);
    // ... and be a perfect matching, not a path.
    CHECK_THROWS_AS(SwitchMove(e1, e2, Edge(1, 4), Edge(4, 5)), InvalidReplacementError);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate_parameters(1, 0));
    CHECK_NOTHROW(validate_parameters(6, 3));
    CHECK_NOTHROW(validate_parameters(4, 3));
    CHECK_THROWS_AS(validate_parameters(0, 0), InvalidVertexError);
    CHECK_THROWS_AS(validate_parameters(-2, 1), InvalidVertexError);
    CHECK_THROWS_AS(validate_parameters(4, 4), DegreeTooLargeError);
    CHECK_THROWS_AS(validate_parameters(4, -1), DegreeTooLargeError);
    CHECK_THROWS_AS(validate_parameters(5, 3), ParityError);
}

TEST_CASE("graph construction checks") {
    CHECK_NOTHROW(hexagon());
    CHECK_THROWS_AS(make(6, 2, {{1, 2}, {1, 2}, {3, 4}, {3, 4}, {5, 6}, {5, 6}}),
                    DuplicateEdgeError);
    CHECK_THROWS_AS(make(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}}),
                    InvalidVertexError);
    CHECK_THROWS_AS(make(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}}),
                    NotRegularError);
    // Right count, wrong distribution.
    CHECK_THROWS_AS(make(6, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}, {2, 6}}),
                    NotRegularError);
    CHECK_THROWS_AS(make(5, 3, {}), ParityError);
}

TEST_CASE("edge lists are sorted and queryable") {
    RegularGraph g = make(6, 2, {{5, 6}, {1, 6}, {3, 4}, {1, 2}, {4, 5}, {2, 3}});
    CHECK(g == hexagon());
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
    CHECK(g.has_edge(Edge(6, 1)));
    CHECK_FALSE(g.has_edge(Edge(1, 3)));
}

TEST_CASE("circulant start states") {
    CHECK(circulant_start(6, 2) == hexagon());
    CHECK(circulant_start(5, 2) == make(5, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
    // Odd degree adds the antipodal matching.
    CHECK(circulant_start(4, 3) ==
          make(4, 3, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    RegularGraph g63 = circulant_start(6, 3);
    CHECK(g63.has_edge(Edge(1, 4)));
    CHECK(g63.has_edge(Edge(2, 5)));
    CHECK(g63.has_edge(Edge(3, 6)));
    CHECK(circulant_start(2, 1) == make(2, 1, {{1, 2}}));
    CHECK(circulant_start(3, 0).edges().empty());
    CHECK_THROWS_AS(circulant_start(5, 3), ParityError);
}

TEST_CASE("symmetric difference") {
    std::vector<Edge> h = symmetric_difference(two_triangles(), hexagon());
    CHECK(h == std::vector<Edge>{{1, 3}, {1, 6}, {3, 4}, {4, 6}});
    CHECK(symmetric_difference(hexagon(), hexagon()).empty());
    CHECK(symmetric_difference(hexagon(), two_triangles()) == h);
    CHECK_THROWS_AS(symmetric_difference(hexagon(), circulant_start(6, 3)),
                    MismatchedParametersError);
    CHECK_THROWS_AS(symmetric_difference(hexagon(), circulant_start(8, 2)),
                    MismatchedParametersError);
}

TEST_CASE("applying a switch") {
    RegularGraph g = hexagon();
    SwitchMove m(Edge(1, 2), Edge(4, 5), Edge(1, 4), Edge(2, 5));
    RegularGraph g2 = apply_switch(g, m);
    CHECK(g2 == make(6, 2, {{1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {5, 6}}));
    // The original is untouched and the move is reversible.
    CHECK(g == hexagon());
    SwitchMove back(Edge(1, 4), Edge(2, 5), Edge(1, 2), Edge(4, 5));
    CHECK(apply_switch(g2, back) == g);

    SwitchMove identity(Edge(1, 2), Edge(4, 5), Edge(1, 2), Edge(4, 5));
    CHECK(apply_switch(g, identity) == g);

    SwitchMove absent(Edge(1, 3), Edge(4, 5), Edge(1, 4), Edge(3, 5));
    CHECK_THROWS_AS(apply_switch(g, absent), EdgeAbsentError);

    // In K4 every real switch would duplicate an existing edge.
    RegularGraph k4 = circulant_start(4, 3);
    SwitchMove clash(Edge(1, 2), Edge(3, 4), Edge(1, 3), Edge(2, 4));
    CHECK_THROWS_AS(apply_switch(k4, clash), WouldCreateMultiEdgeError);
}

TEST_CASE("serialization format") {
    CHECK(serialize_graph(hexagon()) == "6 2\n1 2\n1 6\n2 3\n3 4\n4 5\n5 6\n");
    CHECK(serialize_graph(make(1, 0, {})) == "1 0\n");
}

TEST_CASE("parsing accepts free layout") {
    CHECK(parse_graph("6 2\n1 2\n1 6\n2 3\n3 4\n4 5\n5 6\n") == hexagon());
    CHECK(parse_graph("# comment\n6 2\n\n2 1\n6 1 # trailing comment\n3 2\n4 3\n5 4\n6 5") ==
          hexagon());
    CHECK(parse_graph(serialize_graph(two_triangles())) == two_triangles());
}

TEST_CASE("parsing reports the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("6") == 1);
    CHECK(line_of("6 2\n1\n") == 2);
    CHECK(line_of("6 2\n1 2 3\n") == 2);
    CHECK(line_of("6 2\n1 2\n# fine\nx y\n") == 4);
    CHECK(line_of("6 2\n1 2\n3 3\n") == 3);
    CHECK(line_of("99999999999 2\n") == 1);
    // Structural problems surface as build errors, not parse errors.
    CHECK_THROWS_AS(parse_graph("6 2\n1 2\n"), NotRegularError);
    CHECK_THROWS_AS(parse_graph("6 2\n1 2\n1 2\n3 4\n3 4\n5 6\n5 6\n"), DuplicateEdgeError);
}

TEST_CASE("complement graph") {
    RegularGraph c = complement_graph(hexagon());
    CHECK(c.d() == 3);
    CHECK(c == make(6, 3, {{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6},
                           {3, 5}, {3, 6}, {4, 6}}));
    CHECK(complement_graph(c) == hexagon());
    CHECK(complement_graph(circulant_start(4, 3)).edges().empty());
}
