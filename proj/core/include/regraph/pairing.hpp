#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "regraph/encoding.hpp"

namespace regraph {

// Number of perfect matchings on g green and y yellow arcs in which
// the minority colour is never paired with itself.  With g - y = 2k
// >= 0 this is C(g, 2k) * (2k-1)!! * y!: choose the green arcs that
// pair among themselves, match them, then match the remaining greens
// to the yellows.  Symmetric when y > g.  Throws ParityError when
// g + y is odd and TooLargeError past 64 bits.
uint64_t count_vertex_pairings(int g, int y);

// Two arcs paired at a vertex.  An arc at v is identified by its
// edge, since a simple graph has at most one copy of an edge at v.
// Stored with a < b.
struct ArcPair {
    Edge a;
    Edge b;

    ArcPair(Edge x, Edge y) : a(x < y ? x : y), b(x < y ? y : x) {
        if (x == y)
            throw Error("an arc cannot pair with itself");
    }

    auto operator<=>(const ArcPair&) const = default;
};

// A perfect matching on the arcs at every vertex of the support.
struct Pairing {
    std::map<VertexId, std::vector<ArcPair>> at;

    auto operator<=>(const Pairing&) const = default;
};

enum class PairingMode {
    alternating, // every pair one green and one yellow arc
    allow_bad,   // same-colour pairs allowed for the majority colour
};

inline constexpr uint64_t default_pairing_cap = 10000000;

// Enumerates every valid pairing of a coloured difference exactly
// once, in a fixed order (per-vertex matchings enumerated
// smallest-arc-first, combined as an odometer).  Throws ParityError
// on a vertex with an odd arc count, UnbalancedError in alternating
// mode when some g_v != y_v, and TooLargeError when the total count
// exceeds the cap.
class PairingEnumerator {
public:
    PairingEnumerator(const ColoredDifference& h, PairingMode mode,
                      uint64_t cap = default_pairing_cap);

    uint64_t count() const { return count_; }

    // Writes the next pairing and returns true, or returns false when
    // exhausted.
    bool next(Pairing& out);

private:
    std::vector<VertexId> vertices_;
    std::vector<std::vector<std::vector<ArcPair>>> options_; // per vertex
    std::vector<size_t> cursor_;
    bool done_ = false;
    uint64_t count_ = 1;
};

// A closed walk: vertices[i] -- vertices[i+1] along edges[i], the
// last edge returning to vertices[0].
struct Circuit {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;

    size_t length() const { return edges.size(); }
};

struct CircuitDecomposition {
    std::vector<Circuit> circuits;
};

// Splits H into the closed walks induced by the pairing: consecutive
// edges of a walk are paired at their shared vertex.  Every H-edge
// lies in exactly one circuit.  Deterministic form: each circuit
// starts at its smallest vertex, leaving along its smallest incident
// circuit edge; circuits are sorted by their smallest contained edge.
CircuitDecomposition decompose_circuits(const ColoredDifference& h, const Pairing& psi);

// Edges whose switch history makes them unaccountable to the
// encoding: odd chords switched mid-circuit and shortcut edges.
enum class InterestingTag { odd_chord, shortcut };

struct TaggedEdge {
    Edge edge;
    InterestingTag tag;

    auto operator<=>(const TaggedEdge&) const = default;
};

// Structural limits on any reachable trajectory state: at most four
// interesting edges exist at once, only their endpoints can be bad,
// a vertex carries at most two bad pairs of each colour, and the
// worst reachable total is 14 bad pairs.
inline constexpr int max_interesting_edges = 4;
inline constexpr int max_bad_vertices = 6;
inline constexpr int max_bad_pairs = 14;
inline constexpr int max_same_color_pairs_per_vertex = 2;

struct VertexPairStats {
    VertexId v = 0;
    int green_arcs = 0;
    int yellow_arcs = 0;
    int green_green = 0;   // same-colour pairs at v
    int yellow_yellow = 0;

    int bad_pairs() const { return green_green + yellow_yellow; }
};

struct BadPairReport {
    std::vector<VertexPairStats> per_vertex; // support vertices, sorted
    std::vector<VertexId> bad_vertices;      // vertices with a same-colour pair
    std::vector<TaggedEdge> interesting;
    int total_bad_pairs = 0;

    const VertexPairStats* stats(VertexId v) const;

    // One row per support vertex "vertex,green,yellow,yellow_yellow,
    // green_green" plus a summary row "total,<bad pairs>,<interesting
    // edges>,<bad vertices>".
    std::string to_csv() const;
};

// Counts the same-colour pairs of psi at every vertex and checks the
// structural limits above; throws LimitViolationError when any is
// exceeded.
BadPairReport bad_pair_report(const ColoredDifference& h, const Pairing& psi,
                              std::span<const TaggedEdge> interesting);

// One trajectory state checked against the pairing-count bounds.
struct RatioCheckRow {
    int bad_pairs = 0;
    uint64_t n_state = 0;    // prod_v count_vertex_pairings(g_v, y_v)
    uint64_t n_balanced = 0; // prod_v theta_v!
    bool within_reported = false; // n_state <= d^b * n_balanced
    bool within_limit = false;    // n_state <= d^14 * n_balanced
};

struct RatioCheckReport {
    std::vector<RatioCheckRow> rows;
    bool all_pass = false;
};

// Verifies, for each (coloured difference, report) state, that the
// imbalanced pairing count exceeds the balanced one by at most a
// factor d per bad pair, and by at most d^14 overall.  Products past
// the cap throw TooLargeError; a bound past 64 bits counts as
// satisfied since n_state itself fits.
RatioCheckReport check_pairing_ratio(
    std::span<const std::pair<ColoredDifference, BadPairReport>> states, int d,
    uint64_t cap = default_pairing_cap);

} // namespace regraph
