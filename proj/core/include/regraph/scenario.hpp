#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "regraph/pairing.hpp"

namespace regraph::scenario {

// The worked trajectory uses 21 named vertices: a long 14-edge
// circuit through x0..x11 and a, four 4-circuits through u1, u2, w1,
// w2, v1, v2, z1, z2, and one extra edge {x0, x5} that lies outside
// the difference but is switched in passing.
VertexId vertex(const std::string& name);
std::string vertex_name(VertexId id);

struct ScenarioMove {
    SwitchMove move;
    std::string label;
    bool checkpoint; // report after this move
};

// The difference H under a fixed pairing, with Z-membership tracked
// per edge as moves are applied.  Only H-edges and the extra edge are
// modeled; the ambient regular graphs never change elsewhere.
class ScenarioState {
public:
    static ScenarioState build();

    int n() const { return 21; }
    std::span<const Edge> h_edges() const { return h_edges_; }
    const Pairing& pairing() const { return pairing_; }

    bool in_z(const Edge& e) const;
    bool extra_edge_in_z() const { return extra_in_z_; }
    static Edge extra_edge();

    // Current colouring of H: green = in Z.
    ColoredDifference colored() const;

    // Specially tracked edges (the shortcut and the odd chords) whose
    // current membership differs from the initial one and whose
    // circuit has not been fully switched yet.
    std::vector<TaggedEdge> interesting() const;

    // Same-colour accounting for the current state under the fixed
    // pairing.
    BadPairReport report() const;

    // Applies one switch.  Throws ScriptInvalidError when the move
    // touches an unmodeled edge, removes an edge that is not in Z, or
    // inserts one that is.
    void apply(const ScenarioMove& m);

private:
    ScenarioState() = default;

    std::vector<Edge> h_edges_; // sorted
    std::vector<bool> in_z_;    // parallel to h_edges_
    std::vector<bool> initial_in_z_;
    bool extra_in_z_ = true;
    Pairing pairing_;

    struct Special {
        Edge edge;
        InterestingTag tag;
        int circuit; // index into circuit_edges_, -1 for the extra edge
    };
    std::vector<Special> specials_;
    std::array<std::vector<Edge>, 5> circuit_edges_; // sorted edge sets
    std::array<bool, 5> circuit_switched_ = {};
};

ScenarioState build_scenario();

// The scripted trajectory: the shortcut switch, one Phase-1 step,
// three Phase-2 steps, one Phase-3 step (checkpoints after each), and
// the four closing 4-circuit switches.
std::vector<ScenarioMove> script();

struct Checkpoint {
    std::string label;
    ColoredDifference colored;
    std::vector<TaggedEdge> interesting;
    BadPairReport report;
};

// Applies the moves in order, reporting at every checkpoint move.
// Every intermediate state is run through bad_pair_report, so a
// trajectory that breaks a structural limit or attempts an illegal
// switch throws ScriptInvalidError.
std::vector<Checkpoint> play(ScenarioState state,
                             const std::vector<ScenarioMove>& moves = script());

struct VerifyRow {
    std::string label;
    size_t interesting = 0;
    size_t bad_vertices = 0;
    int bad_pairs = 0;
    bool counts_ok = false;
    bool ratio_ok = false;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = false;

    // "label,interesting,bad_vertices,bad_pairs,ratio_ok" per row.
    std::string to_csv() const;
};

// Compares checkpoints against the expected table
//   (1,2,4) (2,4,8) (4,6,14) (3,4,8) (1,2,4) (0,0,0)
// for (interesting, bad vertices, bad pairs), requires two bad pairs
// of each colour at x0 at the 14-pair peak, and checks the pairing
// ratio bounds with d = 5 at every checkpoint.  Mismatches are
// reported, not thrown.
VerifyReport verify_checkpoints(std::span<const Checkpoint> checkpoints);

} // namespace regraph::scenario
