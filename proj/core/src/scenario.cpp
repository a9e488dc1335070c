#include "regraph/scenario.hpp"

#include <algorithm>
#include <map>

namespace regraph::scenario {

namespace {

const std::map<std::string, VertexId>& name_table() {
    static const std::map<std::string, VertexId> table = {
        {"x0", 1},  {"x1", 2},  {"x2", 3},  {"x3", 4},  {"x4", 5},  {"x5", 6},
        {"x6", 7},  {"x7", 8},  {"x8", 9},  {"x9", 10}, {"x10", 11}, {"x11", 12},
        {"a", 13},  {"u1", 14}, {"u2", 15}, {"w1", 16}, {"w2", 17},  {"v1", 18},
        {"v2", 19}, {"z1", 20}, {"z2", 21},
    };
    return table;
}

Edge E(const char* a, const char* b) { return Edge(vertex(a), vertex(b)); }

// The five closed walks: one long circuit and four 4-circuits.  Every
// circuit alternates in the initial colouring; the second walk starts
// on a yellow edge, the others on green, which places the special
// edges on the right side of Z for the script.
const std::array<std::vector<const char*>, 5>& walks() {
    static const std::array<std::vector<const char*>, 5> w = {{
        {"x0", "a", "x5", "x4", "x3", "x2", "x1", "x0", "x11", "x10", "x9", "x8", "x7",
         "x6"},
        {"x0", "x9", "u1", "u2"},
        {"x0", "w1", "w2", "x3"},
        {"x0", "x7", "v1", "v2"},
        {"x5", "x6", "z1", "z2"},
    }};
    return w;
}

constexpr std::array<bool, 5> starts_green = {true, false, true, true, true};

} // namespace

VertexId vertex(const std::string& name) {
    const auto& t = name_table();
    auto it = t.find(name);
    if (it == t.end())
        throw Error("unknown vertex name '" + name + "'");
    return it->second;
}

std::string vertex_name(VertexId id) {
    for (const auto& [name, v] : name_table())
        if (v == id)
            return name;
    throw InvalidVertexError("no name for vertex " + std::to_string(id));
}

Edge ScenarioState::extra_edge() { return E("x0", "x5"); }

ScenarioState ScenarioState::build() {
    ScenarioState s;
    std::vector<std::pair<Edge, bool>> edges; // (edge, in Z)
    std::map<VertexId, std::vector<ArcPair>> pairing;
    for (size_t c = 0; c < walks().size(); ++c) {
        const auto& walk = walks()[c];
        size_t k = walk.size();
        std::vector<Edge> circuit;
        for (size_t i = 0; i < k; ++i) {
            Edge e(vertex(walk[i]), vertex(walk[(i + 1) % k]));
            circuit.push_back(e);
            edges.emplace_back(e, i % 2 == 0 ? starts_green[c] : !starts_green[c]);
        }
        // Consecutive circuit edges are paired at their shared vertex.
        for (size_t i = 0; i < k; ++i)
            pairing[vertex(walk[i])].emplace_back(circuit[(i + k - 1) % k], circuit[i]);
        std::sort(circuit.begin(), circuit.end());
        s.circuit_edges_[c] = std::move(circuit);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [e, in] : edges) {
        s.h_edges_.push_back(e);
        s.in_z_.push_back(in);
    }
    s.initial_in_z_ = s.in_z_;
    for (auto& [v, pairs] : pairing)
        std::sort(pairs.begin(), pairs.end());
    s.pairing_.at = std::move(pairing);
    s.specials_ = {
        {E("x5", "x6"), InterestingTag::shortcut, 4},
        {E("x0", "x3"), InterestingTag::odd_chord, 2},
        {E("x0", "x7"), InterestingTag::odd_chord, 3},
        {E("x0", "x9"), InterestingTag::odd_chord, 1},
        {extra_edge(), InterestingTag::odd_chord, -1},
    };
    return s;
}

ScenarioState build_scenario() { return ScenarioState::build(); }

bool ScenarioState::in_z(const Edge& e) const {
    if (e == extra_edge())
        return extra_in_z_;
    auto it = std::lower_bound(h_edges_.begin(), h_edges_.end(), e);
    if (it == h_edges_.end() || *it != e)
        throw Error("edge is not modeled by the scenario");
    return in_z_[static_cast<size_t>(it - h_edges_.begin())];
}

ColoredDifference ScenarioState::colored() const {
    std::vector<EdgeColor> colors;
    colors.reserve(in_z_.size());
    for (bool in : in_z_)
        colors.push_back(in ? EdgeColor::green : EdgeColor::yellow);
    return ColoredDifference(n(), h_edges_, std::move(colors));
}

std::vector<TaggedEdge> ScenarioState::interesting() const {
    std::vector<TaggedEdge> out;
    for (const auto& s : specials_) {
        bool now, initial;
        if (s.circuit < 0) {
            now = extra_in_z_;
            initial = true;
        } else {
            size_t idx = static_cast<size_t>(
                std::lower_bound(h_edges_.begin(), h_edges_.end(), s.edge) -
                h_edges_.begin());
            now = in_z_[idx];
            initial = initial_in_z_[idx];
        }
        bool circuit_open = s.circuit < 0 || !circuit_switched_[static_cast<size_t>(s.circuit)];
        if (now != initial && circuit_open)
            out.push_back({s.edge, s.tag});
    }
    std::sort(out.begin(), out.end());
    return out;
}

BadPairReport ScenarioState::report() const {
    return bad_pair_report(colored(), pairing_, interesting());
}

void ScenarioState::apply(const ScenarioMove& m) {
    auto member = [this, &m](const Edge& e) -> bool {
        if (e == extra_edge())
            return extra_in_z_;
        auto it = std::lower_bound(h_edges_.begin(), h_edges_.end(), e);
        if (it == h_edges_.end() || *it != e)
            throw ScriptInvalidError(m.label + ": move touches an unmodeled edge {" +
                                     std::to_string(e.u) + "," + std::to_string(e.v) +
                                     "}");
        return in_z_[static_cast<size_t>(it - h_edges_.begin())];
    };
    auto flip = [this](const Edge& e) {
        if (e == extra_edge()) {
            extra_in_z_ = !extra_in_z_;
            return;
        }
        auto it = std::lower_bound(h_edges_.begin(), h_edges_.end(), e);
        size_t idx = static_cast<size_t>(it - h_edges_.begin());
        in_z_[idx] = !in_z_[idx];
    };
    for (const Edge& e : {m.move.e1, m.move.e2})
        if (!member(e))
            throw ScriptInvalidError(m.label + ": removes {" + std::to_string(e.u) +
                                     "," + std::to_string(e.v) + "} which is not in Z");
    for (const Edge& e : {m.move.f1, m.move.f2})
        if (member(e))
            throw ScriptInvalidError(m.label + ": inserts {" + std::to_string(e.u) +
                                     "," + std::to_string(e.v) + "} which is already in Z");
    for (const Edge& e : {m.move.e1, m.move.e2, m.move.f1, m.move.f2})
        flip(e);
    // A switch whose four edges are exactly one 4-circuit closes that
    // circuit; its special edge stops being interesting.
    std::vector<Edge> four = {m.move.e1, m.move.e2, m.move.f1, m.move.f2};
    std::sort(four.begin(), four.end());
    for (size_t c = 0; c < circuit_edges_.size(); ++c)
        if (circuit_edges_[c].size() == 4 && circuit_edges_[c] == four)
            circuit_switched_[c] = true;
}

std::vector<ScenarioMove> script() {
    return {
        {SwitchMove(E("x5", "x6"), E("x0", "a"), E("a", "x5"), E("x6", "x0")),
         "shortcut-switch", true},
        {SwitchMove(E("x0", "x1"), E("x2", "x3"), E("x0", "x3"), E("x1", "x2")),
         "phase1", true},
        {SwitchMove(E("x0", "x7"), E("x8", "x9"), E("x0", "x9"), E("x7", "x8")),
         "phase2-step1", true},
        {SwitchMove(E("x0", "x5"), E("x6", "x7"), E("x5", "x6"), E("x0", "x7")),
         "phase2-step2", true},
        {SwitchMove(E("x0", "x3"), E("x4", "x5"), E("x0", "x5"), E("x3", "x4")),
         "phase2-step3", true},
        {SwitchMove(E("x0", "x9"), E("x10", "x11"), E("x11", "x0"), E("x9", "x10")),
         "phase3", true},
        {SwitchMove(E("x9", "u1"), E("u2", "x0"), E("x0", "x9"), E("u1", "u2")),
         "final-1", false},
        {SwitchMove(E("x0", "w1"), E("w2", "x3"), E("x0", "x3"), E("w1", "w2")),
         "final-2", false},
        {SwitchMove(E("x0", "x7"), E("v1", "v2"), E("x7", "v1"), E("v2", "x0")),
         "final-3", false},
        {SwitchMove(E("x5", "x6"), E("z1", "z2"), E("z2", "x5"), E("x6", "z1")),
         "final-4", false},
    };
}

std::vector<Checkpoint> play(ScenarioState state, const std::vector<ScenarioMove>& moves) {
    std::vector<Checkpoint> out;
    for (const auto& m : moves) {
        state.apply(m);
        BadPairReport report;
        try {
            report = state.report();
        } catch (const LimitViolationError& e) {
            throw ScriptInvalidError(m.label + ": " + e.what());
        }
        if (m.checkpoint)
            out.push_back({m.label, state.colored(), state.interesting(), report});
    }
    return out;
}

std::string VerifyReport::to_csv() const {
    std::string out = "label,interesting,bad_vertices,bad_pairs,ratio_ok\n";
    for (const auto& r : rows)
        out += r.label + "," + std::to_string(r.interesting) + "," +
               std::to_string(r.bad_vertices) + "," + std::to_string(r.bad_pairs) + "," +
               (r.ratio_ok ? "true" : "false") + "\n";
    return out;
}

VerifyReport verify_checkpoints(std::span<const Checkpoint> checkpoints) {
    static constexpr std::array<std::array<int, 3>, 6> expected = {{
        {1, 2, 4}, {2, 4, 8}, {4, 6, 14}, {3, 4, 8}, {1, 2, 4}, {0, 0, 0},
    }};
    std::vector<std::pair<ColoredDifference, BadPairReport>> states;
    states.reserve(checkpoints.size());
    for (const auto& cp : checkpoints)
        states.emplace_back(cp.colored, cp.report);
    RatioCheckReport ratio = check_pairing_ratio(states, 5);
    VerifyReport out;
    out.all_pass = checkpoints.size() == expected.size();
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        const auto& cp = checkpoints[i];
        VerifyRow row;
        row.label = cp.label;
        row.interesting = cp.interesting.size();
        row.bad_vertices = cp.report.bad_vertices.size();
        row.bad_pairs = cp.report.total_bad_pairs;
        bool ok = i < expected.size() &&
                  row.interesting == static_cast<size_t>(expected[i][0]) &&
                  row.bad_vertices == static_cast<size_t>(expected[i][1]) &&
                  row.bad_pairs == expected[i][2];
        ok = ok && row.interesting <= static_cast<size_t>(max_interesting_edges) &&
             row.bad_vertices <= static_cast<size_t>(max_bad_vertices) &&
             row.bad_pairs <= max_bad_pairs;
        if (i == 2) { // the peak carries two bad pairs of each colour at x0
            const VertexPairStats* s = cp.report.stats(vertex("x0"));
            ok = ok && s && s->green_green == 2 && s->yellow_yellow == 2;
        }
        row.counts_ok = ok;
        row.ratio_ok = ratio.rows[i].within_reported && ratio.rows[i].within_limit;
        out.all_pass = out.all_pass && row.counts_ok && row.ratio_ok;
        out.rows.push_back(row);
    }
    return out;
}

} // namespace regraph::scenario
