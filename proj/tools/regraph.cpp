#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regraph/chain.hpp"
#include "regraph/encoding.hpp"
#include "regraph/graph.hpp"
#include "regraph/mixing.hpp"
#include "regraph/pairing.hpp"
#include "regraph/scenario.hpp"
#include "regraph/state_space.hpp"
#include "regraph/transition_matrix.hpp"

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw regraph::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw regraph::Error("cannot open " + path + " for writing");
    out << text;
}

// eps must be a usage-level error when outside (0,1), so it is
// checked during parsing.
const CLI::Validator eps_range(
    [](std::string& s) -> std::string {
        try {
            size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos == s.size() && v > 0.0 && v < 1.0)
                return {};
        } catch (...) {
        }
        return "eps must lie in (0,1), got '" + s + "'";
    },
    "in (0,1)", "EPS");

std::string edge_str(const regraph::Edge& e) {
    return std::to_string(e.u) + "," + std::to_string(e.v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"switch-chain sampling and mixing analysis for regular graphs"};
    app.require_subcommand(1);
    int rc = 0;

    // sample: independent chains, one record per chain.
    int sa_n = 0, sa_d = 0;
    uint64_t sa_steps = 0, sa_seed = 0, sa_count = 1, sa_burnin = 0;
    std::string sa_out;
    auto* sample = app.add_subcommand("sample", "sample regular graphs with the switch chain");
    sample->add_option("--n", sa_n, "vertex count")->required();
    sample->add_option("--d", sa_d, "degree")->required();
    sample->add_option("--steps", sa_steps, "chain steps per sample")->required();
    sample->add_option("--seed", sa_seed, "master seed");
    sample->add_option("--count", sa_count, "number of samples");
    sample->add_option("--burnin", sa_burnin, "extra steps before each sample");
    sample->add_option("--out", sa_out, "output file (default stdout)");
    sample->callback([&] {
        regraph::RegularGraph start = regraph::circulant_start(sa_n, sa_d);
        std::string text;
        for (uint64_t i = 0; i < sa_count; ++i) {
            regraph::RegularGraph g =
                regraph::run(start, sa_burnin + sa_steps, regraph::derive_seed(sa_seed, i));
            if (i > 0)
                text += "\n";
            text += regraph::serialize_graph(g);
        }
        write_output(sa_out, text);
    });

    // enumerate: state count, optionally the full listing.
    int en_n = 0, en_d = 0;
    uint64_t en_cap = regraph::default_state_cap;
    std::string en_out;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all (n,d) regular graphs");
    enumerate->add_option("--n", en_n, "vertex count")->required();
    enumerate->add_option("--d", en_d, "degree")->required();
    enumerate->add_option("--cap", en_cap, "state cap");
    enumerate->add_option("--out", en_out, "write the states to a file");
    enumerate->callback([&] {
        regraph::StateSpace space = regraph::enumerate_state_space(en_n, en_d, en_cap);
        std::cout << space.size() << "\n";
        if (!en_out.empty()) {
            std::string text;
            for (size_t i = 0; i < space.size(); ++i) {
                if (i > 0)
                    text += "\n";
                text += regraph::serialize_graph(space.state(i));
            }
            write_output(en_out, text);
        }
    });

    // mix: exact tau/gap/curve or empirical curve.
    int mx_n = 0, mx_d = 0;
    double mx_eps = 0.25;
    std::string mx_method = "exact", mx_out;
    uint64_t mx_chains = 100000, mx_seed = 0, mx_cap = regraph::default_matrix_cap;
    uint64_t mx_tmax = 200, mx_stride = 0;
    auto* mix = app.add_subcommand("mix", "mixing diagnostics for the switch chain");
    mix->add_option("--n", mx_n, "vertex count")->required();
    mix->add_option("--d", mx_d, "degree")->required();
    mix->add_option("--eps", mx_eps, "accuracy in (0,1)")->check(eps_range);
    mix->add_option("--method", mx_method, "exact or empirical")
        ->check(CLI::IsMember({"exact", "empirical"}));
    mix->add_option("--chains", mx_chains, "chains for the empirical method");
    mix->add_option("--seed", mx_seed, "master seed for the empirical method");
    mix->add_option("--t-max", mx_tmax, "largest t on the empirical curve");
    mix->add_option("--stride", mx_stride, "empirical grid stride (0 = auto)");
    mix->add_option("--cap", mx_cap, "state cap");
    mix->add_option("--out", mx_out, "write the TV curve CSV here");
    mix->callback([&] {
        regraph::StateSpace space = regraph::enumerate_state_space(mx_n, mx_d, mx_cap);
        if (mx_method == "exact") {
            regraph::TransitionMatrix tm =
                regraph::build_transition_matrix(space.states(), mx_cap);
            uint64_t tau = regraph::exact_mixing_time(tm, mx_eps);
            std::cout << "tau," << tau << "\n";
            std::cout << "spectral_gap," << fmt(regraph::spectral_gap(tm)) << "\n";
            if (!mx_out.empty()) {
                std::vector<double> curve = regraph::exact_tv_curve(tm, tau);
                std::string text = "t,max_tv\n";
                for (size_t t = 0; t < curve.size(); ++t)
                    text += std::to_string(t) + "," + fmt(curve[t]) + "\n";
                write_output(mx_out, text);
            }
        } else {
            uint64_t stride = mx_stride ? mx_stride : std::max<uint64_t>(1, mx_tmax / 25);
            std::vector<uint64_t> grid;
            for (uint64_t t = 0; t < mx_tmax; t += stride)
                grid.push_back(t);
            grid.push_back(mx_tmax);
            std::vector<double> curve =
                regraph::empirical_tv_curve(mx_n, mx_d, grid, mx_chains, mx_seed, &space);
            std::string text = "t,tv\n";
            for (size_t i = 0; i < grid.size(); ++i)
                text += std::to_string(grid[i]) + "," + fmt(curve[i]) + "\n";
            write_output(mx_out, text);
        }
    });

    // analyze: encoding and pairing diagnostics for a (G, G', Z) triple.
    std::string an_g, an_gp, an_z, an_pairings = "count";
    uint64_t an_cap = regraph::default_pairing_cap;
    auto* analyze = app.add_subcommand("analyze", "difference, labels and pairings of G, G', Z");
    analyze->add_option("--g", an_g, "edge-list file for G")->required();
    analyze->add_option("--gprime", an_gp, "edge-list file for G'")->required();
    analyze->add_option("--z", an_z, "edge-list file for Z")->required();
    analyze->add_option("--pairings", an_pairings, "count or all")
        ->check(CLI::IsMember({"count", "all"}));
    analyze->add_option("--cap", an_cap, "pairing enumeration cap");
    analyze->callback([&] {
        regraph::RegularGraph g = regraph::parse_graph(read_file(an_g));
        regraph::RegularGraph gp = regraph::parse_graph(read_file(an_gp));
        regraph::RegularGraph z = regraph::parse_graph(read_file(an_z));
        regraph::EdgeLabeling labels = regraph::encode(g, gp, z);
        std::vector<regraph::Edge> h = regraph::symmetric_difference(g, gp);
        regraph::ColoredDifference colored = regraph::color_difference(h, z);
        std::cout << "h_edge_count," << h.size() << "\n";
        for (size_t i = 0; i < h.size(); ++i)
            std::cout << "h_edge," << edge_str(h[i]) << ","
                      << (colored.color(i) == regraph::EdgeColor::green ? "green" : "yellow")
                      << "\n";
        for (const auto& [e, l] : labels.labels())
            std::cout << "label," << edge_str(e) << "," << l << ","
                      << (l == -1 || l == 2 ? "bad" : "ok") << "\n";
        bool balanced = colored.balanced();
        if (balanced) {
            regraph::PairingEnumerator alt(colored, regraph::PairingMode::alternating,
                                           an_cap);
            std::cout << "alternating_pairings," << alt.count() << "\n";
        } else {
            std::cout << "alternating_pairings,unbalanced\n";
        }
        regraph::PairingEnumerator all(colored, regraph::PairingMode::allow_bad, an_cap);
        std::cout << "allow_bad_pairings," << all.count() << "\n";
        if (an_pairings == "all") {
            regraph::Pairing psi;
            size_t idx = 0;
            while (all.next(psi)) {
                std::cout << "pairing," << idx++ << "\n";
                std::cout << regraph::bad_pair_report(colored, psi, {}).to_csv();
            }
        }
    });

    // bounds: the four formula values.
    int bo_n = 0, bo_d = 0;
    double bo_eps = 0.25;
    uint64_t bo_cap = regraph::default_state_cap;
    auto* bounds = app.add_subcommand("bounds", "mixing-time bound formulas");
    bounds->add_option("--n", bo_n, "vertex count")->required();
    bounds->add_option("--d", bo_d, "degree")->required();
    bounds->add_option("--eps", bo_eps, "accuracy in (0,1)")->check(eps_range);
    bounds->add_option("--cap", bo_cap, "state cap for the flow bound");
    bounds->callback([&] {
        std::optional<double> omega;
        bool enumerable = true;
        try {
            omega = static_cast<double>(
                regraph::enumerate_state_space(bo_n, bo_d, bo_cap).size());
        } catch (const regraph::StateSpaceTooLargeError&) {
            enumerable = false;
        }
        regraph::BoundsReport r = regraph::bounds_report(bo_n, bo_d, bo_eps, omega);
        std::cout << "theorem_bound," << fmt(r.theorem_bound) << "\n";
        std::cout << "old_bound," << fmt(r.old_bound) << "\n";
        std::cout << "ratio," << fmt(r.ratio) << "\n";
        std::cout << "load_bound," << fmt(r.load_bound) << "\n";
        if (r.flow_bound)
            std::cout << "flow_bound," << fmt(*r.flow_bound) << "\n";
        else if (!enumerable)
            std::cout << "flow_bound,"
                      << fmt(2.0 * std::pow(bo_d, 20) * std::pow(bo_n, 5)) << "/|Omega|\n";
    });

    // scenario: scripted trajectory, checkpoint table, pass/fail exit.
    std::string sc_out;
    auto* scen = app.add_subcommand("scenario", "replay the 14-bad-pair trajectory");
    scen->add_option("--out", sc_out, "also write the CSV here");
    scen->callback([&] {
        auto checkpoints = regraph::scenario::play(regraph::scenario::build_scenario());
        auto verify = regraph::scenario::verify_checkpoints(checkpoints);
        std::cout << verify.to_csv();
        if (!sc_out.empty())
            write_output(sc_out, verify.to_csv());
        if (!verify.all_pass)
            rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const regraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
