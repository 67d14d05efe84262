// Acceptance suite: one pass/fail line per criterion, every threshold pinned
// here in code. Usage: acceptance_tests [path-to-subdiv-cli]
// (the CLI path is needed by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "subdiv/coloring.hpp"
#include "subdiv/finder.hpp"
#include "subdiv/generators.hpp"
#include "subdiv/io.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/secant.hpp"

namespace fs = std::filesystem;
using namespace subdiv;

namespace {

struct CheckFailure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure{what};
}

std::string cli_path;  // set from argv

UnderlyingGraph random_graph(int n, double density, std::uint64_t seed) {
    SplitMix64 rng(seed);
    UnderlyingGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(density)) g.add_edge(u, v);
    return g;
}

Digraph random_digraph(int n, double density, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.chance(density)) d.add_arc(u, v);
    return d;
}

std::vector<Vertex> shuffled_vertices(int n, SplitMix64& rng) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(i + 1)]);
    return order;
}

// Every even-length composition of n, both signs; optionally the directed cycle.
std::vector<CyclePattern> patterns_of_order(int n, bool include_directed) {
    std::vector<CyclePattern> out;
    if (include_directed && n >= 2) out.emplace_back(Sign::plus, std::vector<int>{n});
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> blocks;
        int run = 1;
        for (int bit = 0; bit < n - 1; ++bit) {
            if (mask & (1 << bit)) {
                blocks.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        blocks.push_back(run);
        if (blocks.size() < 2 || blocks.size() % 2 != 0) continue;
        out.emplace_back(Sign::plus, blocks);
        out.emplace_back(Sign::minus, blocks);
    }
    return out;
}

// --- criterion 1: Lemma suite -------------------------------------------

void criterion1() {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        int k = 1 + static_cast<int>(seed % 4);
        int m = 5 + static_cast<int>(seed % 36);  // <= 40
        double density = 0.2 + 0.1 * (seed % 9);
        auto [g, n] = banded_graph(m, k, density, Seed{seed});
        Coloring c = secant_free_coloring(g, n, k);
        require(is_proper(g, c), "banded coloring improper at seed " + std::to_string(seed));
        require(c.palette <= 2 * k + 1,
                "banded coloring used " + std::to_string(c.palette) + " > 2k+1 colors");
    }
    UnderlyingGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    Coloring tight = secant_free_coloring(k3, Enumeration::natural(3), 1);
    require(is_proper(k3, tight), "K3 coloring improper");
    require(tight.palette == 3, "K3 with k=1 must use exactly 3 colors");
}

// --- criterion 2: Corollary suite ----------------------------------------

void criterion2() {
    for (int k = 1; k <= 3; ++k) {
        int m = 2 * k + 2;
        UnderlyingGraph g(m);
        for (Vertex u = 0; u < m; ++u)
            for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
        SplitMix64 rng(1000 + k);
        for (int rep = 0; rep < 100; ++rep) {
            Enumeration n(shuffled_vertices(m, rng));
            require(find_k_secant(g, n, k).has_value(),
                    "K_" + std::to_string(m) + " missing a " + std::to_string(k) + "-secant pair");
        }
    }
    // converse: wherever the scan finds nothing, exact chi stays under 2k+2
    int none_cases = 0;
    for (std::uint64_t seed = 1; seed <= 180; ++seed) {
        int k = 1 + static_cast<int>(seed % 3);
        UnderlyingGraph g = seed % 2 == 0
                                ? random_graph(4 + seed % 9, 0.45, seed * 7)
                                : banded_graph(4 + seed % 9, k, 0.8, Seed{seed}).first;
        Enumeration n = Enumeration::natural(g.vertex_count());
        if (find_k_secant(g, n, k).has_value()) continue;
        ++none_cases;
        require(chromatic_number(g).chi <= 2 * k + 1,
                "secant-free instance with chi > 2k+1 at seed " + std::to_string(seed));
    }
    require(none_cases >= 20, "too few secant-free instances to test the converse");
}

// --- criterion 3: product coloring ----------------------------------------

void criterion3() {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int m = 2 + static_cast<int>(seed % 14);  // <= 15
        UnderlyingGraph g = random_graph(m, 0.3 + 0.1 * (seed % 6), seed);
        SplitMix64 rng(seed * 31);
        UnderlyingGraph e1(m), e2(m);
        for (auto [u, v] : g.edges()) (rng.next() & 1 ? e1 : e2).add_edge(u, v);
        ChromaticResult c1 = chromatic_number(e1);
        ChromaticResult c2 = chromatic_number(e2);
        Coloring gamma = product_coloring(g, e1, e2, c1.witness, c2.witness);
        require(is_proper(g, gamma), "product coloring improper at seed " + std::to_string(seed));
        require(gamma.palette <= c1.chi * c2.chi, "product palette exceeds k1*k2");
    }
}

// --- criterion 4: circuit theorem suite ------------------------------------

void criterion4() {
    int runs = 0;
    for (int n = 3; n <= 6; ++n) {
        auto [d, w] = circulant_tournament(2 * n + 1);
        for (const CyclePattern& c : patterns_of_order(n, true)) {
            SubdivisionWitness found = find_in_hamiltonian(d, w, c);
            require(verify_subdivision(d, c, found),
                    "unverified circuit witness for " + c.str() + " at n=" + std::to_string(n));
            ++runs;
        }
    }
    require(runs >= 2 * (2 + 3 + 7 + 16), "pattern enumeration came up short");
}

// --- criterion 5: path theorem suite ----------------------------------------

void criterion5() {
    for (int n = 2; n <= 3; ++n) {
        auto [d, w] = transitive_tournament(12 * n - 5);
        require(chromatic_number(underlying(d)).chi == 12 * n - 5, "transitive chi mismatch");
        for (const CyclePattern& c : patterns_of_order(n, false)) {
            PathSearchResult r = find_with_hamiltonian_path(d, w, c);
            require(verify_subdivision(d, c, r.witness),
                    "unverified path witness for " + c.str());
            require(r.selection.tag == CaseSelection::Tag::both_forward,
                    "transitive hosts must take the all-forward case");
        }
    }
    int case1 = 0;
    CyclePattern c11 = CyclePattern::parse("C+(1,1)");
    for (std::uint64_t seed = 1; seed <= 200 && case1 < 20; ++seed) {
        auto [d, w] = random_tournament(19, Seed{seed});
        PathSearchResult r = find_with_hamiltonian_path(d, w, c11);
        require(verify_subdivision(d, c11, r.witness),
                "unverified random-tournament witness at seed " + std::to_string(seed));
        if (r.selection.tag == CaseSelection::Tag::backward_arc) ++case1;
    }
    require(case1 >= 20, "fewer than 20 backward-arc cases in 200 seeds");
}

// --- criterion 6: partition semantics ----------------------------------------

void criterion6() {
    for (int n = 2; n <= 3; ++n) {
        auto [d, w] = transitive_tournament(12 * n - 5);
        SegmentPartition parts =
            partition_segments(d, w, {2 * n}, PartitionMode::stop_below_target);
        UnderlyingGraph g = underlying(d);
        for (size_t s = 0; s < parts.segments.size(); ++s) {
            const Segment& seg = parts.segments[s];
            if (s + 1 < parts.segments.size())
                require(static_cast<int>(seg.vertices.size()) == 2 * n - 1,
                        "non-final segment size differs from 2n-1");
            require(oracle::chromatic_bruteforce(induced_subgraph(g, seg.vertices)) ==
                        seg.achieved_chi,
                    "oracle disagrees with recorded segment chi");
        }
    }
    auto [d30, w30] = transitive_tournament(30);
    UnderlyingGraph g30 = underlying(d30);
    for (const std::vector<int>& blocks :
         {std::vector<int>{1, 2}, std::vector<int>{2, 1}, std::vector<int>{1, 1, 1, 1}}) {
        std::vector<int> targets;
        for (size_t i = 0; i < blocks.size(); ++i)
            targets.push_back(i % 2 == 0 ? blocks[i] - 1 : 2 * blocks[i] + 2);
        SegmentPartition parts =
            partition_segments(d30, w30, targets, PartitionMode::reach_target);
        for (size_t s = 0; s < parts.segments.size(); ++s) {
            require(parts.segments[s].achieved_chi == targets[s],
                    "reach_target achieved chi differs from its target");
            require(oracle::chromatic_bruteforce(
                        induced_subgraph(g30, parts.segments[s].vertices)) == targets[s],
                    "oracle disagrees with reach_target chi");
        }
    }
}

// --- criterion 7: oracle equivalence ------------------------------------------

void criterion7() {
    int finder_runs = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        int m = 5 + static_cast<int>(seed % 6);  // <= 10
        double density = 0.45 + 0.08 * (seed % 6);
        Digraph d = random_digraph(m, density, seed * 13);
        UnderlyingGraph g = underlying(d);
        int exact = chromatic_number(g).chi;
        require(oracle::chromatic_bruteforce(g) == exact,
                "solver and oracle disagree at seed " + std::to_string(seed));
        if (exact < 4) continue;
        auto circuit = oracle::find_hamiltonian(d, WalkKind::circuit);
        if (!circuit) continue;
        CyclePattern c = CyclePattern::parse("C+(1,1)");
        SubdivisionWitness w = find_in_hamiltonian(d, *circuit, c);
        require(verify_subdivision(d, c, w), "finder witness failed verification");
        require(oracle::contains_subdivision(d, c).has_value(),
                "oracle cannot reproduce a finder result");
        ++finder_runs;
    }
    require(finder_runs >= 30,
            "too few instances exercised the finder (" + std::to_string(finder_runs) + ")");
}

// --- criterion 8: determinism ---------------------------------------------------

void criterion8() {
    require(!cli_path.empty(), "pass the subdiv CLI path as argv[1]");
    fs::path dir = fs::temp_directory_path() / "subdiv_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto at = [&](const std::string& name) { return (dir / name).string(); };
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };

    struct Cmd {
        std::string name;
        std::string args;                  // {d} placeholder for the temp dir
        std::vector<std::string> outputs;  // files expected byte-identical
    };
    std::vector<Cmd> commands = {
        {"generate",
         "generate random-tournament -m 19 --seed 41 --out {d}/t.digraph --sidecar {d}/t.ham",
         {"t.digraph", "t.ham"}},
        {"find-subdivision",
         "find-subdivision --graph {d}/t.digraph --ham {d}/t.ham --mode path "
         "--pattern 'C+(1,1)' --witness {d}/t.wit",
         {"t.wit"}},
        {"chromatic", "chromatic --graph {d}/t.digraph --witness {d}/t.col", {"t.col"}},
        {"explore-conjecture", "explore-conjecture -k 1 --instances 30 --seed 6", {}},
        {"oracle",
         "oracle subdivision --graph {d}/t.digraph --pattern 'C+(1,1)' --limit-vertices 19 --witness {d}/o.wit",
         {"o.wit"}},
    };
    auto fill = [&](std::string text) {
        for (std::string::size_type p; (p = text.find("{d}")) != std::string::npos;)
            text.replace(p, 3, dir.string());
        return text;
    };
    // identical invocation twice; snapshot the outputs in between
    for (const Cmd& cmd : commands) {
        std::string first_stdout;
        std::vector<std::string> first_outputs;
        for (int run = 1; run <= 2; ++run) {
            std::string stdout_file = at("stdout_" + cmd.name);
            std::string invocation = quoted(cli_path) + " " + fill(cmd.args) + " > " +
                                     quoted(stdout_file) + " 2> /dev/null";
            require(std::system(invocation.c_str()) == 0,
                    cmd.name + " run " + std::to_string(run) + " failed");
            if (run == 1) {
                first_stdout = read_file(stdout_file);
                for (const std::string& out : cmd.outputs)
                    first_outputs.push_back(read_file(at(out)));
            } else {
                require(first_stdout == read_file(stdout_file),
                        cmd.name + " reports differ between reruns");
                for (size_t i = 0; i < cmd.outputs.size(); ++i)
                    require(first_outputs[i] == read_file(at(cmd.outputs[i])),
                            cmd.name + " wrote differing " + cmd.outputs[i]);
            }
        }
    }
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    std::vector<Criterion> criteria = {
        {1, "secant-free coloring proper and within 2k+1 on 500 banded instances", 60, criterion1},
        {2, "k-secant pairs forced on K_{2k+2}; none found implies chi <= 2k+1", 60, criterion2},
        {3, "product coloring proper within k1*k2 on 200 edge bipartitions", 60, criterion3},
        {4, "circuit theorem witnesses verified for every pattern, n in 3..6", 120, criterion4},
        {5, "path theorem witnesses verified, both cases exercised", 120, criterion5},
        {6, "partition chi values match the brute-force oracle exactly", 60, criterion6},
        {7, "solver/oracle equivalence and witness coexistence on 300 digraphs", 60, criterion7},
        {8, "byte-identical reports and witness files across reruns", 60, criterion8},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const CheckFailure& f) {
            verdict = "FAIL";
            detail = f.what;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "PASS" && secs > c.budget_seconds) {
            verdict = "FAIL";
            detail = "exceeded the " + std::to_string(c.budget_seconds) + "s runtime target";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", verdict.c_str(), c.id, c.title.c_str(),
                    secs, detail.empty() ? "" : " -- ", detail.c_str());
    }
    return failures;
}
