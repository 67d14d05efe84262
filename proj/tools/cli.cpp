#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "subdiv/coloring.hpp"
#include "subdiv/finder.hpp"
#include "subdiv/generators.hpp"
#include "subdiv/io.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/rng.hpp"
#include "subdiv/secant.hpp"

namespace subdiv::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kPrecondition = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

// One report per run: a single key=value line on stdout with a stable field
// order, plus a human summary (with timing) on stderr.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> digests;
    std::string human;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    void emit(std::ostream& out, std::ostream& err, const std::string& status,
              double elapsed_ms) const {
        out << "report command=" << command << " status=" << status;
        for (const auto& [k, v] : fields) out << ' ' << k << '=' << v;
        out << " inputs=";
        for (size_t i = 0; i < digests.size(); ++i) out << (i ? "," : "") << digests[i];
        out << '\n';
        err << command << ": " << status;
        if (!human.empty()) err << "; " << human;
        err << " (" << elapsed_ms << " ms)\n";
    }
};

Digraph load_digraph(const std::string& path, Report& report) {
    std::string bytes = read_file(path);
    report.digests.push_back(fnv1a_hex(bytes));
    Digraph d = parse_digraph_text(bytes);
    if (int digons = d.digon_count(); digons > 0)
        report.human += "input has " + std::to_string(digons) + " digon(s); ";
    return d;
}

std::string load_input(const std::string& path, Report& report) {
    std::string bytes = read_file(path);
    report.digests.push_back(fnv1a_hex(bytes));
    return bytes;
}

ChromaticBudget budget_from(long long flag_value) {
    ChromaticBudget b;
    if (flag_value > 0) {
        b.max_nodes = flag_value;
    } else if (const char* env = std::getenv("SUBDIV_BUDGET")) {
        char* end = nullptr;
        long long parsed = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) b.max_nodes = parsed;
    }
    return b;
}

std::string pattern_str(const CyclePattern& c) { return c.str(); }

struct CommandContext {
    Report report;
    int exit_code = kOk;
    std::string status = "ok";
};

// ---- generate ----------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    int size = 0;
    int band = 1;
    double density = 0.5;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
    std::string sidecar;
};

void run_generate(const GenerateArgs& a, CommandContext& ctx) {
    Report& rep = ctx.report;
    rep.add("kind", a.kind);
    rep.add("m", a.size);
    std::uint64_t seed = a.seed;
    bool seeded = a.kind == "random-tournament" || a.kind == "banded";
    if (seeded && !a.seed_given) {
        std::string material = a.kind + "/" + std::to_string(a.size) + "/" +
                               std::to_string(a.band) + "/" + std::to_string(a.density) + "/" +
                               a.out;
        seed = std::stoull(fnv1a_hex(material), nullptr, 16);
    }

    std::string digraph_text, sidecar_text, sidecar_default;
    if (a.kind == "circulant" || a.kind == "transitive" || a.kind == "random-tournament") {
        std::pair<Digraph, HamiltonianWitness> made =
            a.kind == "circulant"     ? circulant_tournament(a.size)
            : a.kind == "transitive"  ? transitive_tournament(a.size)
                                      : random_tournament(a.size, Seed{seed});
        digraph_text = serialize_digraph(made.first);
        sidecar_text = serialize_hamiltonian(made.second);
        sidecar_default = a.out + ".ham";
        rep.add("arcs", made.first.arc_count());
    } else {  // banded
        auto [g, n] = banded_graph(a.size, a.band, a.density, Seed{seed});
        // the digraph file is the universal container: orient each edge from
        // the earlier enumeration position to the later one
        Digraph d(g.vertex_count());
        for (auto [u, v] : g.edges()) d.add_arc(u, v);
        digraph_text = serialize_digraph(d);
        sidecar_text = serialize_enumeration(n);
        sidecar_default = a.out + ".enum";
        rep.add("k", a.band);
        rep.add("edges", g.edge_count());
    }
    std::string sidecar = a.sidecar.empty() ? sidecar_default : a.sidecar;
    write_file(a.out, digraph_text);
    write_file(sidecar, sidecar_text);
    rep.add("out", a.out);
    rep.add("sidecar", sidecar);
    if (seeded) rep.add("seed", std::to_string(seed));
}

// ---- chromatic ----------------------------------------------------------

void run_chromatic(const std::string& graph_path, long long budget_flag,
                   const std::string& witness_path, CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    ChromaticResult res = chromatic_number(underlying(d), budget_from(budget_flag));
    ctx.report.add("chi", res.chi);
    if (!witness_path.empty()) {
        write_file(witness_path, serialize_coloring(res.witness));
        ctx.report.add("witness", witness_path);
    }
    ctx.report.human += "chi=" + std::to_string(res.chi);
}

// ---- find-secant / color-secant-free -------------------------------------

Enumeration enumeration_for(const Digraph& d, const std::string& enum_path, Report& rep) {
    if (enum_path.empty()) return Enumeration::natural(d.vertex_count());
    return parse_enumeration_text(load_input(enum_path, rep));
}

void add_secant_fields(Report& rep, const SecantPair& p) {
    rep.add("k", p.k);
    rep.add("e1", std::to_string(p.first_edge.first + 1) + "," +
                      std::to_string(p.first_edge.second + 1));
    rep.add("e2", std::to_string(p.second_edge.first + 1) + "," +
                      std::to_string(p.second_edge.second + 1));
    rep.add("pos", std::to_string(p.i) + "," + std::to_string(p.r) + "," + std::to_string(p.j) +
                       "," + std::to_string(p.l));
}

void run_find_secant(const std::string& graph_path, const std::string& enum_path, int k,
                     const std::string& out_path, CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    Enumeration n = enumeration_for(d, enum_path, ctx.report);
    auto pair = find_k_secant(underlying(d), n, k);
    ctx.report.add("found", pair ? "yes" : "no");
    if (pair) {
        add_secant_fields(ctx.report, *pair);
        if (!out_path.empty()) {
            write_file(out_path, serialize_secant(*pair));
            ctx.report.add("out", out_path);
        }
    }
}

void run_color_secant_free(const std::string& graph_path, const std::string& enum_path, int k,
                           const std::string& witness_path, CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    Enumeration n = enumeration_for(d, enum_path, ctx.report);
    Coloring c = secant_free_coloring(underlying(d), n, k);
    ctx.report.add("colors", c.palette);
    ctx.report.add("bound", 2 * k + 1);
    if (!witness_path.empty()) {
        write_file(witness_path, serialize_coloring(c));
        ctx.report.add("witness", witness_path);
    }
}

// ---- find-subdivision -----------------------------------------------------

void run_find_subdivision(const std::string& graph_path, const std::string& ham_path,
                          const std::string& mode, const std::string& pattern_text,
                          const std::string& witness_path, long long budget_flag,
                          CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    HamiltonianWitness ham = parse_hamiltonian_text(load_input(ham_path, ctx.report));
    CyclePattern pattern = CyclePattern::parse(pattern_text);
    ctx.report.add("pattern", pattern_str(pattern));
    ctx.report.add("mode", mode);
    ChromaticBudget budget = budget_from(budget_flag);

    SubdivisionWitness witness{pattern, {}};
    if (mode == "circuit") {
        witness = find_in_hamiltonian(d, ham, pattern, budget);
    } else {
        PathSearchResult res = find_with_hamiltonian_path(d, ham, pattern, budget);
        witness = std::move(res.witness);
        ctx.report.add("case", res.selection.tag == CaseSelection::Tag::backward_arc
                                   ? "backward_arc"
                                   : "both_forward");
        ctx.report.add("parity", res.selection.parity);
    }
    write_file(witness_path, serialize_subdivision(witness));
    ctx.report.add("witness", witness_path);
    ctx.report.human += "witness with " + std::to_string(witness.blocks.size()) + " blocks";
}

// ---- verify ---------------------------------------------------------------

void run_verify(const std::string& kind, const std::string& graph_path,
                const std::string& witness_path, const std::string& pattern_text,
                CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    std::string witness_bytes = load_input(witness_path, ctx.report);
    bool valid = false;
    if (kind == "hamiltonian") {
        valid = verify_hamiltonian(d, parse_hamiltonian_text(witness_bytes));
    } else if (kind == "coloring") {
        valid = is_proper(underlying(d), parse_coloring_text(witness_bytes, d.vertex_count()));
    } else {
        SubdivisionWitness w = parse_subdivision_text(witness_bytes);
        CyclePattern pattern = pattern_text.empty() ? w.pattern : CyclePattern::parse(pattern_text);
        valid = verify_subdivision(d, pattern, w);
    }
    ctx.report.add("valid", valid ? "yes" : "no");
    if (!valid) {
        ctx.exit_code = kInvalid;
        ctx.status = "invalid";
    }
}

// ---- oracle ---------------------------------------------------------------

oracle::SearchLimit limit_from(int max_vertices, long long max_steps) {
    oracle::SearchLimit lim;
    if (max_vertices > 0) lim.max_vertices = max_vertices;
    if (max_steps > 0) lim.max_steps = max_steps;
    return lim;
}

void run_oracle_subdivision(const std::string& graph_path, const std::string& pattern_text,
                            const oracle::SearchLimit& lim, const std::string& witness_path,
                            CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    CyclePattern pattern = CyclePattern::parse(pattern_text);
    ctx.report.add("pattern", pattern_str(pattern));
    auto found = oracle::contains_subdivision(d, pattern, lim);
    ctx.report.add("found", found ? "yes" : "no");
    if (found && !witness_path.empty()) {
        write_file(witness_path, serialize_subdivision(*found));
        ctx.report.add("witness", witness_path);
    }
}

void run_oracle_chromatic(const std::string& graph_path, const oracle::SearchLimit& lim,
                          CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    ctx.report.add("chi", oracle::chromatic_bruteforce(underlying(d), lim));
}

void run_oracle_hamiltonian(const std::string& graph_path, const std::string& kind,
                            const oracle::SearchLimit& lim, const std::string& witness_path,
                            CommandContext& ctx) {
    Digraph d = load_digraph(graph_path, ctx.report);
    auto found =
        oracle::find_hamiltonian(d, kind == "path" ? WalkKind::path : WalkKind::circuit, lim);
    ctx.report.add("kind", kind);
    ctx.report.add("found", found ? "yes" : "no");
    if (found && !witness_path.empty()) {
        write_file(witness_path, serialize_hamiltonian(*found));
        ctx.report.add("witness", witness_path);
    }
}

// ---- explore-conjecture -----------------------------------------------------

struct ExploreArgs {
    int k = 1;
    int instances = 100;
    int max_vertices = 16;
    std::uint64_t seed = 0;
    bool seed_given = false;
    long long budget_flag = 0;
};

void run_explore(const ExploreArgs& a, CommandContext& ctx) {
    if (a.k < 1) throw PreconditionError("k must be positive");
    std::uint64_t seed = a.seed;
    if (!a.seed_given) {
        std::string material = "explore/" + std::to_string(a.k) + "/" +
                               std::to_string(a.instances) + "/" + std::to_string(a.max_vertices);
        seed = std::stoull(fnv1a_hex(material), nullptr, 16);
    }
    SplitMix64 rng(seed);
    ChromaticBudget budget = budget_from(a.budget_flag);

    int skipped = 0;
    int max_chi = 0;
    bool exceeded = false;
    for (int i = 0; i < a.instances; ++i) {
        int m = 3 + static_cast<int>(rng.next_below(std::max(1, a.max_vertices - 2)));
        double density = 0.2 + 0.8 * (rng.next_below(1000) / 1000.0);
        auto [g, n] = banded_graph(m, a.k, density, Seed{rng.next()});
        // nested-edge mutations: random extra chords, kept only if the
        // instance stays k-secant-free
        int tries = static_cast<int>(rng.next_below(m + 1));
        for (int t = 0; t < tries; ++t) {
            Vertex u = static_cast<Vertex>(rng.next_below(m));
            Vertex v = static_cast<Vertex>(rng.next_below(m));
            if (u == v || g.has_edge(u, v)) continue;
            UnderlyingGraph candidate = g;
            candidate.add_edge(u, v);
            if (!find_k_secant(candidate, n, a.k)) g = std::move(candidate);
        }
        int chi = 0;
        try {
            chi = chromatic_number(g, budget).chi;
        } catch (const BudgetError&) {
            ++skipped;
            continue;
        }
        if (chi > 2 * a.k + 1)
            throw InternalError("instance exceeds the 2k+1 bound; coloring theory violated");
        max_chi = std::max(max_chi, chi);
        if (chi > a.k + 2) exceeded = true;
    }
    ctx.report.add("k", a.k);
    ctx.report.add("instances", a.instances);
    ctx.report.add("skipped", skipped);
    ctx.report.add("max_chi", max_chi);
    ctx.report.add("conjecture_bound", a.k + 2);
    ctx.report.add("lemma_bound", 2 * a.k + 1);
    ctx.report.add("exceeded", exceeded ? "yes" : "no");
    if (exceeded)
        ctx.report.human += "FINDING: an instance needed more than k+2 colors; ";
    ctx.report.add("seed", std::to_string(seed));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"witness-producing subdivision finders for chromatic digraphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "emit a seeded instance family member");
    generate->add_option("kind", gen.kind, "circulant|transitive|random-tournament|banded")
        ->required()
        ->check(CLI::IsMember({"circulant", "transitive", "random-tournament", "banded"}));
    generate->add_option("-m,--size", gen.size, "number of vertices")->required();
    generate->add_option("-k,--band", gen.band, "band width (banded only)");
    generate->add_option("--density", gen.density, "edge probability (banded only)");
    auto* gen_seed = generate->add_option("--seed", gen.seed, "stream seed");
    generate->add_option("--out", gen.out, "digraph file to write")->required();
    generate->add_option("--sidecar", gen.sidecar, "witness/enumeration sidecar path");

    std::string graph_path, enum_path, ham_path, witness_path, out_path, pattern_text, mode, kind;
    long long budget_flag = 0;
    int secant_k = 1;
    int limit_vertices = 0;
    long long limit_steps = 0;

    CLI::App* chromatic = app.add_subcommand("chromatic", "exact chromatic number with witness");
    chromatic->add_option("--graph", graph_path)->required();
    chromatic->add_option("--budget", budget_flag, "search-node budget");
    chromatic->add_option("--witness", witness_path, "coloring file to write");

    CLI::App* find_secant = app.add_subcommand("find-secant", "exhaustive k-secant pair scan");
    find_secant->add_option("--graph", graph_path)->required();
    find_secant->add_option("--enum", enum_path, "enumeration file (default: natural order)");
    find_secant->add_option("-k", secant_k)->required();
    find_secant->add_option("--out", out_path, "secant pair file to write");

    CLI::App* color_free =
        app.add_subcommand("color-secant-free", "2k+1 coloring of a k-secant-free graph");
    color_free->add_option("--graph", graph_path)->required();
    color_free->add_option("--enum", enum_path);
    color_free->add_option("-k", secant_k)->required();
    color_free->add_option("--witness", witness_path, "coloring file to write");

    CLI::App* find_sub = app.add_subcommand("find-subdivision", "constructive subdivision search");
    find_sub->add_option("--graph", graph_path)->required();
    find_sub->add_option("--ham", ham_path, "hamiltonian witness file")->required();
    find_sub->add_option("--mode", mode)->required()->check(CLI::IsMember({"circuit", "path"}));
    find_sub->add_option("--pattern", pattern_text)->required();
    find_sub->add_option("--witness", witness_path, "witness file to write")->required();
    find_sub->add_option("--budget", budget_flag);

    CLI::App* verify = app.add_subcommand("verify", "re-check a witness file");
    verify->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"hamiltonian", "coloring", "subdivision"}));
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--witness", witness_path)->required();
    verify->add_option("--pattern", pattern_text, "expected pattern (subdivision only)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent brute-force ground truth");
    oracle_cmd->require_subcommand(1);
    CLI::App* osub = oracle_cmd->add_subcommand("subdivision", "exhaustive subdivision search");
    osub->add_option("--graph", graph_path)->required();
    osub->add_option("--pattern", pattern_text)->required();
    osub->add_option("--limit-vertices", limit_vertices);
    osub->add_option("--limit-steps", limit_steps);
    osub->add_option("--witness", witness_path);
    CLI::App* ochrom = oracle_cmd->add_subcommand("chromatic", "brute-force chromatic number");
    ochrom->add_option("--graph", graph_path)->required();
    ochrom->add_option("--limit-vertices", limit_vertices);
    ochrom->add_option("--limit-steps", limit_steps);
    CLI::App* oham = oracle_cmd->add_subcommand("hamiltonian", "backtracking hamiltonian search");
    oham->add_option("--graph", graph_path)->required();
    oham->add_option("--kind", kind)->required()->check(CLI::IsMember({"path", "circuit"}));
    oham->add_option("--limit-vertices", limit_vertices);
    oham->add_option("--limit-steps", limit_steps);
    oham->add_option("--witness", witness_path);

    ExploreArgs explore;
    CLI::App* explore_cmd =
        app.add_subcommand("explore-conjecture", "search k-secant-free instances for high chi");
    explore_cmd->add_option("-k", explore.k)->required();
    explore_cmd->add_option("--instances", explore.instances);
    explore_cmd->add_option("--max-vertices", explore.max_vertices);
    auto* exp_seed = explore_cmd->add_option("--seed", explore.seed);
    explore_cmd->add_option("--budget", explore.budget_flag);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("subdiv");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kPrecondition;
    }
    gen.seed_given = gen_seed->count() > 0;
    explore.seed_given = exp_seed->count() > 0;

    CommandContext ctx;
    auto started = std::chrono::steady_clock::now();
    try {
        if (generate->parsed()) {
            ctx.report.command = "generate";
            run_generate(gen, ctx);
        } else if (chromatic->parsed()) {
            ctx.report.command = "chromatic";
            run_chromatic(graph_path, budget_flag, witness_path, ctx);
        } else if (find_secant->parsed()) {
            ctx.report.command = "find-secant";
            run_find_secant(graph_path, enum_path, secant_k, out_path, ctx);
        } else if (color_free->parsed()) {
            ctx.report.command = "color-secant-free";
            run_color_secant_free(graph_path, enum_path, secant_k, witness_path, ctx);
        } else if (find_sub->parsed()) {
            ctx.report.command = "find-subdivision";
            run_find_subdivision(graph_path, ham_path, mode, pattern_text, witness_path,
                                 budget_flag, ctx);
        } else if (verify->parsed()) {
            ctx.report.command = "verify";
            ctx.report.add("kind", kind);
            run_verify(kind, graph_path, witness_path, pattern_text, ctx);
        } else if (oracle_cmd->parsed()) {
            oracle::SearchLimit lim = limit_from(limit_vertices, limit_steps);
            if (osub->parsed()) {
                ctx.report.command = "oracle-subdivision";
                run_oracle_subdivision(graph_path, pattern_text, lim, witness_path, ctx);
            } else if (ochrom->parsed()) {
                ctx.report.command = "oracle-chromatic";
                run_oracle_chromatic(graph_path, lim, ctx);
            } else {
                ctx.report.command = "oracle-hamiltonian";
                run_oracle_hamiltonian(graph_path, kind, lim, witness_path, ctx);
            }
        } else if (explore_cmd->parsed()) {
            ctx.report.command = "explore-conjecture";
            run_explore(explore, ctx);
        }
    } catch (const SecantFoundError& e) {
        ctx.status = "precondition";
        ctx.exit_code = kPrecondition;
        add_secant_fields(ctx.report, e.pair);
        ctx.report.human += e.what();
    } catch (const BudgetError& e) {
        ctx.status = "budget";
        ctx.exit_code = kBudget;
        ctx.report.add("chi_lower", e.lower_bound);
        ctx.report.add("chi_upper", e.upper_bound);
        ctx.report.human += e.what();
    } catch (const ParseError& e) {
        ctx.status = "precondition";
        ctx.exit_code = kPrecondition;
        ctx.report.human += e.what();
    } catch (const PreconditionError& e) {
        ctx.status = "precondition";
        ctx.exit_code = kPrecondition;
        ctx.report.human += e.what();
    } catch (const InternalError& e) {
        ctx.status = "internal";
        ctx.exit_code = kInternal;
        ctx.report.human += e.what();
    } catch (const Error& e) {
        ctx.status = "precondition";
        ctx.exit_code = kPrecondition;
        ctx.report.human += e.what();
    }
    double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    ctx.report.emit(out, err, ctx.status, elapsed);
    return ctx.exit_code;
}

}  // namespace subdiv::cli
