#include "idom/harness.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "idom/canonical.hpp"
#include "idom/families.hpp"
#include "idom/graph6.hpp"
#include "idom/solvers.hpp"
#include "idom/structure.hpp"

namespace idom {

namespace {

using nlohmann::json;

// Index-ordered parallel map; results are deterministic regardless of workers.
template <typename Out, typename Fn>
std::vector<Out> parallel_map(std::size_t count, int workers, Fn fn) {
    std::vector<Out> out(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= count) return;
            out[k] = fn(k);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

}  // namespace

BoundReport analyze_bound(const Graph& g, Theorem theorem) {
    BoundReport r;
    r.graph6 = write_graph6(g);
    r.canonical_key = canonical_form(g);
    r.n = g.order();
    r.i_value = independent_domination_number(g).value;
    r.gamma_value = domination_number(g).value;
    r.ratio_num = r.i_value;
    r.ratio_den = r.gamma_value;
    r.theorem15_lhs = 14 * r.i_value;

    const bool subcubic = g.max_degree() <= 3;
    const bool cubic = is_cubic(g);
    const bool c4 = has_four_cycle(g);
    if (subcubic) {
        r.weight_total = weight_summary(g).total;
        r.tight15 = (14 * r.i_value == r.weight_total);
    }

    switch (theorem) {
        case Theorem::subcubic_bound:
            r.in_scope = subcubic && !c4;
            r.theorem15_rhs = r.weight_total;
            if (!subcubic) r.flags.push_back("not subcubic -- outside hypothesis");
            if (c4) r.flags.push_back("has C4 -- outside hypothesis");
            if (r.in_scope) r.violation = r.theorem15_lhs > r.theorem15_rhs;
            break;
        case Theorem::cubic_bound:
            r.in_scope = cubic && !c4;
            r.theorem15_rhs = 5 * r.n;
            if (!cubic) r.flags.push_back("not cubic -- outside hypothesis");
            if (c4) r.flags.push_back("has C4 -- outside hypothesis");
            if (r.in_scope) r.violation = 14 * r.i_value > 5 * r.n;
            break;
        case Theorem::ratio_bound:
            r.in_scope = cubic && !c4;
            r.theorem15_rhs = subcubic ? r.weight_total : 0;
            if (!cubic) r.flags.push_back("not cubic -- outside hypothesis");
            if (c4) r.flags.push_back("has C4 -- outside hypothesis");
            // Exact rational test, never floating point: i/gamma <= 5/4.
            if (r.in_scope) r.violation = 4LL * r.i_value > 5LL * r.gamma_value;
            break;
    }
    return r;
}

VerifyOutcome verify_theorem(const std::vector<Graph>& graphs, Theorem theorem, int workers) {
    VerifyOutcome out;
    out.reports = parallel_map<BoundReport>(
        graphs.size(), workers, [&](std::size_t k) { return analyze_bound(graphs[k], theorem); });
    for (const auto& r : out.reports)
        if (r.violation) out.pass = false;
    return out;
}

SearchSummary search_extremal(const std::vector<Graph>& graphs, SearchObjective objective,
                              int workers) {
    struct Item {
        std::string g6;
        int n, i, gamma;
    };
    auto items = parallel_map<Item>(graphs.size(), workers, [&](std::size_t k) {
        const Graph& g = graphs[k];
        return Item{write_graph6(g), g.order(), independent_domination_number(g).value,
                    domination_number(g).value};
    });

    SearchSummary s;
    s.objective = objective;
    s.graphs_scanned = items.size();
    if (objective == SearchObjective::max_ratio) {
        s.best_num = 0;
        s.best_den = 1;
        for (const auto& it : items) {
            if (it.gamma == 0) continue;
            long long lhs = static_cast<long long>(it.i) * s.best_den;
            long long rhs = s.best_num * static_cast<long long>(it.gamma);
            if (lhs > rhs) {
                s.best_num = it.i;
                s.best_den = it.gamma;
                s.witnesses.clear();
                s.witnesses.push_back(it.g6);
            } else if (lhs == rhs && s.best_num > 0) {
                s.witnesses.push_back(it.g6);
            }
        }
    } else {
        for (const auto& it : items)
            if (14 * it.i == 5 * it.n) s.witnesses.push_back(it.g6);
        s.best_num = static_cast<long long>(s.witnesses.size());
        s.best_den = 1;
    }
    return s;
}

SearchSummary search_extremal(const EnumSpec& spec, SearchObjective objective, int workers) {
    return search_extremal(enumerate(spec), objective, workers);
}

std::string report_to_jsonl(const BoundReport& r) {
    json j;
    j["graph_id"] = {{"canonical", r.canonical_key}, {"graph6", r.graph6}};
    j["n"] = r.n;
    j["i_value"] = r.i_value;
    j["gamma_value"] = r.gamma_value;
    j["weight_total"] = r.weight_total;
    j["theorem15_lhs"] = r.theorem15_lhs;
    j["theorem15_rhs"] = r.theorem15_rhs;
    j["ratio_num"] = r.ratio_num;
    j["ratio_den"] = r.ratio_den;
    j["tight15"] = r.tight15;
    j["in_scope"] = r.in_scope;
    j["violation"] = r.violation;
    j["flags"] = r.flags;
    return j.dump();
}

std::string csv_summary(const std::vector<BoundReport>& reports) {
    struct Row {
        long long count = 0, max_i = 0, tight = 0;
        long long rn = 0, rd = 1;
    };
    std::map<int, Row> rows;
    for (const auto& r : reports) {
        Row& row = rows[r.n];
        ++row.count;
        row.max_i = std::max(row.max_i, static_cast<long long>(r.i_value));
        if (r.tight15) ++row.tight;
        if (r.gamma_value > 0 &&
            static_cast<long long>(r.i_value) * row.rd > row.rn * r.gamma_value) {
            row.rn = r.i_value;
            row.rd = r.gamma_value;
        }
    }
    std::ostringstream out;
    out << "n,count,max_i,max_ratio_num,max_ratio_den,tight_count\n";
    for (const auto& [n, row] : rows)
        out << n << ',' << row.count << ',' << row.max_i << ',' << row.rn << ',' << row.rd << ','
            << row.tight << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

namespace {

EnumSpec parse_enum_spec(const std::string& text) {
    EnumSpec spec;
    spec.order = -1;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token.rfind("n=", 0) == 0)
            spec.order = std::stoi(token.substr(2));
        else if (token == "cubic")
            spec.regularity = Regularity::cubic;
        else if (token == "subcubic")
            spec.regularity = Regularity::subcubic;
        else if (token == "no-c4")
            spec.forbid_c4 = true;
        else if (token == "connected")
            spec.connected = true;
        else if (token.rfind("min-girth=", 0) == 0)
            spec.min_girth = std::stoi(token.substr(10));
        else if (token == "force")
            spec.override_guard = true;
        else
            throw std::invalid_argument("unknown enum spec token: " + token);
    }
    if (spec.order < 0) throw std::invalid_argument("enum spec needs n=<order>");
    return spec;
}

struct OutputFile {
    std::ofstream file;
    std::ostream& stream;
    explicit OutputFile(const std::string& path)
        : file(path.empty() ? std::ofstream() : std::ofstream(path)),
          stream(path.empty() ? std::cout : file) {
        if (!path.empty() && !file) throw std::runtime_error("cannot open " + path);
    }
};

struct FamilyArgs {
    std::string kind;
    int k = 0, l = 0, n = 0, a = 0, b = 0;

    FamilySpec to_spec() const {
        if (kind == "tkl") return FamilySpec::tkl(k, l);
        if (kind == "cycle") return FamilySpec::cycle(n);
        if (kind == "path") return FamilySpec::path(n);
        if (kind == "kbip") return FamilySpec::complete_bipartite(a, b);
        if (kind == "prism5") return FamilySpec::prism5();
        if (kind == "petersen") return FamilySpec::petersen();
        if (kind == "edgeless") return FamilySpec::edgeless(n);
        if (kind == "complete") return FamilySpec::complete(n);
        throw std::invalid_argument("unknown family kind: " + kind);
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--k", fa.k, "Tkl pendant count k");
    cmd->add_option("--l", fa.l, "Tkl chord-block count l");
    cmd->add_option("--n", fa.n, "order parameter for cycle/path/edgeless/complete");
    cmd->add_option("--a", fa.a, "first part size for kbip");
    cmd->add_option("--b", fa.b, "second part size for kbip");
}

std::vector<Graph> load_graphs(const std::string& in_path, bool strict) {
    EnumSpec any;
    any.order = -1;
    IngestStats stats;
    auto graphs = ingest_graph6(in_path, any, strict, &stats);
    for (const auto& [line, msg] : stats.malformed)
        std::cerr << in_path << ":" << line << ": skipped: " << msg << "\n";
    return graphs;
}

json solve_to_json(const SolveResult& r) {
    return json{{"value", r.value},
                {"witness", r.witness.to_vector()},
                {"nodes_explored", r.nodes_explored},
                {"elapsed_ms", r.elapsed.count() * 1000.0}};
}

int cmd_solve(const std::string& in_path, const FamilyArgs& fa, const std::string& param,
              const std::string& out_path, int workers) {
    std::vector<Graph> graphs;
    if (!in_path.empty())
        graphs = load_graphs(in_path, false);
    else if (!fa.kind.empty())
        graphs.push_back(build(fa.to_spec()));
    else
        throw std::invalid_argument("solve needs --in or --family");

    auto lines = parallel_map<std::string>(graphs.size(), workers, [&](std::size_t k) {
        const Graph& g = graphs[k];
        json j;
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        if (param == "i" || param == "both") j["i"] = solve_to_json(independent_domination_number(g));
        if (param == "gamma" || param == "both") j["gamma"] = solve_to_json(domination_number(g));
        return j.dump();
    });
    OutputFile out(out_path);
    for (const auto& line : lines) out.stream << line << "\n";
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& enum_spec, const std::string& theorem_name,
               bool strict, const std::string& report_path, const std::string& csv_path, int workers,
               bool inject_violation) {
    Theorem theorem;
    if (theorem_name == "T15")
        theorem = Theorem::subcubic_bound;
    else if (theorem_name == "T14")
        theorem = Theorem::cubic_bound;
    else if (theorem_name == "T17")
        theorem = Theorem::ratio_bound;
    else
        throw std::invalid_argument("unknown theorem (use T15, T14 or T17): " + theorem_name);

    std::vector<Graph> graphs;
    if (!in_path.empty())
        graphs = load_graphs(in_path, strict);
    else if (!enum_spec.empty())
        graphs = enumerate(parse_enum_spec(enum_spec));
    else
        throw std::invalid_argument("verify needs --in or --enum");

    VerifyOutcome outcome = verify_theorem(graphs, theorem, workers);
    if (inject_violation) {
        BoundReport fake;
        fake.canonical_key = "?";
        fake.graph6 = "?";
        fake.in_scope = true;
        fake.violation = true;
        fake.flags.push_back("injected test record");
        outcome.reports.push_back(fake);
        outcome.pass = false;
    }
    if (strict) {
        for (const auto& r : outcome.reports)
            if (!r.in_scope)
                throw std::runtime_error("graph outside theorem hypothesis in strict mode: " +
                                         r.graph6);
    }

    OutputFile report(report_path);
    for (const auto& r : outcome.reports) report.stream << report_to_jsonl(r) << "\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open " + csv_path);
        csv << csv_summary(outcome.reports);
    }
    for (const auto& r : outcome.reports)
        if (r.violation)
            std::cerr << "VIOLATION: " << report_to_jsonl(r) << "\n";
    std::cerr << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.reports.size() << " graphs)\n";
    return outcome.pass ? 0 : 1;
}

int cmd_search(const std::string& enum_spec, const std::string& objective_name,
               const std::string& report_path, int workers) {
    SearchObjective objective;
    if (objective_name == "ratio")
        objective = SearchObjective::max_ratio;
    else if (objective_name == "tight")
        objective = SearchObjective::tight_5_14;
    else
        throw std::invalid_argument("unknown objective (use ratio or tight): " + objective_name);

    SearchSummary s = search_extremal(parse_enum_spec(enum_spec), objective, workers);
    json j;
    j["objective"] = objective == SearchObjective::max_ratio ? "max_ratio" : "tight_5_14";
    j["best_num"] = s.best_num;
    j["best_den"] = s.best_den;
    j["witnesses"] = s.witnesses;
    j["graphs_scanned"] = s.graphs_scanned;
    OutputFile out(report_path);
    out.stream << j.dump() << "\n";
    return 0;
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet s;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) s.add(std::stoi(token));
    return s;
}

int cmd_analyze(const std::string& in_path, const std::string& what, const std::string& set_text,
                const std::string& out_path) {
    auto graphs = load_graphs(in_path, false);
    OutputFile out(out_path);
    for (const Graph& g : graphs) {
        json j;
        j["graph6"] = write_graph6(g);
        if (what == "weights") {
            WeightSummary w = weight_summary(g);
            j["profile"] = {{"n0", w.profile.n0}, {"n1", w.profile.n1}, {"n2", w.profile.n2},
                            {"n3", w.profile.n3}, {"max_degree", w.profile.max_degree}};
            j["total"] = w.total;
        } else if (what == "ab") {
            ABPartition p = classify_ab(g);
            j["a0"] = p.a0.to_vector();
            j["a1"] = p.a1.to_vector();
            j["a2"] = p.a2.to_vector();
            j["a3"] = p.a3.to_vector();
            j["b0"] = p.b0.to_vector();
            j["b1"] = p.b1.to_vector();
            j["b2"] = p.b2.to_vector();
            j["other"] = p.other.to_vector();
        } else if (what == "configs") {
            json hits = json::array();
            static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
            for (const ConfigHit& h : find_forbidden_configs(g))
                hits.push_back({{"part", names[static_cast<int>(h.claim_part)]},
                                {"vertices", h.vertices.to_vector()}});
            j["hits"] = hits;
        } else if (what == "keylemma") {
            VertexSet s = set_text.empty() ? independent_domination_number(g).witness
                                           : parse_vertex_list(set_text);
            auto [lhs, rhs] = key_lemma_sides(g, s);
            j["set"] = s.to_vector();
            j["lhs"] = lhs;
            j["rhs"] = rhs;
        } else {
            throw std::invalid_argument("unknown analysis: " + what);
        }
        out.stream << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact independent domination toolkit for small graphs"};
    app.require_subcommand(1);

    // family
    auto* family = app.add_subcommand("family", "emit a named graph as graph6");
    FamilyArgs family_args;
    family->add_option("kind", family_args.kind,
                       "tkl|cycle|path|kbip|prism5|petersen|edgeless|complete")
        ->required();
    add_family_options(family, family_args);
    std::string family_out;
    family->add_option("--out", family_out, "output file (default stdout)");

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorph-free graph enumeration");
    int enum_n = 0;
    std::string enum_class = "subcubic";
    bool enum_noc4 = false, enum_connected = false, enum_force = false;
    int enum_girth = 0;
    std::string enum_out;
    enumerate_cmd->add_option("--n", enum_n, "order")->required();
    enumerate_cmd->add_option("--class", enum_class, "cubic|subcubic");
    enumerate_cmd->add_flag("--no-c4", enum_noc4, "forbid 4-cycles");
    enumerate_cmd->add_flag("--connected", enum_connected, "connected graphs only");
    enumerate_cmd->add_option("--min-girth", enum_girth, "minimum girth");
    enumerate_cmd->add_flag("--force", enum_force, "override the cost guard");
    enumerate_cmd->add_option("--out", enum_out, "output file (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact i(G) and gamma(G) as JSONL");
    std::string solve_in, solve_param = "both", solve_out;
    FamilyArgs solve_family;
    int solve_workers = 1;
    solve_cmd->add_option("--in", solve_in, "graph6 input file");
    solve_cmd->add_option("--family", solve_family.kind, "solve a named family instead of a file");
    add_family_options(solve_cmd, solve_family);
    solve_cmd->add_option("--param", solve_param, "i|gamma|both");
    solve_cmd->add_option("--out", solve_out, "output file (default stdout)");
    solve_cmd->add_option("--workers", solve_workers, "worker threads");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a theorem over a corpus");
    std::string verify_in, verify_enum, verify_theorem_name, verify_report, verify_csv;
    bool verify_strict = false, verify_inject = false;
    int verify_workers = 1;
    verify_cmd->add_option("--theorem", verify_theorem_name, "T15|T14|T17")->required();
    verify_cmd->add_option("--in", verify_in, "graph6 input file");
    verify_cmd->add_option("--enum", verify_enum,
                           "enumeration spec, e.g. n=8,subcubic,no-c4,connected");
    verify_cmd->add_flag("--strict", verify_strict, "out-of-hypothesis graphs are fatal");
    verify_cmd->add_option("--report", verify_report, "JSONL report file (default stdout)");
    verify_cmd->add_option("--csv", verify_csv, "CSV summary file");
    verify_cmd->add_option("--workers", verify_workers, "worker threads");
    verify_cmd->add_flag("--inject-violation", verify_inject)->group("");  // test hook

    // search
    auto* search_cmd = app.add_subcommand("search", "extremal scan over an enumerated class");
    std::string search_enum, search_objective, search_report;
    int search_workers = 1;
    search_cmd->add_option("--objective", search_objective, "ratio|tight")->required();
    search_cmd->add_option("--enum", search_enum, "enumeration spec")->required();
    search_cmd->add_option("--report", search_report, "report file (default stdout)");
    search_cmd->add_option("--workers", search_workers, "worker threads");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "structural analytics as JSONL");
    std::string analyze_in, analyze_what, analyze_set, analyze_out;
    analyze_cmd->add_option("--in", analyze_in, "graph6 input file")->required();
    analyze_cmd->add_option("--what", analyze_what, "weights|ab|configs|keylemma")->required();
    analyze_cmd->add_option("--set", analyze_set, "comma-separated vertex list for keylemma");
    analyze_cmd->add_option("--out", analyze_out, "output file (default stdout)");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("idom");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (family->parsed()) {
            Graph g = build(family_args.to_spec());
            OutputFile out(family_out);
            out.stream << write_graph6(g) << "\n";
            return 0;
        }
        if (enumerate_cmd->parsed()) {
            EnumSpec spec;
            spec.order = enum_n;
            if (enum_class == "cubic")
                spec.regularity = Regularity::cubic;
            else if (enum_class == "subcubic")
                spec.regularity = Regularity::subcubic;
            else
                throw std::invalid_argument("unknown class: " + enum_class);
            spec.forbid_c4 = enum_noc4;
            spec.connected = enum_connected;
            if (enum_girth > 0) spec.min_girth = enum_girth;
            spec.override_guard = enum_force;
            OutputFile out(enum_out);
            std::uint64_t count = 0;
            enumerate(spec, [&](const Graph& g) {
                out.stream << write_graph6(g) << "\n";
                ++count;
            });
            std::cerr << count << " graphs\n";
            return 0;
        }
        if (solve_cmd->parsed()) {
            if (solve_param != "i" && solve_param != "gamma" && solve_param != "both")
                throw std::invalid_argument("--param must be i, gamma or both");
            return cmd_solve(solve_in, solve_family, solve_param, solve_out, solve_workers);
        }
        if (verify_cmd->parsed())
            return cmd_verify(verify_in, verify_enum, verify_theorem_name, verify_strict,
                              verify_report, verify_csv, verify_workers, verify_inject);
        if (search_cmd->parsed())
            return cmd_search(search_enum, search_objective, search_report, search_workers);
        if (analyze_cmd->parsed())
            return cmd_analyze(analyze_in, analyze_what, analyze_set, analyze_out);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace idom
