// zdtpc command-line interface. Exit codes: 0 success or consensus, 1 usage or input error,
// 2 decider discrepancy or unexpected suite finding.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdtpc/config.hpp"
#include "zdtpc/graph_io.hpp"
#include "zdtpc/ring_parser.hpp"
#include "zdtpc/suites.hpp"
#include "zdtpc/tpc.hpp"
#include "zdtpc/tree_lab.hpp"
#include "zdtpc/zdg.hpp"

namespace {

using namespace zdtpc;
using ojson = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_discrepancy = 2;

const char* const ring_grammar = R"txt(Ring expressions:
  Expr := Atom (("x" | "×" | "*") Atom)*
  Atom := "Z"int | "F"int | "GF("int")" | "Z"int"[x]/("poly")" | "@"name | "table:"path
  poly := sum of terms c, x, c*x^e with "+" separators
  Whitespace is insignificant. "F"q and "GF(q)" need a prime power q. Products keep their
  factors in order. "@"name looks up a catalog ring (see README); "table:"path loads a
  table-ring fixture file.

Graph specs (tpc-decide):
  path:n  cycle:n  complete:n  kmn:m,n  star:n  corona:path:n  fig1  file:<path>
  A target that parses as a graph spec is a graph; anything else is a ring expression.)txt";

const char* const environment_help = R"txt(Caps come from the defaults, then --config FILE ({"ring_cap": n, "search_bound": n,
"enum_bound": n, "jobs": n}), then the environment:
  ZDTPC_RING_CAP      largest ring built element by element (default 4096)
  ZDTPC_SEARCH_BOUND  largest graph given to the exact search (default 1024)
  ZDTPC_ENUM_BOUND    largest graph whose codes are enumerated (default 256)
Exit codes: 0 success or consensus, 1 usage or input error, 2 discrepancy.)txt";

struct Common {
    bool json = false;
    std::string config_path;

    Config config() const {
        Config c;
        if (!config_path.empty()) c = load_config(config_path, c);
        return apply_environment(c);
    }
};

std::string code_text(const Graph& g, const CodeSet& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + g.label(c[i]);
    return out + "}";
}

std::string names_text(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text[0] == '-') throw ParseError("bad " + what + " '" + text + "'", 0);
    return static_cast<std::size_t>(v);
}

FiniteRing ring_of(const std::string& text, const Config& cfg) {
    ResolveOptions o;
    o.limits = cfg.limits();
    return resolve(parse_ring(text), o);
}

// -- ring-info --------------------------------------------------------------------------------

int ring_info(const std::string& expr, const Common& common) {
    const auto cfg = common.config();
    const auto ring = ring_of(expr, cfg);
    const auto zs = ring.zero_divisors_nonzero();
    std::map<std::size_t, std::size_t> sizes;
    for (auto x : zs) ++sizes[ring.annihilator(x).size()];
    const std::size_t factors = ring.factors().empty() ? 1 : ring.factors().size();
    const bool list = zs.size() <= 64;

    if (common.json) {
        ojson j;
        j["ring"] = ring.name();
        j["order"] = ring.order();
        j["units"] = ring.unit_count();
        j["zero_divisors"] = ring.zero_divisor_count();
        j["local"] = ring.is_local();
        j["reduced"] = ring.is_reduced();
        j["field"] = ring.is_field();
        j["factors"] = factors;
        ojson hist = ojson::object();
        for (auto [s, n] : sizes) hist[std::to_string(s)] = n;
        j["annihilator_sizes"] = hist;
        if (list) {
            ojson anns = ojson::object();
            for (auto x : zs) {
                auto names = ojson::array();
                for (auto y : ring.annihilator(x)) names.push_back(ring.element_name(y));
                anns[ring.element_name(x)] = names;
            }
            j["annihilators"] = anns;
        }
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    std::cout << "ring     " << ring.name() << '\n'
              << "order    " << ring.order() << '\n'
              << "units    " << ring.unit_count() << '\n'
              << "|Z*|     " << ring.zero_divisor_count() << '\n'
              << "local    " << std::boolalpha << ring.is_local() << '\n'
              << "reduced  " << ring.is_reduced() << '\n'
              << "field    " << ring.is_field() << '\n'
              << "factors  " << factors << '\n'
              << "annihilator sizes (|ann(x)| : count over nonzero zero-divisors)\n";
    for (auto [s, n] : sizes) std::cout << "  " << s << " : " << n << '\n';
    if (list && !zs.empty()) {
        std::cout << "annihilators\n";
        for (auto x : zs) {
            std::vector<std::string> names;
            for (auto y : ring.annihilator(x)) names.push_back(ring.element_name(y));
            std::cout << "  ann(" << ring.element_name(x) << ") = " << names_text(names) << '\n';
        }
    }
    return exit_ok;
}

// -- zdg-export -------------------------------------------------------------------------------

int zdg_export(const std::string& expr, const std::string& format, const std::string& output, const Common& common) {
    const auto z = zero_divisor_graph(ring_of(expr, common.config()));
    const std::string text = format == "dot" ? to_dot(z.graph, "Gamma") : to_json(z.graph);
    if (output.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output, 0);
        out << text;
    }
    return exit_ok;
}

// -- tpc-decide -------------------------------------------------------------------------------

struct GraphTarget {
    Graph graph;
    std::string family;
    std::size_t a = 0, b = 0;
};

std::optional<GraphTarget> parse_graph_spec(const std::string& spec) {
    auto after = [&](const std::string& prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
        return std::nullopt;
    };
    if (spec == "fig1") return GraphTarget{fixture_fig1(), "fig1"};
    if (auto rest = after("file:")) return GraphTarget{graph_from_json(read_file(*rest)), "file"};
    if (auto rest = after("corona:path:")) {
        const auto n = parse_count(*rest, "corona length");
        return GraphTarget{corona(make_path(n), make_path(1)), "corona", n};
    }
    if (auto rest = after("path:")) {
        const auto n = parse_count(*rest, "path length");
        return GraphTarget{make_path(n), "path", n};
    }
    if (auto rest = after("cycle:")) {
        const auto n = parse_count(*rest, "cycle length");
        return GraphTarget{make_cycle(n), "cycle", n};
    }
    if (auto rest = after("complete:")) {
        const auto n = parse_count(*rest, "order");
        return GraphTarget{make_complete(n), "complete", n};
    }
    if (auto rest = after("star:")) {
        const auto n = parse_count(*rest, "leaf count");
        return GraphTarget{make_star(n), "star", 1, n};
    }
    if (auto rest = after("kmn:")) {
        const auto comma = rest->find(',');
        if (comma == std::string::npos) throw ParseError("kmn needs 'kmn:m,n'", 4);
        const auto m = parse_count(rest->substr(0, comma), "part size");
        const auto n = parse_count(rest->substr(comma + 1), "part size");
        return GraphTarget{make_complete_bipartite(m, n), "kmn", m, n};
    }
    return std::nullopt;
}

std::vector<Verdict> graph_deciders(const GraphTarget& t, const Config& cfg) {
    std::vector<Verdict> out;
    auto add = [&](std::string id, bool admits, std::optional<CodeSet> witness, std::string note = {}) {
        Verdict v;
        v.decider_id = std::move(id);
        v.admits = admits;
        v.witness = std::move(witness);
        v.note = std::move(note);
        out.push_back(std::move(v));
    };
    const auto& g = t.graph;
    if (t.family == "path") {
        const bool a = path_decider(t.a);
        add("path-rule", a, a ? std::optional(path_code(t.a)) : std::nullopt);
    } else if (t.family == "cycle") {
        const bool a = cycle_decider(t.a);
        add("cycle-rule", a, a ? std::optional(cycle_code(t.a)) : std::nullopt);
    } else if (t.family == "complete") {
        const bool a = complete_decider(t.a);
        add("complete-rule", a, a ? std::optional(CodeSet{0, 1}) : std::nullopt);
    } else if (t.family == "kmn" || t.family == "star") {
        if (t.a > 0 && t.b > 0) add("complete-bipartite-construction", true, complete_bipartite_code(t.a, t.b));
    }
    if (auto p = regular_parity_check(g); p.has_value() && !*p) add("regular-parity", false, std::nullopt);
    if (g.order() > 0 && is_tree(g)) {
        const auto c = tree_tpc(g);
        add("tree-dp", c.has_value(), c);
    }
    if (g.order() <= cfg.search_bound) {
        const auto c = find_tpc(g, cfg.search_options());
        add("exact-search", c.has_value(), c);
    }
    return out;
}

int decide_graph(const std::string& spec, const GraphTarget& t, const Common& common) {
    const auto cfg = common.config();
    const auto verdicts = graph_deciders(t, cfg);
    std::vector<std::string> discrepancies;
    for (const auto& v : verdicts) {
        if (v.witness && !is_total_perfect_code(t.graph, *v.witness))
            discrepancies.push_back(v.decider_id + " produced " + code_text(t.graph, *v.witness) + ", which is not a code");
        if (v.admits != verdicts.front().admits)
            discrepancies.push_back(v.decider_id + " disagrees with " + verdicts.front().decider_id);
    }
    std::optional<CodeSet> witness;
    for (const auto& v : verdicts)
        if (v.witness && !witness) witness = v.witness;
    const bool consensus = !verdicts.empty() && discrepancies.empty();
    const bool admits = !verdicts.empty() && verdicts.back().admits;

    if (common.json) {
        ojson j;
        j["target"] = spec;
        j["order"] = t.graph.order();
        j["size"] = t.graph.size();
        auto ds = ojson::array();
        for (const auto& v : verdicts) {
            ojson d;
            d["id"] = v.decider_id;
            d["admits"] = v.admits;
            d["witness"] = v.witness ? ojson(code_text(t.graph, *v.witness)) : ojson(nullptr);
            ds.push_back(std::move(d));
        }
        j["deciders"] = std::move(ds);
        j["admits"] = admits;
        j["witness"] = witness ? ojson(code_text(t.graph, *witness)) : ojson(nullptr);
        j["consensus"] = consensus;
        j["discrepancies"] = discrepancies;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "target " << spec << " (" << t.graph.order() << " vertices, " << t.graph.size() << " edges)\n";
        for (const auto& v : verdicts) {
            std::cout << "  " << v.decider_id << ": " << (v.admits ? "admits" : "does not admit");
            if (v.witness) std::cout << ' ' << code_text(t.graph, *v.witness);
            std::cout << '\n';
        }
        if (verdicts.empty()) std::cout << "  no decider applies within the configured bounds\n";
        for (const auto& d : discrepancies) std::cout << "  discrepancy: " << d << '\n';
        if (consensus) {
            std::cout << "consensus: " << (admits ? "admits" : "does not admit");
            if (witness) std::cout << ' ' << code_text(t.graph, *witness);
            std::cout << '\n';
        }
    }
    if (verdicts.empty()) return exit_input;
    return consensus ? exit_ok : exit_discrepancy;
}

int decide_ring_target(const std::string& expr, const Common& common) {
    const auto cfg = common.config();
    ResolveOptions o;
    o.limits = cfg.limits();
    const auto factors = resolve_factors(parse_ring(expr), o);
    const auto v = decide_ring(factors, cfg.zdg_options());
    if (common.json) {
        std::cout << verdict_to_json(v) << '\n';
    } else {
        std::cout << "target " << v.ring << '\n';
        for (const auto& d : v.deciders) {
            std::cout << "  " << d.id << ": " << (d.admits ? "admits" : "does not admit");
            if (d.witness) std::cout << ' ' << names_text(*d.witness);
            if (!d.note.empty()) std::cout << " (" << d.note << ')';
            std::cout << '\n';
        }
        if (!v.cross_checked) std::cout << "  no graph search ran; the verdict is structural only\n";
        for (const auto& d : v.discrepancies) std::cout << "  discrepancy: " << d << '\n';
        if (v.discrepancies.empty()) {
            std::cout << "consensus: " << (v.admits ? "admits" : "does not admit");
            if (v.witness) std::cout << ' ' << names_text(*v.witness);
            std::cout << '\n';
        }
    }
    return v.discrepancies.empty() ? exit_ok : exit_discrepancy;
}

int tpc_decide(const std::string& target, const Common& common) {
    if (auto g = parse_graph_spec(target)) return decide_graph(target, *g, common);
    return decide_ring_target(target, common);
}

// -- verify -----------------------------------------------------------------------------------

int verify(const std::string& suite, SuiteOptions options, const Common& common, std::optional<unsigned> jobs) {
    options.config = common.config();
    if (jobs) options.config.jobs = *jobs;
    const auto report = run_suite(suite, options);
    std::cout << (common.json ? report_to_json(report) + "\n" : report_to_text(report));
    return report.unexpected() == 0 ? exit_ok : exit_discrepancy;
}

// -- tree-gen ---------------------------------------------------------------------------------

int tree_gen(const std::string& trace_path, const std::vector<std::uint64_t>& random, const std::string& output,
             const Common& common) {
    BuildTrace trace;
    if (!random.empty()) {
        trace = random_family_T(random[0], static_cast<std::size_t>(random[1]));
    } else {
        const auto read = trace_from_json(read_file(trace_path));
        trace = generate_family_T(read.initial_length, read.steps);
    }
    const auto code = tree_tpc(trace.tree);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write " + output, 0);
        out << to_json(trace.tree);
    }
    if (common.json) {
        ojson j;
        j["trace"] = ojson::parse(trace_to_json(trace));
        j["graph"] = ojson::parse(to_json(trace.tree));
        j["admits"] = code.has_value();
        j["witness"] = code ? ojson(code_text(trace.tree, *code)) : ojson(nullptr);
        j["failed_step"] = trace.failed_step ? ojson(*trace.failed_step) : ojson(nullptr);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "trace " << trace_to_json(trace) << '\n'
                  << "tree  " << trace.tree.order() << " vertices, " << trace.tree.size() << " edges\n";
        if (output.empty()) std::cout << to_json(trace.tree) << '\n';
        if (trace.failed_step) std::cout << "step " << *trace.failed_step << " produced a tree without a code\n";
        std::cout << "verdict " << (code ? "admits " + code_text(trace.tree, *code) : "does not admit") << '\n';
    }
    return code ? exit_ok : exit_discrepancy;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-divisor graphs of finite commutative rings and their total perfect codes."};
    app.footer(std::string(ring_grammar) + "\n\n" + environment_help);
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_flag("--json", common.json, "Machine-readable output");
    app.add_option("--config", common.config_path, "JSON file with caps")->check(CLI::ExistingFile);

    std::string expr, target, suite, format = "dot", output, trace_path;
    int code = exit_ok;

    auto* info = app.add_subcommand("ring-info", "Order, units, zero-divisors, flags and annihilators of a ring");
    info->add_option("ring", expr, "Ring expression")->required();
    info->callback([&] { code = ring_info(expr, common); });

    auto* exp = app.add_subcommand("zdg-export", "Write the zero-divisor graph of a ring as DOT or JSON");
    exp->add_option("ring", expr, "Ring expression")->required();
    exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("-o,--output", output, "Output file (default stdout)");
    exp->callback([&] { code = zdg_export(expr, format, output, common); });

    auto* decide = app.add_subcommand("tpc-decide", "Run every applicable decider on a ring or graph");
    decide->add_option("target", target, "Ring expression or graph spec")->required();
    decide->callback([&] { code = tpc_decide(target, common); });

    SuiteOptions suite_options;
    std::optional<unsigned> jobs;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--max-n", suite_options.max_n, "Suite size limit");
    ver->add_option("--seed", suite_options.seed, "Seed for sampled instances");
    ver->add_option("--count", suite_options.count, "Number of sampled instances");
    ver->add_option("--jobs", jobs, "Worker threads (default: one per processor)");
    ver->add_option("--probe-vertices", suite_options.probe_vertices,
                    "Tree order for the exhaustive family probe (0 skips)");
    ver->callback([&] { code = verify(suite, suite_options, common, jobs); });

    std::vector<std::uint64_t> random;
    auto* gen = app.add_subcommand("tree-gen", "Build a tree from a trace file or a seed and decide it");
    auto* trace_opt = gen->add_option("trace", trace_path, "Trace file")->check(CLI::ExistingFile);
    auto* random_opt = gen->add_option("--random", random, "Seed and vertex budget")->expected(2);
    trace_opt->excludes(random_opt);
    gen->add_option("-o,--output", output, "Write the tree as graph JSON");
    gen->callback([&] {
        if (trace_path.empty() && random.empty()) throw CLI::RequiredError("a trace file or --random seed budget");
        code = tree_gen(trace_path, random, output, common);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    } catch (const zdtpc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return code;
}
