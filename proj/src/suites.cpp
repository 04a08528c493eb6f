#include "zdtpc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zdtpc/catalog.hpp"
#include "zdtpc/tree_lab.hpp"

namespace zdtpc {

std::vector<KnownFinding> parse_known_findings(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("findings manifest is not valid JSON: ") + e.what(), e.byte);
    }
    if (!j.contains("findings") || !j["findings"].is_array()) throw ParseError("manifest needs a 'findings' array", 0);
    std::vector<KnownFinding> out;
    for (const auto& e : j["findings"]) {
        KnownFinding f;
        for (auto [key, field] : {std::pair{"id", &f.id}, {"kind", &f.kind}, {"suite", &f.suite},
                                  {"claim", &f.claim}, {"evidence", &f.evidence}}) {
            if (!e.contains(key) || !e[key].is_string())
                throw ParseError(std::string("manifest entry lacks string field '") + key + "'", 0);
            *field = e[key].get<std::string>();
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<KnownFinding> known_findings() { return parse_known_findings(known_findings_text()); }

std::size_t SuiteReport::unexpected() const {
    return static_cast<std::size_t>(
        std::count_if(discrepancies.begin(), discrepancies.end(), [](const Discrepancy& d) { return !d.known; }));
}

namespace {

std::string set_text(const Graph& g, const CodeSet& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + g.label(c[i]);
    return out + "}";
}

struct Outcome {
    std::vector<std::pair<std::string, std::string>> issues;
    std::size_t codes = 0;

    void fail(std::string finding, std::string detail) { issues.emplace_back(std::move(finding), std::move(detail)); }

    /// The structural facts every code must satisfy: induced matching, even size, and t|C| = |V|
    /// on t-regular graphs.
    void check_code(const Graph& g, const CodeSet& c) {
        ++codes;
        if (!is_total_perfect_code(g, c)) fail("code-structure", set_text(g, c) + " is not a code");
        if (!is_matching(g, c)) fail("code-structure", set_text(g, c) + " does not induce a matching");
        if (c.size() % 2) fail("code-structure", set_text(g, c) + " has odd size");
        if (auto t = is_regular(g); t && *t * c.size() != g.order())
            fail("code-structure", "regular graph with code size " + std::to_string(c.size()));
    }
};

struct Instance {
    std::string key;
    std::function<void(Outcome&)> run;
};

SuiteReport execute(const std::string& name, std::vector<Instance> instances, const Config& config) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            try {
                instances[i].run(outcomes[i]);
            } catch (const std::exception& e) {
                outcomes[i].fail("exception", e.what());
            }
        }
    };
    unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, instances.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::map<std::string, bool> known;
    for (const auto& f : known_findings())
        if (f.suite == name) known[f.id] = true;

    SuiteReport r;
    r.suite = name;
    r.instances = instances.size();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& o = outcomes[i];
        r.codes_checked += o.codes;
        if (o.issues.empty()) {
            ++r.agreements;
            continue;
        }
        Discrepancy d;
        d.instance = instances[i].key;
        d.known = true;
        for (const auto& [finding, detail] : o.issues) {
            if (std::find(d.findings.begin(), d.findings.end(), finding) == d.findings.end())
                d.findings.push_back(finding);
            d.known = d.known && known.count(finding);
            d.detail += (d.detail.empty() ? "" : "; ") + detail;
        }
        r.discrepancies.push_back(std::move(d));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool is_complete_bipartite(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return false;
    std::vector<int> side(g.order(), -1);
    side[0] = 0;
    std::vector<Vertex> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto w : g.neighbors(queue[i])) {
            if (side[w] < 0) {
                side[w] = 1 - side[queue[i]];
                queue.push_back(w);
            } else if (side[w] == side[queue[i]]) {
                return false;
            }
        }
    const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    return g.size() == a * (g.order() - a);
}

// -- graph families ---------------------------------------------------------------------------

std::vector<Instance> paths_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto search = o.config.search_options();
    for (std::size_t n = 2; n <= o.max_n.value_or(24); ++n)
        out.push_back({"path:" + std::to_string(n), [n, search](Outcome& r) {
                           const auto g = make_path(n);
                           const auto exact = find_tpc(g, search);
                           if (path_decider(n) != exact.has_value())
                               r.fail("path-rule", "path rule and exact search disagree");
                           if (path_decider(n)) r.check_code(g, path_code(n));
                           if (!exact) return;
                           r.check_code(g, *exact);
                           if (exact->size() == 2 && !is_complete_bipartite(g))
                               r.fail("bipartite-order-two-converse",
                                      "P" + std::to_string(n) + " has the code " + set_text(g, *exact) +
                                          " of size 2 but is not complete bipartite");
                       }});
    return out;
}

std::vector<Instance> cycles_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto search = o.config.search_options();
    for (std::size_t n = 3; n <= o.max_n.value_or(24); ++n)
        out.push_back({"cycle:" + std::to_string(n), [n, search](Outcome& r) {
                           const auto g = make_cycle(n);
                           const auto exact = find_tpc(g, search);
                           if (cycle_decider(n) != exact.has_value())
                               r.fail("cycle-rule", "cycle rule and exact search disagree");
                           if (cycle_decider(n)) r.check_code(g, cycle_code(n));
                           if (exact) r.check_code(g, *exact);
                           if (regular_parity_check(g) == false && exact)
                               r.fail("regular-parity", "odd regular graph has a code");
                       }});
    return out;
}

std::vector<Instance> trees_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const std::size_t max_n = o.max_n.value_or(12);
    const std::size_t count = o.count.value_or(1000);
    const auto search = o.config.search_options();
    std::mt19937_64 rng(o.seed.value_or(2015));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 2 + uniform_below(rng, max_n - 1);
        std::vector<Vertex> seq(n - 2);
        for (auto& s : seq) s = static_cast<Vertex>(uniform_below(rng, n));
        out.push_back({"random-tree:" + std::to_string(i), [seq, search](Outcome& r) {
                           const auto t = tree_from_pruefer(seq);
                           const auto dp = tree_tpc(t);
                           const auto exact = find_tpc(t, search);
                           if (dp.has_value() != exact.has_value())
                               r.fail("tree-dp", "tree search and exact search disagree on existence");
                           if (dp) r.check_code(t, *dp);
                           if (exact) r.check_code(t, *exact);
                       }});
    }
    const std::uint64_t base = o.seed.value_or(0);
    for (std::uint64_t s = base; s < base + count / 2; ++s)
        out.push_back({"family-trace:" + std::to_string(s), [s](Outcome& r) {
                           const auto trace = random_family_T(s, 40);
                           if (trace.failed_step)
                               r.fail("family-trace", "step " + std::to_string(*trace.failed_step) +
                                                          " lost the code: " + trace_to_json(trace));
                           const auto code = tree_tpc(trace.tree);
                           if (!code)
                               r.fail("family-trace", "built tree has no code");
                           else
                               r.check_code(trace.tree, *code);
                       }});
    for (std::size_t n = 3; n <= 20; ++n)
        out.push_back({"corona:path:" + std::to_string(n), [n](Outcome& r) {
                           const auto c = corona(make_path(n), make_path(1));
                           if (tree_tpc(c)) r.fail("corona", "corona has a code");
                           if (n % 4 != 1) {
                               const auto base = tree_tpc(make_path(n));
                               if (!base)
                                   r.fail("corona", "base path has no code");
                               else
                                   r.check_code(make_path(n), *base);
                           }
                       }});
    if (o.probe_vertices >= 2) {
        const std::size_t limit = o.probe_vertices;
        out.push_back({"family-probe:" + std::to_string(limit), [limit](Outcome& r) {
                           const auto probe = membership_probe(limit);
                           for (const auto& shape : probe.unreduced)
                               r.fail("tree-family-converse", "tree " + shape + " has a code but does not reduce");
                       }});
    }
    return out;
}

// -- rings ------------------------------------------------------------------------------------

std::vector<FiniteRing> local_ring_catalog(const RingLimits& limits) {
    std::vector<FiniteRing> out;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        for (std::uint64_t q = p * p; q <= 256; q *= p) out.push_back(make_zn(q, limits));
    const std::int64_t x2[] = {0, 0, 1};
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) out.push_back(make_quotient(p, x2, limits));
    for (const auto& e : ring_catalog()) out.push_back(make_table_ring(e.spec, limits));
    return out;
}

std::vector<FiniteRing> small_fields(const std::vector<std::uint64_t>& orders, const RingLimits& limits) {
    std::vector<FiniteRing> out;
    for (auto q : orders) {
        const auto [p, k] = prime_power(q);
        out.push_back(make_gf(p, k, limits));
    }
    return out;
}

std::string product_name(const std::vector<FiniteRing>& fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? " x " : "") + fs[i].name();
    return out;
}

void check_verdict(Outcome& r, const RingVerdict& v, const ZdGraph* z) {
    for (const auto& d : v.discrepancies) r.fail("decider", d);
    if (z && v.witness && z->graph.order() > 0) {
        CodeSet c;
        for (const auto& name : *v.witness) c.push_back(z->vertex_of(z->ring.find_element(name)));
        std::sort(c.begin(), c.end());
        r.check_code(z->graph, c);
        if (c.size() != 2) r.fail("code-size", "code of size " + std::to_string(c.size()));
    }
}

std::vector<Instance> zn_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    const std::map<std::uint64_t, bool> anchors{{9, true}, {12, true}};
    for (std::uint64_t n = 4; n <= o.max_n.value_or(200); ++n) {
        std::optional<bool> anchor;
        if (auto it = anchors.find(n); it != anchors.end()) anchor = it->second;
        out.push_back({"Z" + std::to_string(n), [n, cfg, anchor](Outcome& r) {
                           const auto z = zero_divisor_graph(make_zn(n, cfg.limits()));
                           const auto& g = z.graph;
                           const auto pair = tpc_pair_solver(z);
                           if (g.order() <= cfg.search_bound) {
                               const auto exact = find_tpc(g, cfg.search_options());
                               if (pair != exact) r.fail("pair-vs-exact", "pair search and exact search disagree");
                           }
                           if (pair) r.check_code(g, *pair);
                           if (g.order() <= cfg.enum_bound)
                               for (const auto& c : enumerate_tpcs(g, cfg.search_options())) {
                                   r.check_code(g, c);
                                   if (g.order() > 0 && c.size() != 2) r.fail("code-size", "code " + set_text(g, c));
                               }
                           if (g.order() >= 2 && (!is_connected(g) || *diameter(g) > 3))
                               r.fail("graph-shape", "graph is disconnected or has diameter above 3");
                           if (anchor && pair.has_value() != *anchor) r.fail("anchor", "expected verdict not reproduced");
                       }});
    }
    out.push_back({"Z2 x Z8", [cfg](Outcome& r) {
                       const std::vector<FiniteRing> fs{make_zn(2), make_zn(8)};
                       const auto z = zero_divisor_graph(make_product(fs, cfg.limits()));
                       if (z.graph.order() != 11) r.fail("anchor", "expected 11 vertices");
                       if (tpc_pair_solver(z) || find_tpc(z.graph, cfg.search_options()))
                           r.fail("anchor", "expected no code");
                   }});
    return out;
}

std::vector<Instance> local_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    std::map<std::string, bool> exceptional;
    for (const auto& e : ring_catalog()) exceptional[e.spec.name] = e.exceptional;
    for (const auto& ring : local_ring_catalog(cfg.limits())) {
        const bool special = exceptional.count(ring.name()) && exceptional[ring.name()];
        out.push_back({ring.name(), [ring, cfg, special](Outcome& r) {
                           const auto v = local_decider(ring, cfg.zdg_options());
                           const auto z = zero_divisor_graph(ring);
                           check_verdict(r, v, &z);
                           const auto rep = cut_vertex_report(ring);
                           for (const auto& f : rep.findings) r.fail("cut-vertex", f);
                           if (special && (rep.articulation_points.empty() || v.admits))
                               r.fail("fixture", "exceptional ring must have cut vertices and no code");
                       }});
    }
    return out;
}

void multisets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
               const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) return f(cur);
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        multisets(n, k, i, cur, f);
        cur.pop_back();
    }
}

std::vector<Instance> reduced_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    const auto fields = small_fields({2, 3, 4, 5, 7, 9}, cfg.limits());
    for (std::size_t k = 2; k <= 4; ++k) {
        std::vector<std::size_t> cur;
        multisets(fields.size(), k, 0, cur, [&](const std::vector<std::size_t>& pick) {
            std::vector<FiniteRing> fs;
            std::size_t order = 1;
            for (auto i : pick) {
                fs.push_back(fields[i]);
                order *= fields[i].order();
            }
            if (order > cfg.ring_cap) return;
            out.push_back({product_name(fs), [fs, cfg](Outcome& r) {
                               const auto v = reduced_decider(fs, cfg.zdg_options());
                               const auto z = zero_divisor_graph(make_product(fs, cfg.limits()));
                               check_verdict(r, v, &z);
                               if (v.admits != (fs.size() == 2)) r.fail("reduced-rule", "admits iff two fields");
                           }});
        });
    }
    return out;
}

std::vector<Instance> mixed_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    const std::size_t max_order = o.max_n.value_or(512);
    std::vector<FiniteRing> locals;
    for (auto& r : local_ring_catalog(cfg.limits()))
        if (r.order() * 2 <= max_order) locals.push_back(r);
    const auto fields = small_fields({2, 3, 4, 5, 7, 8, 9}, cfg.limits());

    auto add = [&](std::vector<FiniteRing> fs, std::string key, std::optional<bool> expected) {
        out.push_back({std::move(key), [fs, cfg, expected](Outcome& r) {
                           const auto v = decide_ring(fs, cfg.zdg_options());
                           std::optional<ZdGraph> z;
                           if (v.cross_checked) z = zero_divisor_graph(make_product(fs, cfg.limits()));
                           check_verdict(r, v, z ? &*z : nullptr);
                           if (!v.cross_checked) r.fail("coverage", "no graph search ran");
                           if (expected && v.admits != *expected) r.fail("anchor", "expected verdict not reproduced");
                           std::vector<const FiniteRing*> ls, fl;
                           for (const auto& f : fs) (f.is_field() ? fl : ls).push_back(&f);
                           if (ls.size() == 1 && fl.size() == 1) {
                               const auto zs = ls[0]->zero_divisor_count();
                               if ((zs <= 2) != v.admits)
                                   r.fail("mixed-local-field-bound",
                                          ls[0]->name() + " has |Z*| = " + std::to_string(zs) + " and the product " +
                                              (v.admits ? "admits" : "does not admit") + " a code");
                           }
                       }});
    };
    // Locals first in catalog order, then fields, at least two factors and one local.
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 0; m + n <= 4; ++n) {
            if (m + n < 2) continue;
            std::vector<std::size_t> lc;
            multisets(locals.size(), m, 0, lc, [&](const std::vector<std::size_t>& lp) {
                std::vector<std::size_t> fc;
                multisets(fields.size(), n, 0, fc, [&](const std::vector<std::size_t>& fp) {
                    std::vector<FiniteRing> fs;
                    std::size_t order = 1;
                    for (auto i : lp) {
                        fs.push_back(locals[i]);
                        order *= locals[i].order();
                    }
                    for (auto i : fp) {
                        fs.push_back(fields[i]);
                        order *= fields[i].order();
                    }
                    if (order <= max_order) add(fs, product_name(fs), std::nullopt);
                });
            });
        }
    const auto z2 = make_zn(2), z3 = make_zn(3), z4 = make_zn(4), z9 = make_zn(9);
    const std::int64_t x2[] = {0, 0, 1};
    const auto dual = make_quotient(2, x2);
    const auto* fixture = find_catalog_entry("Z2XY-X2-XY-Y2");
    add({z4, z2}, "anchor:Z4 x Z2", true);
    add({z4, z3}, "anchor:Z4 x Z3", true);
    add({z9, z2}, "anchor:Z9 x Z2", false);
    add({z4, z4}, "anchor:Z4 x Z4", false);
    add({z2, z2, dual}, "anchor:Z2 x Z2 x Z2[x]/(x^2)", false);
    if (fixture) add({z2, make_table_ring(fixture->spec)}, "anchor:Z2 x @Z2XY-X2-XY-Y2", false);
    return out;
}

std::vector<Instance> counting_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    std::vector<std::vector<FiniteRing>> cases;
    const auto locals = local_ring_catalog(cfg.limits());
    const auto fields = small_fields({2, 3, 4, 5, 7, 8, 9}, cfg.limits());
    for (const auto& r : locals) cases.push_back({r});
    for (const auto& f : fields) cases.push_back({f});
    std::vector<FiniteRing> small;
    for (const auto& r : locals)
        if (r.order() <= 16) small.push_back(r);
    small.insert(small.end(), fields.begin(), fields.end());
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = a; b < small.size(); ++b) cases.push_back({small[a], small[b]});
    for (const auto& fs : cases) {
        out.push_back({product_name(fs), [fs, cfg](Outcome& r) {
                           const auto ring = fs.size() == 1 ? fs[0] : make_product(fs, cfg.limits());
                           if (count_zero_divisors(fs) != ring.zero_divisor_count())
                               r.fail("count", "closed form " + std::to_string(count_zero_divisors(fs)) +
                                                   " but enumeration gives " +
                                                   std::to_string(ring.zero_divisor_count()));
                       }});
    }
    for (const auto& e : count_form_report(cfg.limits()))
        out.push_back({"form:" + e.form + ":" + e.ring, [e, cfg](Outcome& r) {
                           std::vector<FiniteRing> fs;
                           std::stringstream ss(e.ring);
                           for (std::string tok; ss >> tok;)
                               if (tok != "x") fs.push_back(make_zn(std::stoull(tok.substr(1)), cfg.limits()));
                           const auto enumerated = make_product(fs, cfg.limits()).zero_divisor_count();
                           if (enumerated != e.count) r.fail("count", "closed form disagrees with enumeration");
                           if (!e.formula_matches())
                               r.fail("count-form-" + e.form,
                                      "true count " + std::to_string(e.count) + ", formula gives " +
                                          std::to_string(e.nonzero_reading) + " (nonzero reading) and " +
                                          std::to_string(e.unit_reading) + " (unit reading)");
                           if (e.stated && *e.stated != e.count)
                               r.fail("count-stated-" + e.form, "stated " + std::to_string(*e.stated) +
                                                                    ", enumerated " + std::to_string(e.count));
                       }});
    return out;
}

std::vector<Instance> fixtures_suite(const SuiteOptions& o) {
    std::vector<Instance> out;
    const auto cfg = o.config;
    for (const auto& e : ring_catalog())
        out.push_back({"@" + e.slug, [e, cfg](Outcome& r) {
                           const auto ring = make_table_ring(e.spec, cfg.limits());
                           try {
                               validate_ring_axioms(ring);
                           } catch (const ValidationError& err) {
                               r.fail("fixture", err.what());
                           }
                           if (!ring.is_local()) r.fail("fixture", "fixture ring is not local");
                           if (!e.exceptional) return;
                           const auto z = zero_divisor_graph(ring);
                           if (ring.order() != 16) r.fail("fixture", "exceptional ring must have 16 elements");
                           if (articulation_points(z.graph).empty()) r.fail("fixture", "no cut vertices");
                           if (tpc_pair_solver(z) || find_tpc(z.graph, cfg.search_options()))
                               r.fail("fixture", "exceptional ring has a code");
                       }});
    out.push_back({"fig1", [](Outcome& r) {
                       const auto g = fixture_fig1();
                       const CodeSet c{0, 1, 6, 7};
                       if (!is_total_perfect_code(g, c)) r.fail("fixture", "{v1,v2,v7,v8} is not a code");
                       r.check_code(g, c);
                       if (is_regular(g) || g.order() % 2) r.fail("fixture", "expected a non-regular graph of even order");
                   }});
    return out;
}

using Builder = std::vector<Instance> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Builder>>& builders() {
    static const std::vector<std::pair<std::string, Builder>> table{
        {"paths", paths_suite},           {"cycles", cycles_suite},
        {"trees", trees_suite},           {"zn-sweep", zn_suite},
        {"local-catalog", local_suite},   {"reduced-products", reduced_suite},
        {"mixed-products", mixed_suite},  {"counting", counting_suite},
        {"fixtures", fixtures_suite}};
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : builders()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    for (const auto& [n, build] : builders())
        if (n == name) return execute(n, build(options), options.config);
    std::string list;
    for (const auto& n : suite_names()) list += (list.empty() ? "" : ", ") + n;
    throw PreconditionError("unknown suite '" + std::string(name) + "'; expected one of " + list);
}

std::string report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["instances"] = report.instances;
    j["agreements"] = report.agreements;
    auto ds = nlohmann::ordered_json::array();
    for (const auto& d : report.discrepancies)
        ds.push_back({{"instance", d.instance}, {"findings", d.findings}, {"known", d.known}, {"detail", d.detail}});
    j["discrepancies"] = std::move(ds);
    j["unexpected"] = report.unexpected();
    j["codes_checked"] = report.codes_checked;
    j["seconds"] = report.seconds;
    return j.dump();
}

std::string report_to_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << ": " << report.instances << " instances, " << report.agreements
        << " agree, " << report.discrepancies.size() << " discrepancies (" << report.unexpected()
        << " unexpected), " << report.codes_checked << " codes checked, ";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << report.seconds << " s\n";
    for (const auto& d : report.discrepancies) {
        out << "  [" << (d.known ? "known" : "UNEXPECTED");
        for (const auto& f : d.findings) out << ' ' << f;
        out << "] " << d.instance << ": " << d.detail << '\n';
    }
    return out.str();
}

}  // namespace zdtpc
