#include "zdtpc/zdg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

namespace zdtpc {

Vertex ZdGraph::vertex_of(Element a) const {
    const auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it == elements.end() || *it != a)
        throw PreconditionError(ring.element_name(a) + " is not a nonzero zero-divisor of " + ring.name());
    return static_cast<Vertex>(it - elements.begin());
}

std::vector<Element> ZdGraph::to_elements(const CodeSet& code) const {
    std::vector<Element> out;
    for (auto v : code) out.push_back(elements.at(v));
    return out;
}

std::vector<std::string> ZdGraph::names(const CodeSet& code) const {
    std::vector<std::string> out;
    for (auto v : code) out.push_back(ring.element_name(elements.at(v)));
    return out;
}

ZdGraph zero_divisor_graph(const FiniteRing& ring) {
    auto elements = ring.zero_divisors_nonzero();
    std::vector<Vertex> index(ring.order(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        labels.push_back(ring.element_name(elements[i]));
        for (auto y : ring.annihilator(elements[i]))
            if (y > elements[i]) edges.emplace_back(static_cast<Vertex>(i), index[y]);
    }
    Graph g(elements.size(), std::move(edges), std::move(labels));
    return ZdGraph{ring, std::move(g), std::move(elements)};
}

std::vector<Element> cap_ann(const FiniteRing& ring, Element x) {
    if (!ring.is_zero_divisor(x))
        throw PreconditionError(ring.element_name(x) + " is not a nonzero zero-divisor of " + ring.name());
    std::vector<Element> out;
    for (auto y : ring.annihilator(x))
        if (y != 0 && y != x) out.push_back(y);
    return out;
}

std::optional<CodeSet> tpc_pair_solver(const ZdGraph& z) {
    const auto& g = z.graph;
    if (g.order() == 0) return CodeSet{};
    for (const auto& [x, y] : g.edges()) {
        // A pair code splits the vertex set into N(x) and N(y).
        if (g.degree(x) + g.degree(y) != g.order()) continue;
        if (is_total_perfect_code(g, {x, y})) return CodeSet{x, y};
    }
    return std::nullopt;
}

std::vector<Vertex> degree_one_vertices(const ZdGraph& z) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < z.graph.order(); ++v)
        if (z.graph.degree(v) == 1) out.push_back(v);
    return out;
}

std::string verdict_to_json(const RingVerdict& verdict) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["ring"] = verdict.ring;
    j["admits"] = verdict.admits;
    j["witness"] = verdict.witness ? ordered_json(*verdict.witness) : ordered_json(nullptr);
    auto deciders = ordered_json::array();
    for (const auto& d : verdict.deciders) {
        ordered_json e;
        e["id"] = d.id;
        e["admits"] = d.admits;
        if (d.witness) e["witness"] = *d.witness;
        if (!d.note.empty()) e["note"] = d.note;
        deciders.push_back(std::move(e));
    }
    j["deciders"] = std::move(deciders);
    j["cross_checked"] = verdict.cross_checked;
    j["discrepancies"] = verdict.discrepancies;
    return j.dump();
}

std::vector<FiniteRing> local_components(const FiniteRing& ring) {
    std::vector<FiniteRing> out;
    if (ring.kind() == RingKind::product) {
        for (const auto& f : ring.factors())
            for (auto& c : local_components(f)) out.push_back(std::move(c));
        return out;
    }
    if (ring.kind() == RingKind::integers_mod && !ring.is_local()) {
        std::uint64_t n = ring.order();
        for (std::uint64_t p = 2; p <= n; ++p) {
            std::uint64_t q = 1;
            while (n % p == 0) {
                n /= p;
                q *= p;
            }
            if (q > 1) out.push_back(make_zn(q));
        }
        return out;
    }
    if (!ring.is_local()) throw PreconditionError(ring.name() + " does not split into known local factors");
    out.push_back(ring);
    return out;
}

namespace {

/// Coordinates of `a` in the split produced by local_components.
std::vector<Element> component_coordinates(const FiniteRing& ring, Element a) {
    if (ring.kind() == RingKind::product) {
        std::vector<Element> out;
        const auto coords = ring.coordinates(a);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const auto part = component_coordinates(ring.factors()[i], coords[i]);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (ring.kind() == RingKind::integers_mod && !ring.is_local()) {
        std::vector<Element> out;
        for (const auto& c : local_components(ring)) out.push_back(static_cast<Element>(a % c.order()));
        return out;
    }
    return {a};
}

std::string tuple_name(std::span<const FiniteRing> parts, const std::vector<Element>& coords) {
    if (parts.size() == 1) return parts[0].element_name(coords[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i].element_name(coords[i]);
    return out + ")";
}

/// A decider's answer before its witness is translated into element names.
struct Route {
    std::string id;
    bool admits = false;
    std::optional<std::vector<Element>> elements;
    std::optional<std::vector<std::string>> names;
    std::string note;
    bool graph_search = false;
};

struct Structural {
    std::string id;
    bool admits = false;
    /// Witness as component coordinate tuples.
    std::optional<std::vector<std::vector<Element>>> witness;
    std::string note;
};

Structural annihilator_rule(const FiniteRing& r) {
    const auto zs = r.zero_divisors_nonzero();
    const bool big = zs.size() + 1 >= 3;
    for (auto x : zs) {
        const auto ann = r.annihilator(x);
        if (big && ann.size() == 2 && ann[1] != x) {
            std::vector<std::vector<Element>> w{{std::min(x, ann[1])}, {std::max(x, ann[1])}};
            return {"local-annihilator-rule", true, w, "x = " + r.element_name(x) + " has |ann(x)| = 2"};
        }
    }
    if (zs.size() == 2 && r.mul(zs[0], zs[1]) == 0)
        return {"local-annihilator-rule", true, std::vector<std::vector<Element>>{{zs[0]}, {zs[1]}},
                "the graph is a single edge"};
    return {"local-annihilator-rule", false, std::nullopt, ""};
}

Structural structural_decision(const std::vector<FiniteRing>& comps) {
    std::vector<std::size_t> locals, fields;
    for (std::size_t i = 0; i < comps.size(); ++i) (comps[i].is_field() ? fields : locals).push_back(i);
    const std::size_t k = comps.size();
    auto unit_vector = [&](std::size_t i, Element value) {
        std::vector<Element> v(k, 0);
        v[i] = value;
        return v;
    };
    if (locals.empty()) {
        if (k == 1) return {"field-empty-graph", true, std::vector<std::vector<Element>>{}, "a field has no zero-divisors"};
        if (k == 2)
            return {"reduced-factor-count-rule", true,
                    std::vector<std::vector<Element>>{unit_vector(0, comps[0].one()), unit_vector(1, comps[1].one())},
                    "two fields"};
        return {"reduced-factor-count-rule", false, std::nullopt, std::to_string(k) + " fields"};
    }
    if (k == 1) return annihilator_rule(comps[0]);
    if (locals.size() == 1 && fields.size() == 1) {
        const auto& r1 = comps[locals[0]];
        const auto zs = r1.zero_divisors_nonzero();
        const std::string note = "one local factor with |Z*| = " + std::to_string(zs.size()) +
                                 " and one field; admits iff |Z*| = 1";
        if (zs.size() != 1) return {"mixed-case-rule", false, std::nullopt, note};
        auto a = unit_vector(locals[0], zs[0]);
        auto b = unit_vector(fields[0], comps[fields[0]].one());
        std::vector<std::vector<Element>> w{std::move(a), std::move(b)};
        std::sort(w.begin(), w.end());
        return {"mixed-case-rule", true, std::move(w), note};
    }
    return {"mixed-case-rule", false, std::nullopt,
            std::to_string(locals.size()) + " local and " + std::to_string(fields.size()) + " field factors"};
}

std::string join_names(std::span<const FiniteRing> factors) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].name();
    return out;
}

std::string render_set(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

RingVerdict combine(std::string ring_name, std::vector<Route> routes, const ZdGraph* z) {
    RingVerdict v;
    v.ring = std::move(ring_name);
    const Route* truth = &routes.front();
    for (const auto& r : routes)
        if (r.graph_search) truth = &r;  // the last graph search is the exact one when it ran
    v.admits = truth->admits;
    for (const auto& r : routes) {
        if (r.graph_search) v.cross_checked = true;
        if (r.admits != truth->admits)
            v.discrepancies.push_back(r.id + (r.admits ? " admits" : " rejects") + " but " + truth->id +
                                      (truth->admits ? " admits" : " rejects"));
        if (z && r.elements) {
            CodeSet code;
            bool members = true;
            for (auto e : *r.elements) {
                if (!z->ring.is_zero_divisor(e)) {
                    members = false;
                    break;
                }
                code.push_back(z->vertex_of(e));
            }
            std::sort(code.begin(), code.end());
            if (!members || !is_total_perfect_code(z->graph, code))
                v.discrepancies.push_back(r.id + " witness " + render_set(*r.names) + " is not a code");
        }
    }
    const Route* source = truth->names ? truth : nullptr;
    if (!source)
        for (const auto& r : routes)
            if (r.names && r.admits == v.admits) {
                source = &r;
                break;
            }
    if (v.admits && source) v.witness = source->names;
    for (auto& r : routes) v.deciders.push_back({std::move(r.id), r.admits, std::move(r.names), std::move(r.note)});
    return v;
}

void add_graph_routes(std::vector<Route>& routes, const ZdGraph& z, const ZdgOptions& options) {
    Route pair{"pair-search", false, std::nullopt, std::nullopt, "", true};
    if (auto c = tpc_pair_solver(z)) {
        pair.admits = true;
        pair.elements = z.to_elements(*c);
        pair.names = z.names(*c);
    }
    routes.push_back(std::move(pair));
    if (z.graph.order() <= options.exact_bound) {
        SearchOptions s = options.search;
        s.vertex_bound = std::max(s.vertex_bound, options.exact_bound);
        Route exact{"exact-search", false, std::nullopt, std::nullopt, "", true};
        if (auto c = find_tpc(z.graph, s)) {
            exact.admits = true;
            exact.elements = z.to_elements(*c);
            exact.names = z.names(*c);
            if (c->size() != 2 && z.graph.order() > 0)
                exact.note = "code of size " + std::to_string(c->size());
        }
        routes.push_back(std::move(exact));
    } else {
        routes.back().note = "exact search skipped above " + std::to_string(options.exact_bound) + " vertices";
    }
}

Route degree_one_route(const ZdGraph& z) {
    Route r{"local-degree-one-rule", false, std::nullopt, std::nullopt, "", false};
    const auto ones = degree_one_vertices(z);
    if (ones.empty()) return r;
    r.admits = true;
    CodeSet c{ones[0], z.graph.neighbors(ones[0])[0]};
    std::sort(c.begin(), c.end());
    r.elements = z.to_elements(c);
    r.names = z.names(c);
    r.note = z.graph.label(ones[0]) + " has degree one";
    return r;
}

}  // namespace

RingVerdict decide_ring(std::span<const FiniteRing> factors, const ZdgOptions& options) {
    if (factors.empty()) throw PreconditionError("decide_ring needs at least one factor");
    std::optional<FiniteRing> ring;
    std::size_t order = 1;
    for (const auto& f : factors) order = order > options.limits.order_cap ? order : order * f.order();
    if (factors.size() == 1)
        ring = factors[0];
    else if (order <= options.limits.order_cap)
        ring = make_product(factors, options.limits);

    std::vector<FiniteRing> comps;
    std::vector<Route> routes;
    try {
        for (const auto& f : factors)
            for (auto& c : local_components(f)) comps.push_back(std::move(c));
    } catch (const PreconditionError&) {
        comps.clear();
        if (!ring) throw;
    }
    if (!comps.empty()) {
        auto s = structural_decision(comps);
        Route r{s.id, s.admits, std::nullopt, std::nullopt, s.note, false};
        if (s.witness) {
            std::vector<std::string> names;
            std::vector<Element> elements;
            for (const auto& t : *s.witness) {
                if (!ring) {
                    names.push_back(tuple_name(comps, t));
                    continue;
                }
                Element found = static_cast<Element>(ring->order());
                for (Element a = 0; a < ring->order(); ++a)
                    if (component_coordinates(*ring, a) == t) {
                        found = a;
                        break;
                    }
                elements.push_back(found);
                names.push_back(ring->element_name(found));
            }
            if (ring) {
                std::vector<std::size_t> order(elements.size());
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](auto a, auto b) { return elements[a] < elements[b]; });
                std::vector<Element> se;
                std::vector<std::string> sn;
                for (auto i : order) {
                    se.push_back(elements[i]);
                    sn.push_back(names[i]);
                }
                r.elements = std::move(se);
                r.names = std::move(sn);
            } else {
                r.names = std::move(names);
            }
        }
        routes.push_back(std::move(r));
    }
    if (!ring) return combine(join_names(factors), std::move(routes), nullptr);

    const auto z = zero_divisor_graph(*ring);
    if (comps.size() == 1 && !comps[0].is_field()) routes.push_back(degree_one_route(z));
    add_graph_routes(routes, z, options);
    return combine(factors.size() == 1 ? ring->name() : join_names(factors), std::move(routes), &z);
}

RingVerdict local_decider(const FiniteRing& ring, const ZdgOptions& options) {
    if (!ring.is_local() || ring.is_field())
        throw PreconditionError(ring.name() + " is not a local ring that is not a field");
    std::vector<Route> routes;
    const auto s = annihilator_rule(ring);
    Route r{s.id, s.admits, std::nullopt, std::nullopt, s.note, false};
    if (s.witness) {
        r.elements = std::vector<Element>{};
        r.names = std::vector<std::string>{};
        for (const auto& t : *s.witness) {
            r.elements->push_back(t[0]);
            r.names->push_back(ring.element_name(t[0]));
        }
    }
    routes.push_back(std::move(r));
    const auto z = zero_divisor_graph(ring);
    routes.push_back(degree_one_route(z));
    add_graph_routes(routes, z, options);
    return combine(ring.name(), std::move(routes), &z);
}

CutVertexReport cut_vertex_report(const FiniteRing& ring) {
    if (!ring.is_local()) throw PreconditionError(ring.name() + " is not local");
    CutVertexReport rep;
    const auto z = zero_divisor_graph(ring);
    for (auto v : articulation_points(z.graph)) rep.articulation_points.push_back(z.elements[v]);
    const auto code = tpc_pair_solver(z);
    if (code) rep.code = z.to_elements(*code);

    const std::size_t zsize = z.elements.size() + 1;
    bool any_two = false;
    for (auto x : z.elements)
        if (ring.annihilator(x).size() == 2) any_two = true;
    rep.annihilator_two = any_two && zsize >= 3;
    rep.exceptional_fingerprint = ring.order() == 16 && zsize > 2 && !any_two;

    const bool has_cut = !rep.articulation_points.empty();
    if (code && z.graph.order() > 0)
        for (auto v : *code)
            if (z.graph.degree(v) > 1 && !std::binary_search(rep.articulation_points.begin(),
                                                             rep.articulation_points.end(), z.elements[v]))
                rep.findings.push_back("code member " + z.graph.label(v) + " has degree " +
                                       std::to_string(z.graph.degree(v)) + " but is not a cut vertex");
    if (has_cut != (rep.annihilator_two || rep.exceptional_fingerprint))
        rep.findings.push_back(std::string("cut vertices ") + (has_cut ? "present" : "absent") +
                               " but the annihilator condition or fingerprint says otherwise");
    if (rep.exceptional_fingerprint && (!has_cut || code))
        rep.findings.push_back("exceptional fingerprint without cut vertices or with a code");
    return rep;
}

RingVerdict reduced_decider(std::span<const FiniteRing> fields, const ZdgOptions& options) {
    if (fields.size() < 2) throw PreconditionError("reduced_decider needs at least two fields");
    for (const auto& f : fields)
        if (!f.is_field()) throw PreconditionError(f.name() + " is not a field; use mixed_decider");
    return decide_ring(fields, options);
}

RingVerdict mixed_decider(std::span<const FiniteRing> locals, std::span<const FiniteRing> fields,
                          const ZdgOptions& options) {
    if (locals.empty() && fields.empty()) throw PreconditionError("mixed_decider needs at least one factor");
    for (const auto& r : locals)
        if (!r.is_local() || r.is_field())
            throw PreconditionError(r.name() + " is not a local ring that is not a field");
    for (const auto& f : fields)
        if (!f.is_field()) throw PreconditionError(f.name() + " is not a field");
    std::vector<FiniteRing> all(locals.begin(), locals.end());
    all.insert(all.end(), fields.begin(), fields.end());
    return decide_ring(all, options);
}

std::size_t count_zero_divisors(std::span<const FiniteRing> factors) {
    if (factors.empty()) throw PreconditionError("count_zero_divisors needs at least one factor");
    std::size_t all = 1, units = 1;
    for (const auto& f : factors) {
        all *= f.order();
        units *= f.unit_count();
    }
    return all - units - 1;
}

std::optional<CountFormEvaluation> evaluate_count_form(std::span<const FiniteRing> factors) {
    std::vector<const FiniteRing*> locals, fields;
    for (const auto& f : factors) {
        if (!f.is_local()) return std::nullopt;
        (f.is_field() ? fields : locals).push_back(&f);
    }
    using I = long long;
    auto z = [](const FiniteRing* r) { return static_cast<I>(r->zero_divisor_count()); };
    auto eval = [&](auto star) -> std::optional<I> {
        const auto m = locals.size(), n = fields.size();
        auto s = [&](const FiniteRing* r) { return static_cast<I>(star(*r)); };
        if (m == 1 && n == 1) {
            const auto r1 = locals[0], f = fields[0];
            return s(r1) + s(f) + z(r1) * s(f);
        }
        if (m == 2 && n == 0) {
            const auto r1 = locals[0], r2 = locals[1];
            return s(r1) + s(r2) + z(r1) * z(r2);
        }
        if (m == 1 && n == 2) {
            const auto r1 = locals[0], f1 = fields[0], f2 = fields[1];
            return s(r1) + s(f1) + s(f2) + s(r1) * s(f1) + s(r1) * s(f2) + s(f1) * s(f2) + z(r1) * s(f1) * s(f2);
        }
        if (m == 2 && n == 1) {
            // The lone field term appears unstarred.
            const auto r1 = locals[0], r2 = locals[1], f = fields[0];
            return s(r1) + s(r2) + static_cast<I>(f->order()) + s(r1) * s(r2) + s(r1) * s(f) + s(r2) * s(f) +
                   z(r1) * s(f) * s(r2) + z(r2) * s(f) * s(r1) - z(r1) * z(r2) * s(f);
        }
        if (m == 1 && n == 3) {
            const auto r1 = locals[0], f1 = fields[0], f2 = fields[1], f3 = fields[2];
            return s(r1) + s(f1) + s(f2) + s(f3) + s(r1) * s(f1) + s(r1) * s(f2) + s(r1) * s(f3) +
                   s(f1) * s(f2) + s(f1) * s(f3) + s(f2) * s(f3) + s(r1) * s(f1) * s(f2) +
                   s(r1) * s(f1) * s(f3) + s(r1) * s(f2) * s(f3) + s(f1) * s(f2) * s(f3) +
                   z(r1) * s(f1) * s(f2) * s(f3);
        }
        if (m == 3 && n == 0) {
            // Mixed terms kept as printed; the final bracketed term is read as a sum.
            const auto r1 = locals[0], r2 = locals[1], r3 = locals[2];
            return s(r1) + s(r2) + s(r3) + s(r1) * s(r2) + s(r1) * s(r3) + s(r2) * s(r3) +
                   z(r1) * s(r1) * s(r2) + z(r2) * s(r3) * s(r1) + z(r3) * s(r3) * s(r2) -
                   (z(r1) * z(r2) * s(r3) + z(r1) * z(r3) * s(r2) + z(r2) * z(r3) * s(r1) + z(r1) * z(r2) * z(r3));
        }
        return std::nullopt;
    };
    const auto a = eval([](const FiniteRing& r) { return r.order() - 1; });
    if (!a) return std::nullopt;
    const auto b = eval([](const FiniteRing& r) { return r.unit_count(); });
    static const std::map<std::pair<std::size_t, std::size_t>, std::string> kForms{
        {{1, 1}, "local-field"},       {{2, 0}, "local-local"},
        {{1, 2}, "local-field-field"}, {{2, 1}, "local-local-field"},
        {{1, 3}, "local-field-field-field"}, {{3, 0}, "three-locals"}};
    CountFormEvaluation e;
    e.form = kForms.at({locals.size(), fields.size()});
    e.ring = join_names(factors);
    e.count = count_zero_divisors(factors);
    e.nonzero_reading = static_cast<std::size_t>(std::max<I>(*a, 0));
    e.unit_reading = static_cast<std::size_t>(std::max<I>(*b, 0));
    return e;
}

std::vector<CountFormEvaluation> count_form_report(const RingLimits& limits) {
    const auto z4 = make_zn(4, limits), z2 = make_zn(2, limits);
    const std::vector<std::pair<std::vector<FiniteRing>, std::size_t>> cases{
        {{z4, z2}, 5},          {{z4, z4}, 11},         {{z4, z2, z2}, 13},
        {{z4, z4, z2}, 27},     {{z4, z2, z2, z2}, 29}, {{z4, z4, z4}, 59}};
    std::vector<CountFormEvaluation> out;
    for (const auto& [factors, stated] : cases) {
        auto e = evaluate_count_form(factors);
        e->stated = stated;
        out.push_back(std::move(*e));
    }
    return out;
}

}  // namespace zdtpc
