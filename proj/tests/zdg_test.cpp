#include <gtest/gtest.h>

#include <json.hpp>

#include "zdtpc/catalog.hpp"
#include "zdtpc/ring_parser.hpp"
#include "zdtpc/zdg.hpp"

using namespace zdtpc;

namespace {

std::vector<FiniteRing> factors(const char* text) { return resolve_factors(parse_ring(text)); }
FiniteRing ring(const char* text) { return resolve(parse_ring(text)); }

std::vector<std::string> labels(const ZdGraph& z, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(z.graph.label(v));
    return out;
}

/// Every local ring the catalog sweeps cover: Z_{p^k} up to 256, Z_p[x]/(x^2) for p <= 13, and
/// the shipped table rings.
std::vector<FiniteRing> local_catalog() {
    std::vector<FiniteRing> out;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        for (std::uint64_t q = p * p; q <= 256; q *= p) out.push_back(make_zn(q));
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        const std::int64_t x2[] = {0, 0, 1};
        out.push_back(make_quotient(p, x2));
    }
    for (const auto& e : ring_catalog()) out.push_back(make_table_ring(e.spec));
    return out;
}

}  // namespace

TEST(ZeroDivisorGraph, Examples) {
    const auto z12 = zero_divisor_graph(make_zn(12));
    EXPECT_EQ(z12.graph.order(), 7u);
    EXPECT_EQ(z12.graph.size(), 8u);
    EXPECT_EQ(z12.graph.label(0), "2");
    EXPECT_EQ(zero_divisor_graph(ring("Z2 x Z8")).graph.order(), 11u);
    const auto z4 = zero_divisor_graph(make_zn(4));
    EXPECT_EQ(z4.graph.order(), 1u);
    EXPECT_EQ(z4.graph.size(), 0u);
    EXPECT_EQ(zero_divisor_graph(make_gf(2, 3)).graph.order(), 0u);
    EXPECT_EQ(z12.vertex_of(6), 3u);
    EXPECT_THROW(z12.vertex_of(5), PreconditionError);
}

TEST(ZeroDivisorGraph, MatchesPairwiseProducts) {
    std::vector<FiniteRing> rings = local_catalog();
    for (const char* t : {"Z12", "Z30", "Z2 x Z8", "Z4 x Z3", "Z2 x Z2 x Z2", "Z2 x F4", "Z6 x Z4"})
        rings.push_back(ring(t));
    for (const auto& r : rings) {
        const auto z = zero_divisor_graph(r);
        ASSERT_EQ(z.elements, r.zero_divisors_nonzero()) << r.name();
        for (Vertex i = 0; i < z.graph.order(); ++i)
            for (Vertex j = 0; j < z.graph.order(); ++j) {
                const bool product_zero = i != j && r.mul(z.elements[i], z.elements[j]) == 0;
                ASSERT_EQ(z.graph.adjacent(i, j), product_zero) << r.name();
            }
        if (z.graph.order() >= 2) {
            EXPECT_TRUE(is_connected(z.graph)) << r.name();
            EXPECT_LE(*diameter(z.graph), 3u) << r.name();
        }
    }
}

TEST(CapAnn, Examples) {
    EXPECT_EQ(cap_ann(make_zn(12), 2), (std::vector<Element>{6}));
    EXPECT_EQ(cap_ann(make_zn(16), 8), (std::vector<Element>{2, 4, 6, 10, 12, 14}));
    EXPECT_EQ(cap_ann(make_zn(9), 3), (std::vector<Element>{6}));
    EXPECT_THROW(cap_ann(make_zn(12), 5), PreconditionError);
    EXPECT_THROW(cap_ann(make_zn(12), 0), PreconditionError);
}

TEST(CapAnn, SymmetricAndEqualToNeighbourhood) {
    for (const auto& r : local_catalog()) {
        if (r.order() > 64) continue;
        const auto z = zero_divisor_graph(r);
        for (Vertex v = 0; v < z.graph.order(); ++v) {
            const auto ann = cap_ann(r, z.elements[v]);
            std::vector<Element> nb;
            for (auto w : z.graph.neighbors(v)) nb.push_back(z.elements[w]);
            EXPECT_EQ(ann, nb);
            for (auto y : ann) {
                const auto back = cap_ann(r, y);
                EXPECT_TRUE(std::binary_search(back.begin(), back.end(), z.elements[v]));
            }
        }
    }
}

TEST(PairSolver, Examples) {
    const auto z12 = zero_divisor_graph(make_zn(12));
    EXPECT_EQ(z12.names(*tpc_pair_solver(z12)), (std::vector<std::string>{"4", "6"}));
    EXPECT_FALSE(tpc_pair_solver(zero_divisor_graph(ring("Z2 x Z8"))).has_value());
    const auto z16 = zero_divisor_graph(make_zn(16));
    EXPECT_EQ(z16.to_elements(*tpc_pair_solver(z16)), (std::vector<Element>{2, 8}));
    EXPECT_EQ(tpc_pair_solver(zero_divisor_graph(make_zn(7))), CodeSet{});
}

TEST(PairSolver, AgreesWithExactSearchAndCodesArePairs) {
    SearchOptions o;
    o.vertex_bound = 256;
    o.enumeration_bound = 256;
    for (std::uint64_t n = 4; n <= 120; ++n) {
        const auto z = zero_divisor_graph(make_zn(n));
        const auto pair = tpc_pair_solver(z);
        const auto exact = find_tpc(z.graph, o);
        ASSERT_EQ(pair.has_value(), exact.has_value()) << n;
        if (pair) {
            EXPECT_EQ(*pair, *exact) << n;
            EXPECT_TRUE(is_total_perfect_code(z.graph, *pair));
        }
        if (z.graph.order() > 0)
            for (const auto& c : enumerate_tpcs(z.graph, o)) EXPECT_EQ(c.size(), 2u) << n;
    }
}

TEST(DegreeOne, Examples) {
    const auto z16 = zero_divisor_graph(make_zn(16));
    EXPECT_EQ(labels(z16, degree_one_vertices(z16)), (std::vector<std::string>{"2", "6", "10", "14"}));
    EXPECT_TRUE(degree_one_vertices(zero_divisor_graph(make_zn(25))).empty());
    EXPECT_EQ(degree_one_vertices(zero_divisor_graph(make_zn(9))).size(), 2u);
}

TEST(LocalDecider, Examples) {
    const auto z16 = local_decider(make_zn(16));
    EXPECT_TRUE(z16.admits);
    EXPECT_EQ(z16.witness, (std::vector<std::string>{"2", "8"}));
    EXPECT_TRUE(z16.discrepancies.empty());
    EXPECT_TRUE(z16.cross_checked);
    ASSERT_EQ(z16.deciders.size(), 4u);
    EXPECT_EQ(z16.deciders[0].id, "local-annihilator-rule");

    const auto z9 = local_decider(make_zn(9));
    EXPECT_TRUE(z9.admits);
    EXPECT_EQ(z9.witness, (std::vector<std::string>{"3", "6"}));

    const auto z25 = local_decider(make_zn(25));
    EXPECT_FALSE(z25.admits);
    EXPECT_TRUE(z25.discrepancies.empty());
    EXPECT_FALSE(local_decider(make_zn(4)).admits);

    EXPECT_THROW(local_decider(make_zn(12)), PreconditionError);
    EXPECT_THROW(local_decider(make_zn(7)), PreconditionError);
}

TEST(LocalDecider, RulesAgreeOnTheLocalCatalog) {
    for (const auto& r : local_catalog()) {
        const auto v = local_decider(r);
        EXPECT_TRUE(v.discrepancies.empty()) << r.name() << " " << verdict_to_json(v);
        for (const auto& d : v.deciders) EXPECT_EQ(d.admits, v.admits) << r.name() << " " << d.id;
    }
}

TEST(CutVertices, Examples) {
    const auto z16 = cut_vertex_report(make_zn(16));
    EXPECT_EQ(z16.articulation_points, (std::vector<Element>{8}));
    EXPECT_EQ(z16.code, (std::vector<Element>{2, 8}));
    EXPECT_EQ(make_zn(16).annihilator(8).size(), 8u);
    EXPECT_TRUE(z16.annihilator_two);
    EXPECT_TRUE(z16.findings.empty());

    const auto z9 = cut_vertex_report(make_zn(9));
    EXPECT_TRUE(z9.articulation_points.empty());
    EXPECT_TRUE(z9.code.has_value());
    EXPECT_TRUE(z9.findings.empty());

    EXPECT_THROW(cut_vertex_report(make_zn(12)), PreconditionError);
}

TEST(CutVertices, ExceptionalFixtures) {
    std::size_t exceptional = 0;
    for (const auto& e : ring_catalog()) {
        const auto r = make_table_ring(e.spec);
        const auto rep = cut_vertex_report(r);
        EXPECT_EQ(rep.exceptional_fingerprint, e.exceptional) << e.slug;
        EXPECT_TRUE(rep.findings.empty()) << e.slug;
        if (!e.exceptional) continue;
        ++exceptional;
        EXPECT_FALSE(rep.articulation_points.empty()) << e.slug;
        EXPECT_FALSE(rep.code.has_value()) << e.slug;
    }
    EXPECT_EQ(exceptional, 7u);
    for (const auto& r : local_catalog()) EXPECT_TRUE(cut_vertex_report(r).findings.empty()) << r.name();
}

TEST(ReducedDecider, Examples) {
    const auto z2 = make_zn(2), z3 = make_zn(3), f4 = make_gf(2, 2);
    const auto two = reduced_decider(std::vector<FiniteRing>{z2, z2});
    EXPECT_TRUE(two.admits);
    EXPECT_EQ(two.deciders[0].id, "reduced-factor-count-rule");
    EXPECT_EQ(two.witness, (std::vector<std::string>{"(0,1)", "(1,0)"}));
    EXPECT_FALSE(reduced_decider(std::vector<FiniteRing>{z2, z2, z2}).admits);
    EXPECT_FALSE(reduced_decider(std::vector<FiniteRing>{z2, z2, z2, z2}).admits);
    const auto k23 = reduced_decider(std::vector<FiniteRing>{z3, f4});
    EXPECT_TRUE(k23.admits);
    EXPECT_TRUE(k23.discrepancies.empty());
    EXPECT_THROW(reduced_decider(std::vector<FiniteRing>{z2, make_zn(4)}), PreconditionError);
    EXPECT_THROW(reduced_decider(std::vector<FiniteRing>{z2}), PreconditionError);
}

TEST(ReducedDecider, AgreesWithExactSearch) {
    std::vector<FiniteRing> fields;
    for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}})
        fields.push_back(make_gf(p, k));
    for (std::size_t a = 0; a < fields.size(); ++a)
        for (std::size_t b = a; b < fields.size(); ++b) {
            const auto v2 = reduced_decider(std::vector<FiniteRing>{fields[a], fields[b]});
            EXPECT_TRUE(v2.admits && v2.discrepancies.empty() && v2.cross_checked);
            for (std::size_t c = b; c < fields.size(); ++c) {
                const auto v3 = reduced_decider(std::vector<FiniteRing>{fields[a], fields[b], fields[c]});
                EXPECT_FALSE(v3.admits);
                EXPECT_TRUE(v3.discrepancies.empty());
            }
        }
}

TEST(MixedDecider, Examples) {
    const auto z4 = make_zn(4), z2 = make_zn(2), z9 = make_zn(9), z3 = make_zn(3);
    const auto a = mixed_decider(std::vector<FiniteRing>{z4}, std::vector<FiniteRing>{z2});
    EXPECT_TRUE(a.admits);
    EXPECT_EQ(a.witness, (std::vector<std::string>{"(0,1)", "(2,0)"}));
    EXPECT_TRUE(mixed_decider(std::vector<FiniteRing>{z4}, std::vector<FiniteRing>{z3}).admits);
    const auto b = mixed_decider(std::vector<FiniteRing>{z9}, std::vector<FiniteRing>{z2});
    EXPECT_FALSE(b.admits);
    EXPECT_TRUE(b.discrepancies.empty());
    EXPECT_FALSE(mixed_decider(std::vector<FiniteRing>{z4, z4}, {}).admits);
    EXPECT_THROW(mixed_decider(std::vector<FiniteRing>{z2}, {}), PreconditionError);
    EXPECT_THROW(mixed_decider({}, std::vector<FiniteRing>{z4}), PreconditionError);
    EXPECT_THROW(mixed_decider({}, {}), PreconditionError);
}

TEST(DecideRing, ExamplesFromExpressions) {
    auto decide = [](const char* t) { return decide_ring(factors(t)); };
    const auto z12 = decide("Z12");
    EXPECT_TRUE(z12.admits);
    EXPECT_EQ(z12.deciders[0].id, "mixed-case-rule");
    EXPECT_EQ(z12.deciders[0].witness, (std::vector<std::string>{"4", "6"}));
    EXPECT_FALSE(decide("Z2 x Z8").admits);
    EXPECT_FALSE(decide("Z4 x Z4").admits);
    EXPECT_FALSE(decide("Z2 x Z2 x Z2[x]/(x^2)").admits);
    EXPECT_FALSE(decide("Z2 x @Z2XY-X2-XY-Y2").admits);
    const auto f = decide("F8");
    EXPECT_TRUE(f.admits);
    EXPECT_EQ(f.witness, std::vector<std::string>{});
    EXPECT_EQ(f.deciders[0].id, "field-empty-graph");
    for (const char* t : {"Z12", "Z2 x Z8", "Z4 x Z4", "Z30", "Z6 x Z10", "Z2 x Z2 x Z2[x]/(x^2)", "F8"})
        EXPECT_TRUE(decide(t).discrepancies.empty()) << t;
}

TEST(DecideRing, AboveTheCapIsStructuralOnly) {
    ZdgOptions o;
    o.limits.order_cap = 100;
    const auto v = decide_ring(factors("Z4 x Z4 x Z4 x Z4"), o);
    EXPECT_FALSE(v.admits);
    EXPECT_FALSE(v.cross_checked);
    EXPECT_EQ(v.deciders.size(), 1u);
    const auto w = decide_ring(factors("Z8 x Z11 x Z2"), o);
    EXPECT_FALSE(w.cross_checked);
    const auto a = decide_ring(factors("Z9 x Z4 x Z2"), o);
    EXPECT_FALSE(a.admits);
    const auto b = decide_ring(factors("Z2 x Z2[x]/(x^2) x Z2"), o);
    EXPECT_FALSE(b.admits);
    o.limits.order_cap = 40;
    const auto c = decide_ring(factors("Z4 x Z11"), o);
    EXPECT_TRUE(c.admits);
    EXPECT_EQ(c.witness, (std::vector<std::string>{"(0,1)", "(2,0)"}));
}

TEST(DecideRing, NonLocalPiecesFallBackToSearch) {
    // x^2 + x splits over Z2, so this quotient is Z2 x Z2 in disguise.
    const auto v = decide_ring(factors("Z2[x]/(x^2+x)"));
    EXPECT_TRUE(v.admits);
    EXPECT_EQ(v.deciders.front().id, "pair-search");
    EXPECT_TRUE(v.discrepancies.empty());
}

TEST(DecideRing, MixedProductsAgreeWithSearch) {
    std::vector<FiniteRing> locals{make_zn(4), make_zn(8), make_zn(9), make_zn(16), make_zn(25)};
    const std::int64_t x2[] = {0, 0, 1};
    locals.push_back(make_quotient(2, x2));
    locals.push_back(make_quotient(3, x2));
    for (const auto& e : ring_catalog()) locals.push_back(make_table_ring(e.spec));
    std::vector<FiniteRing> fields{make_zn(2), make_zn(3), make_gf(2, 2), make_zn(5), make_zn(7)};
    std::vector<FiniteRing> all = locals;
    all.insert(all.end(), fields.begin(), fields.end());
    std::size_t checked = 0;
    for (std::size_t a = 0; a < locals.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
            std::vector<FiniteRing> pair{locals[a], all[b]};
            if (locals[a].order() * all[b].order() > 512) continue;
            const auto v = decide_ring(pair);
            EXPECT_TRUE(v.discrepancies.empty()) << verdict_to_json(v);
            EXPECT_TRUE(v.cross_checked);
            ++checked;
            for (std::size_t c = 0; c < fields.size(); ++c) {
                std::vector<FiniteRing> triple{locals[a], all[b], fields[c]};
                if (locals[a].order() * all[b].order() * fields[c].order() > 512) continue;
                const auto w = decide_ring(triple);
                EXPECT_TRUE(w.discrepancies.empty()) << verdict_to_json(w);
                ++checked;
            }
        }
    EXPECT_GT(checked, 100u);
}

TEST(VerdictJson, Shape) {
    const auto j = nlohmann::json::parse(verdict_to_json(decide_ring(factors("Z12"))));
    EXPECT_EQ(j["ring"], "Z12");
    EXPECT_EQ(j["admits"], true);
    EXPECT_EQ(j["witness"], nlohmann::json({"4", "6"}));
    EXPECT_EQ(j["deciders"].size(), 3u);
    EXPECT_EQ(j["deciders"][1]["id"], "pair-search");
    EXPECT_EQ(j["cross_checked"], true);
    EXPECT_TRUE(j["discrepancies"].empty());
    const auto n = nlohmann::json::parse(verdict_to_json(decide_ring(factors("Z25"))));
    EXPECT_TRUE(n["witness"].is_null());
}

TEST(Counting, ClosedFormMatchesEnumeration) {
    std::vector<FiniteRing> rings = local_catalog();
    for (const char* t : {"Z12", "Z4 x Z2", "Z4 x Z4 x Z4", "Z2 x F4 x Z9", "Z6 x Z6"}) rings.push_back(ring(t));
    for (const auto& r : rings) {
        const std::vector<FiniteRing> one{r};
        EXPECT_EQ(count_zero_divisors(one), r.zero_divisor_count()) << r.name();
    }
    for (const char* t : {"Z4 x Z2 x Z2 x Z2", "Z9 x Z3 x F4", "Z8 x Z2[x]/(x^2) x Z5"}) {
        const auto fs = factors(t);
        EXPECT_EQ(count_zero_divisors(fs), ring(t).zero_divisor_count()) << t;
    }
}

TEST(Counting, Examples) {
    EXPECT_EQ(count_zero_divisors(factors("Z4 x Z2")), 5u);
    EXPECT_EQ(count_zero_divisors(factors("Z4 x Z2 x Z2")), 13u);
    EXPECT_EQ(count_zero_divisors(factors("Z4 x Z4 x Z4")), 55u);
}

TEST(Counting, FormReport) {
    const auto rep = count_form_report();
    ASSERT_EQ(rep.size(), 6u);
    const std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t, std::size_t>> expected{
        {"local-field", 5, 5, 4, 5},
        {"local-local", 11, 7, 5, 11},
        {"local-field-field", 13, 13, 10, 13},
        {"local-local-field", 27, 28, 17, 27},
        {"local-field-field-field", 29, 29, 22, 29},
        {"three-locals", 55, 53, 23, 59}};
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& [form, count, a, b, stated] = expected[i];
        EXPECT_EQ(rep[i].form, form);
        EXPECT_EQ(rep[i].count, count);
        EXPECT_EQ(rep[i].nonzero_reading, a);
        EXPECT_EQ(rep[i].unit_reading, b);
        EXPECT_EQ(rep[i].stated, stated);
        EXPECT_EQ(ring(rep[i].ring.c_str()).zero_divisor_count(), count);
    }
    EXPECT_TRUE(rep[0].formula_matches());
    EXPECT_FALSE(rep[1].formula_matches());
    EXPECT_FALSE(rep[3].formula_matches());
    EXPECT_FALSE(rep[5].formula_matches());
    EXPECT_FALSE(evaluate_count_form(factors("Z2 x Z3")).has_value());
    EXPECT_FALSE(evaluate_count_form(factors("Z12 x Z2")).has_value());
    EXPECT_EQ(evaluate_count_form(factors("Z9 x Z5"))->form, "local-field");
}
