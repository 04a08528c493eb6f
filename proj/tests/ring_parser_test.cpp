#include <gtest/gtest.h>

#include <random>

#include "zdtpc/catalog.hpp"
#include "zdtpc/ring_parser.hpp"

using namespace zdtpc;

namespace {

RingExpr zn(std::uint64_t n) { return {ZnNode{n}, {}}; }

}  // namespace

TEST(ParseRing, ProductOfTwo) {
    const auto e = parse_ring("Z2 x Z8");
    const auto* p = std::get_if<ProductNode>(&e.node);
    ASSERT_NE(p, nullptr);
    ASSERT_EQ(p->factors.size(), 2u);
    EXPECT_EQ(p->factors[0], zn(2));
    EXPECT_EQ(p->factors[1], zn(8));
    EXPECT_EQ(e.span, (SourceSpan{0, 7}));
    EXPECT_EQ(p->factors[1].span, (SourceSpan{5, 7}));
}

TEST(ParseRing, Quotient) {
    const auto e = parse_ring("Z3[x]/(x^2)");
    const auto* q = std::get_if<QuotientNode>(&e.node);
    ASSERT_NE(q, nullptr);
    EXPECT_EQ(q->m, 3u);
    EXPECT_EQ(q->poly, (std::vector<std::int64_t>{0, 0, 1}));
}

TEST(ParseRing, Atom) { EXPECT_EQ(parse_ring("Z4"), zn(4)); }

TEST(ParseRing, OperatorsAndWhitespace) {
    const auto expected = parse_ring("Z2 x Z3 x Z5");
    EXPECT_EQ(parse_ring("Z2*Z3*Z5"), expected);
    EXPECT_EQ(parse_ring("  Z2 \xC3\x97 Z3\xC3\x97Z5 "), expected);
    EXPECT_EQ(parse_ring("Z2xZ3xZ5"), expected);
    EXPECT_EQ(std::get<ProductNode>(expected.node).factors.size(), 3u);
}

TEST(ParseRing, FieldForms) {
    EXPECT_EQ(parse_ring("F4"), (RingExpr{GfNode{2, 2}, {}}));
    EXPECT_EQ(parse_ring("GF(9)"), (RingExpr{GfNode{3, 2}, {}}));
    EXPECT_EQ(parse_ring("GF( 7 )"), (RingExpr{GfNode{7, 1}, {}}));
    // Z4 stays the integers mod 4.
    EXPECT_EQ(parse_ring("Z4"), zn(4));
    EXPECT_NE(parse_ring("Z4"), parse_ring("F4"));
}

TEST(ParseRing, PolynomialTerms) {
    const auto e = parse_ring("Z5[x]/( x^3 + 2*x + 3x^2+1 + x )");
    EXPECT_EQ(std::get<QuotientNode>(e.node).poly, (std::vector<std::int64_t>{1, 3, 3, 1}));
    EXPECT_EQ(render(e), "Z5[x]/(x^3+3*x^2+3*x+1)");
}

TEST(ParseRing, CatalogAndTable) {
    const auto e = parse_ring("@Z8X-2X-X2p4 x Z2");
    const auto& p = std::get<ProductNode>(e.node);
    EXPECT_EQ(p.factors[0], (RingExpr{TableRefNode{"Z8X-2X-X2p4", true}, {}}));
    const auto t = parse_ring("table:some/dir/ring.json x Z3");
    EXPECT_EQ(std::get<ProductNode>(t.node).factors[0],
              (RingExpr{TableRefNode{"some/dir/ring.json", false}, {}}));
}

TEST(ParseRing, Errors) {
    try {
        parse_ring("F6");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("not a prime power"), std::string::npos);
        EXPECT_EQ(e.position(), 1u);
    }
    try {
        parse_ring("@nope");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("Z4X-X2"), std::string::npos);
    }
    try {
        parse_ring("Z2 x Q3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    for (const char* bad : {"", "  ", "Z", "Z0", "Z2 x", "Z2 Z3", "Z3[x]/(x^2", "Z3[y]/(x)", "GF(6)", "Z3[x]/(2*)",
                            "Z3[x]/()", "Z99999999999999", "table:", "@"})
        EXPECT_THROW(parse_ring(bad), ParseError) << bad;
}

TEST(Resolve, Examples) {
    EXPECT_EQ(resolve(parse_ring("Z12")).order(), 12u);
    const auto fixture = resolve(parse_ring("@Z8X-2X-X2p4"));
    EXPECT_EQ(fixture.order(), 16u);
    EXPECT_EQ(fixture.kind(), RingKind::table);
    EXPECT_EQ(resolve(parse_ring("Z4 x Z2 x Z2")).order(), 16u);
    EXPECT_TRUE(resolve(parse_ring("F4")).is_field());
    EXPECT_FALSE(resolve(parse_ring("Z4")).is_field());
    EXPECT_EQ(resolve_factors(parse_ring("Z4 x Z2 x Z2")).size(), 3u);
    EXPECT_EQ(resolve_factors(parse_ring("Z4")).size(), 1u);
}

TEST(Resolve, ErrorsCarrySpans) {
    try {
        resolve(parse_ring("Z2 x Z3[x]/(2x^2+1)"));
        FAIL();
    } catch (const ResolveError& e) {
        EXPECT_EQ(e.span(), (SourceSpan{5, 19}));
    }
    try {
        resolve(parse_ring("Z64 x Z65"));
        FAIL();
    } catch (const ResolveError& e) {
        EXPECT_EQ(e.span(), (SourceSpan{0, 9}));
    }
    EXPECT_THROW(resolve(parse_ring("table:/nonexistent/ring.json")), ResolveError);
}

namespace {

class ExprFuzzer {
public:
    explicit ExprFuzzer(std::uint64_t seed) : rng_(seed) {}

    RingExpr expr() {
        const int n = pick(4) == 0 ? 1 : 2 + pick(3);
        if (n == 1) return atom();
        ProductNode p;
        for (int i = 0; i < n; ++i) p.factors.push_back(atom());
        return {std::move(p), {}};
    }

    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

private:
    RingExpr atom() {
        static const std::uint64_t prime_powers[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121};
        switch (pick(5)) {
            case 0: return {ZnNode{1 + static_cast<std::uint64_t>(pick(5000))}, {}};
            case 1: {
                const auto q = prime_powers[pick(12)];
                const auto [p, k] = prime_power(q);
                return {GfNode{p, k}, {}};
            }
            case 2: {
                std::vector<std::int64_t> poly(1 + pick(5));
                for (auto& c : poly) c = pick(3) == 0 ? 0 : pick(30);
                while (!poly.empty() && poly.back() == 0) poly.pop_back();
                return {QuotientNode{1 + static_cast<std::uint64_t>(pick(20)), poly}, {}};
            }
            case 3: {
                const auto slugs = catalog_slugs();
                return {TableRefNode{slugs[pick(static_cast<int>(slugs.size()))], true}, {}};
            }
            default: return {TableRefNode{"dir/file" + std::to_string(pick(100)) + ".json", false}, {}};
        }
    }

    std::mt19937_64 rng_;
};

}  // namespace

TEST(ParseRingProperty, RenderRoundTrip) {
    ExprFuzzer fuzz(20240611);
    for (int i = 0; i < 2000; ++i) {
        const auto e = fuzz.expr();
        const auto text = render(e);
        RingExpr back;
        ASSERT_NO_THROW(back = parse_ring(text)) << text;
        EXPECT_EQ(back, e) << text;
        EXPECT_EQ(render(back), text);
    }
}

TEST(ParseRingProperty, MutatedInputsOnlyThrowParseErrors) {
    ExprFuzzer fuzz(99);
    const std::string alphabet = "ZFGx*()[]/^+@: 0123456789\xC3\x97-";
    for (int i = 0; i < 3000; ++i) {
        std::string text = render(fuzz.expr());
        const int edits = 1 + fuzz.pick(3);
        for (int k = 0; k < edits && !text.empty(); ++k) {
            const auto at = static_cast<std::size_t>(fuzz.pick(static_cast<int>(text.size())));
            switch (fuzz.pick(3)) {
                case 0: text.erase(at, 1); break;
                case 1: text.insert(at, 1, alphabet[fuzz.pick(static_cast<int>(alphabet.size()))]); break;
                default: text[at] = alphabet[fuzz.pick(static_cast<int>(alphabet.size()))];
            }
        }
        try {
            const auto e = parse_ring(text);
            EXPECT_EQ(parse_ring(render(e)), e) << text;
        } catch (const ParseError&) {
        }
    }
}
