#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zdtpc/catalog.hpp"
#include "zdtpc/ring.hpp"

using namespace zdtpc;

namespace {

std::vector<Element> iota_set(std::initializer_list<Element> xs) { return std::vector<Element>(xs); }

// Independent oracle: nonzero x with xy = 0 for some nonzero y, by raw table scan.
std::vector<Element> zero_divisors_by_scan(const FiniteRing& r) {
    std::vector<Element> out;
    for (Element x = 1; x < r.order(); ++x)
        for (Element y = 1; y < r.order(); ++y)
            if (r.mul(x, y) == 0) {
                out.push_back(x);
                break;
            }
    return out;
}

bool has_inverse_by_scan(const FiniteRing& r, Element x) {
    for (Element y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == r.one()) return true;
    return false;
}

std::vector<FiniteRing> assorted_rings() {
    std::vector<FiniteRing> out;
    for (std::uint64_t n : {2, 3, 4, 6, 8, 9, 12, 16, 25, 27, 30, 36})
        out.push_back(make_zn(n));
    out.push_back(make_gf(2, 2));
    out.push_back(make_gf(2, 3));
    out.push_back(make_gf(3, 2));
    const std::int64_t x2[] = {0, 0, 1};
    out.push_back(make_quotient(3, x2));
    out.push_back(make_quotient(4, x2));
    const FiniteRing pair[] = {make_zn(2), make_zn(8)};
    out.push_back(make_product(pair));
    const FiniteRing triple[] = {make_zn(4), make_gf(2, 2), make_zn(3)};
    out.push_back(make_product(triple));
    for (const auto& e : ring_catalog()) out.push_back(make_table_ring(e.spec));
    return out;
}

}  // namespace

TEST(IntegersMod, UnitsOfTwelveMatchGcd) {
    const auto r = make_zn(12);
    EXPECT_EQ(r.order(), 12u);
    std::vector<Element> by_gcd;
    for (Element i = 1; i < 12; ++i)
        if (std::gcd(i, 12u) == 1) by_gcd.push_back(i);
    EXPECT_EQ(by_gcd, iota_set({1, 5, 7, 11}));
    EXPECT_EQ(r.units(), by_gcd);
    EXPECT_EQ(r.zero_divisors_nonzero(), iota_set({2, 3, 4, 6, 8, 9, 10}));
    EXPECT_FALSE(r.is_local());
}

TEST(IntegersMod, TwoIsAField) {
    const auto r = make_zn(2);
    EXPECT_TRUE(r.is_field());
    EXPECT_TRUE(r.zero_divisors_nonzero().empty());
}

TEST(IntegersMod, NineHasTwoZeroDivisors) {
    EXPECT_EQ(make_zn(9).zero_divisors_nonzero(), iota_set({3, 6}));
}

TEST(IntegersMod, BoundsAreEnforced) {
    EXPECT_THROW(make_zn(1), ConstructionError);
    EXPECT_THROW(make_zn(0), ConstructionError);
    EXPECT_THROW(make_zn(4097), ConstructionError);
    RingLimits small;
    small.order_cap = 10;
    EXPECT_THROW(make_zn(11, small), ConstructionError);
    EXPECT_NO_THROW(make_zn(10, small));
    try {
        make_zn(5000);
        FAIL();
    } catch (const ConstructionError& e) {
        EXPECT_NE(std::string(e.what()).find("4096"), std::string::npos);
    }
}

TEST(IntegersMod, LocalAndReducedFlags) {
    EXPECT_TRUE(make_zn(8).is_local());
    EXPECT_FALSE(make_zn(8).is_reduced());
    EXPECT_FALSE(make_zn(12).is_local());
    EXPECT_TRUE(make_zn(30).is_reduced());
    EXPECT_FALSE(make_zn(12).is_reduced());
}

TEST(GaloisField, PrimeDegreeOneIsIntegersMod) {
    const auto r = make_gf(2, 1);
    EXPECT_EQ(r.order(), 2u);
    EXPECT_EQ(r.kind(), RingKind::integers_mod);
    EXPECT_TRUE(r.is_field());
}

TEST(GaloisField, FourAndNineAreFields) {
    const auto f4 = make_gf(2, 2);
    EXPECT_EQ(f4.order(), 4u);
    for (Element x = 1; x < 4; ++x) EXPECT_TRUE(has_inverse_by_scan(f4, x)) << x;
    EXPECT_TRUE(f4.is_field());

    const auto f9 = make_gf(3, 2);
    EXPECT_EQ(f9.order(), 9u);
    EXPECT_TRUE(zero_divisors_by_scan(f9).empty());
    EXPECT_TRUE(f9.zero_divisors_nonzero().empty());
    EXPECT_EQ(f9.name(), "F9");
}

TEST(GaloisField, LeastIrreducibleModulus) {
    // Oracle: degree 2 and 3 polynomials are irreducible iff they have no root.
    auto rootless = [](std::uint64_t p, const std::vector<std::int64_t>& f) {
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t v = 0, xp = 1;
            for (auto c : f) {
                v = (v + static_cast<std::uint64_t>(c) * xp) % p;
                xp = xp * x % p;
            }
            if (v == 0) return false;
        }
        return true;
    };
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned k : {2u, 3u}) {
            // Brute force the least rootless monic polynomial, constant term first.
            std::vector<std::int64_t> best;
            std::vector<std::int64_t> f(k + 1, 0);
            f[k] = 1;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < k; ++i) total *= p;
            std::vector<std::vector<std::int64_t>> candidates;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (unsigned i = k; i-- > 0;) {
                    f[i] = static_cast<std::int64_t>(c % p);
                    c /= p;
                }
                if (rootless(p, f)) candidates.push_back(f);
            }
            ASSERT_FALSE(candidates.empty());
            best = *std::min_element(candidates.begin(), candidates.end());
            EXPECT_EQ(least_irreducible(p, k), best) << "p=" << p << " k=" << k;
        }
    }
    EXPECT_EQ(least_irreducible(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
    EXPECT_EQ(least_irreducible(3, 2), (std::vector<std::int64_t>{1, 0, 1}));
}

TEST(GaloisField, RejectsBadParameters) {
    EXPECT_THROW(make_gf(4, 1), ConstructionError);
    EXPECT_THROW(make_gf(2, 13), ConstructionError);
    EXPECT_THROW(make_gf(3, 0), ConstructionError);
}

TEST(Quotient, ThreeModSquare) {
    const std::int64_t x2[] = {0, 0, 1};
    const auto r = make_quotient(3, x2);
    EXPECT_EQ(r.order(), 9u);
    EXPECT_TRUE(r.is_local());
    const auto zd = r.zero_divisors_nonzero();
    ASSERT_EQ(zd.size(), 2u);
    EXPECT_EQ(r.element_name(zd[0]), "x");
    EXPECT_EQ(r.element_name(zd[1]), "2x");
    EXPECT_EQ(r.name(), "Z3[x]/(x^2)");
}

TEST(Quotient, TwoModSquareHasOneZeroDivisor) {
    const std::int64_t x2[] = {0, 0, 1};
    const auto r = make_quotient(2, x2);
    EXPECT_EQ(r.order(), 4u);
    ASSERT_EQ(r.zero_divisors_nonzero().size(), 1u);
    EXPECT_EQ(r.element_name(r.zero_divisors_nonzero()[0]), "x");
}

TEST(Quotient, FourModSquareHasSixteenElements) {
    const std::int64_t x2[] = {0, 0, 1};
    const auto r = make_quotient(4, x2);
    EXPECT_EQ(r.order(), 16u);
    EXPECT_TRUE(r.is_local());
    EXPECT_FALSE(r.is_reduced());
}

TEST(Quotient, RejectsNonMonicAndConstant) {
    const std::int64_t non_monic[] = {1, 0, 2};
    EXPECT_THROW(make_quotient(4, non_monic), ConstructionError);
    const std::int64_t constant[] = {1};
    EXPECT_THROW(make_quotient(4, constant), ConstructionError);
    const std::int64_t wraps_to_zero[] = {1, 4};
    EXPECT_THROW(make_quotient(4, wraps_to_zero), ConstructionError);
}

TEST(Quotient, ReducesCoefficientsModM) {
    // x^2 + 5x + 6 over Z5 is x^2 + 1.
    const std::int64_t f[] = {6, 5, 1};
    const auto r = make_quotient(5, f);
    const Element x = r.find_element("x");
    ASSERT_LT(x, r.order());
    EXPECT_EQ(r.mul(x, x), r.neg(r.one()));
}

TEST(TableRing, ShippedFixturesValidate) {
    for (const auto& e : ring_catalog()) {
        SCOPED_TRACE(e.slug);
        const auto r = make_table_ring(e.spec);
        EXPECT_NO_THROW(validate_ring_axioms(r));
        if (!e.exceptional) continue;
        EXPECT_EQ(r.order(), 16u);
        EXPECT_TRUE(r.is_local());
        EXPECT_FALSE(r.is_reduced());
        EXPECT_GT(r.zero_divisor_count() + 1, 2u);
    }
}

TEST(TableRing, SevenExceptionalFixtures) {
    std::size_t exceptional = 0;
    for (const auto& e : ring_catalog()) exceptional += e.exceptional;
    EXPECT_EQ(exceptional, 7u);
}

TEST(TableRing, EightByTwoFixture) {
    TableRingSpec spec;
    spec.name = "Z8[X]/(2X, X^2 + 4)";
    spec.moduli = {8, 2};
    spec.one = {1, 0};
    spec.products = {{{1, 0}, {0, 1}}, {{0, 1}, {4, 0}}};
    spec.basis = {"1", "X"};
    const auto r = make_table_ring(spec);
    EXPECT_EQ(r.order(), 16u);
    const Element x = r.find_element("X");
    ASSERT_LT(x, r.order());
    EXPECT_EQ(r.element_name(r.mul(x, x)), "4");
    EXPECT_EQ(r.add(x, x), 0u);
}

TEST(TableRing, MutatedFixtureIsRejected) {
    const auto* entry = find_catalog_entry("Z8X-2X-X2p4");
    ASSERT_NE(entry, nullptr);
    auto spec = entry->spec;
    spec.products[1][1] = {2, 0};  // X*X = 2 breaks 2X = 0
    EXPECT_THROW(make_table_ring(spec), ValidationError);

    auto asym = entry->spec;
    asym.products[0][1] = {0, 0};
    EXPECT_THROW(make_table_ring(asym), ValidationError);
}

TEST(TableRing, NonAssociativeTableIsRejected) {
    // e1*e1 = e2, e2*e2 = e1, e1*e2 = 0 over Z2^3 with identity e0.
    TableRingSpec spec;
    spec.name = "bad";
    spec.moduli = {2, 2, 2};
    spec.one = {1, 0, 0};
    spec.products = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                     {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                     {{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}};
    try {
        make_table_ring(spec);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
    }
}

TEST(TableRing, DegenerateTwoElementRing) {
    TableRingSpec spec;
    spec.name = "Z2 table";
    spec.moduli = {2};
    spec.one = {1};
    spec.products = {{{1}}};
    const auto r = make_table_ring(spec);
    EXPECT_EQ(r.order(), 2u);
    EXPECT_TRUE(r.is_field());
}

TEST(TableRing, JsonRoundTrip) {
    for (const auto& e : ring_catalog()) {
        const auto again = table_spec_from_json(table_spec_to_json(e.spec));
        EXPECT_EQ(again.moduli, e.spec.moduli);
        EXPECT_EQ(again.products, e.spec.products);
        EXPECT_EQ(again.name, e.spec.name);
    }
    EXPECT_THROW(table_spec_from_json("{\"name\": 1}"), ValidationError);
    EXPECT_THROW(table_spec_from_json("not json"), ValidationError);
}

TEST(Product, Orders) {
    const FiniteRing a[] = {make_zn(2), make_zn(8)};
    const auto r = make_product(a);
    EXPECT_EQ(r.order(), 16u);
    EXPECT_EQ(r.zero_divisor_count(), 11u);
    EXPECT_EQ(r.name(), "Z2 x Z8");

    const FiniteRing b[] = {make_zn(2), make_zn(2)};
    EXPECT_EQ(make_product(b).zero_divisor_count(), 2u);
    EXPECT_TRUE(make_product(b).is_reduced());
    EXPECT_FALSE(make_product(b).is_local());

    const FiniteRing c[] = {make_zn(4), make_zn(4)};
    EXPECT_EQ(make_product(c).zero_divisor_count(), 16u - 4u - 1u);
}

TEST(Product, CoordinatesRoundTrip) {
    const FiniteRing f[] = {make_zn(3), make_zn(4), make_zn(5)};
    const auto r = make_product(f);
    for (Element a = 0; a < r.order(); ++a) {
        const auto c = r.coordinates(a);
        ASSERT_EQ(c.size(), 3u);
        EXPECT_EQ(r.from_coordinates(c), a);
    }
    // First factor most significant.
    const Element coords[] = {1, 0, 0};
    EXPECT_EQ(r.from_coordinates(coords), 20u);
    EXPECT_EQ(r.element_name(20), "(1,0,0)");
}

TEST(Product, OverflowIsAnError) {
    const FiniteRing f[] = {make_zn(64), make_zn(65)};
    EXPECT_THROW(make_product(f), ConstructionError);
}

TEST(Product, CoprimeProductsMatchIntegersMod) {
    for (auto [a, b] : {std::pair<Element, Element>{3, 4}, {2, 9}, {4, 5}}) {
        const FiniteRing f[] = {make_zn(a), make_zn(b)};
        const auto prod = make_product(f);
        const auto zn = make_zn(a * b);
        // CRT: residue c maps to (c mod a, c mod b).
        std::vector<Element> phi(a * b);
        for (Element c = 0; c < a * b; ++c) {
            const Element coords[] = {c % a, c % b};
            phi[c] = prod.from_coordinates(coords);
        }
        auto sorted = phi;
        std::sort(sorted.begin(), sorted.end());
        for (Element i = 0; i < a * b; ++i) ASSERT_EQ(sorted[i], i);
        for (Element x = 0; x < a * b; ++x)
            for (Element y = 0; y < a * b; ++y) {
                EXPECT_EQ(phi[zn.add(x, y)], prod.add(phi[x], phi[y]));
                EXPECT_EQ(phi[zn.mul(x, y)], prod.mul(phi[x], phi[y]));
            }
    }
}

TEST(Product, LargeRingWithoutTablesAgreesWithCoordinates) {
    const FiniteRing f[] = {make_zn(8), make_gf(2, 2), make_zn(9), make_zn(2)};
    const auto r = make_product(f);
    EXPECT_EQ(r.order(), 576u);
    EXPECT_FALSE(r.has_tables());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Element x = static_cast<Element>(rng() % r.order());
        const Element y = static_cast<Element>(rng() % r.order());
        const auto cx = r.coordinates(x), cy = r.coordinates(y);
        std::vector<Element> sum(4), prod(4);
        for (std::size_t k = 0; k < 4; ++k) {
            sum[k] = f[k].add(cx[k], cy[k]);
            prod[k] = f[k].mul(cx[k], cy[k]);
        }
        EXPECT_EQ(r.add(x, y), r.from_coordinates(sum));
        EXPECT_EQ(r.mul(x, y), r.from_coordinates(prod));
    }
    EXPECT_EQ(r.unit_count(), 4u * 3u * 6u * 1u);
    EXPECT_EQ(r.zero_divisors_nonzero(), zero_divisors_by_scan(r));
}

TEST(Annihilator, Examples) {
    EXPECT_EQ(make_zn(12).annihilator(4), iota_set({0, 3, 6, 9}));
    const auto z16 = make_zn(16);
    EXPECT_EQ(z16.annihilator(2), iota_set({0, 8}));
    std::vector<Element> all(16);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(z16.annihilator(0), all);
}

TEST(RingProperties, DichotomyAndAnnihilators) {
    for (const auto& r : assorted_rings()) {
        SCOPED_TRACE(r.name());
        EXPECT_EQ(r.unit_count() + r.zero_divisor_count() + 1, r.order());
        EXPECT_EQ(r.zero_divisors_nonzero(), zero_divisors_by_scan(r));
        for (Element x = 0; x < r.order(); ++x) {
            EXPECT_EQ(r.is_unit(x), has_inverse_by_scan(r, x));
            const auto ann = r.annihilator(x);
            ASSERT_FALSE(ann.empty());
            EXPECT_EQ(ann.front(), 0u);
            const bool self = std::binary_search(ann.begin(), ann.end(), x);
            EXPECT_EQ(self, r.mul(x, x) == 0);
        }
    }
}

TEST(RingProperties, LocalMeansZeroDivisorsCloseUnderAddition) {
    for (const auto& r : assorted_rings()) {
        SCOPED_TRACE(r.name());
        auto zd = r.zero_divisors_nonzero();
        zd.push_back(0);
        bool closed = true;
        for (auto a : zd)
            for (auto b : zd) {
                const auto s = r.add(a, b);
                if (s != 0 && !r.is_zero_divisor(s)) closed = false;
            }
        EXPECT_EQ(r.is_local(), closed);
    }
}

TEST(RingProperties, ValidatorAcceptsEveryConstructor) {
    for (const auto& r : assorted_rings()) {
        if (r.order() > 64) continue;
        EXPECT_NO_THROW(validate_ring_axioms(r)) << r.name();
    }
}

TEST(PrimeHelpers, PrimePower) {
    EXPECT_EQ(prime_power(8), (std::pair<std::uint64_t, unsigned>{2, 3}));
    EXPECT_EQ(prime_power(6), (std::pair<std::uint64_t, unsigned>{0, 0}));
    EXPECT_EQ(prime_power(1), (std::pair<std::uint64_t, unsigned>{0, 0}));
    EXPECT_EQ(prime_power(13), (std::pair<std::uint64_t, unsigned>{13, 1}));
    EXPECT_TRUE(is_prime(4093));
    EXPECT_FALSE(is_prime(4095));
}
