#pragma once

// Finite commutative rings with identity, addressed by dense element indices.
//
// Every ring has elements 0..order()-1. Index 0 is always the additive identity.
// Arithmetic for rings of order <= RingLimits::table_threshold is served from
// precomputed tables; larger rings compute through their constructor's backend.
//
// Index encodings per constructor:
//   make_zn        residue i <-> index i
//   make_gf,
//   make_quotient  c_0 + c_1 x + ... <-> c_0 + c_1 m + c_2 m^2 + ...
//   make_table_ring coordinates (c_0..c_{k-1}) <-> c_0 + c_1 m_0 + c_2 m_0 m_1 + ...
//   make_product   (a_1..a_r) <-> mixed radix with the FIRST factor most significant,
//                  so index order equals lexicographic tuple order.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdtpc/error.hpp"

namespace zdtpc {

using Element = std::uint32_t;

struct RingLimits {
    std::size_t order_cap = 4096;
    std::size_t table_threshold = 256;
};

enum class RingKind { integers_mod, galois_field, quotient, table, product };

std::string_view to_string(RingKind kind);

/// Additive group Z_{m_1} x ... x Z_{m_k} with multiplication given on the basis e_i.
struct TableRingSpec {
    std::string name;
    std::vector<std::uint32_t> moduli;
    std::vector<std::uint32_t> one;
    /// products[i][j] = e_i * e_j as a coordinate vector.
    std::vector<std::vector<std::vector<std::uint32_t>>> products;
    /// Display names of the basis elements; defaults to e0, e1, ...
    std::vector<std::string> basis;
};

namespace detail {
struct RingData;
}

class FiniteRing {
public:
    std::size_t order() const noexcept;
    Element zero() const noexcept { return 0; }
    Element one() const noexcept;

    Element add(Element a, Element b) const;
    Element mul(Element a, Element b) const;
    Element neg(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    const std::string& name() const noexcept;
    RingKind kind() const noexcept;
    std::string element_name(Element a) const;
    /// Index of the element whose display name is `text`, or order() if none matches.
    Element find_element(std::string_view text) const;

    bool is_unit(Element a) const;
    /// True for nonzero zero-divisors only.
    bool is_zero_divisor(Element a) const;
    std::vector<Element> units() const;
    std::vector<Element> zero_divisors_nonzero() const;
    std::size_t unit_count() const noexcept;
    std::size_t zero_divisor_count() const noexcept;

    /// {y : xy = 0}, ascending, always containing 0.
    std::vector<Element> annihilator(Element x) const;

    bool is_local() const noexcept;
    bool is_reduced() const noexcept;
    bool is_field() const noexcept;

    /// Factors of a product ring in construction order; empty for every other kind.
    std::span<const FiniteRing> factors() const noexcept;
    /// Coordinates of a product element; a single coordinate equal to `a` otherwise.
    std::vector<Element> coordinates(Element a) const;
    Element from_coordinates(std::span<const Element> coords) const;

    bool has_tables() const noexcept;
    bool same_as(const FiniteRing& other) const noexcept { return data_ == other.data_; }

    explicit FiniteRing(std::shared_ptr<const detail::RingData> data);

private:
    void check(Element a) const;

    std::shared_ptr<const detail::RingData> data_;
};

FiniteRing make_zn(std::uint64_t n, const RingLimits& limits = {});
FiniteRing make_gf(std::uint64_t p, unsigned k, const RingLimits& limits = {});
/// Z_m[x]/(f) with f monic; `coefficients` is constant-term first.
FiniteRing make_quotient(std::uint64_t m, std::span<const std::int64_t> coefficients,
                         const RingLimits& limits = {});
FiniteRing make_table_ring(const TableRingSpec& spec, const RingLimits& limits = {});
FiniteRing make_product(std::span<const FiniteRing> factors, const RingLimits& limits = {});

/// Exhaustive check of commutativity, associativity, distributivity and identity laws.
/// Throws ValidationError naming the first failing tuple.
void validate_ring_axioms(const FiniteRing& ring);

bool is_prime(std::uint64_t n);
/// (p, k) with n = p^k, or (0, 0) if n is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

/// Lexicographically least monic irreducible polynomial of degree k over Z_p, compared on the
/// coefficient tuple with the constant term first. Result includes the leading 1.
std::vector<std::int64_t> least_irreducible(std::uint64_t p, unsigned k);

}  // namespace zdtpc
