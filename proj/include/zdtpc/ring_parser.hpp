#pragma once

// Ring expressions, the textual ring syntax used on the command line:
//
//   expr  := atom (op atom)*            op := "x" | "×" | "*"
//   atom  := "Z" int                    integers mod n
//          | "F" int | "GF(" int ")"    finite field, int must be a prime power
//          | "Z" int "[x]/(" poly ")"   univariate quotient, poly monic
//          | "@" name                   shipped catalog ring
//          | "table:" path              table ring fixture file; the path runs to the next whitespace
//   poly  := term ("+" term)*           term := c | x | x^e | c*x | c*x^e | cx | cx^e
//
// Whitespace between tokens is insignificant. Catalog names never contain a lowercase x.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdtpc/error.hpp"
#include "zdtpc/ring.hpp"

namespace zdtpc {

struct RingExpr;

struct ZnNode {
    std::uint64_t n = 0;
    friend bool operator==(const ZnNode&, const ZnNode&) = default;
};

struct GfNode {
    std::uint64_t p = 0;
    unsigned k = 0;
    friend bool operator==(const GfNode&, const GfNode&) = default;
};

struct QuotientNode {
    std::uint64_t m = 0;
    /// Constant term first; like terms summed, trailing zeros trimmed, not reduced mod m.
    std::vector<std::int64_t> poly;
    friend bool operator==(const QuotientNode&, const QuotientNode&) = default;
};

struct TableRefNode {
    std::string ref;
    bool catalog = true;  ///< '@name' when true, 'table:path' otherwise
    friend bool operator==(const TableRefNode&, const TableRefNode&) = default;
};

struct ProductNode {
    std::vector<RingExpr> factors;
};

struct RingExpr {
    std::variant<ZnNode, GfNode, QuotientNode, TableRefNode, ProductNode> node;
    SourceSpan span;
};

/// Structural equality; spans are ignored.
bool operator==(const RingExpr& a, const RingExpr& b);
bool operator==(const ProductNode& a, const ProductNode& b);

RingExpr parse_ring(std::string_view text);
/// Canonical text; parse_ring(render(e)) == e.
std::string render(const RingExpr& expr);

struct ResolveOptions {
    RingLimits limits;
};

FiniteRing resolve(const RingExpr& expr, const ResolveOptions& options = {});
/// Top-level factors in order; a non-product expression yields one factor.
std::vector<FiniteRing> resolve_factors(const RingExpr& expr, const ResolveOptions& options = {});

}  // namespace zdtpc
