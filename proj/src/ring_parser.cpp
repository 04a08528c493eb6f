#include "zdtpc/ring_parser.hpp"

#include <cctype>
#include <limits>

#include "zdtpc/catalog.hpp"

namespace zdtpc {

bool operator==(const ProductNode& a, const ProductNode& b) { return a.factors == b.factors; }
bool operator==(const RingExpr& a, const RingExpr& b) { return a.node == b.node; }

namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7
constexpr std::uint64_t kMaxLiteral = 1'000'000'000'000ULL;

bool is_name_char(char c) {
    return c != 'x' && (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' || c == '+');
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExpr parse() {
        skip_ws();
        if (at_end()) fail("empty ring expression");
        const std::size_t start = pos_;
        std::vector<RingExpr> atoms;
        atoms.push_back(atom());
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (!product_op()) fail("expected 'x', '*' or '\xC3\x97' between factors");
            skip_ws();
            if (at_end()) fail("expected a factor after the product operator");
            atoms.push_back(atom());
        }
        if (atoms.size() == 1) return std::move(atoms.front());
        RingExpr out;
        out.node = ProductNode{std::move(atoms)};
        out.span = {start, pos_};
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool lit(std::string_view s) {
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool product_op() { return lit("x") || lit("*") || lit(kTimes); }

    std::uint64_t integer(bool allow_zero = false) {
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > kMaxLiteral) fail_at("integer literal too large", start);
            ++pos_;
        }
        if (v == 0 && !allow_zero) fail_at("integer must be positive", start);
        return v;
    }

    RingExpr atom() {
        const std::size_t start = pos_;
        RingExpr out;
        if (lit("GF")) {
            expect('(');
            skip_ws();
            const std::size_t at = pos_;
            const auto q = integer();
            out.node = field(q, at);
            expect(')');
        } else if (lit("table:")) {
            const std::size_t at = pos_;
            while (!at_end() && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == at) fail("expected a path after 'table:'");
            out.node = TableRefNode{std::string(text_.substr(at, pos_ - at)), false};
        } else if (lit("@")) {
            const std::size_t at = pos_;
            while (!at_end() && is_name_char(peek())) ++pos_;
            std::string name(text_.substr(at, pos_ - at));
            if (name.empty()) fail("expected a catalog name after '@'");
            if (!find_catalog_entry(name)) {
                std::string known;
                for (const auto& s : catalog_slugs()) known += (known.empty() ? "" : ", ") + s;
                fail_at("unknown catalog ring '" + name + "'; known names: " + known, at);
            }
            out.node = TableRefNode{std::move(name), true};
        } else if (lit("Z")) {
            const auto n = integer();
            const std::size_t save = pos_;
            skip_ws();
            if (peek() == '[') {
                ++pos_;
                skip_ws();
                if (!lit("x")) fail("expected 'x' in polynomial ring");
                expect(']');
                expect('/');
                expect('(');
                out.node = QuotientNode{n, poly()};
                expect(')');
            } else {
                pos_ = save;
                out.node = ZnNode{n};
            }
        } else if (lit("F")) {
            const std::size_t at = pos_;
            out.node = field(integer(), at);
        } else {
            fail("expected a ring atom (Z<n>, F<q>, GF(<q>), Z<m>[x]/(<poly>), @<name> or table:<path>)");
        }
        out.span = {start, pos_};
        return out;
    }

    GfNode field(std::uint64_t q, std::size_t at) const {
        const auto [p, k] = prime_power(q);
        if (p == 0) fail_at("field order " + std::to_string(q) + " is not a prime power", at);
        return GfNode{p, k};
    }

    std::vector<std::int64_t> poly() {
        std::vector<std::int64_t> c;
        do {
            skip_ws();
            std::uint64_t coefficient = 1;
            std::uint64_t degree = 0;
            bool have_coefficient = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coefficient = integer(true);
                have_coefficient = true;
                skip_ws();
                if (peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (peek() != 'x') fail("expected 'x' after '*'");
                }
            }
            if (peek() == 'x') {
                ++pos_;
                degree = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    degree = integer(true);
                    if (degree > 64) fail("polynomial degree too large");
                }
            } else if (!have_coefficient) {
                fail("expected a polynomial term");
            }
            if (c.size() <= degree) c.resize(degree + 1, 0);
            c[degree] += static_cast<std::int64_t>(coefficient);
            if (c[degree] > static_cast<std::int64_t>(kMaxLiteral)) fail("coefficient too large");
            skip_ws();
        } while (lit("+"));
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string render_poly_text(const std::vector<std::int64_t>& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

template <class F>
auto with_span(const RingExpr& e, F&& f) {
    try {
        return f();
    } catch (const ResolveError&) {
        throw;
    } catch (const Error& err) {
        throw ResolveError(err.what(), e.span);
    }
}

}  // namespace

RingExpr parse_ring(std::string_view text) { return Parser(text).parse(); }

std::string render(const RingExpr& expr) {
    struct Visitor {
        std::string operator()(const ZnNode& n) const { return "Z" + std::to_string(n.n); }
        std::string operator()(const GfNode& g) const {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < g.k; ++i) q *= g.p;
            return "F" + std::to_string(q);
        }
        std::string operator()(const QuotientNode& q) const {
            return "Z" + std::to_string(q.m) + "[x]/(" + render_poly_text(q.poly) + ")";
        }
        std::string operator()(const TableRefNode& t) const { return (t.catalog ? "@" : "table:") + t.ref; }
        std::string operator()(const ProductNode& p) const {
            std::string out;
            for (const auto& f : p.factors) out += (out.empty() ? "" : " x ") + render(f);
            return out;
        }
    };
    return std::visit(Visitor{}, expr.node);
}

std::vector<FiniteRing> resolve_factors(const RingExpr& expr, const ResolveOptions& options) {
    if (const auto* p = std::get_if<ProductNode>(&expr.node)) {
        std::vector<FiniteRing> out;
        for (const auto& f : p->factors) out.push_back(resolve(f, options));
        return out;
    }
    return {resolve(expr, options)};
}

FiniteRing resolve(const RingExpr& expr, const ResolveOptions& options) {
    const auto& limits = options.limits;
    return with_span(expr, [&]() -> FiniteRing {
        if (const auto* z = std::get_if<ZnNode>(&expr.node)) return make_zn(z->n, limits);
        if (const auto* g = std::get_if<GfNode>(&expr.node)) return make_gf(g->p, g->k, limits);
        if (const auto* q = std::get_if<QuotientNode>(&expr.node)) return make_quotient(q->m, q->poly, limits);
        if (const auto* t = std::get_if<TableRefNode>(&expr.node)) {
            if (t->catalog) {
                const auto* entry = find_catalog_entry(t->ref);
                if (!entry) throw ConstructionError("unknown catalog ring '" + t->ref + "'");
                return make_table_ring(entry->spec, limits);
            }
            return make_table_ring(load_table_spec(t->ref), limits);
        }
        const auto factors = resolve_factors(expr, options);
        return make_product(factors, limits);
    });
}

}  // namespace zdtpc
