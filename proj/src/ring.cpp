#include "zdtpc/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zdtpc {

namespace detail {

struct Backend {
    virtual ~Backend() = default;
    virtual Element add(Element a, Element b) const = 0;
    virtual Element mul(Element a, Element b) const = 0;
    virtual Element neg(Element a) const = 0;
    virtual std::string name(Element a) const = 0;
    /// Fills one flag per element when the backend knows its units structurally.
    virtual bool unit_flags(std::vector<char>& /*out*/) const { return false; }
    virtual bool annihilator(Element /*x*/, std::vector<Element>& /*out*/) const { return false; }
};

struct RingData {
    std::string name;
    RingKind kind = RingKind::integers_mod;
    std::size_t order = 0;
    Element one = 0;
    std::unique_ptr<Backend> backend;
    std::vector<Element> add_table;
    std::vector<Element> mul_table;
    std::vector<char> unit;
    std::size_t unit_count = 0;
    bool local = false;
    bool reduced = false;
    bool field = false;
    std::vector<FiniteRing> factors;
    std::vector<std::size_t> strides;
};

}  // namespace detail

namespace {

using detail::Backend;
using detail::RingData;

std::string poly_term(std::uint64_t coefficient, std::size_t degree, bool star) {
    std::string out;
    if (degree == 0) return std::to_string(coefficient);
    if (coefficient != 1) {
        out = std::to_string(coefficient);
        if (star) out += '*';
    }
    out += 'x';
    if (degree > 1) out += '^' + std::to_string(degree);
    return out;
}

/// Highest degree first, e.g. "x^2+2*x+1".
std::string render_poly(std::span<const std::int64_t> c, bool star) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        out += poly_term(static_cast<std::uint64_t>(c[i]), i, star);
    }
    return out.empty() ? "0" : out;
}

class ZnBackend final : public Backend {
public:
    explicit ZnBackend(std::uint64_t n) : n_(n) {}
    Element add(Element a, Element b) const override {
        return static_cast<Element>((std::uint64_t{a} + b) % n_);
    }
    Element mul(Element a, Element b) const override {
        return static_cast<Element>((std::uint64_t{a} * b) % n_);
    }
    Element neg(Element a) const override { return a == 0 ? 0 : static_cast<Element>(n_ - a); }
    std::string name(Element a) const override { return std::to_string(a); }
    bool unit_flags(std::vector<char>& out) const override {
        out.assign(n_, 0);
        for (std::uint64_t a = 0; a < n_; ++a) out[a] = std::gcd(a, n_) == 1 && n_ > 1;
        return true;
    }

private:
    std::uint64_t n_;
};

class PolyBackend final : public Backend {
public:
    /// `modulus` is monic, reduced mod m, degree d = modulus.size() - 1.
    PolyBackend(std::uint64_t m, std::vector<std::int64_t> modulus)
        : m_(m), modulus_(std::move(modulus)), degree_(modulus_.size() - 1) {}

    Element add(Element a, Element b) const override {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < degree_; ++i) x[i] = (x[i] + y[i]) % m_;
        return encode(x);
    }
    Element neg(Element a) const override {
        auto x = decode(a);
        for (auto& c : x) c = (m_ - c) % m_;
        return encode(x);
    }
    Element mul(Element a, Element b) const override {
        auto x = decode(a), y = decode(b);
        std::vector<std::uint64_t> r(2 * degree_ - 1, 0);
        for (std::size_t i = 0; i < degree_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < degree_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % m_;
        }
        for (std::size_t top = r.size(); top-- > degree_;) {
            const std::uint64_t c = r[top];
            if (c == 0) continue;
            // x^top = -(f_0 + ... + f_{d-1} x^{d-1}) x^{top-d}
            for (std::size_t i = 0; i < degree_; ++i) {
                const std::uint64_t sub = (c * static_cast<std::uint64_t>(modulus_[i])) % m_;
                auto& slot = r[top - degree_ + i];
                slot = (slot + m_ - sub) % m_;
            }
            r[top] = 0;
        }
        r.resize(degree_);
        return encode(r);
    }
    std::string name(Element a) const override {
        const auto x = decode(a);
        std::vector<std::int64_t> c(x.begin(), x.end());
        return render_poly(c, false);
    }

private:
    std::vector<std::uint64_t> decode(Element a) const {
        std::vector<std::uint64_t> c(degree_);
        std::uint64_t v = a;
        for (std::size_t i = 0; i < degree_; ++i) {
            c[i] = v % m_;
            v /= m_;
        }
        return c;
    }
    Element encode(const std::vector<std::uint64_t>& c) const {
        std::uint64_t v = 0;
        for (std::size_t i = degree_; i-- > 0;) v = v * m_ + c[i];
        return static_cast<Element>(v);
    }

    std::uint64_t m_;
    std::vector<std::int64_t> modulus_;
    std::size_t degree_;
};

class TableBackend final : public Backend {
public:
    explicit TableBackend(TableRingSpec spec) : spec_(std::move(spec)) {
        if (spec_.basis.size() != spec_.moduli.size()) {
            spec_.basis.clear();
            for (std::size_t i = 0; i < spec_.moduli.size(); ++i) spec_.basis.push_back("e" + std::to_string(i));
        }
    }

    Element add(Element a, Element b) const override {
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % spec_.moduli[i];
        return encode(x);
    }
    Element neg(Element a) const override {
        auto x = decode(a);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (spec_.moduli[i] - x[i]) % spec_.moduli[i];
        return encode(x);
    }
    Element mul(Element a, Element b) const override {
        const auto x = decode(a), y = decode(b);
        const std::size_t k = x.size();
        std::vector<std::uint64_t> r(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (y[j] == 0) continue;
                const auto& p = spec_.products[i][j];
                for (std::size_t t = 0; t < k; ++t) r[t] = (r[t] + x[i] * y[j] % spec_.moduli[t] * p[t]) % spec_.moduli[t];
            }
        }
        return encode(r);
    }
    std::string name(Element a) const override {
        const auto x = decode(a);
        std::string out;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            if (!out.empty()) out += '+';
            const std::string& b = spec_.basis[i];
            if (b == "1") out += std::to_string(x[i]);
            else if (x[i] == 1) out += b;
            else out += std::to_string(x[i]) + b;
        }
        return out.empty() ? "0" : out;
    }

    std::vector<std::uint64_t> decode(Element a) const {
        std::vector<std::uint64_t> c(spec_.moduli.size());
        std::uint64_t v = a;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = v % spec_.moduli[i];
            v /= spec_.moduli[i];
        }
        return c;
    }
    Element encode(std::span<const std::uint64_t> c) const {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * spec_.moduli[i] + c[i];
        return static_cast<Element>(v);
    }

private:
    TableRingSpec spec_;
};

class ProductBackend final : public Backend {
public:
    ProductBackend(std::vector<FiniteRing> factors, std::vector<std::size_t> strides)
        : factors_(std::move(factors)), strides_(std::move(strides)) {}

    Element add(Element a, Element b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.add(x, y); });
    }
    Element mul(Element a, Element b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.mul(x, y); });
    }
    Element neg(Element a) const override {
        Element out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out += static_cast<Element>(factors_[i].neg(coord(a, i)) * strides_[i]);
        return out;
    }
    std::string name(Element a) const override {
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += ',';
            out += factors_[i].element_name(coord(a, i));
        }
        return out + ")";
    }
    bool unit_flags(std::vector<char>& out) const override {
        std::size_t order = strides_[0] * factors_[0].order();
        out.assign(order, 0);
        for (std::size_t a = 0; a < order; ++a) {
            bool all = true;
            for (std::size_t i = 0; i < factors_.size() && all; ++i)
                all = factors_[i].is_unit(coord(static_cast<Element>(a), i));
            out[a] = all;
        }
        return true;
    }
    bool annihilator(Element x, std::vector<Element>& out) const override {
        std::vector<std::vector<Element>> parts;
        parts.reserve(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i].annihilator(coord(x, i)));
        out.clear();
        std::vector<std::size_t> pos(parts.size(), 0);
        // Odometer over the cartesian product; first factor most significant keeps `out` ascending.
        while (true) {
            Element v = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) v += static_cast<Element>(parts[i][pos[i]] * strides_[i]);
            out.push_back(v);
            std::size_t i = parts.size();
            while (i-- > 0) {
                if (++pos[i] < parts[i].size()) break;
                pos[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
        return true;
    }

    Element coord(Element a, std::size_t i) const {
        return static_cast<Element>((a / strides_[i]) % factors_[i].order());
    }

private:
    template <class Op>
    Element combine(Element a, Element b, Op op) const {
        Element out = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out += static_cast<Element>(op(factors_[i], coord(a, i), coord(b, i)) * strides_[i]);
        return out;
    }

    std::vector<FiniteRing> factors_;
    std::vector<std::size_t> strides_;
};

void check_order(std::uint64_t order, const RingLimits& limits, const std::string& what) {
    if (order > limits.order_cap)
        throw ConstructionError(what + " has order " + std::to_string(order) + ", above the ring order cap " +
                                std::to_string(limits.order_cap));
}

/// Saturating multiply for order computations.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t ipow_sat(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out = mul_sat(out, base);
    return out;
}

FiniteRing finalize(std::unique_ptr<RingData> data, const RingLimits& limits) {
    RingData& d = *data;
    const std::size_t n = d.order;
    const Backend& be = *d.backend;

    if (n <= limits.table_threshold) {
        d.add_table.resize(n * n);
        d.mul_table.resize(n * n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                d.add_table[a * n + b] = be.add(a, b);
                d.mul_table[a * n + b] = be.mul(a, b);
            }
    }
    auto mul = [&](Element a, Element b) {
        return d.mul_table.empty() ? be.mul(a, b) : d.mul_table[a * n + b];
    };
    auto add = [&](Element a, Element b) {
        return d.add_table.empty() ? be.add(a, b) : d.add_table[a * n + b];
    };

    if (!be.unit_flags(d.unit)) {
        d.unit.assign(n, 0);
        for (Element a = 1; a < n; ++a)
            for (Element b = 1; b < n; ++b)
                if (mul(a, b) == d.one) {
                    d.unit[a] = 1;
                    break;
                }
    }
    d.unit_count = static_cast<std::size_t>(std::count(d.unit.begin(), d.unit.end(), 1));
    d.field = d.unit_count + 1 == n;

    if (d.kind == RingKind::product && d.factors.size() >= 2) {
        d.local = false;
    } else {
        std::vector<Element> nonunits;
        for (Element a = 0; a < n; ++a)
            if (!d.unit[a]) nonunits.push_back(a);
        d.local = true;
        for (std::size_t i = 0; i < nonunits.size() && d.local; ++i)
            for (std::size_t j = i; j < nonunits.size(); ++j)
                if (d.unit[add(nonunits[i], nonunits[j])]) {
                    d.local = false;
                    break;
                }
    }

    d.reduced = true;
    for (Element a = 1; a < n && d.reduced; ++a) {
        if (d.unit[a]) continue;
        // Nilpotency index never exceeds the order, so squaring past it decides nilpotence.
        Element p = a;
        for (std::size_t e = 1; e < n; e *= 2) p = mul(p, p);
        if (p == 0) d.reduced = false;
    }

    return FiniteRing(std::shared_ptr<const RingData>(std::move(data)));
}

}  // namespace

std::string_view to_string(RingKind kind) {
    switch (kind) {
    case RingKind::integers_mod: return "integers_mod";
    case RingKind::galois_field: return "galois_field";
    case RingKind::quotient: return "quotient";
    case RingKind::table: return "table";
    case RingKind::product: return "product";
    }
    return "unknown";
}

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

std::size_t FiniteRing::order() const noexcept { return data_->order; }
Element FiniteRing::one() const noexcept { return data_->one; }
const std::string& FiniteRing::name() const noexcept { return data_->name; }
RingKind FiniteRing::kind() const noexcept { return data_->kind; }
std::size_t FiniteRing::unit_count() const noexcept { return data_->unit_count; }
std::size_t FiniteRing::zero_divisor_count() const noexcept { return data_->order - data_->unit_count - 1; }
bool FiniteRing::is_local() const noexcept { return data_->local; }
bool FiniteRing::is_reduced() const noexcept { return data_->reduced; }
bool FiniteRing::is_field() const noexcept { return data_->field; }
bool FiniteRing::has_tables() const noexcept { return !data_->mul_table.empty(); }
std::span<const FiniteRing> FiniteRing::factors() const noexcept { return data_->factors; }

void FiniteRing::check(Element a) const {
    if (a >= data_->order)
        throw PreconditionError("element index " + std::to_string(a) + " outside " + data_->name + " of order " +
                                std::to_string(data_->order));
}

Element FiniteRing::add(Element a, Element b) const {
    check(a);
    check(b);
    return data_->add_table.empty() ? data_->backend->add(a, b) : data_->add_table[a * data_->order + b];
}

Element FiniteRing::mul(Element a, Element b) const {
    check(a);
    check(b);
    return data_->mul_table.empty() ? data_->backend->mul(a, b) : data_->mul_table[a * data_->order + b];
}

Element FiniteRing::neg(Element a) const {
    check(a);
    return data_->backend->neg(a);
}

Element FiniteRing::pow(Element a, std::uint64_t e) const {
    Element result = one();
    Element base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string FiniteRing::element_name(Element a) const {
    check(a);
    return data_->backend->name(a);
}

Element FiniteRing::find_element(std::string_view text) const {
    for (Element a = 0; a < data_->order; ++a)
        if (data_->backend->name(a) == text) return a;
    return static_cast<Element>(data_->order);
}

bool FiniteRing::is_unit(Element a) const {
    check(a);
    return data_->unit[a];
}

bool FiniteRing::is_zero_divisor(Element a) const {
    check(a);
    return a != 0 && !data_->unit[a];
}

std::vector<Element> FiniteRing::units() const {
    std::vector<Element> out;
    for (Element a = 0; a < data_->order; ++a)
        if (data_->unit[a]) out.push_back(a);
    return out;
}

std::vector<Element> FiniteRing::zero_divisors_nonzero() const {
    std::vector<Element> out;
    for (Element a = 1; a < data_->order; ++a)
        if (!data_->unit[a]) out.push_back(a);
    return out;
}

std::vector<Element> FiniteRing::annihilator(Element x) const {
    check(x);
    std::vector<Element> out;
    if (data_->mul_table.empty() && data_->backend->annihilator(x, out)) return out;
    for (Element y = 0; y < data_->order; ++y)
        if (mul(x, y) == 0) out.push_back(y);
    return out;
}

std::vector<Element> FiniteRing::coordinates(Element a) const {
    check(a);
    if (data_->kind != RingKind::product) return {a};
    std::vector<Element> out;
    for (std::size_t i = 0; i < data_->factors.size(); ++i)
        out.push_back(static_cast<Element>((a / data_->strides[i]) % data_->factors[i].order()));
    return out;
}

Element FiniteRing::from_coordinates(std::span<const Element> coords) const {
    if (data_->kind != RingKind::product) {
        if (coords.size() != 1) throw PreconditionError("expected a single coordinate");
        check(coords[0]);
        return coords[0];
    }
    if (coords.size() != data_->factors.size()) throw PreconditionError("coordinate count does not match factors");
    Element out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= data_->factors[i].order()) throw PreconditionError("coordinate outside its factor");
        out += static_cast<Element>(coords[i] * data_->strides[i]);
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return n == 1 ? std::pair{p, k} : std::pair<std::uint64_t, unsigned>{0, 0};
}

namespace {

/// Remainder of a modulo monic b over Z_p; both constant-term first.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    for (std::size_t top = a.size(); top-- > db;) {
        const std::int64_t c = a[top] % p;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[top - db + i] = ((a[top - db + i] - c * b[i]) % p + p) % p;
    }
    a.resize(std::min(a.size(), db));
    return a;
}

bool is_irreducible(const std::vector<std::int64_t>& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow_sat(p, static_cast<unsigned>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::int64_t> g(d + 1, 0);
            std::uint64_t v = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::int64_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            const auto r = poly_mod(f, g, static_cast<std::int64_t>(p));
            if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::int64_t> least_irreducible(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw ConstructionError(std::to_string(p) + " is not prime");
    if (k == 0) throw ConstructionError("irreducible polynomial degree must be at least 1");
    const std::uint64_t count = ipow_sat(p, k);
    std::vector<std::int64_t> f(k + 1, 0);
    f[k] = 1;
    // Enumerate (c_0, ..., c_{k-1}) with c_0 the most significant digit: lexicographic order.
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t v = code;
        for (std::size_t i = k; i-- > 0;) {
            f[i] = static_cast<std::int64_t>(v % p);
            v /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw ConstructionError("no irreducible polynomial found");  // unreachable for prime p
}

FiniteRing make_zn(std::uint64_t n, const RingLimits& limits) {
    if (n < 2) throw ConstructionError("Z_n requires n >= 2, got " + std::to_string(n));
    check_order(n, limits, "Z" + std::to_string(n));
    auto d = std::make_unique<RingData>();
    d->name = "Z" + std::to_string(n);
    d->kind = RingKind::integers_mod;
    d->order = n;
    d->one = 1;
    d->backend = std::make_unique<ZnBackend>(n);
    return finalize(std::move(d), limits);
}

FiniteRing make_gf(std::uint64_t p, unsigned k, const RingLimits& limits) {
    if (!is_prime(p)) throw ConstructionError("GF(p^k) requires p prime, got " + std::to_string(p));
    if (k == 0) throw ConstructionError("GF(p^k) requires k >= 1");
    const std::uint64_t q = ipow_sat(p, k);
    check_order(q, limits, "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    if (k == 1) return make_zn(p, limits);
    auto f = least_irreducible(p, k);
    auto d = std::make_unique<RingData>();
    d->name = "F" + std::to_string(q);
    d->kind = RingKind::galois_field;
    d->order = q;
    d->one = 1;
    d->backend = std::make_unique<PolyBackend>(p, std::move(f));
    return finalize(std::move(d), limits);
}

FiniteRing make_quotient(std::uint64_t m, std::span<const std::int64_t> coefficients, const RingLimits& limits) {
    if (m < 2) throw ConstructionError("Z_m[x]/(f) requires m >= 2, got " + std::to_string(m));
    std::vector<std::int64_t> f;
    for (auto c : coefficients) f.push_back(((c % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                                            static_cast<std::int64_t>(m));
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw ConstructionError("quotient polynomial must have degree >= 1");
    if (f.back() != 1) throw ConstructionError("quotient polynomial " + render_poly(f, true) + " is not monic over Z" +
                                               std::to_string(m));
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    const std::string name = "Z" + std::to_string(m) + "[x]/(" + render_poly(f, true) + ")";
    check_order(ipow_sat(m, deg), limits, name);
    auto d = std::make_unique<RingData>();
    d->name = name;
    d->kind = RingKind::quotient;
    d->order = ipow_sat(m, deg);
    d->one = 1;
    d->backend = std::make_unique<PolyBackend>(m, std::move(f));
    return finalize(std::move(d), limits);
}

FiniteRing make_table_ring(const TableRingSpec& spec, const RingLimits& limits) {
    const std::size_t k = spec.moduli.size();
    const std::string& nm = spec.name.empty() ? std::string("table ring") : spec.name;
    if (k == 0) throw ValidationError(nm + ": at least one generator is required");
    if (spec.one.size() != k) throw ValidationError(nm + ": 'one' must have " + std::to_string(k) + " coordinates");
    if (spec.products.size() != k) throw ValidationError(nm + ": 'products' must be a " + std::to_string(k) + "x" +
                                                         std::to_string(k) + " array");
    std::uint64_t order = 1;
    for (auto m : spec.moduli) {
        if (m == 0) throw ValidationError(nm + ": moduli must be positive");
        order = mul_sat(order, m);
    }
    check_order(order, limits, nm);
    auto coords_ok = [&](const std::vector<std::uint32_t>& v) {
        if (v.size() != k) return false;
        for (std::size_t t = 0; t < k; ++t)
            if (v[t] >= spec.moduli[t]) return false;
        return true;
    };
    if (!coords_ok(spec.one)) throw ValidationError(nm + ": 'one' has a coordinate outside its modulus");
    for (std::size_t i = 0; i < k; ++i) {
        if (spec.products[i].size() != k) throw ValidationError(nm + ": products row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < k; ++j)
            if (!coords_ok(spec.products[i][j]))
                throw ValidationError(nm + ": product e" + std::to_string(i) + "*e" + std::to_string(j) +
                                      " has a coordinate outside its modulus or wrong length");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (spec.products[i][j] != spec.products[j][i])
                throw ValidationError(nm + ": structure constants are not symmetric at (e" + std::to_string(i) + ", e" +
                                      std::to_string(j) + ")");
            for (std::size_t t = 0; t < k; ++t)
                if ((std::uint64_t{spec.moduli[i]} * spec.products[i][j][t]) % spec.moduli[t] != 0)
                    throw ValidationError(nm + ": e" + std::to_string(i) + "*e" + std::to_string(j) +
                                          " is not annihilated by the additive order " +
                                          std::to_string(spec.moduli[i]) + " of e" + std::to_string(i));
        }

    auto d = std::make_unique<RingData>();
    d->name = nm;
    d->kind = RingKind::table;
    d->order = order;
    auto backend = std::make_unique<TableBackend>(spec);
    std::vector<std::uint64_t> one(spec.one.begin(), spec.one.end());
    d->one = backend->encode(one);
    if (d->one == 0) throw ValidationError(nm + ": one must differ from zero");

    // Basis-level associativity, reported on generators before the exhaustive pass.
    std::vector<Element> basis(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::uint64_t> e(k, 0);
        e[i] = 1 % spec.moduli[i];
        basis[i] = backend->encode(e);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) {
                const Element lhs = backend->mul(backend->mul(basis[i], basis[j]), basis[t]);
                const Element rhs = backend->mul(basis[i], backend->mul(basis[j], basis[t]));
                if (lhs != rhs)
                    throw ValidationError(nm + ": associativity fails on generators (e" + std::to_string(i) + ", e" +
                                          std::to_string(j) + ", e" + std::to_string(t) + ")");
            }
    d->backend = std::move(backend);
    FiniteRing ring = finalize(std::move(d), limits);
    validate_ring_axioms(ring);
    return ring;
}

FiniteRing make_product(std::span<const FiniteRing> factors, const RingLimits& limits) {
    if (factors.empty()) throw ConstructionError("a product needs at least one factor");
    if (factors.size() == 1) return factors[0];
    std::uint64_t order = 1;
    std::string name;
    for (const auto& f : factors) {
        order = mul_sat(order, f.order());
        if (!name.empty()) name += " x ";
        name += f.name();
    }
    check_order(order, limits, name);
    std::vector<std::size_t> strides(factors.size());
    std::size_t s = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        strides[i] = s;
        s *= factors[i].order();
    }
    auto d = std::make_unique<RingData>();
    d->name = name;
    d->kind = RingKind::product;
    d->order = order;
    d->factors.assign(factors.begin(), factors.end());
    d->strides = strides;
    Element one = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) one += static_cast<Element>(factors[i].one() * strides[i]);
    d->one = one;
    d->backend = std::make_unique<ProductBackend>(d->factors, strides);
    return finalize(std::move(d), limits);
}

void validate_ring_axioms(const FiniteRing& r) {
    const Element n = static_cast<Element>(r.order());
    auto fail = [&](const std::string& law, std::initializer_list<Element> xs) {
        std::string tuple;
        for (auto x : xs) tuple += (tuple.empty() ? "" : ", ") + r.element_name(x);
        throw ValidationError(r.name() + ": " + law + " fails on (" + tuple + ")");
    };
    if (r.one() == r.zero()) throw ValidationError(r.name() + ": one equals zero");
    for (Element a = 0; a < n; ++a) {
        if (r.mul(r.one(), a) != a) fail("multiplicative identity", {a});
        if (r.add(0, a) != a) fail("additive identity", {a});
        if (r.add(a, r.neg(a)) != 0) fail("additive inverse", {a});
        if (r.mul(0, a) != 0) fail("zero absorption", {a});
        for (Element b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", {a, b});
            if (r.mul(a, b) != r.mul(b, a)) fail("multiplicative commutativity", {a, b});
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = r.mul(a, b);
            const Element sum_ab = r.add(a, b);
            for (Element c = 0; c < n; ++c) {
                if (r.mul(ab, c) != r.mul(a, r.mul(b, c))) fail("multiplicative associativity", {a, b, c});
                if (r.add(sum_ab, c) != r.add(a, r.add(b, c))) fail("additive associativity", {a, b, c});
                if (r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c))) fail("distributivity", {a, b, c});
            }
        }
}

}  // namespace zdtpc
