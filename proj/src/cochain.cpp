#include "brann/cochain.hpp"

#include <algorithm>

#include "brann/error.hpp"

namespace brann {

std::string_view variant_name(Variant v) {
    switch (v) {
    case Variant::macl: return "macl";
    case Variant::ab: return "ab";
    case Variant::sym: return "sym";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    if (name == "macl") return Variant::macl;
    if (name == "ab") return Variant::ab;
    if (name == "sym") return Variant::sym;
    throw ParseError("unknown variant '" + std::string(name) + "' (expected macl, ab or sym)");
}

std::string_view component_name(Component c) {
    switch (c) {
    case Component::t: return "t";
    case Component::mu: return "mu";
    case Component::nu: return "nu";
    case Component::xi: return "xi";
    case Component::eta: return "eta";
    case Component::alpha: return "alpha";
    case Component::lambda: return "lambda";
    case Component::rho: return "rho";
    case Component::beta: return "beta";
    }
    return "?";
}

int component_arity(Component c) {
    switch (c) {
    case Component::t: return 1;
    case Component::mu:
    case Component::nu:
    case Component::eta:
    case Component::beta: return 2;
    default: return 3;
    }
}

const std::vector<Component>& components_of(int degree, Variant variant) {
    using C = Component;
    static const std::vector<C> d1{C::t};
    static const std::vector<C> d2{C::mu, C::nu};
    static const std::vector<C> d3m{C::xi, C::eta, C::alpha, C::lambda, C::rho};
    static const std::vector<C> d3a{C::xi, C::eta, C::alpha, C::lambda, C::rho, C::beta};
    switch (degree) {
    case 1: return d1;
    case 2: return d2;
    case 3: return variant == Variant::macl ? d3m : d3a;
    default: throw ShapeError("cochain degree must be 1, 2 or 3");
    }
}

bool pinned(const FiniteCommutativeRing& ring, Component c, std::span<const int> a) {
    const int o = ring.zero(), e = ring.one();
    auto zero_or_one = [&](int v) { return v == o || v == e; };
    switch (c) {
    case Component::t: return zero_or_one(a[0]);
    case Component::mu: return a[0] == o || a[1] == o;
    case Component::nu: return zero_or_one(a[0]) || zero_or_one(a[1]);
    case Component::xi: return a[0] == o || a[1] == o || a[2] == o;
    case Component::eta: return false;
    case Component::alpha: return zero_or_one(a[0]) || zero_or_one(a[1]) || zero_or_one(a[2]);
    case Component::lambda: return zero_or_one(a[0]) || a[1] == o || a[2] == o;
    case Component::rho: return a[0] == o || a[1] == o || a[2] == o || a[2] == e;
    case Component::beta: return false;
    }
    return false;
}

// ---------------------------------------------------------------------------

Cochain Cochain::zero(ModulePtr module, int degree, Variant variant) {
    if (!module) throw ShapeError("cochain needs a module");
    Cochain c;
    c.module_ = std::move(module);
    c.degree_ = degree;
    c.variant_ = variant;
    for (Component comp : components_of(degree, variant))
        c.tables_.emplace_back(c.ring().size(), component_arity(comp), 0);
    return c;
}

bool Cochain::has(Component c) const {
    const auto& cs = components();
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

std::size_t Cochain::slot(Component c) const {
    const auto& cs = components();
    auto it = std::find(cs.begin(), cs.end(), c);
    if (it == cs.end())
        throw ShapeError("degree-" + std::to_string(degree_) + " " +
                         std::string(variant_name(variant_)) + " cochain has no component " +
                         std::string(component_name(c)));
    return static_cast<std::size_t>(it - cs.begin());
}

Table& Cochain::operator[](Component c) { return tables_[slot(c)]; }
const Table& Cochain::operator[](Component c) const { return tables_[slot(c)]; }

void Cochain::check_normalized() const {
    const auto& cs = components();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Table& tab = tables_[k];
        for (std::size_t f = 0; f < tab.entries(); ++f) {
            if (tab.data()[f] == module_->zero()) continue;
            auto args = tab.arguments(f);
            if (pinned(ring(), cs[k], args))
                throw NormalizationError(std::string(component_name(cs[k])), args);
        }
    }
}

bool Cochain::is_normalized() const {
    try {
        check_normalized();
        return true;
    } catch (const NormalizationError&) {
        return false;
    }
}

bool Cochain::same_shape(const Cochain& other) const {
    return degree_ == other.degree_ && components() == other.components() &&
           (module_ == other.module_ || *module_ == *other.module_);
}

Cochain Cochain::with_variant(Variant v) const {
    Cochain out = Cochain::zero(module_, degree_, v);
    for (Component c : out.components())
        if (has(c)) out[c] = (*this)[c];
    return out;
}

Cochain combine(const Cochain& a, const Cochain& b, int sa, int sb) {
    if (!a.same_shape(b)) throw ShapeError("cochains of different shape cannot be combined");
    const FiniteModule& m = a.module();
    Cochain out = Cochain::zero(a.module_ptr(), a.degree(), a.variant());
    for (Component c : a.components()) {
        const auto& x = a[c].data();
        const auto& y = b[c].data();
        auto& z = out[c].data();
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = m.add(m.multiple(sa, x[i]), m.multiple(sb, y[i]));
    }
    return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1, 1); }
Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, 1, -1); }

int evaluate_terms(const Cochain& c, const std::vector<Term>& terms) {
    const FiniteModule& m = c.module();
    int acc = m.zero();
    for (const Term& t : terms) {
        int v = c[t.component].at(t.arguments());
        if (t.scalar >= 0) v = m.act(t.scalar, v);
        acc = t.sign > 0 ? m.add(acc, v) : m.sub(acc, v);
    }
    return acc;
}

// ---------------------------------------------------------------------------

namespace {

Term term(int sign, Component c, int a) { return {sign, -1, c, {a, 0, 0}, 1}; }
Term term(int sign, Component c, int a, int b) { return {sign, -1, c, {a, b, 0}, 2}; }
Term scaled(int sign, int s, Component c, int a) { return {sign, s, c, {a, 0, 0}, 1}; }
Term scaled(int sign, int s, Component c, int a, int b) { return {sign, s, c, {a, b, 0}, 2}; }

} // namespace

std::vector<Term> coboundary_terms(const FiniteCommutativeRing& r, Component target,
                                   std::span<const int> a) {
    using C = Component;
    const auto add = [&](int u, int v) { return r.add(u, v); };
    const auto mul = [&](int u, int v) { return r.mul(u, v); };
    switch (target) {
    case C::mu: {
        int x = a[0], y = a[1];
        return {term(1, C::t, y), term(-1, C::t, add(x, y)), term(1, C::t, x)};
    }
    case C::nu: {
        int x = a[0], y = a[1];
        return {scaled(1, x, C::t, y), term(-1, C::t, mul(x, y)), scaled(1, y, C::t, x)};
    }
    case C::xi: {
        int x = a[0], y = a[1], z = a[2];
        return {term(1, C::mu, y, z), term(-1, C::mu, add(x, y), z),
                term(1, C::mu, x, add(y, z)), term(-1, C::mu, x, y)};
    }
    case C::eta: {
        int x = a[0], y = a[1];
        return {term(1, C::mu, x, y), term(-1, C::mu, y, x)};
    }
    case C::alpha: {
        int x = a[0], y = a[1], z = a[2];
        return {scaled(1, x, C::nu, y, z), term(-1, C::nu, mul(x, y), z),
                term(1, C::nu, x, mul(y, z)), scaled(-1, z, C::nu, x, y)};
    }
    case C::lambda: {
        int x = a[0], y = a[1], z = a[2];
        return {term(1, C::nu, x, add(y, z)), term(-1, C::nu, x, y), term(-1, C::nu, x, z),
                scaled(1, x, C::mu, y, z), term(-1, C::mu, mul(x, y), mul(x, z))};
    }
    case C::rho: {
        int x = a[0], y = a[1], z = a[2];
        return {term(1, C::nu, add(x, y), z), term(-1, C::nu, x, z), term(-1, C::nu, y, z),
                scaled(1, z, C::mu, x, y), term(-1, C::mu, mul(x, z), mul(y, z))};
    }
    case C::beta: {
        int x = a[0], y = a[1];
        return {term(1, C::nu, x, y), term(-1, C::nu, y, x)};
    }
    case C::t: break;
    }
    throw ShapeError("component t is not a coboundary target");
}

namespace {

Cochain apply_coboundary(const Cochain& src, int degree, Variant variant) {
    src.check_normalized();
    Cochain out = Cochain::zero(src.module_ptr(), degree, variant);
    for (Component c : out.components()) {
        Table& tab = out[c];
        for (std::size_t f = 0; f < tab.entries(); ++f) {
            auto args = tab.arguments(f);
            tab.data()[f] = evaluate_terms(src, coboundary_terms(src.ring(), c, args));
        }
    }
    return out;
}

} // namespace

Cochain coboundary1(const Cochain& t) {
    if (t.degree() != 1) throw ShapeError("coboundary1 expects a 1-cochain");
    return apply_coboundary(t, 2, t.variant());
}

Cochain coboundary2_macl(const Cochain& g) {
    if (g.degree() != 2) throw ShapeError("coboundary2 expects a 2-cochain");
    return apply_coboundary(g, 3, Variant::macl);
}

Cochain coboundary2_ab(const Cochain& g) {
    if (g.degree() != 2) throw ShapeError("coboundary2 expects a 2-cochain");
    return apply_coboundary(g, 3, Variant::ab);
}

Cochain coboundary(const Cochain& c, Variant variant) {
    switch (c.degree()) {
    case 1: return apply_coboundary(c, 2, variant);
    case 2: return apply_coboundary(c, 3, variant == Variant::macl ? Variant::macl : variant);
    default: throw ShapeError("no coboundary out of degree 3");
    }
}

} // namespace brann
