#include "brann/functor.hpp"

#include <algorithm>
#include <map>

#include "brann/error.hpp"
#include "brann/parallel.hpp"

namespace brann {

namespace {

void require_pair(const HomPair& pair) {
    ValidationReport rep = check_ring_hom(pair.p);
    if (rep.ok) rep = check_hom_pair(pair);
    if (!rep.ok)
        throw PreconditionError("invalid homomorphism pair: " + rep.axiom + " fails at " +
                                format_tuple(rep.witness));
}

void require_connects(const TypeRMCategory& source, const TypeRMCategory& target,
                      const HomPair& pair) {
    if (!(source.module() == pair.source_module))
        throw PreconditionError("pair source does not match the source category");
    if (!(target.module() == pair.target_module))
        throw PreconditionError("pair target does not match the target category");
}

struct ObstructionData {
    ModulePtr module;
    Cochain k;
};

ObstructionData obstruction_cochain(const TypeRMCategory& source, const TypeRMCategory& target,
                                    const HomPair& pair) {
    require_pair(pair);
    require_connects(source, target, pair);
    ModulePtr mp = functor_module(pair);
    Cochain k = pullback(pair.p, target.structure(), mp) -
                pushforward(pair, source.structure(), mp);
    return {mp, std::move(k)};
}

std::uint64_t checked_count(const BigInt& n, const Limits& limits, const char* what) {
    if (n > BigInt(limits.brute_bound))
        throw InstanceTooLargeError(std::string(what) + " has " + n.str() +
                                    " elements, above the bound " +
                                    std::to_string(limits.brute_bound));
    return static_cast<std::uint64_t>(n);
}

// Mixed-radix digits of i, last coordinate least significant.
Vec digits(std::uint64_t i, const Vec& radix) {
    Vec v(radix.size(), 0);
    for (std::size_t j = radix.size(); j-- > 0;) {
        v[j] = static_cast<std::int64_t>(i % static_cast<std::uint64_t>(radix[j]));
        i /= static_cast<std::uint64_t>(radix[j]);
    }
    return v;
}

std::size_t index_of(const Vec& coords, const Vec& radix) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < radix.size(); ++j)
        i = i * static_cast<std::size_t>(radix[j]) + static_cast<std::size_t>(coords[j]);
    return i;
}

Morphism id_at(int x) { return {x, 0}; }

} // namespace

ModulePtr functor_module(const HomPair& pair) {
    return std::make_shared<const FiniteModule>(pulled_back_module(pair.target_module, pair.p));
}

Cochain pullback(const RingHom& p, const Cochain& c, const ModulePtr& target) {
    if (!(c.ring() == p.target)) throw ShapeError("pullback: cochain ring is not the target of p");
    if (!(target->ring() == p.source)) throw ShapeError("pullback: module ring is not the source of p");
    if (target->factors() != c.module().factors())
        throw ShapeError("pullback: module has a different additive group");
    Cochain out = Cochain::zero(target, c.degree(), c.variant());
    for (Component comp : c.components()) {
        Table& t = out[comp];
        const Table& src = c[comp];
        for (std::size_t f = 0; f < t.entries(); ++f) {
            auto args = t.arguments(f);
            for (int& a : args) a = p(a);
            t.data()[f] = src.at(args);
        }
    }
    return out;
}

Cochain pushforward(const HomPair& pair, const Cochain& c, const ModulePtr& target) {
    if (!(c.module() == pair.source_module))
        throw ShapeError("pushforward: cochain module is not the source of q");
    if (!(target->ring() == c.ring()) || target->factors() != pair.target_module.factors())
        throw ShapeError("pushforward: target module does not match q");
    Cochain out = Cochain::zero(target, c.degree(), c.variant());
    for (Component comp : c.components()) {
        auto& dst = out[comp].data();
        const auto& src = c[comp].data();
        for (std::size_t f = 0; f < dst.size(); ++f) dst[f] = pair.q[src[f]];
    }
    return out;
}

bool Obstruction::vanishes() const {
    return std::all_of(class_coordinates.begin(), class_coordinates.end(),
                       [](std::int64_t v) { return v == 0; });
}

Obstruction obstruction(const TypeRMCategory& source, const TypeRMCategory& target,
                        const HomPair& pair, const Limits& limits) {
    ObstructionData d = obstruction_cochain(source, target, pair);
    CohomologyGroup h3(d.module, 3, Variant::ab, limits);
    Vec coords = h3.coordinates(d.k);
    return {std::move(d.k), std::move(coords), h3.invariant_factors()};
}

// ---------------------------------------------------------------------------

bool FunctorReport::fails(Component c) const {
    return std::any_of(components.begin(), components.end(),
                       [c](const ComponentFailure& f) { return f.component == c; });
}

bool FunctorReport::all_but_rho_ok() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentFailure& f) { return f.component == Component::rho; });
}

FunctorReport check_functor(const BrAnnFunctorData& f, const TypeRMCategory& source,
                            const TypeRMCategory& target) {
    require_connects(source, target, f.pair);
    if (f.g.degree() != 2) throw ShapeError("functor data needs a 2-cochain");
    ObstructionData d = obstruction_cochain(source, target, f.pair);
    if (!(f.g.module() == *d.module))
        throw ShapeError("functor cochain does not live over the pulled-back target module");
    f.g.check_normalized();

    FunctorReport report;
    Cochain dg = coboundary2_ab(f.g);
    for (Component comp : components_of(3, Variant::ab)) {
        const Table& lhs = dg[comp];
        const Table& rhs = d.k[comp];
        ComponentFailure fail{comp, {}, 0, 0, 0};
        for (std::size_t e = 0; e < lhs.entries(); ++e) {
            if (lhs.data()[e] == rhs.data()[e]) continue;
            if (fail.count++ == 0) {
                fail.witness = lhs.arguments(e);
                fail.lhs = lhs.data()[e];
                fail.rhs = rhs.data()[e];
            }
        }
        if (fail.count) report.components.push_back(std::move(fail));
    }

    // Compatibility diagrams of F = (p, q, g) evaluated with morphisms of the target.
    const FiniteCommutativeRing& r = source.ring();
    const FiniteModule& m2 = target.module();
    const RingHom& p = f.pair.p;
    const Cochain& h = source.structure();
    const Table& mu = f.g[Component::mu];
    const Table& nu = f.g[Component::nu];
    auto breve = [&](int x, int y) { return Morphism{p(r.add(x, y)), mu(x, y)}; };
    auto tilde = [&](int x, int y) { return Morphism{p(r.mul(x, y)), nu(x, y)}; };
    auto image = [&](Component c, int obj, std::vector<int> args) {
        return Morphism{p(obj), f.pair.q[h.value(c, args)]};
    };
    auto constraint = [&](Constraint c, std::vector<int> objs) {
        std::vector<ObjectExpr> vars;
        for (std::size_t i = 0; i < objs.size(); ++i) vars.push_back(ObjectExpr::var(static_cast<int>(i)));
        return evaluate_path(target, path({step(c, vars)}), objs);
    };
    auto cmp = [&](Morphism a, Morphism b) { return mor_compose(m2, a, b); };
    auto plus = [&](Morphism a, Morphism b) { return mor_plus(m2, a, b); };
    auto times = [&](Morphism a, Morphism b) { return mor_times(m2, a, b); };

    const int n = r.size();
    auto record = [&](const char* id, std::vector<int> objs, Morphism lhs, Morphism rhs) {
        if (lhs == rhs) return;
        for (const auto& df : report.diagrams)
            if (df.id == id) return;
        report.diagrams.push_back({id, std::move(objs), lhs, rhs});
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int px = p(x), py = p(y), pz = p(z);
                const int xyz = r.add(r.add(x, y), z);
                Morphism lhs = cmp(image(Component::xi, xyz, {x, y, z}),
                                   cmp(breve(x, r.add(y, z)), plus(id_at(px), breve(y, z))));
                Morphism rhs = cmp(breve(r.add(x, y), z),
                                   cmp(plus(breve(x, y), id_at(pz)), constraint(Constraint::aplus, {px, py, pz})));
                record("functor-aplus", {x, y, z}, lhs, rhs);

                const int pxyz = r.mul(r.mul(x, y), z);
                lhs = cmp(image(Component::alpha, pxyz, {x, y, z}),
                          cmp(tilde(x, r.mul(y, z)), times(id_at(px), tilde(y, z))));
                rhs = cmp(tilde(r.mul(x, y), z),
                          cmp(times(tilde(x, y), id_at(pz)), constraint(Constraint::a, {px, py, pz})));
                record("functor-a", {x, y, z}, lhs, rhs);

                const int xl = r.mul(x, r.add(y, z));
                lhs = cmp(image(Component::lambda, xl, {x, y, z}),
                          cmp(tilde(x, r.add(y, z)), times(id_at(px), breve(y, z))));
                rhs = cmp(breve(r.mul(x, y), r.mul(x, z)),
                          cmp(plus(tilde(x, y), tilde(x, z)), constraint(Constraint::L, {px, py, pz})));
                record("functor-L", {x, y, z}, lhs, rhs);

                const int xr = r.mul(r.add(x, y), z);
                lhs = cmp(image(Component::rho, xr, {x, y, z}),
                          cmp(tilde(r.add(x, y), z), times(breve(x, y), id_at(pz))));
                rhs = cmp(breve(r.mul(x, z), r.mul(y, z)),
                          cmp(plus(tilde(x, z), tilde(y, z)), constraint(Constraint::R, {px, py, pz})));
                record("functor-R", {x, y, z}, lhs, rhs);
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Morphism lhs = cmp(image(Component::eta, r.add(x, y), {x, y}), breve(x, y));
            Morphism rhs = cmp(breve(y, x), constraint(Constraint::cplus, {p(x), p(y)}));
            record("functor-cplus", {x, y}, lhs, rhs);
            lhs = cmp(image(Component::beta, r.mul(x, y), {x, y}), tilde(x, y));
            rhs = cmp(tilde(y, x), constraint(Constraint::c, {p(x), p(y)}));
            record("functor-c", {x, y}, lhs, rhs);
        }
    static const std::vector<std::string> order = {"functor-aplus", "functor-cplus", "functor-a",
                                                   "functor-c",     "functor-L",     "functor-R"};
    std::sort(report.diagrams.begin(), report.diagrams.end(), [](const auto& a, const auto& b) {
        return std::find(order.begin(), order.end(), a.id) < std::find(order.begin(), order.end(), b.id);
    });
    return report;
}

// ---------------------------------------------------------------------------

Realization realize_functor(const TypeRMCategory& source, const TypeRMCategory& target,
                            const HomPair& pair, const Limits& limits) {
    ObstructionData d = obstruction_cochain(source, target, pair);
    CohomologyGroup h3(d.module, 3, Variant::ab, limits);
    Realization out;
    out.obstruction = {d.k, h3.coordinates(d.k), h3.invariant_factors()};
    if (!out.obstruction.vanishes()) return out;
    auto g = h3.preimage(d.k);
    if (!g) throw Error("internal: vanishing obstruction without a preimage");
    out.functor = BrAnnFunctorData{pair, std::move(*g)};
    return out;
}

FunctorClassification classify_functors(const TypeRMCategory& source,
                                        const TypeRMCategory& target, const HomPair& pair,
                                        const Limits& limits) {
    Realization real = realize_functor(source, target, pair, limits);
    FunctorClassification out;
    out.obstruction = real.obstruction;
    const ModulePtr mp = functor_module(pair);
    CohomologyGroup h2(mp, 2, Variant::ab, limits);
    out.h2_invariant_factors = h2.invariant_factors();
    if (!real.functor) return out;
    const Cochain& g0 = real.functor->g;
    const Cochain& k = out.obstruction.k;

    const CochainLayout& layout = h2.layout();
    const BigInt candidates = layout.cochain_count();
    if (candidates <= BigInt(limits.brute_bound)) {
        out.brute_force = true;
        const auto count = static_cast<std::uint64_t>(candidates);
        std::vector<char> solves(count, 0);
        parallel_for(count, limits.workers, [&](std::size_t i) {
            Cochain g = layout.to_cochain(digits(i, layout.moduli()));
            solves[i] = coboundary2_ab(g) == k;
        });
        std::map<Vec, Cochain> buckets;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!solves[i]) continue;
            Cochain g = layout.to_cochain(digits(i, layout.moduli()));
            Vec key = h2.coordinates(g - g0);
            if (!buckets.count(key)) buckets.emplace(std::move(key), h2.canonical(g));
        }
        for (auto& [key, g] : buckets) out.classes.push_back({key, {pair, g}});
        return out;
    }

    checked_count(h2.order(), limits, "H^2_ab");
    for (const Vec& c : enumerate_coordinates(h2.invariant_factors())) {
        Cochain g = h2.canonical(g0 + h2.representative_of(c));
        out.classes.push_back({c, {pair, std::move(g)}});
    }
    return out;
}

SubgroupPresentation aut_functor(const BrAnnFunctorData& f, const Limits& limits) {
    return cocycle_group(functor_module(f.pair), 1, Variant::ab, limits);
}

BrAnnFunctorData compose_functors(const BrAnnFunctorData& f2, const BrAnnFunctorData& f1) {
    const HomPair& a = f1.pair;
    const HomPair& b = f2.pair;
    if (!(a.target_module == b.source_module))
        throw ShapeError("functors do not compose: target of the first is not the source of the second");
    std::vector<int> pmap(a.p.map.size());
    for (std::size_t x = 0; x < pmap.size(); ++x) pmap[x] = b.p(a.p(static_cast<int>(x)));
    std::vector<int> qmap(a.q.size());
    for (std::size_t v = 0; v < qmap.size(); ++v) qmap[v] = b.q[a.q[v]];
    HomPair pair{RingHom{a.p.source, b.p.target, std::move(pmap)}, a.source_module,
                 b.target_module, std::move(qmap)};

    ModulePtr mp = functor_module(pair);
    // q2_*(g1): g1 over (R, M'_p) with values pushed along q2.
    Cochain pushed = Cochain::zero(mp, 2);
    for (Component c : pushed.components()) {
        auto& dst = pushed[c].data();
        const auto& src = f1.g[c].data();
        for (std::size_t e = 0; e < dst.size(); ++e) dst[e] = b.q[src[e]];
    }
    Cochain pulled = pullback(a.p, f2.g, mp);
    return {std::move(pair), pushed + pulled};
}

BrAnnFunctorData identity_functor(const TypeRMCategory& cat) {
    HomPair pair = identity_pair(cat.module());
    return {pair, Cochain::zero(functor_module(pair), 2)};
}

// ---------------------------------------------------------------------------

Cochain harrison_embed(const ModulePtr& module, const Table& alpha) {
    if (alpha.arity() != 3 || alpha.ring_size() != module->ring().size())
        throw ShapeError("alpha must be a table R^3 -> M");
    for (int v : alpha.data())
        if (v < 0 || v >= module->size()) throw ShapeError("alpha value outside M");
    Cochain c = Cochain::zero(module, 3, Variant::ab);
    c[Component::alpha] = alpha;
    c.check_normalized();
    return c;
}

CocycleReport harrison_is_cocycle(const ModulePtr& module, const Table& alpha) {
    return is_cocycle(harrison_embed(module, alpha), 3, Variant::ab);
}

std::vector<Table> harrison_cocycles(const ModulePtr& module, const Limits& limits) {
    const FiniteCommutativeRing& r = module->ring();
    const Table shape(r.size(), 3);
    std::vector<std::size_t> free;
    for (std::size_t e = 0; e < shape.entries(); ++e)
        if (!pinned(r, Component::alpha, shape.arguments(e))) free.push_back(e);
    BigInt total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= module->size();
    const std::uint64_t count = checked_count(total, limits, "the alpha search space");
    const Vec radix(free.size(), module->size());
    auto make = [&](std::uint64_t i) {
        Table t(r.size(), 3);
        Vec d = digits(i, radix);
        for (std::size_t j = 0; j < free.size(); ++j) t.data()[free[j]] = static_cast<int>(d[j]);
        return t;
    };
    std::vector<char> ok(count, 0);
    parallel_for(count, limits.workers,
                 [&](std::size_t i) {
                     ok[i] = satisfies_conditions(harrison_embed(module, make(i)), 3, Variant::ab);
                 });
    std::vector<Table> out;
    for (std::uint64_t i = 0; i < count; ++i)
        if (ok[i]) out.push_back(make(i));
    return out;
}

// ---------------------------------------------------------------------------

std::size_t CategoryClassification::locate(const Cochain& structure) const {
    return index_of(group.coordinates(structure), group.invariant_factors());
}

CategoryClassification classify_categories(const ModulePtr& module, const Limits& limits) {
    CohomologyGroup h3(module, 3, Variant::ab, limits);
    checked_count(h3.order(), limits, "H^3_ab");
    std::vector<CategoryEntry> entries;
    for (const Vec& c : enumerate_coordinates(h3.invariant_factors()))
        entries.push_back({c, TypeRMCategory::make(h3.representative_of(c))});
    return {std::move(h3), std::move(entries)};
}

std::vector<Vec> enumerate_coordinates(const Vec& factors) {
    std::uint64_t total = 1;
    for (auto f : factors) total *= static_cast<std::uint64_t>(f);
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(digits(i, factors));
    return out;
}

} // namespace brann
