#pragma once

// Brute-force references used to cross-check the engine. Nothing here goes
// through the linear-algebra pipeline or the condition tables.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "brann/cochain.hpp"
#include "brann/cohomology.hpp"
#include "brann/ring.hpp"

namespace oracle {

using namespace brann;

inline ModulePtr regular(const FiniteCommutativeRing& r) {
    return std::make_shared<const FiniteModule>(make_regular_module(r));
}

inline ModulePtr cyclic(int n) { return regular(make_cyclic_ring(n)); }

using Key = std::vector<int>;

inline Key key(const Cochain& c) {
    Key k;
    for (Component comp : c.components())
        k.insert(k.end(), c[comp].data().begin(), c[comp].data().end());
    return k;
}

/// Calls fn on every normalized cochain; entries are enumerated table by table.
inline void for_each_normalized(const ModulePtr& m, int degree, Variant v,
                                const std::function<void(const Cochain&)>& fn) {
    Cochain c = Cochain::zero(m, degree, v);
    struct Slot {
        Component comp;
        std::size_t flat;
    };
    std::vector<Slot> slots;
    for (Component comp : c.components()) {
        const Table& t = c[comp];
        for (std::size_t f = 0; f < t.entries(); ++f)
            if (!pinned(m->ring(), comp, t.arguments(f))) slots.push_back({comp, f});
    }
    while (true) {
        fn(c);
        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            int& e = c[slots[i].comp].data()[slots[i].flat];
            if (++e < m->size()) break;
            e = 0;
        }
        if (i == slots.size()) return;
    }
}

inline std::vector<Cochain> normalized(const ModulePtr& m, int degree, Variant v = Variant::ab) {
    std::vector<Cochain> out;
    for_each_normalized(m, degree, v, [&](const Cochain& c) { out.push_back(c); });
    return out;
}

/// (μ,ν) from t, straight from the defining formulas.
inline Cochain d1(const Cochain& t) {
    const FiniteModule& m = t.module();
    const FiniteCommutativeRing& r = t.ring();
    const Table& T = t[Component::t];
    Cochain g = Cochain::zero(t.module_ptr(), 2);
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y) {
            g[Component::mu](x, y) = m.add(m.sub(T(y), T(r.add(x, y))), T(x));
            g[Component::nu](x, y) = m.add(m.sub(m.act(x, T(y)), T(r.mul(x, y))), m.act(y, T(x)));
        }
    return g;
}

/// (ξ,η,α,λ,ρ;β) from (μ,ν), straight from the defining formulas.
inline Cochain d2(const Cochain& g) {
    const FiniteModule& m = g.module();
    const FiniteCommutativeRing& r = g.ring();
    const Table& mu = g[Component::mu];
    const Table& nu = g[Component::nu];
    Cochain h = Cochain::zero(g.module_ptr(), 3, Variant::ab);
    auto A = [&](int a, int b) { return r.add(a, b); };
    auto M = [&](int a, int b) { return r.mul(a, b); };
    const int n = r.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            h[Component::eta](x, y) = m.sub(mu(x, y), mu(y, x));
            h[Component::beta](x, y) = m.sub(nu(x, y), nu(y, x));
            for (int z = 0; z < n; ++z) {
                h[Component::xi](x, y, z) =
                    m.sub(m.add(m.sub(mu(y, z), mu(A(x, y), z)), mu(x, A(y, z))), mu(x, y));
                h[Component::alpha](x, y, z) = m.sub(
                    m.add(m.sub(m.act(x, nu(y, z)), nu(M(x, y), z)), nu(x, M(y, z))), m.act(z, nu(x, y)));
                h[Component::lambda](x, y, z) = m.sub(
                    m.add(m.sub(m.sub(nu(x, A(y, z)), nu(x, y)), nu(x, z)), m.act(x, mu(y, z))),
                    mu(M(x, y), M(x, z)));
                h[Component::rho](x, y, z) = m.sub(
                    m.add(m.sub(m.sub(nu(A(x, y), z), nu(x, z)), nu(y, z)), m.act(z, mu(x, y))),
                    mu(M(x, z), M(y, z)));
            }
        }
    return h;
}

/// Closure of the generators under addition.
inline std::set<Key> span(const std::vector<Cochain>& gens, const Cochain& zero) {
    std::set<Key> seen{key(zero)};
    std::vector<Cochain> frontier{zero};
    while (!frontier.empty()) {
        std::vector<Cochain> next;
        for (const Cochain& c : frontier)
            for (const Cochain& g : gens) {
                Cochain s = c + g;
                if (seen.insert(key(s)).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::set<Key> span(const SubgroupPresentation& p, const CochainLayout& layout) {
    std::vector<Cochain> gens;
    for (const Vec& v : p.generators) gens.push_back(layout.to_cochain(layout.reduce(v)));
    return span(gens, layout.to_cochain(Vec(layout.size(), 0)));
}

/// A random normalized cochain.
inline Cochain random_normalized(const ModulePtr& m, int degree, Variant v, std::mt19937_64& rng) {
    Cochain c = Cochain::zero(m, degree, v);
    for (Component comp : c.components()) {
        Table& t = c[comp];
        for (std::size_t f = 0; f < t.entries(); ++f)
            if (!pinned(m->ring(), comp, t.arguments(f)))
                t.data()[f] = static_cast<int>(rng() % static_cast<std::uint64_t>(m->size()));
    }
    return c;
}

/// Every 2-argument table pair (μ,ν), normalized or not.
inline std::vector<Cochain> raw_degree2(const ModulePtr& m) {
    const int n = m->ring().size();
    const int cells = 2 * n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(m->size());
    std::vector<Cochain> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        Cochain g = Cochain::zero(m, 2);
        std::uint64_t r = i;
        for (Component comp : {Component::mu, Component::nu})
            for (int& e : g[comp].data()) {
                e = static_cast<int>(r % static_cast<std::uint64_t>(m->size()));
                r /= static_cast<std::uint64_t>(m->size());
            }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracle
