#include <doctest.h>

#include <map>
#include <random>

#include "brann/error.hpp"
#include "brann/functor.hpp"
#include "oracle.hpp"

using namespace brann;

namespace {

std::vector<TypeRMCategory> structures(const ModulePtr& m) {
    std::vector<TypeRMCategory> out;
    for (const auto& e : classify_categories(m).entries) out.push_back(e.category);
    return out;
}

BigInt product(const Vec& v) {
    BigInt p = 1;
    for (auto x : v) p *= x;
    return p;
}

HomPair reduction_4_to_2() {
    auto z4 = make_cyclic_ring(4), z2 = make_cyclic_ring(2);
    return {RingHom{z4, z2, {0, 1, 0, 1}}, make_regular_module(z4), make_regular_module(z2), {0, 1, 0, 1}};
}

} // namespace

TEST_SUITE("functor") {

TEST_CASE("pullback and pushforward") {
    auto m = oracle::cyclic(4);
    std::mt19937_64 rng(1);
    Cochain c = coboundary2_ab(oracle::random_normalized(m, 2, Variant::ab, rng));
    HomPair id = identity_pair(*m);
    CHECK(pullback(id.p, c, functor_module(id)) == c);
    CHECK(pushforward(id, c, functor_module(id)) == c);

    HomPair zero = id;
    std::fill(zero.q.begin(), zero.q.end(), 0);
    CHECK(pushforward(zero, c, functor_module(zero)) == Cochain::zero(m, 3));

    // Cocycles over (Z/2, Z/2) pull back to cocycles over (Z/4, Z/2).
    HomPair red = reduction_4_to_2();
    auto target = functor_module(red);
    auto m2 = oracle::cyclic(2);
    oracle::for_each_normalized(m2, 3, Variant::ab, [&](const Cochain& h) {
        if (!is_cocycle(h, 3, Variant::ab).ok()) return;
        CHECK(is_cocycle(pullback(red.p, h, target), 3, Variant::ab).ok());
    });
    CHECK_THROWS_AS(pullback(red.p, c, target), ShapeError);
}

TEST_CASE("obstruction") {
    auto m = oracle::cyclic(4);
    auto cats = structures(m);
    REQUIRE(cats.size() == 2);
    HomPair id = identity_pair(*m);
    auto same = obstruction(cats[1], cats[1], id);
    CHECK(same.k == Cochain::zero(m, 3));
    CHECK(same.vanishes());

    auto differ = obstruction(cats[0], cats[1], id);
    CHECK_FALSE(differ.vanishes());
    CHECK(differ.class_coordinates == Vec{1});

    HomPair zero_q = id;
    std::fill(zero_q.q.begin(), zero_q.q.end(), 0);
    CHECK(obstruction(cats[1], cats[1], zero_q).k == cats[1].structure());

    HomPair broken = id;
    broken.q = {0, 1, 1, 1};
    CHECK_THROWS_AS(obstruction(cats[0], cats[0], broken), PreconditionError);
}

TEST_CASE("obstruction is additive in the source structure") {
    auto m = oracle::cyclic(4);
    auto cats = structures(m);
    std::mt19937_64 rng(2);
    for (const auto& pair : all_hom_pairs(*m, *m)) {
        auto mp = functor_module(pair);
        for (int i = 0; i < 4; ++i) {
            Cochain s = cats[i % 2].structure() + coboundary2_ab(oracle::random_normalized(m, 2, Variant::ab, rng));
            Cochain s2 = cats[(i / 2) % 2].structure();
            auto a = obstruction(TypeRMCategory::make(s), cats[1], pair);
            auto b = obstruction(TypeRMCategory::make(s2), cats[1], pair);
            CHECK(a.k - b.k == pushforward(pair, s2 - s, mp));
        }
    }
}

TEST_CASE("realization follows the obstruction") {
    for (int n : {2, 3, 4}) {
        auto m = oracle::cyclic(n);
        auto cats = structures(m);
        for (const auto& s : cats)
            for (const auto& t : cats)
                for (const auto& pair : all_hom_pairs(*m, *m)) {
                    auto r = realize_functor(s, t, pair);
                    CHECK(r.functor.has_value() == r.obstruction.vanishes());
                    if (r.functor) CHECK(check_functor(*r.functor, s, t).ok());
                }
    }
    auto m = oracle::cyclic(4);
    auto cats = structures(m);
    auto r = realize_functor(cats[1], cats[1], identity_pair(*m));
    REQUIRE(r.functor);
    CHECK(r.functor->g == Cochain::zero(m, 2));
}

TEST_CASE("realization across rings") {
    HomPair red = reduction_4_to_2();
    auto m4 = std::make_shared<const FiniteModule>(red.source_module);
    auto m2 = std::make_shared<const FiniteModule>(red.target_module);
    for (const auto& s : structures(m4))
        for (const auto& t : structures(m2)) {
            auto r = realize_functor(s, t, red);
            CHECK(r.functor.has_value() == r.obstruction.vanishes());
            if (r.functor) CHECK(check_functor(*r.functor, s, t).ok());
        }
}

TEST_CASE("check_functor reports the perturbed component") {
    auto m = oracle::cyclic(4);
    auto cat = structures(m)[1];
    auto f = identity_functor(cat);
    CHECK(check_functor(f, cat, cat).ok());

    auto g = f;
    g.g[Component::mu](2, 3) = 1;
    auto rep = check_functor(g, cat, cat);
    CHECK_FALSE(rep.ok());
    CHECK(rep.fails(Component::xi));
    CHECK_FALSE(rep.fails(Component::alpha));
    CHECK_FALSE(rep.fails(Component::beta));
    CHECK_FALSE(rep.diagrams_ok());

    auto h = f;
    h.g[Component::nu](2, 3) = 1;
    auto rep2 = check_functor(h, cat, cat);
    CHECK(rep2.fails(Component::beta));
    CHECK(rep2.fails(Component::alpha));
    CHECK_FALSE(rep2.fails(Component::xi));
    CHECK_FALSE(rep2.fails(Component::eta));
    for (const auto& c : rep2.components) CHECK(c.lhs != c.rhs);

    auto bad = f;
    bad.g[Component::nu](1, 3) = 1;
    CHECK_THROWS_AS(check_functor(bad, cat, cat), NormalizationError);
}

TEST_CASE("component equations and functor diagrams agree") {
    const std::map<Component, std::string> diagram = {
        {Component::xi, "functor-aplus"}, {Component::eta, "functor-cplus"}, {Component::alpha, "functor-a"},
        {Component::beta, "functor-c"},   {Component::lambda, "functor-L"},  {Component::rho, "functor-R"}};
    std::mt19937_64 rng(6);
    for (int n : {2, 3, 4, 5}) {
        auto m = oracle::cyclic(n);
        auto cats = structures(m);
        for (const auto& pair : all_hom_pairs(*m, *m))
            for (int i = 0; i < 8; ++i) {
                const auto& s = cats[i % cats.size()];
                const auto& t = cats[(i / 2) % cats.size()];
                BrAnnFunctorData f{pair, oracle::random_normalized(functor_module(pair), 2, Variant::ab, rng)};
                auto rep = check_functor(f, s, t);
                for (const auto& [comp, id] : diagram) {
                    bool d = false;
                    for (const auto& df : rep.diagrams) d = d || df.id == id;
                    CHECK_MESSAGE(d == rep.fails(comp), id);
                }
            }
    }
}

TEST_CASE("homotopy classes") {
    for (int n : {2, 3, 4, 5}) {
        auto m = oracle::cyclic(n);
        auto cats = structures(m);
        for (const auto& s : cats)
            for (const auto& t : cats)
                for (const auto& pair : all_hom_pairs(*m, *m)) {
                    auto fc = classify_functors(s, t, pair);
                    if (!fc.obstruction.vanishes()) {
                        CHECK(fc.classes.empty());
                        continue;
                    }
                    CHECK(BigInt(fc.classes.size()) == product(fc.h2_invariant_factors));
                    for (const auto& c : fc.classes) CHECK(check_functor(c.representative, s, t).ok());
                }
    }
}

TEST_CASE("brute force and coset enumeration agree") {
    auto m = oracle::cyclic(3);
    auto cat = structures(m)[0];
    HomPair id = identity_pair(*m);
    Limits brute, coset;
    coset.brute_bound = 3;
    auto a = classify_functors(cat, cat, id, brute);
    auto b = classify_functors(cat, cat, id, coset);
    CHECK(a.brute_force);
    CHECK_FALSE(b.brute_force);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].coordinates == b.classes[i].coordinates);
        CHECK(a.classes[i].representative.g == b.classes[i].representative.g);
    }
}

TEST_CASE("functors differing by a coboundary are homotopic") {
    auto m = oracle::cyclic(4);
    auto cat = structures(m)[1];
    HomPair id = identity_pair(*m);
    auto fc = classify_functors(cat, cat, id);
    CohomologyGroup h2(functor_module(id), 2, Variant::ab);
    Cochain t = Cochain::zero(h2.module_ptr(), 1);
    t[Component::t](2) = 3;
    t[Component::t](3) = 1;
    const Cochain& g = fc.classes.at(1).representative.g;
    Cochain shifted = g + coboundary1(t);
    CHECK(check_functor({id, shifted}, cat, cat).ok());
    CHECK(h2.coordinates(shifted - g) == Vec(h2.invariant_factors().size(), 0));
    CHECK(h2.canonical(shifted) == g);
}

TEST_CASE("automorphisms") {
    auto m2 = oracle::cyclic(2);
    auto f2 = identity_functor(structures(m2)[0]);
    CHECK(aut_functor(f2).order == 1);

    auto m4 = oracle::cyclic(4);
    std::size_t brute = 0;
    oracle::for_each_normalized(m4, 1, Variant::ab, [&](const Cochain& t) {
        if (coboundary1(t) == Cochain::zero(m4, 2)) ++brute;
    });
    for (const auto& cat : structures(m4)) {
        auto aut = aut_functor(identity_functor(cat));
        CHECK(aut.order == brute);
    }
}

TEST_CASE("composition") {
    auto m = oracle::cyclic(4);
    auto cats = structures(m);
    auto pairs = all_hom_pairs(*m, *m);
    for (const auto& s : cats)
        for (const auto& t : cats)
            for (const auto& u : cats)
                for (const auto& p1 : pairs)
                    for (const auto& p2 : pairs) {
                        auto r1 = realize_functor(s, t, p1);
                        auto r2 = realize_functor(t, u, p2);
                        if (!r1.functor || !r2.functor) continue;
                        auto f = compose_functors(*r2.functor, *r1.functor);
                        CHECK(check_functor(f, s, u).ok());
                    }

    const auto& cat = cats[1];
    auto id = identity_functor(cat);
    auto fc = classify_functors(cat, cat, identity_pair(*m));
    for (const auto& c : fc.classes) {
        const auto& f = c.representative;
        CHECK(compose_functors(f, id).g == f.g);
        CHECK(compose_functors(id, f).g == f.g);
    }

    // Associativity up to homotopy.
    CohomologyGroup h2(functor_module(identity_pair(*m)), 2, Variant::ab);
    for (const auto& a : fc.classes)
        for (const auto& b : fc.classes)
            for (const auto& c : fc.classes) {
                auto left = compose_functors(compose_functors(c.representative, b.representative), a.representative);
                auto right = compose_functors(c.representative, compose_functors(b.representative, a.representative));
                CHECK(h2.coordinates(left.g - right.g) == Vec(h2.invariant_factors().size(), 0));
            }

    HomPair red = reduction_4_to_2();
    auto m2 = std::make_shared<const FiniteModule>(red.target_module);
    auto f2 = identity_functor(structures(m2)[0]);
    CHECK_THROWS_AS(compose_functors(id, f2), ShapeError);
}

TEST_CASE("Harrison cocycles") {
    auto m = oracle::cyclic(3);
    Table zero(3, 3);
    CHECK(harrison_is_cocycle(m, zero).ok());
    CHECK(verify_axioms(TypeRMCategory::make(harrison_embed(m, zero))).ok());

    Table bad(3, 3);
    bad(1, 2, 2) = 1;
    CHECK_THROWS_AS(harrison_embed(m, bad), NormalizationError);

    Table shuffled(3, 3);
    shuffled(2, 2, 2) = 1;
    CHECK_FALSE(harrison_is_cocycle(m, shuffled).ok());

    for (int n : {2, 3}) {
        auto mn = oracle::cyclic(n);
        auto list = harrison_cocycles(mn);
        std::size_t accepted = 0;
        Table t(n, 3);
        std::vector<std::size_t> free;
        for (std::size_t e = 0; e < t.entries(); ++e)
            if (!pinned(mn->ring(), Component::alpha, t.arguments(e))) free.push_back(e);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= n;
        for (std::uint64_t i = 0; i < total; ++i) {
            std::uint64_t r = i;
            for (auto e : free) {
                t.data()[e] = static_cast<int>(r % n);
                r /= n;
            }
            if (is_cocycle(harrison_embed(mn, t), 3, Variant::ab).ok()) ++accepted;
        }
        CHECK(list.size() == accepted);
    }
}

TEST_CASE("category classification") {
    for (int n : {2, 3, 4, 6}) {
        auto m = oracle::cyclic(n);
        auto cls = classify_categories(m);
        CHECK(BigInt(cls.entries.size()) == cls.group.order());
        for (std::size_t i = 0; i < cls.entries.size(); ++i) {
            CHECK(verify_axioms(cls.entries[i].category).ok());
            CHECK(cls.locate(cls.entries[i].category.structure()) == i);
            for (std::size_t j = 0; j < i; ++j)
                CHECK_FALSE(is_cohomologous(cls.group, cls.entries[i].category.structure(),
                                            cls.entries[j].category.structure())
                                .cohomologous);
        }
    }
    auto trivial = std::make_shared<const FiniteModule>(make_trivial_module(make_cyclic_ring(2)));
    CHECK(classify_categories(trivial).entries.size() == 1);

    Limits tiny;
    tiny.brute_bound = 1;
    CHECK_THROWS_AS(classify_categories(oracle::cyclic(4), tiny), InstanceTooLargeError);
}

TEST_CASE("coordinate enumeration") {
    auto all = enumerate_coordinates({2, 3});
    REQUIRE(all.size() == 6);
    CHECK(all.front() == Vec{0, 0});
    CHECK(all[1] == Vec{0, 1});
    CHECK(all.back() == Vec{1, 2});
    CHECK(enumerate_coordinates({}).size() == 1);
}

}
