#include <doctest.h>

#include <map>
#include <random>

#include "brann/anncat.hpp"
#include "brann/conditions.hpp"
#include "brann/error.hpp"
#include "oracle.hpp"

using namespace brann;

namespace {

const std::map<std::string, std::string>& diagram_to_condition() {
    static const std::map<std::string, std::string> m = {
        {"plus-pentagon", "S1"},
        {"plus-hexagon", "S2"},
        {"plus-symmetry", "S3"},
        {"L-cplus", "S4"},
        {"R-cplus", "S5"},
        {"L-aplus", "S6"},
        {"R-aplus", "S7"},
        {"distributivity-square", "S8"},
        {"distributivity-left-assoc", "S9"},
        {"distributivity-middle-assoc", "S10"},
        {"distributivity-right-assoc", "S11"},
        {"times-pentagon", "S12"},
        {"B2", "S20"},
        {"B1", "S21"},
        {"braiding-distributivity", "S22"},
    };
    return m;
}

ObjectExpr X() { return ObjectExpr::var(0); }
ObjectExpr Y() { return ObjectExpr::var(1); }
ObjectExpr Z() { return ObjectExpr::var(2); }

} // namespace

TEST_SUITE("anncat") {

TEST_CASE("morphism operations") {
    auto m = oracle::cyclic(2);
    CHECK(mor_compose(*m, {1, 1}, {1, 1}) == Morphism{1, 0});
    CHECK(mor_compose(*m, {1, 0}, {1, 1}) == Morphism{1, 1});
    CHECK(mor_plus(*m, {0, 1}, {0, 1}) == Morphism{0, 0});
    CHECK_THROWS_AS(mor_compose(*m, {0, 1}, {1, 1}), CompositionError);

    auto m5 = oracle::cyclic(5);
    for (int x = 0; x < 5; ++x)
        for (int a = 0; a < 5; ++a) {
            CHECK(mor_times(*m5, {x, a}, {1, 0}) == Morphism{x, a});
            CHECK(mor_compose(*m5, {x, a}, {x, m5->neg(a)}) == Morphism{x, 0});
        }
    CHECK(mor_times(*m5, {3, 0}, {2, 4}) == Morphism{1, 2});
}

TEST_CASE("operations are functorial") {
    auto m = oracle::cyclic(2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d) {
                            Morphism f{x, a}, f2{x, b}, g{y, c}, g2{y, d};
                            CHECK(mor_plus(*m, mor_compose(*m, f, f2), mor_compose(*m, g, g2)) ==
                                  mor_compose(*m, mor_plus(*m, f, g), mor_plus(*m, f2, g2)));
                            CHECK(mor_times(*m, mor_compose(*m, f, f2), mor_compose(*m, g, g2)) ==
                                  mor_compose(*m, mor_times(*m, f, g), mor_times(*m, f2, g2)));
                        }
}

TEST_CASE("path evaluation") {
    auto m = oracle::cyclic(4);
    std::mt19937_64 rng(4);
    Cochain h = oracle::random_normalized(m, 3, Variant::ab, rng);
    auto cat = TypeRMCategory::unchecked(h);
    std::vector<int> objs{2, 3, 1};

    CHECK(evaluate_path(cat, id_path(X()), objs) == Morphism{2, 0});
    CHECK(evaluate_path(cat, path({step(Constraint::aplus, {X(), Y(), Z()})}), objs) ==
          Morphism{(2 + 3 + 1) % 4, h[Component::xi](2, 3, 1)});
    CHECK(evaluate_path(cat, path({step_inv(Constraint::aplus, {X(), Y(), Z()})}), objs) ==
          Morphism{2, m->neg(h[Component::xi](2, 3, 1))});
    // id_z ⊗ c_{x,y}
    auto whisker = path({times_step(id_path(Z()), path({step(Constraint::c, {X(), Y()})}))});
    CHECK(evaluate_path(cat, whisker, objs) == Morphism{(1 * 2 * 3) % 4, m->act(1, h[Component::beta](2, 3))});
    std::vector<int> objs2{3, 3, 2};
    CHECK(evaluate_path(cat, whisker, objs2) == Morphism{2, m->act(2, h[Component::beta](3, 3))});

    // A path and its inverse cancel.
    auto p = path({step(Constraint::L, {X(), Y(), Z()}), plus_step(path({step(Constraint::c, {X(), Y()})}),
                                                                   path({step(Constraint::c, {X(), Z()})}))});
    auto there = evaluate_path(cat, p, objs);
    auto back = evaluate_path(cat, inverse(p), objs);
    CHECK(mor_compose(*m, there, back).value == 0);

    // Composite of two constraints.
    auto a = path({step(Constraint::aplus, {X(), Y(), Z()}), step(Constraint::cplus, {X() + Y(), Z()})});
    auto e = evaluate_path(cat, a, objs);
    CHECK(e.value == m->add(h[Component::xi](2, 3, 1), h[Component::eta](1, 1)));
}

TEST_CASE("path chaining errors") {
    auto cat = TypeRMCategory::make(Cochain::zero(oracle::cyclic(2), 3));
    auto broken = path({step(Constraint::aplus, {X(), Y(), Z()}), step(Constraint::cplus, {X(), Y()})});
    std::vector<int> objs{0, 1, 1};
    try {
        evaluate_path(cat, broken, objs);
        FAIL("expected a path error");
    } catch (const PathError& e) {
        CHECK(e.step() == 1);
    }
}

TEST_CASE("catalog ends agree") {
    auto cat = TypeRMCategory::make(Cochain::zero(oracle::cyclic(3), 3));
    auto rep = verify_axioms(cat);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
    for (const auto& [id, cond] : diagram_to_condition()) {
        bool found = false;
        for (const auto& d : diagram_catalog()) found = found || d.id == id;
        CHECK_MESSAGE(found, id);
    }
}

TEST_CASE("strict structure and coboundaries pass") {
    auto m = oracle::cyclic(2);
    CHECK(verify_axioms(TypeRMCategory::make(Cochain::zero(m, 3))).ok());
    for (const Cochain& g : oracle::normalized(m, 2))
        CHECK(verify_axioms(TypeRMCategory::make(coboundary2_ab(g))).ok());
    std::mt19937_64 rng(8);
    for (int n : {3, 4, 5}) {
        auto mn = oracle::cyclic(n);
        for (int i = 0; i < 10; ++i) {
            Cochain g = oracle::random_normalized(mn, 2, Variant::ab, rng);
            CHECK(verify_axioms(TypeRMCategory::make(coboundary2_ab(g))).ok());
        }
    }
}

TEST_CASE("make rejects non-cocycles") {
    auto m = oracle::cyclic(3);
    Cochain h = Cochain::zero(m, 3);
    h[Component::beta](2, 2) = 1;
    CHECK_THROWS_AS(TypeRMCategory::make(h), PreconditionError);
    CHECK_NOTHROW(TypeRMCategory::unchecked(h));
    CHECK_THROWS_AS(TypeRMCategory::unchecked(Cochain::zero(m, 3, Variant::macl)), ShapeError);
}

TEST_CASE("each failing diagram matches its condition") {
    std::mt19937_64 rng(12);
    for (int n : {2, 3, 4}) {
        auto m = oracle::cyclic(n);
        for (int i = 0; i < 40; ++i) {
            Cochain h = oracle::random_normalized(m, 3, Variant::ab, rng);
            auto cond = is_cocycle(h, 3, Variant::ab);
            auto ax = verify_axioms(TypeRMCategory::unchecked(h));
            CHECK(cond.ok() == ax.ok());
            for (const auto& [diagram, id] : diagram_to_condition()) {
                bool d = false;
                for (const auto& f : ax.failing_diagrams()) d = d || f == diagram;
                CHECK_MESSAGE(d == cond.violates(id), diagram << " vs " << id);
            }
        }
    }
}

TEST_CASE("c00 is checked on its own") {
    auto m = oracle::cyclic(3);
    Cochain h = Cochain::zero(m, 3);
    h[Component::beta](0, 0) = 1;
    auto ax = verify_axioms(TypeRMCategory::unchecked(h));
    auto ids = ax.failing_diagrams();
    CHECK(std::find(ids.begin(), ids.end(), "c00") != ids.end());
    CHECK(is_cocycle(h, 3, Variant::ab).violates("S22"));
}

TEST_CASE("trace") {
    auto m = oracle::cyclic(3);
    auto zero = TypeRMCategory::make(Cochain::zero(m, 3));
    CHECK(trace_of(zero) == Table(3, 1));

    Cochain h = Cochain::zero(m, 3);
    h[Component::beta](1, 1) = 1;
    CHECK(trace_of(TypeRMCategory::unchecked(h))(1) == 1);

    auto m4 = oracle::cyclic(4);
    auto rep = CohomologyGroup(m4, 3, Variant::ab).representatives().at(0);
    auto base = trace_of(TypeRMCategory::make(rep));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Cochain g = oracle::random_normalized(m4, 2, Variant::ab, rng);
        CHECK(trace_of(TypeRMCategory::make(rep + coboundary2_ab(g))) == base);
    }
}

TEST_CASE("symmetry") {
    auto m3 = oracle::cyclic(3);
    CHECK(is_symmetric(TypeRMCategory::make(Cochain::zero(m3, 3))));
    Cochain h = Cochain::zero(m3, 3);
    h[Component::beta](1, 2) = 1;
    h[Component::beta](2, 1) = 1;
    CHECK_FALSE(is_symmetric(TypeRMCategory::unchecked(h)));

    // In characteristic 2 symmetry means β(x,y) = β(y,x).
    auto m2 = oracle::cyclic(2);
    Cochain s = Cochain::zero(m2, 3);
    s[Component::beta](1, 1) = 1;
    CHECK(is_symmetric(TypeRMCategory::unchecked(s)));
}

TEST_CASE("parallel verification is deterministic") {
    std::mt19937_64 rng(21);
    auto m = oracle::cyclic(3);
    Cochain h = oracle::random_normalized(m, 3, Variant::ab, rng);
    auto cat = TypeRMCategory::unchecked(h);
    auto a = verify_axioms(cat, 1), b = verify_axioms(cat, 6);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        CHECK(a.failures[i].id == b.failures[i].id);
        CHECK(a.failures[i].objects == b.failures[i].objects);
    }
}

}
