#include <doctest.h>

#include "brann/error.hpp"
#include "brann/ring.hpp"

using namespace brann;

namespace {

Matrix2D natural_action(int ring_size, int module_size) {
    Matrix2D a(ring_size, std::vector<int>(module_size));
    for (int r = 0; r < ring_size; ++r)
        for (int m = 0; m < module_size; ++m) a[r][m] = (r * m) % module_size;
    return a;
}

} // namespace

TEST_SUITE("ring") {

TEST_CASE("cyclic rings") {
    auto z2 = make_cyclic_ring(2);
    CHECK(z2.add_table().data() == std::vector<int>{0, 1, 1, 0});
    CHECK(z2.mul_table().data() == std::vector<int>{0, 0, 0, 1});
    auto z1 = make_cyclic_ring(1);
    CHECK(z1.size() == 1);
    CHECK(z1.zero() == z1.one());
    auto z4 = make_cyclic_ring(4);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(z4.neg(1) == 3);
    CHECK_THROWS_AS(make_cyclic_ring(0), InvalidSizeError);
}

TEST_CASE("product rings") {
    auto z2 = make_cyclic_ring(2);
    auto r = make_product_ring(z2, z2);
    CHECK(r.size() == 4);
    // (1,0)(0,1) = (0,0)
    CHECK(r.mul(2, 1) == 0);
    CHECK(r.one() == 3);

    auto small = make_product_ring(z2, make_cyclic_ring(1));
    CHECK(small.size() == 2);
    CHECK(small.add_table() == z2.add_table());
    CHECK(small.mul_table() == z2.mul_table());

    // Chinese remainder: k in Z/6 sits at (k mod 2, k mod 3).
    auto z6 = make_cyclic_ring(6);
    auto p = make_product_ring(z2, make_cyclic_ring(3));
    auto crt = [](int k) { return (k % 2) * 3 + k % 3; };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            CHECK(crt(z6.add(a, b)) == p.add(crt(a), crt(b)));
            CHECK(crt(z6.mul(a, b)) == p.mul(crt(a), crt(b)));
        }
    CHECK(p.zero() == crt(0));
    CHECK(p.one() == crt(1));
}

TEST_CASE("product is commutative up to reindexing") {
    auto a = make_cyclic_ring(2), b = make_cyclic_ring(3);
    auto ab = make_product_ring(a, b), ba = make_product_ring(b, a);
    auto swap = [](int k) { return (k % 3) * 2 + k / 3; };
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            CHECK(swap(ab.add(x, y)) == ba.add(swap(x), swap(y)));
            CHECK(swap(ab.mul(x, y)) == ba.mul(swap(x), swap(y)));
        }
}

TEST_CASE("ring axioms are enforced") {
    Matrix2D add{{0, 1}, {1, 0}};
    Matrix2D bad_mul{{0, 0}, {0, 0}};
    try {
        FiniteCommutativeRing::from_tables(add, bad_mul, 0, 1);
        FAIL("expected an axiom error");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == "multiplicative-identity");
        CHECK(e.witness() == std::vector<int>{1});
    }
    Matrix2D nonassoc{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    Matrix2D mul3{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    CHECK_THROWS_AS(FiniteCommutativeRing::from_tables(nonassoc, mul3, 0, 1), AxiomError);
    CHECK_THROWS_AS(FiniteCommutativeRing::from_tables(add, {{0, 0}}, 0, 1), ShapeError);
}

TEST_CASE("modules") {
    auto z2 = make_cyclic_ring(2);
    auto m = FiniteModule::make(z2, {2}, natural_action(2, 2));
    CHECK(m.size() == 2);
    CHECK(m.act(1, 1) == 1);

    try {
        FiniteModule::make(z2, {2}, {{0, 0}, {0, 0}});
        FAIL("expected an axiom error");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == "action-unital");
        CHECK(e.witness() == std::vector<int>{1, 1});
    }

    auto z4 = make_cyclic_ring(4);
    auto half = FiniteModule::make(z4, {2}, natural_action(4, 2));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int a = 0; a < 2; ++a) CHECK(half.act(z4.mul(x, y), a) == half.act(x, half.act(y, a)));

    CHECK_THROWS_AS(FiniteModule::make(z2, {4, 2}, natural_action(2, 8)), InvalidSizeError);
    CHECK_THROWS_AS(FiniteModule::make(z2, {2}, natural_action(2, 3)), ShapeError);
}

TEST_CASE("non-cyclic module group") {
    auto z2 = make_cyclic_ring(2);
    Matrix2D act(2, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) act[1][a] = a;
    auto m = FiniteModule::make(z2, {2, 2}, act);
    CHECK(m.generator_count() == 2);
    CHECK(m.coordinates(3) == std::vector<int>{1, 1});
    CHECK(m.add(1, 2) == 3);
    CHECK(m.add(3, 3) == 0);
    CHECK(m.multiple(-1, 3) == 3);
}

TEST_CASE("regular modules") {
    for (int n : {2, 3, 4, 6}) {
        auto r = make_cyclic_ring(n);
        auto m = make_regular_module(r);
        CHECK(m.factors() == std::vector<int>{n});
        for (int x = 0; x < n; ++x)
            for (int a = 0; a < n; ++a) CHECK(m.act(x, a) == r.mul(x, a));
    }
    auto z2 = make_cyclic_ring(2);
    auto v4 = make_regular_module(make_product_ring(z2, z2));
    CHECK(v4.factors() == std::vector<int>{2, 2});
    auto trivial = make_trivial_module(z2);
    CHECK(trivial.size() == 1);
}

TEST_CASE("homomorphism pairs") {
    auto z2 = make_cyclic_ring(2), z4 = make_cyclic_ring(4);
    auto m2 = make_regular_module(z2), m4 = make_regular_module(z4);
    CHECK(check_hom_pair(identity_pair(m2)).ok);

    HomPair red{RingHom{z4, z2, {0, 1, 0, 1}}, m4, m2, {0, 1, 0, 1}};
    CHECK(check_ring_hom(red.p).ok);
    CHECK(check_hom_pair(red).ok);

    RingHom up{z2, z4, {0, 1}};
    auto rep = check_ring_hom(up);
    CHECK_FALSE(rep.ok);
    CHECK(rep.axiom == "p-additive");
    CHECK(rep.witness == std::vector<int>{1, 1});

    HomPair zero_q{RingHom{z4, z2, {0, 1, 0, 1}}, m4, m2, {0, 0, 0, 0}};
    CHECK(check_hom_pair(zero_q).ok);
    HomPair not_additive{RingHom{z4, z2, {0, 1, 0, 1}}, m4, m2, {0, 1, 1, 1}};
    auto bad = check_hom_pair(not_additive);
    CHECK_FALSE(bad.ok);
    CHECK(bad.axiom == "q-additive");

    HomPair wrong_shape{identity_hom(z2), m2, m2, {0}};
    CHECK_THROWS_AS(check_hom_pair(wrong_shape), ShapeError);
}

TEST_CASE("enumerated homomorphisms") {
    auto z2 = make_cyclic_ring(2), z4 = make_cyclic_ring(4);
    CHECK(all_ring_homs(z4, z2).size() == 1);
    CHECK(all_ring_homs(z2, z4).empty());
    CHECK(all_ring_homs(z4, z4).size() == 1);
    auto m4 = make_regular_module(z4);
    // q is multiplication by any element of Z/4.
    CHECK(all_hom_pairs(m4, m4).size() == 4);
    auto m2 = make_regular_module(z2);
    auto pairs = all_hom_pairs(m4, m2);
    CHECK(pairs.size() == 2);
    for (const auto& p : pairs) CHECK(check_hom_pair(p).ok);
}

TEST_CASE("pulled back module") {
    auto z2 = make_cyclic_ring(2), z4 = make_cyclic_ring(4);
    RingHom p{z4, z2, {0, 1, 0, 1}};
    auto m = pulled_back_module(make_regular_module(z2), p);
    CHECK(m.ring() == z4);
    CHECK(m.act(3, 1) == 1);
    CHECK(m.act(2, 1) == 0);
}

}
