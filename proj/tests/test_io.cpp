#include <doctest.h>

#include <fstream>
#include <functional>
#include <random>

#include "brann/error.hpp"
#include "brann/io.hpp"
#include "oracle.hpp"

using namespace brann;

namespace {

const std::filesystem::path data = BRANN_TEST_DATA;

std::string parse_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("rings") {
    auto z4 = ring_from_json(read_json(data / "z4.json"), "z4.json");
    CHECK(z4 == make_cyclic_ring(4));
    auto z2 = make_cyclic_ring(2);
    auto v = make_product_ring(z2, z2);
    CHECK(ring_from_json(to_json(v), "mem") == v);
    CHECK(to_json(z4)["kind"] == "cyclic");
    CHECK(to_json(v)["kind"] == "table");

    auto msg = parse_message([] { ring_from_json(read_json(data / "missing_mul.json"), "missing_mul.json"); });
    CHECK(msg.find("missing_mul.json") != std::string::npos);
    CHECK(msg.find("'mul'") != std::string::npos);

    msg = parse_message([] { read_json(data / "malformed.json"); });
    CHECK(msg.find("malformed.json") != std::string::npos);
    msg = parse_message([] { read_json(data / "absent.json"); });
    CHECK(msg.find("cannot open") != std::string::npos);
    CHECK_THROWS_AS(ring_from_json(json{{"kind", "polynomial"}}, "x"), ParseError);
}

TEST_CASE("modules") {
    auto z4 = make_cyclic_ring(4);
    auto m = module_from_json(read_json(data / "m4.json"), z4, "m4.json");
    CHECK(m == make_regular_module(z4));
    CHECK(module_from_json(to_json(m), z4, "mem") == m);
    auto z2 = make_cyclic_ring(2);
    CHECK(module_from_json(read_json(data / "m2_trivial.json"), z2, "t").size() == 1);
    auto msg = parse_message([&] { module_from_json(json{{"factors", {2}}, {"action", "x"}}, z2, "f.json"); });
    CHECK(msg.find("'action'") != std::string::npos);
}

TEST_CASE("cochains") {
    std::mt19937_64 rng(1);
    auto m = oracle::cyclic(3);
    for (int d : {1, 2, 3})
        for (Variant v : {Variant::macl, Variant::ab, Variant::sym}) {
            Cochain c = oracle::random_normalized(m, d, v, rng);
            CHECK(cochain_from_json(to_json(c), m, "mem") == c);
        }
    json j{{"mu", {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}}, {"nu", {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}};
    Cochain g = cochain_from_json(j, m, "g.json");
    CHECK(g.degree() == 2);
    CHECK(g[Component::nu](2, 2) == 1);

    json bad = j;
    bad["nu"][2][2] = 7;
    auto msg = parse_message([&] { cochain_from_json(bad, m, "g.json"); });
    CHECK(msg.find("nu[2][2]") != std::string::npos);
    bad = j;
    bad["mu"][1] = {0, 1};
    msg = parse_message([&] { cochain_from_json(bad, m, "g.json"); });
    CHECK(msg.find("mu[1]") != std::string::npos);

    // Pinned entries survive parsing; normalization is checked by the consumer.
    json pinned_entry = j;
    pinned_entry["nu"][1][2] = 1;
    CHECK_FALSE(cochain_from_json(pinned_entry, m, "g.json").is_normalized());
}

TEST_CASE("groups and functors") {
    auto m = oracle::cyclic(4);
    CohomologyGroup h(m, 2, Variant::ab);
    json j = to_json(h);
    CHECK(j["invariant_factors"] == json::array({4}));
    CHECK(j["representatives"].size() == 1);

    auto cat = TypeRMCategory::make(Cochain::zero(m, 3));
    auto f = identity_functor(cat);
    f.g[Component::mu](2, 3) = 1;
    auto back = functor_from_json(to_json(f), *m, *m, "f.json");
    CHECK(back.g == f.g);
    CHECK(back.pair.q == f.pair.q);

    auto msg = parse_message([&] { hom_from_json(json{{"p", {0, 1}}, {"q", {0, 1, 2, 3}}}, *m, *m, "h.json"); });
    CHECK(msg.find("'p'") != std::string::npos);
}

TEST_CASE("categories") {
    auto dir = std::filesystem::temp_directory_path() / "brann_io_test";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(data / "z4.json", dir / "z4.json", std::filesystem::copy_options::overwrite_existing);
    auto m = oracle::cyclic(4);
    auto rep = CohomologyGroup(m, 3, Variant::ab).representatives().at(0);
    json cat{{"ring", "z4.json"}, {"module", to_json(*m)}, {"structure", to_json(rep)}};
    std::ofstream(dir / "cat.json") << cat.dump();
    auto loaded = load_category(dir / "cat.json");
    CHECK(loaded.structure == rep);

    json macl{{"ring", "z4.json"}, {"module", to_json(*m)}, {"structure", to_json(rep.with_variant(Variant::macl))}};
    std::ofstream(dir / "macl.json") << macl.dump();
    auto msg = parse_message([&] { load_category(dir / "macl.json"); });
    CHECK(msg.find("beta") != std::string::npos);
    std::filesystem::remove_all(dir);
}

}
