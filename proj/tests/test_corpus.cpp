#include <doctest.h>

#include "wallcert/corpus.hpp"
#include "wallcert/homology.hpp"
#include "wallcert/json_io.hpp"

using namespace wallcert;

TEST_CASE("corpus names and lookup") {
    CHECK(corpus_get("rp2_6").has_value());
    CHECK(corpus_get("nosuch") == std::nullopt);
    auto listing = corpus_list();
    CHECK(listing.size() >= 9);
}

TEST_CASE("rp2_6 is the complete-graph triangulation") {
    auto e = *corpus_get("rp2_6");
    CHECK(e.complex.f_vector() == std::vector<std::size_t>{6, 15, 10});
}

TEST_CASE("dunce hat vertex counts and homology gate") {
    CHECK(corpus_get("dunce_hat_2")->complex.num_vertices() == 6);
    CHECK(corpus_get("dunce_hat_3")->complex.num_vertices() == 8);
    CHECK(corpus_get("dunce_hat_5")->complex.num_vertices() == 11);
    // generated instances pass the homology gate too
    for (int p : {4, 7}) {
        auto e = dunce_hat(p);
        CHECK(e.complex.num_vertices() == (3 * p + 1) / 2 + 3);
        auto h = homology(e.complex);
        CHECK(h.h[1] == HomologyGroup{0, {p}});
        CHECK(h.h[2] == HomologyGroup{0, {}});
    }
    CHECK_THROWS(dunce_hat(1));
}

TEST_CASE("dunce hat core tags present") {
    auto e = *corpus_get("dunce_hat_3");
    REQUIRE(e.tags.contains("core_vertices"));
    CHECK(e.tags["core_vertices"].size() == 3);
    CHECK(e.tags["moore_space_p"] == 3);
}

TEST_CASE("poincare_16 data file matches the embedded facet list") {
    auto j = load_json_file(std::string(WALLCERT_SOURCE_DIR) + "/data/poincare_16.json");
    auto named = complex_from_json(j);
    auto embedded = corpus_get("poincare_16")->complex;
    CHECK(named.complex.labels() == embedded.labels());
    CHECK(named.complex.maximal_simplices() == embedded.maximal_simplices());
}

TEST_CASE("poincare_16 validation battery") {
    auto e = *corpus_get("poincare_16");
    CHECK(e.complex.f_vector() == std::vector<std::size_t>{16, 106, 180, 90});
    CHECK(e.complex.closed_manifold_dim() == 3);
    CHECK(e.complex.is_orientable());
}

TEST_CASE("corpus export / import round trip") {
    for (const std::string name : {"rp2_6", "torus_7", "dunce_hat_5", "poincare_16", "sphere_2"}) {
        auto e = *corpus_get(name);
        auto j = complex_to_json(e.complex, e.name, e.tags);
        auto back = complex_from_json(j);
        CHECK(back.complex.labels() == e.complex.labels());
        CHECK(back.complex.maximal_simplices() == e.complex.maximal_simplices());
        auto j2 = complex_to_json(back.complex, back.name, back.tags);
        CHECK(j == j2);
    }
}
