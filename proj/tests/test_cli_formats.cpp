#include <doctest.h>

#include "wallcert/certify.hpp"
#include "wallcert/corpus.hpp"
#include "wallcert/json_io.hpp"
#include "wallcert/subdivide.hpp"

using namespace wallcert;

TEST_CASE("certificate json shape") {
    auto cert = certify_signature(5);
    auto j = cert.to_json();
    CHECK(j["check"] == "signature");
    CHECK(j["verdict"] == "pass");
    CHECK(j.contains("elapsed_ms"));
    CHECK(j["details"]["n"] == 5);
}

TEST_CASE("bundle json carries all_pass") {
    std::vector<Certificate> certs = {certify_signature(4), certify_galois_positive(4)};
    auto j = certificates_to_json(certs);
    CHECK(j["all_pass"] == true);
    CHECK(j["certificates"].size() == 2);
}

TEST_CASE("golden scalar json uses the four-integer encoding") {
    Golden g(mpq_class(3, 4), mpq_class(-7, 2));
    auto j = golden_to_json(g);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 4);
    CHECK(j[0] == 3);
    CHECK(j[1] == 4);
    CHECK(j[2] == -7);
    CHECK(j[3] == 2);
}

TEST_CASE("complex json validates its input") {
    nlohmann::json bad = {{"vertices", {"a"}}, {"maximal_simplices", {{"a", "zz"}}}};
    CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
    nlohmann::json missing = {{"vertices", {"a"}}};
    CHECK_THROWS_AS(complex_from_json(missing), std::invalid_argument);
}

TEST_CASE("matrix and vector json round shapes") {
    auto form = bn_form(4);
    auto jm = matrix_to_json(form.matrix);
    CHECK(jm.size() == 5);
    CHECK(jm[0].size() == 5);
    GoldenVector v(3);
    v[1] = Golden::phi();
    auto jv = vector_to_json(v);
    CHECK(jv.size() == 3);
    CHECK(golden_from_json(jv[1]) == Golden::phi());
}
