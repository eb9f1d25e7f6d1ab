#include <doctest.h>

#include "wallcert/complex.hpp"
#include "wallcert/corpus.hpp"
#include "wallcert/homology.hpp"

using namespace wallcert;

namespace {

HomologyGroup z(long rank) { return HomologyGroup{rank, {}}; }

// Universal coefficients: rank H^k = rank H_k, torsion H^k = torsion H_{k-1}.
void check_uct(const SimplicialComplex& c) {
    auto hom = homology(c);
    auto coh = cohomology(c);
    for (int k = 0; k <= 3; ++k) {
        CHECK(coh.h[static_cast<std::size_t>(k)].rank == hom.h[static_cast<std::size_t>(k)].rank);
        std::vector<long> expect =
            k >= 1 ? hom.h[static_cast<std::size_t>(k - 1)].torsion : std::vector<long>{};
        CHECK(coh.h[static_cast<std::size_t>(k)].torsion == expect);
    }
}

}  // namespace

TEST_CASE("smith normal form basics") {
    // diag(2,6)-like matrix with divisibility fix
    std::vector<std::vector<mpz_class>> m = {{2, 0}, {0, 3}};
    auto snf = smith_normal_form(m);
    CHECK(snf.rank == 2);
    REQUIRE(snf.diag.size() == 2);
    CHECK(snf.diag[0] == 1);
    CHECK(snf.diag[1] == 6);

    std::vector<std::vector<mpz_class>> zero = {{0, 0}, {0, 0}};
    CHECK(smith_normal_form(zero).rank == 0);
}

TEST_CASE("homology of corpus complexes") {
    auto rp2 = homology(corpus_get("rp2_6")->complex);
    CHECK(rp2.h[0] == z(1));
    CHECK(rp2.h[1] == HomologyGroup{0, {2}});
    CHECK(rp2.h[2] == z(0));

    auto torus = homology(corpus_get("torus_7")->complex);
    CHECK(torus.h[0] == z(1));
    CHECK(torus.h[1] == z(2));
    CHECK(torus.h[2] == z(1));

    auto point = homology(SimplicialComplex::build_from_labels({{"v"}}));
    CHECK(point.h[0] == z(1));
    CHECK(point.h[1] == z(0));

    auto poincare = homology(corpus_get("poincare_16")->complex);
    CHECK(poincare.h[0] == z(1));
    CHECK(poincare.h[1] == z(0));
    CHECK(poincare.h[2] == z(0));
    CHECK(poincare.h[3] == z(1));

    for (int d = 1; d <= 3; ++d) {
        auto s = homology(corpus_get("sphere_" + std::to_string(d))->complex);
        CHECK(s.h[0] == z(1));
        CHECK(s.h[static_cast<std::size_t>(d)] == z(1));
        for (int k = 1; k <= 3; ++k)
            if (k != d) CHECK(s.h[static_cast<std::size_t>(k)] == z(0));
    }
}

TEST_CASE("euler characteristic equals alternating sum of betti numbers") {
    for (const std::string name :
         {"rp2_6", "torus_7", "dunce_hat_2", "dunce_hat_3", "dunce_hat_5", "poincare_16",
          "sphere_1", "sphere_2", "sphere_3"}) {
        auto c = corpus_get(name)->complex;
        auto h = homology(c);
        long chi = 0;
        int sign = 1;
        for (int k = 0; k <= 3; ++k) {
            chi += sign * h.h[static_cast<std::size_t>(k)].rank;
            sign = -sign;
        }
        CHECK(chi == c.euler_characteristic());
    }
}

TEST_CASE("cohomology agrees with homology through universal coefficients") {
    for (const std::string name :
         {"rp2_6", "torus_7", "dunce_hat_3", "dunce_hat_5", "poincare_16", "sphere_2", "sphere_3"})
        check_uct(corpus_get(name)->complex);
    check_uct(simplex_skeleton(6, 2));   // 2-skeleton of the 5-simplex
    check_uct(simplex_skeleton(7, 1));   // complete graph
}

TEST_CASE("cohomology of rp2 shows the torsion shift") {
    auto coh = cohomology(corpus_get("rp2_6")->complex);
    CHECK(coh.h[0] == HomologyGroup{1, {}});
    CHECK(coh.h[1] == HomologyGroup{0, {}});
    CHECK(coh.h[2] == HomologyGroup{0, {2}});
}

TEST_CASE("group rendering") {
    CHECK(HomologyGroup{0, {}}.str() == "0");
    CHECK(HomologyGroup{1, {}}.str() == "Z");
    CHECK(HomologyGroup{2, {2, 4}}.str() == "Z^2 + Z/2 + Z/4");
}
