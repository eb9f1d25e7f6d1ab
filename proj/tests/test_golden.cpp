#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "wallcert/golden.hpp"
#include "wallcert/json_io.hpp"

using namespace wallcert;

namespace {

std::mt19937_64 rng(20260811);

Golden random_golden() {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    return Golden(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

Golden random_small_golden() {
    std::uniform_int_distribution<long> num(-9, 9);
    return Golden(mpq_class(num(rng)), mpq_class(num(rng)));
}

// 512-bit floating oracle, test-only.
int float_sign_oracle(const Golden& g) {
    mpf_class sqrt5(0, 512);
    mpf_sqrt_ui(sqrt5.get_mpf_t(), 5);
    mpf_class phi = (mpf_class(1, 512) + sqrt5) / 2;
    mpf_class v = mpf_class(g.unit_part(), 512) + mpf_class(g.phi_part(), 512) * phi;
    return sgn(v);
}

}  // namespace

TEST_CASE("golden basic arithmetic") {
    Golden one(1), phi = Golden::phi();
    CHECK(Golden(1) + phi == Golden(mpq_class(1), mpq_class(1)));
    CHECK(Golden(mpq_class(2), mpq_class(-1)) - Golden(mpq_class(2), mpq_class(-1)) == Golden(0));
    CHECK(Golden(mpq_class(1), mpq_class(1)) + Golden(mpq_class(1), mpq_class(1)) ==
          Golden(mpq_class(2), mpq_class(2)));
    // phi^2 = phi + 1
    CHECK(phi * phi == one + phi);
    // phi * (1 - phi) = -1, the field norm of phi
    CHECK(phi * (one - phi) == Golden(-1));
    Golden x = random_golden();
    CHECK(one * x == x);
}

TEST_CASE("golden inverse") {
    Golden phi = Golden::phi();
    CHECK(phi.inverse() == Golden(mpq_class(-1), mpq_class(1)));  // phi - 1
    CHECK(Golden(1).inverse() == Golden(1));
    CHECK(Golden(2).inverse() == Golden::rational(1, 2));
    CHECK_THROWS_AS(Golden(0).inverse(), std::domain_error);
    for (int i = 0; i < 2000; ++i) {
        Golden a = random_golden();
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Golden(1));
    }
}

TEST_CASE("galois conjugate") {
    Golden phi = Golden::phi();
    CHECK(phi.conj() == Golden(mpq_class(1), mpq_class(-1)));  // 1 - phi
    CHECK((-phi).conj() == Golden(mpq_class(-1), mpq_class(1)));
    for (int i = 0; i < 2000; ++i) {
        Golden a = random_golden(), b = random_golden();
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("golden sign, frozen cases") {
    CHECK((Golden(2) - Golden::phi()).sign() == 1);                      // u=3, v=-1
    CHECK((Golden(1) - Golden(2) * Golden::phi()).sign() == -1);         // u=0, v=-2
    CHECK(Golden(0).sign() == 0);
    CHECK(Golden::phi().sign() == 1);
    CHECK((Golden(1) - Golden::phi()).sign() == -1);
}

TEST_CASE("golden sign agrees with 512-bit float oracle") {
    for (int i = 0; i < 10000; ++i) {
        Golden a = random_golden();
        CHECK(a.sign() == float_sign_oracle(a));
    }
}

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 10000; ++i) {
        Golden a = random_small_golden(), b = random_small_golden(), c = random_small_golden();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("is_integral and rendering") {
    CHECK(Golden(3).is_integral());
    CHECK(Golden(mpq_class(1), mpq_class(-2)).is_integral());
    CHECK_FALSE(Golden::rational(1, 2).is_integral());
    CHECK(Golden(mpq_class(1), mpq_class(-2)).str() == "1 - 2*phi");
    CHECK(Golden::phi().str() == "phi");
    CHECK(Golden(0).str() == "0");
    CHECK(Golden(mpq_class(0), mpq_class(1, 2)).str() == "1/2*phi");
}

TEST_CASE("golden json round trip") {
    for (int i = 0; i < 200; ++i) {
        Golden a = random_golden();
        CHECK(golden_from_json(golden_to_json(a)) == a);
    }
}

TEST_CASE("matrix product, transpose, inverse") {
    std::uniform_int_distribution<long> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    int inverted = 0;
    for (int trial = 0; inverted < 200; ++trial) {
        REQUIRE(trial < 4000);
        std::size_t n = dims(rng);
        GoldenMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Golden(mpq_class(entry(rng)), mpq_class(entry(rng)));
        if (m.determinant().is_zero()) continue;
        GoldenMatrix inv = m.inverse();
        CHECK(m * inv == GoldenMatrix::identity(n));
        CHECK(inv * m == GoldenMatrix::identity(n));
        ++inverted;
    }
}

TEST_CASE("determinant of 1x1 and minors") {
    GoldenMatrix m(1, 1);
    m.at(0, 0) = Golden(mpq_class(7), mpq_class(-3));
    CHECK(m.determinant() == Golden(mpq_class(7), mpq_class(-3)));
    auto minors = m.leading_principal_minors();
    REQUIRE(minors.size() == 1);
    CHECK(minors[0] == m.at(0, 0));
}

TEST_CASE("dot_with_form matches manual expansion") {
    GoldenMatrix B(2, 2);
    B.at(0, 0) = Golden(1);
    B.at(0, 1) = -Golden::phi();
    B.at(1, 0) = -Golden::phi();
    B.at(1, 1) = Golden(1);
    GoldenVector x{Golden(1), Golden(2)};
    GoldenVector y{Golden(3), Golden(-1)};
    // x^T B y = 3 - (-1)phi + 2(-3 phi) + 2(-1) = 1 - 7 phi... expand directly:
    Golden expect = Golden(1) * Golden(3) + Golden(1) * (-Golden::phi()) * Golden(-1) +
                    Golden(2) * (-Golden::phi()) * Golden(3) + Golden(2) * Golden(-1);
    CHECK(dot_with_form(x, B, y) == expect);
}
