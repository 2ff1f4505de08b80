#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpinv/hilbert.hpp"

using namespace mpinv;

TEST_CASE("product coefficients, one axis") {
    HilbertCoeffs hs = hilbert_product_coeffs(1, 10);
    std::vector<long> head{1, 1, 3, 6, 13};
    for (size_t i = 0; i < head.size(); ++i) CHECK(hs.coeffs[i] == head[i]);
}

TEST_CASE("product coefficients, two axes") {
    HilbertCoeffs hs = hilbert_product_coeffs(2, 8);
    CHECK(hs.coeffs[0] == 1);
    CHECK(hs.coeffs[1] == 0);  // nothing below degree n
    CHECK(hs.coeffs[2] == 1);
}

TEST_CASE("generator counts") {
    CHECK(count_generators(1, 3) == 3);
    CHECK(count_generators(2, 1) == 0);
    CHECK(count_generators(2, 3) == 4);
    SUBCASE("closed form equals enumeration") {
        for (int n = 1; n <= 3; ++n)
            for (int d = 0; d <= 10; ++d) CHECK(count_generators(n, d) == count_generators_brute(n, d));
    }
}

TEST_CASE("free algebra dimensions") {
    CHECK(free_algebra_dim(1, 3) == 6);
    CHECK(free_algebra_dim(1, 0) == 1);
    SUBCASE("enumeration equals the product coefficients") {
        HilbertCoeffs h1 = hilbert_product_coeffs(1, 10);
        for (int d = 0; d <= 10; ++d) CHECK(free_algebra_dim(1, d) == h1.coeffs[static_cast<size_t>(d)]);
        HilbertCoeffs h2 = hilbert_product_coeffs(2, 8);
        for (int d = 0; d <= 8; ++d) CHECK(free_algebra_dim(2, d) == h2.coeffs[static_cast<size_t>(d)]);
    }
}

TEST_CASE("bounded multiset counts stabilize once rows reach the degree") {
    for (int n = 1; n <= 2; ++n)
        for (int d = 0; d <= 6; ++d) {
            BigInt full = free_algebra_dim(n, d);
            CHECK(bounded_multiset_dim(n, d, d) == full);
            CHECK(bounded_multiset_dim(n, d, d + 3) == full);
            if (d >= 2 * n) CHECK(bounded_multiset_dim(n, d, 1) < full);  // one row cannot carry two generators
        }
}

TEST_CASE("admissible monomials") {
    using Row = std::vector<std::pair<int, int>>;
    CHECK(admissible_monomial(2, 1, {Row{{0, 0}, {0, 0}}}));            // all zero, vacuously fine
    CHECK_FALSE(admissible_monomial(2, 1, {Row{{1, 0}, {0, 5}}}));      // second edge exponent missing
    CHECK(admissible_monomial(2, 1, {Row{{1, 0}, {1, 5}}}));
    CHECK(admissible_monomial(2, 2, {Row{{0, 0}, {0, 0}}, Row{{2, 1}, {1, 0}}}));
    CHECK_THROWS_AS(admissible_monomial(2, 1, {Row{{1, 0}}}), std::invalid_argument);
}

TEST_CASE("hockey stick identity") {
    CHECK(hockey_stick_identity_holds(1, 0));
    CHECK(hockey_stick_identity_holds(3, 4));  // 35 == 1+3+6+10+15
    for (int x = 1; x <= 12; ++x)
        for (int k = 0; k <= 12; ++k) CHECK(hockey_stick_identity_holds(x, k));
}
