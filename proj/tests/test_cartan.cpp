#include <doctest.h>

#include "crystalpoly/cartan.hpp"

#include <random>
#include <stdexcept>

using namespace crystalpoly;

TEST_CASE("finite type A Cartan matrix entries") {
    const CartanData c2 = CartanData::finite_a(2);
    CHECK(c2.rank() == 2);
    CHECK(c2.kind() == CartanKind::FiniteA);
    CHECK(c2.pairing(1, 1) == 2);
    CHECK(c2.pairing(1, 2) == -1);
    CHECK(c2.pairing(2, 1) == -1);
    CHECK(c2.pairing(2, 2) == 2);

    const CartanData c3 = CartanData::finite_a(3);
    CHECK(c3.pairing(1, 3) == 0);
    CHECK(c3.pairing(3, 1) == 0);
    CHECK(c3.pairing(2, 3) == -1);

    CHECK(CartanData::finite_a(1).pairing(1, 1) == 2);
}

TEST_CASE("affine rank 2 Cartan matrix entries") {
    const CartanData c = CartanData::affine_a1();
    CHECK(c.rank() == 2);
    CHECK(c.kind() == CartanKind::AffineA1);
    CHECK(c.pairing(1, 1) == 2);
    CHECK(c.pairing(1, 2) == -2);
    CHECK(c.pairing(2, 1) == -2);
    CHECK(c.pairing(2, 2) == 2);
}

TEST_CASE("zero pattern of the matrix is symmetric") {
    for (int n : {1, 2, 3, 4}) {
        const CartanData c = CartanData::finite_a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK((c.pairing(i, j) == 0) == (c.pairing(j, i) == 0));
    }
}

TEST_CASE("construction and range checks") {
    CHECK_THROWS_AS(CartanData::finite_a(0), std::invalid_argument);
    const CartanData c = CartanData::finite_a(2);
    CHECK_THROWS_AS(c.pairing(0, 1), std::out_of_range);
    CHECK_THROWS_AS(c.pairing(1, 3), std::out_of_range);
}

TEST_CASE("weight pairing reads fundamental coordinates") {
    const CartanData c = CartanData::finite_a(2);
    const Weight w{{1, -1}};
    CHECK(weight_pairing(c, 1, w) == 1);
    CHECK(weight_pairing(c, 2, w) == -1);
    CHECK_THROWS_AS(weight_pairing(c, 3, w), std::out_of_range);
    CHECK_THROWS_AS(weight_pairing(c, 1, Weight{{1}}), std::invalid_argument);
}

TEST_CASE("subtract_root moves by a root multiple") {
    const CartanData aff = CartanData::affine_a1();
    // (2,-1) + alpha_2 = (0,1): raising once lands on a fundamental weight
    CHECK(subtract_root(Weight{{2, -1}}, aff, 2, -1) == Weight{{0, 1}});

    const CartanData c2 = CartanData::finite_a(2);
    CHECK(subtract_root(Weight{{0, 0}}, c2, 1, 1) == Weight{{-2, 1}});
    CHECK(subtract_root(Weight{{5, 7}}, c2, 1, 0) == Weight{{5, 7}});
}

TEST_CASE("subtract_root is inverted by the opposite multiple") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> coeff(-5, 5);
    for (const CartanData& c : {CartanData::finite_a(3), CartanData::affine_a1()}) {
        for (int t = 0; t < 60; ++t) {
            Weight w;
            for (int i = 0; i < c.rank(); ++i) w.coeffs.push_back(coeff(rng));
            const int i = 1 + t % c.rank();
            const Int m = coeff(rng);
            CHECK(subtract_root(subtract_root(w, c, i, m), c, i, -m) == w);
        }
    }
}
