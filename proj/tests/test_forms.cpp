#include <doctest.h>

#include "crystalpoly/forms.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace crystalpoly;

namespace {

LinearForm make_form(std::initializer_list<std::pair<Index, Int>> coeffs, Int c = 0) {
    LinearForm phi;
    phi.set_constant(c);
    for (const auto& [k, v] : coeffs) phi.set_coeff(k, v);
    return phi;
}

FinSuppVector vec(Weight lambda, std::initializer_list<std::pair<Index, Int>> support) {
    FinSuppVector x(std::move(lambda));
    for (const auto& [k, v] : support) x.set(k, v);
    return x;
}

const Weight L21{{2, -1}};

LinearForm random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> pos(-8, 8);
    std::uniform_int_distribution<Int> val(-3, 3);
    std::uniform_int_distribution<int> len(0, 5);
    LinearForm phi;
    phi.set_constant(val(rng));
    const int m = len(rng);
    for (int t = 0; t < m; ++t) {
        const Index k = pos(rng);
        if (k != 0) phi.set_coeff(k, val(rng));
    }
    return phi;
}

} // namespace

TEST_CASE("linear form bookkeeping") {
    LinearForm phi;
    CHECK(phi.is_zero());
    phi.set_coeff(4, 2);
    phi.add_coeff(4, -2);
    CHECK(phi.is_zero());
    CHECK_THROWS_AS(phi.set_coeff(0, 1), std::invalid_argument);

    const LinearForm f = make_form({{-1, 1}}, 5);
    CHECK(f.evaluate(vec(L21, {{-1, -2}})) == 3);

    LinearForm g = make_form({{1, 2}, {2, -1}}, 1);
    g.subtract_scaled(make_form({{1, 1}, {3, 4}}, 2), 2);
    CHECK(g == make_form({{2, -1}, {3, -8}}, -3));
}

TEST_CASE("two-step differences of sigma") {
    const IotaSequence io = IotaSequence::affine_a1();

    auto b1 = beta_bar(io, L21, 1);
    REQUIRE(b1.has_value());
    CHECK(*b1 == make_form({{1, 1}, {2, -2}, {3, 1}}));

    auto bm1 = beta_bar(io, L21, -1);
    REQUIRE(bm1.has_value());
    CHECK(*bm1 == make_form({{-1, 1}, {1, -2}, {2, 1}}, 1)); // straddles the marker

    auto b0 = beta_bar(io, L21, 0);
    REQUIRE(b0.has_value());
    CHECK(b0->is_zero());

    const IotaSequence neg = IotaSequence::affine_a1(IotaSide::NegativeOnly);
    CHECK(!beta_bar(neg, L21, -1).has_value()); // no same-color index above
    CHECK(beta_bar(neg, L21, -3).has_value());
}

TEST_CASE("beta_bar agrees with sigma differences on random vectors") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Int> lam_entry(-3, 3);
    std::uniform_int_distribution<Index> pos(-8, 8);
    std::uniform_int_distribution<Int> val(-3, 3);
    std::uniform_int_distribution<int> len(0, 6);
    for (const IotaSequence& io : {IotaSequence::affine_a1(), IotaSequence::finite_a(3)}) {
        const int rank = io.cartan().rank();
        for (int trial = 0; trial < 300; ++trial) {
            Weight lam;
            for (int i = 0; i < rank; ++i) lam.coeffs.push_back(lam_entry(rng));
            FinSuppVector x(lam);
            const int m = len(rng);
            for (int t = 0; t < m; ++t) {
                const Index k = pos(rng);
                if (k != 0) x.set(k, val(rng));
            }
            std::uniform_int_distribution<Index> pick_k(-8, 8);
            const Index k = [&] {
                Index c = pick_k(rng);
                return c == 0 ? Index{1} : c;
            }();
            const Index up = io.k_plus(k);
            auto b = beta_bar(io, lam, k);
            REQUIRE(b.has_value());
            CHECK(b->evaluate(x) == sigma(x, io, k) - sigma(x, io, up));
        }
    }
}

TEST_CASE("single rewrites match hand computations") {
    const IotaSequence io = IotaSequence::affine_a1();
    auto r = s_bar(LinearForm::coordinate(1), io, L21, 1);
    REQUIRE(r.has_value());
    CHECK(*r == make_form({{2, 2}, {3, -1}}));

    r = s_bar(LinearForm::coordinate(-1, -1), io, L21, -1);
    REQUIRE(r.has_value());
    CHECK(*r == make_form({{-3, 1}, {-2, -2}}));

    // zero coefficient: identity, even at a subscript the sequence lacks
    const LinearForm phi = make_form({{1, 1}, {2, -1}});
    r = s_bar(phi, io, L21, 5);
    REQUIRE(r.has_value());
    CHECK(*r == phi);
    const IotaSequence pos_only = IotaSequence::finite_a(2, IotaSide::PositiveOnly);
    r = s_bar(phi, pos_only, L21, -4);
    REQUIRE(r.has_value());
    CHECK(*r == phi);

    CHECK_THROWS_AS(s_bar(phi, io, L21, 0), std::invalid_argument);
}

TEST_CASE("rewrites are idempotent") {
    struct Setup {
        IotaSequence iota;
        Weight lambda;
    };
    const Setup setups[] = {
        {IotaSequence::affine_a1(), L21},
        {IotaSequence::finite_a(3), Weight{{1, 0, -1}}},
    };
    std::mt19937_64 rng(29);
    for (const auto& [io, lam] : setups) {
        for (int trial = 0; trial < 200; ++trial) {
            const LinearForm phi = random_form(rng);
            for (Index k = -8; k <= 8; ++k) {
                if (k == 0) continue;
                auto once = s_bar(phi, io, lam, k);
                if (!once) continue;
                auto twice = s_bar(*once, io, lam, k);
                REQUIRE(twice.has_value());
                CHECK(*twice == *once);
            }
        }
    }
}

TEST_CASE("closures of coordinate seeds") {
    const IotaSequence io = IotaSequence::affine_a1();
    const std::vector<LinearForm> seeds = {LinearForm::coordinate(2),
                                           LinearForm::coordinate(-2, -1)};
    CHECK(s_bar_closure(seeds, io, L21, 6, 0, 0, 2) ==
          std::set<LinearForm>(seeds.begin(), seeds.end()));

    const auto depth1 = s_bar_closure(seeds, io, L21, 6, 1, 0, 2);
    CHECK(depth1.count(make_form({{3, 2}, {4, -1}})) == 1);

    // seed order has no effect on the closure
    std::vector<LinearForm> reversed(seeds.rbegin(), seeds.rend());
    CHECK(s_bar_closure(reversed, io, L21, 6, 3, 0, 2) ==
          s_bar_closure(seeds, io, L21, 6, 3, 0, 2));
}

TEST_CASE("the coordinate family holds at the origin") {
    const IotaSequence io = IotaSequence::affine_a1();
    const auto fam = xi_family(io, L21, 6, 4);
    CHECK(!fam.empty());
    for (const LinearForm& f : fam) CHECK(f.constant() == 0);
    CHECK(satisfies_all(FinSuppVector(L21), fam));
    CHECK(!satisfies_all(vec(L21, {{1, -1}}), fam)); // the x_1 seed fails
}

TEST_CASE("one-sided families stay one-sided under far rewrites") {
    const Weight zero2{{0, 0}};
    for (const IotaSequence& io : {IotaSequence::finite_a(2), IotaSequence::affine_a1()}) {
        std::vector<LinearForm> pos_seeds;
        std::vector<LinearForm> neg_seeds;
        for (Index j = 1; j <= 6; ++j) {
            pos_seeds.push_back(LinearForm::coordinate(j));
            neg_seeds.push_back(LinearForm::coordinate(-j, -1));
        }
        const auto xi_pos = s_bar_closure(pos_seeds, io, zero2, 6, 4, +1);
        for (const LinearForm& f : xi_pos) {
            for (Index k = -6; k <= -1; ++k) {
                auto r = s_bar(f, io, zero2, k);
                REQUIRE(r.has_value());
                CHECK(*r == f);
            }
        }
        const auto xi_neg = s_bar_closure(neg_seeds, io, zero2, 6, 4, -1);
        for (const LinearForm& f : xi_neg) {
            for (Index k = 1; k <= 6; ++k) {
                auto r = s_bar(f, io, zero2, k);
                REQUIRE(r.has_value());
                CHECK(*r == f);
            }
        }
    }
}

TEST_CASE("boundary coefficient scan") {
    CHECK(check_pn(IotaSequence::finite_a(2, IotaSide::PositiveOnly), 8, 4).empty());
    CHECK(check_pn(IotaSequence::finite_a(2, IotaSide::NegativeOnly), 8, 4).empty());
    CHECK(check_pn(IotaSequence::affine_a1(IotaSide::PositiveOnly), 8, 4).empty());
    CHECK(check_pn(IotaSequence::affine_a1(IotaSide::NegativeOnly), 8, 4).empty());
    CHECK_THROWS_AS(check_pn(IotaSequence::finite_a(2), 8, 4), std::invalid_argument);

    // A pattern with an adjacent color repeat does produce boundary
    // violations, so the scan has teeth.
    const IotaSequence deg = IotaSequence::from_pattern(
        CartanData::finite_a(2), {2, 1, 1}, {}, IotaSide::PositiveOnly);
    const auto violations = check_pn(deg, 6, 4);
    CHECK(!violations.empty());
    for (const PnViolation& v : violations) {
        CHECK(deg.k_minus(v.position) == 0);
        CHECK(v.form.coeff(v.position) < 0);
    }
    const LinearForm witness = make_form({{1, 1}, {2, -1}, {3, -1}});
    CHECK(std::any_of(violations.begin(), violations.end(), [&](const PnViolation& v) {
        return v.form == witness && v.position == 2;
    }));
}
