#include "doctest.h"
#include "oracles.hpp"

#include "tcbound/cohomology.hpp"
#include "tcbound/error.hpp"
#include "tcbound/vclass.hpp"

using namespace tcb;
using namespace tcb::vclass;

TEST_CASE("Z_2 verdicts")
{
    CHECK(z2_vanishes(3).status == Status::Vanishes);
    CHECK(z2_vanishes(3).reason == Reason::DimensionParity);
    CHECK(z2_vanishes(4).status == Status::Vanishes);
    CHECK(z2_vanishes(4).reason == Reason::CoefficientAnnihilated);
    CHECK(z2_vanishes(2).status == Status::Vanishes);
    CHECK(z2_vanishes(2).class_order == 2);
    CHECK_THROWS_AS(z2_vanishes(1), ValidationError);
    CHECK_THROWS_AS(z2_vanishes(0), ValidationError);

    const oracle::Pascal pascal(100);
    for (unsigned n = 2; n <= 100; ++n) {
        const auto v = z2_vanishes(n);
        CHECK(v.status == Status::Vanishes);
        CHECK_FALSE(v.assumptions.empty());
        for (const auto& t : v.terms) {
            CHECK(t.left_power + t.right_power == n);
            if (!t.exceeds_degree_budget)
                CHECK(t.coefficient_residue == oracle::mod(pascal(n, t.left_power), 2));
        }
    }
}

TEST_CASE("Z_3 verdicts")
{
    CHECK(z3_vanishes(4).status == Status::Vanishes);
    CHECK(z3_vanishes(7).status == Status::Vanishes);
    const auto v2 = z3_vanishes(2);
    CHECK(v2.status == Status::Undecided);
    REQUIRE(v2.surviving_coefficient.has_value());
    CHECK(*v2.surviving_coefficient == 2);
    CHECK(v2.class_order == 6);
    CHECK_THROWS_AS(z3_vanishes(1), ValidationError);

    for (unsigned n = 2; n <= 200; ++n) {
        const auto v = z3_vanishes(n);
        bool expected = true;
        if (n % 2 == 0) {
            const auto c = oracle::central(n / 2);
            expected = mpz_divisible_ui_p(c.get_mpz_t(), 6) != 0;
            CHECK(expected == oracle::base3_has_two(n / 2));
            if (!expected)
                CHECK(*v.surviving_coefficient == oracle::mod(c, 6));
        }
        CHECK((v.status == Status::Vanishes) == expected);
    }
    for (unsigned m : {1u, 3u, 4u, 9u, 10u, 12u, 13u})
        CHECK(z3_vanishes(2 * m).status == Status::Undecided);
}

TEST_CASE("verdicts agree with the concrete lens ring")
{
    using namespace tcb::cohomology;
    for (int n = 1; n <= 10; ++n) {
        const auto a = preset_lens_skeleton(n);
        const auto sq = kunneth(a, a);
        const auto by = bar(sq, AlgebraElement::basis(a, *a->index_of("y")));
        const bool nonzero = !power(by, static_cast<unsigned>(2 * n)).is_zero();
        CHECK(nonzero == (z3_vanishes(static_cast<unsigned>(2 * n)).status == Status::Undecided));
    }
}

TEST_CASE("dispatch and upper bounds")
{
    CHECK(evaluate(1, 5)->status == Status::Vanishes);
    CHECK(evaluate(1, 5)->reason == Reason::SimplyConnected);
    CHECK(evaluate(2, 4)->status == Status::Vanishes);
    CHECK(evaluate(3, 2)->status == Status::Undecided);
    CHECK_FALSE(evaluate(5, 4).has_value());

    const auto ub = tc_upper_from_v(4, z3_vanishes(4));
    REQUIRE(ub.has_value());
    CHECK(ub->value == 8);
    CHECK_FALSE(ub->citation.empty());
    for (unsigned n = 2; n <= 20; ++n)
        CHECK(tc_upper_from_v(n, z2_vanishes(n))->value == 2 * n);
    CHECK_FALSE(tc_upper_from_v(2, z3_vanishes(2)).has_value());
}
