#include "doctest.h"

#include "tcbound/error.hpp"
#include "tcbound/groupring.hpp"

#include <array>

using namespace tcb;
using namespace tcb::groupring;

namespace {

// Z[Z_3] by hand: coefficients of 1, t, t^2.
using Z3 = std::array<std::int64_t, 3>;

Z3 act3(const Z3& x, int g, int h)
{
    Z3 out{};
    for (int i = 0; i < 3; ++i)
        out[((i + g - h) % 3 + 3) % 3] += x[i];
    return out;
}

// x = a (t - 1) + b (t^2 - t)  =>  a = -x_0, b = x_2
IntVector alpha_beta(const Z3& x)
{
    REQUIRE(x[0] + x[1] + x[2] == 0);
    return {-x[0], x[2]};
}

const Z3 kAlpha{-1, 1, 0};
const Z3 kBeta{0, -1, 1};

} // namespace

TEST_CASE("group ring arithmetic")
{
    const CyclicGroup g(4);
    const auto t = GroupRingElement::basis(g, 1);
    const auto one = GroupRingElement::basis(g, 0);
    CHECK((t * t * t * t) == one);
    CHECK((t - one).augmentation() == 0);
    CHECK((t + one).augmentation() == 2);
    CHECK(t.act(2, 1) == GroupRingElement::basis(g, 2));
    CHECK_THROWS_AS(CyclicGroup(0), ValidationError);
}

TEST_CASE("augmentation ideal modules")
{
    const auto z2 = augmentation_ideal(CyclicGroup(2));
    CHECK(z2.rank == 1);
    CHECK(z2.act_left == IntMatrix{{-1}});
    CHECK(z2.act_right == IntMatrix{{-1}});
    CHECK(augmentation_ideal(CyclicGroup(1)).rank == 0);

    const auto ab = augmentation_ideal_z3_alpha_beta();
    const auto& m = ab.module;
    CHECK(m.rank == 2);
    // Columns are images of alpha, beta; compare with direct group-ring evaluation.
    CHECK(m.act_left.col(0) == alpha_beta(act3(kAlpha, 1, 0)));
    CHECK(m.act_left.col(1) == alpha_beta(act3(kBeta, 1, 0)));
    CHECK(m.act_right.col(0) == alpha_beta(act3(kAlpha, 0, 1)));
    CHECK(m.act_right.col(1) == alpha_beta(act3(kBeta, 0, 1)));
    CHECK(m.act_left.col(0) == IntVector{0, 1});     // beta
    CHECK(m.act_left.col(1) == IntVector{-1, -1});   // -alpha - beta
    CHECK(m.act_right.col(0) == IntVector{-1, -1});  // -alpha - beta
    CHECK(m.act_right.col(1) == IntVector{1, 0});    // alpha
    CHECK(ab.to_canonical * ab.from_canonical == IntMatrix::identity(2));

    for (std::uint32_t k = 1; k <= 12; ++k) {
        CHECK(augmentation_ideal(CyclicGroup(k)).satisfies_axioms());
        CHECK(group_ring_module(CyclicGroup(k)).satisfies_axioms());
    }
}

TEST_CASE("canonical crossed homomorphism")
{
    const auto f3 = canonical_crossed_hom(CyclicGroup(3));
    CHECK(f3.value(1, 0) == IntVector{1, 0});  // t - 1 in the basis {t - 1, t^2 - 1}
    const auto f2 = canonical_crossed_hom(CyclicGroup(2));
    CHECK(f2.value(0, 1) == IntVector{1});     // g^{-1} - 1 = g - 1
    CHECK(f2.value(1, 1) == IntVector{0});

    for (std::uint32_t k = 1; k <= 12; ++k) {
        const auto f = canonical_crossed_hom(CyclicGroup(k));
        CHECK(f.crossed_identity_violations() == 0);
        CHECK(f.diagonal_violations() == 0);
        // Values against direct evaluation of t^{g-h} - 1.
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t b = 0; b < k; ++b) {
                const auto expected = ideal_coordinates(
                    GroupRingElement::basis(CyclicGroup(k), (a + k - b) % k) - GroupRingElement::basis(CyclicGroup(k), 0));
                CHECK(f.value(a, b) == expected);
            }
    }
}

TEST_CASE("invariants and the order of the canonical class")
{
    const auto inv = invariants(group_ring_module(CyclicGroup(3)));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == IntVector{1, 1, 1});
    CHECK(invariants(augmentation_ideal(CyclicGroup(3))).empty());
    CHECK(invariants(trivial_module(CyclicGroup(5))).size() == 1);
    CHECK(order_of_canonical_class(CyclicGroup(1)) == 1);
    CHECK(order_of_canonical_class(CyclicGroup(2)) == 2);
    CHECK(order_of_canonical_class(CyclicGroup(3)) == 3);
    for (std::uint32_t k = 1; k <= 12; ++k) {
        CHECK(invariants(augmentation_ideal(CyclicGroup(k))).empty());
        CHECK(order_of_canonical_class(CyclicGroup(k)) == k);
    }
}

TEST_CASE("tensor products and the swap")
{
    const auto i2 = augmentation_ideal(CyclicGroup(2));
    const auto sq2 = tensor_product(i2, i2);
    CHECK(sq2.rank == 1);
    CHECK(sq2.act_left == IntMatrix{{1}});
    CHECK(sq2.act_right == IntMatrix{{1}});
    CHECK(swap_map(i2) == IntMatrix{{1}});

    const auto i3 = augmentation_ideal_z3_alpha_beta().module;
    const auto sq3 = tensor_product(i3, i3);
    CHECK(sq3.rank == 4);
    CHECK(sq3.act_left.col(0) == IntVector{0, 0, 0, 1});  // (t,1) aa = bb
    CHECK(sq3.satisfies_axioms());
    const auto t = swap_map(i3);
    CHECK(t.col(1) == IntVector{0, 0, 1, 0});  // T(ab) = ba
    CHECK(t.col(0) == IntVector{1, 0, 0, 0});
    CHECK(t.col(3) == IntVector{0, 0, 0, 1});
    CHECK(t * t == IntMatrix::identity(4));

    CHECK(tensor_product(i3, trivial_module(CyclicGroup(3), 0)).rank == 0);
}

TEST_CASE("wedge and symmetric square of the Z_3 ideal")
{
    const auto ws = wedge_and_symmetric(augmentation_ideal_z3_alpha_beta().module);
    CHECK(ws.inclusion == IntMatrix{{0}, {1}, {-1}, {0}});
    CHECK(ws.antisymmetrizer * IntMatrix{{0}, {1}, {0}, {0}} == IntMatrix{{1}});
    CHECK(ws.antisymmetrizer * ws.inclusion == IntMatrix{{2}});
    CHECK(ws.swap * ws.square.act_left == ws.square.act_left * ws.swap);
    CHECK(ws.swap * ws.square.act_right == ws.square.act_right * ws.swap);
    CHECK(ws.wedge.act_left == IntMatrix{{1}});
    CHECK(ws.wedge.act_right == IntMatrix{{1}});
    CHECK((ws.projection * ws.inclusion).is_zero());
    CHECK(ws.projection * ws.section == IntMatrix::identity(3));
    CHECK(rank(ws.projection) == 3);
    CHECK(ws.symmetric.rank == 3);
    CHECK(ws.symmetric.satisfies_axioms());
    // Projection is equivariant.
    CHECK(ws.projection * ws.square.act_left == ws.symmetric.act_left * ws.projection);
    CHECK(ws.projection * ws.square.act_right == ws.symmetric.act_right * ws.projection);

    // Canonical basis gives the same decomposition.
    const auto canon = wedge_and_symmetric(augmentation_ideal(CyclicGroup(3)));
    CHECK(canon.antisymmetrizer * canon.inclusion == IntMatrix{{2}});
    CHECK(canon.wedge.act_left == IntMatrix{{1}});
    CHECK_THROWS_AS(wedge_and_symmetric(augmentation_ideal(CyclicGroup(5))), UnsupportedError);
}
