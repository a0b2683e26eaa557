#pragma once

#include "tcbound/intmatrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tcb::groupring {

// Cyclic group of order m; element i stands for t^i.
class CyclicGroup {
public:
    explicit CyclicGroup(std::uint32_t order);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % order_; }
    std::uint32_t inverse(std::uint32_t a) const noexcept { return (order_ - a) % order_; }

    bool operator==(const CyclicGroup&) const = default;

private:
    std::uint32_t order_;
};

// Element sum c_i t^i of Z[G].
class GroupRingElement {
public:
    explicit GroupRingElement(CyclicGroup g);
    GroupRingElement(CyclicGroup g, IntVector coefficients);

    static GroupRingElement basis(CyclicGroup g, std::uint32_t i);

    const CyclicGroup& group() const noexcept { return group_; }
    const IntVector& coefficients() const noexcept { return coeffs_; }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    // Cyclic convolution.
    GroupRingElement operator*(const GroupRingElement& o) const;

    std::int64_t augmentation() const;

    // (g, h) . x = g x h^{-1}
    GroupRingElement act(std::uint32_t g, std::uint32_t h) const;

    bool operator==(const GroupRingElement&) const = default;

private:
    CyclicGroup group_;
    IntVector coeffs_;
};

// A free abelian group of finite rank carrying commuting actions of the two
// factors of G x G: act_left is (t, 1), act_right is (1, t).
struct BimoduleAction {
    CyclicGroup group{1};
    std::size_t rank = 0;
    IntMatrix act_left;
    IntMatrix act_right;

    // Matrix of (t^g, t^h).
    IntMatrix action(std::uint32_t g, std::uint32_t h) const;

    // Both generators have order dividing |G| and they commute.
    bool satisfies_axioms() const;
};

// Z[G] with (g, h) . x = g x h^{-1}.
BimoduleAction group_ring_module(CyclicGroup g);

BimoduleAction trivial_module(CyclicGroup g, std::size_t rank = 1);

// Augmentation ideal in the basis {t^i - 1 : 1 <= i < m}. For m = 1 the
// result is the zero module.
BimoduleAction augmentation_ideal(CyclicGroup g);

// Coordinates in the augmentation-ideal basis of an element with augmentation 0.
IntVector ideal_coordinates(const GroupRingElement& x);

// Z_3 augmentation ideal in the basis alpha = t - 1, beta = t^2 - t.
struct Z3IdealAlphaBeta {
    BimoduleAction module;
    // Columns are alpha and beta in the canonical basis {t - 1, t^2 - 1}.
    IntMatrix to_canonical;
    IntMatrix from_canonical;
};
Z3IdealAlphaBeta augmentation_ideal_z3_alpha_beta();

// Crossed homomorphism f(g, h) = g h^{-1} - 1 into the augmentation ideal.
struct CrossedHom {
    CyclicGroup group{1};
    BimoduleAction target;
    // values[g * m + h] holds f(t^g, t^h) in target coordinates.
    std::vector<IntVector> values;

    const IntVector& value(std::uint32_t g, std::uint32_t h) const
    {
        return values[static_cast<std::size_t>(g) * group.order() + h];
    }

    // Number of quadruples (g, h, g', h') where
    // f((g,h)(g',h')) != f(g,h) + (g,h) f(g',h').
    std::size_t crossed_identity_violations() const;

    // Number of g with f(g, g) != 0.
    std::size_t diagonal_violations() const;
};

CrossedHom canonical_crossed_hom(CyclicGroup g);

// Basis of {x : act_left x = x, act_right x = x}.
std::vector<IntVector> invariants(const BimoduleAction& m);

// |epsilon(N_0)| where N_0 generates the invariants of Z[G].
std::uint64_t order_of_canonical_class(CyclicGroup g);

// Diagonal action on M (x) N; basis index i * rank(N) + j.
BimoduleAction tensor_product(const BimoduleAction& m, const BimoduleAction& n);

// Factor interchange on M (x) M.
IntMatrix swap_map(const BimoduleAction& m);

// Decomposition of the tensor square of the Z_3 augmentation ideal, in the
// alpha/beta basis; tensor basis order is aa, ab, ba, bb.
struct WedgeSymmetric {
    BimoduleAction ideal;
    BimoduleAction square;
    IntMatrix swap;
    BimoduleAction wedge;       // I ^ I, rank 1
    BimoduleAction symmetric;   // S(I) = (I (x) I) / (I ^ I), rank 3
    IntMatrix inclusion;        // 4 x 1
    IntMatrix projection;       // 3 x 4
    IntMatrix section;          // 4 x 3 with projection * section = Id
    IntMatrix antisymmetrizer;  // A(x) = x - T(x) as a 1 x 4 map into I ^ I
};

// Accepts the Z_3 augmentation ideal in either basis; anything else throws
// UnsupportedError.
WedgeSymmetric wedge_and_symmetric(const BimoduleAction& ideal);

} // namespace tcb::groupring
