#pragma once

#include "tcbound/padic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcb::vclass {

enum class Status { Vanishes, Undecided };

enum class Reason {
    SimplyConnected,         // the canonical class itself is zero
    DimensionParity,         // every term exceeds the degree budget
    CoefficientAnnihilated,  // the surviving coefficient is killed by the class order
    SurvivingTerm,           // a term survives the symbolic model
};

// coefficient * a^left_power x b^right_power with |a| = |b| = 2 and
// class_order * a = class_order * b = 0.
struct SymbolicKunnethTerm {
    unsigned left_power = 0;
    unsigned right_power = 0;
    std::uint64_t coefficient_residue = 0;  // coefficient mod class_order
    std::optional<padic::BigInt> coefficient;  // exact, when within the binomial limit
    unsigned class_order = 1;
    bool exceeds_degree_budget = false;

    bool is_zero() const { return exceeds_degree_budget || coefficient_residue == 0; }
};

struct VanishingVerdict {
    Status status = Status::Undecided;
    Reason reason = Reason::SurvivingTerm;
    unsigned dim = 0;
    unsigned group_order = 1;
    unsigned class_order = 1;
    std::vector<SymbolicKunnethTerm> terms;
    // Present for Undecided: the surviving multiplier mod class_order.
    std::optional<std::uint64_t> surviving_coefficient;
    std::string explanation;
    std::vector<std::string> assumptions;
};

// pi_1 = Z_2: v^{2n} = sum_i C(n, i) a^i x a^{n-i}, 2a = 0. Requires n >= 2.
VanishingVerdict z2_vanishes(unsigned dim);

// pi_1 = Z_3: v^{2n} = i_*(w^n), w = a x 1 + 1 x b, 6a = 6b = 0. Requires n >= 2.
VanishingVerdict z3_vanishes(unsigned dim);

// Dispatch on |pi_1|; nullopt when the symbolic model does not cover the order.
std::optional<VanishingVerdict> evaluate(unsigned group_order, unsigned dim);

struct UpperBound {
    unsigned value = 0;
    std::string citation;
};

// TC <= 2 dim exactly when v^{2 dim} = 0; an Undecided verdict yields nothing.
std::optional<UpperBound> tc_upper_from_v(unsigned dim, const VanishingVerdict& verdict);

const char* to_string(Status s);
const char* to_string(Reason r);

} // namespace tcb::vclass
