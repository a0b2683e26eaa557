#include "tcbound/vclass.hpp"

#include "tcbound/error.hpp"

#include <sstream>

namespace tcb::vclass {

namespace {

constexpr const char* kKunnethAssumption =
    "H^1(X; Z) = 0 (finite fundamental group), so H^2(X x X) splits by Künneth into "
    "H^2(X) x H^0(X) + H^0(X) x H^2(X)";

void require_dim(unsigned dim)
{
    if (dim < 2)
        throw ValidationError("the canonical-class criterion needs dim >= 2, got " + std::to_string(dim));
}

// Terms C(n, k) a^k x b^{n-k} of (a x 1 + 1 x b)^n with |a| = |b| = 2 inside
// a space of dimension n.
std::vector<SymbolicKunnethTerm> expand(unsigned n, unsigned class_order)
{
    std::vector<SymbolicKunnethTerm> terms;
    terms.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        SymbolicKunnethTerm t;
        t.left_power = k;
        t.right_power = n - k;
        t.class_order = class_order;
        t.exceeds_degree_budget = 2 * k > n || 2 * (n - k) > n;
        t.coefficient_residue = class_order == 6 ? padic::binom_mod_6(n, k)
                                                 : padic::binom_mod_p(n, k, class_order);
        if (n <= padic::kDefaultBinomLimit)
            t.coefficient = padic::binom_exact(n, k);
        terms.push_back(std::move(t));
    }
    return terms;
}

VanishingVerdict decide(unsigned dim, unsigned group_order, unsigned class_order)
{
    VanishingVerdict v;
    v.dim = dim;
    v.group_order = group_order;
    v.class_order = class_order;
    v.assumptions.push_back(kKunnethAssumption);
    v.terms = expand(dim, class_order);

    std::ostringstream os;
    if (dim % 2 == 1) {
        v.status = Status::Vanishes;
        v.reason = Reason::DimensionParity;
        os << "dim " << dim << " is odd: every term a^k x b^(" << dim
           << "-k) has a factor of degree > " << dim;
        v.explanation = os.str();
        return v;
    }
    const auto& mid = v.terms[dim / 2];
    const unsigned m = dim / 2;
    if (mid.coefficient_residue == 0) {
        v.status = Status::Vanishes;
        v.reason = Reason::CoefficientAnnihilated;
        os << "only a^" << m << " x b^" << m << " survives dimensionally; its coefficient C(" << dim
           << "," << m << ") is divisible by the class order " << class_order;
    } else {
        v.status = Status::Undecided;
        v.reason = Reason::SurvivingTerm;
        v.surviving_coefficient = mid.coefficient_residue;
        os << "coefficient C(" << dim << "," << m << ") of a^" << m << " x b^" << m << " is "
           << mid.coefficient_residue << " mod " << class_order << "; vanishing cannot be concluded";
    }
    v.explanation = os.str();
    return v;
}

} // namespace

VanishingVerdict z2_vanishes(unsigned dim)
{
    require_dim(dim);
    return decide(dim, 2, 2);
}

VanishingVerdict z3_vanishes(unsigned dim)
{
    require_dim(dim);
    return decide(dim, 3, 6);
}

std::optional<VanishingVerdict> evaluate(unsigned group_order, unsigned dim)
{
    switch (group_order) {
    case 1: {
        VanishingVerdict v;
        v.status = Status::Vanishes;
        v.reason = Reason::SimplyConnected;
        v.dim = dim;
        v.explanation = "the canonical class has order |pi_1| = 1, so it is zero";
        return v;
    }
    case 2:
        return z2_vanishes(dim);
    case 3:
        return z3_vanishes(dim);
    default:
        return std::nullopt;
    }
}

std::optional<UpperBound> tc_upper_from_v(unsigned dim, const VanishingVerdict& verdict)
{
    if (verdict.status != Status::Vanishes || dim < 2)
        return std::nullopt;
    return UpperBound{2 * dim, "TC(X) <= 2 dim X iff the 2n-th power of the canonical class in "
                               "H^1(X x X; I) vanishes (" + verdict.explanation + ")"};
}

const char* to_string(Status s)
{
    return s == Status::Vanishes ? "vanishes" : "undecided";
}

const char* to_string(Reason r)
{
    switch (r) {
    case Reason::SimplyConnected:
        return "simply_connected";
    case Reason::DimensionParity:
        return "dimension_parity";
    case Reason::CoefficientAnnihilated:
        return "coefficient_annihilated";
    case Reason::SurvivingTerm:
        return "surviving_term";
    }
    return "unknown";
}

} // namespace tcb::vclass
