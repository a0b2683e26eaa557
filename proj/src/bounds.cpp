#include "tcbound/bounds.hpp"

#include "tcbound/error.hpp"
#include "tcbound/padic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tcb::bounds {

namespace {

namespace cite {
constexpr const char* kDimension = "Farber: TC(X) <= 2 dim X + 1 for every cell complex";
constexpr const char* kSimplyConnected = "Farber: TC(X) <= dim X + 1 for simply connected X";
constexpr const char* kZ2 =
    "pi_1 = Z_2: TC(X) <= 2 dim X, since v^{2n} = C(n, n/2) a^{n/2} x a^{n/2} with C(n, n/2) even and 2a = 0";
constexpr const char* kZ3 =
    "pi_1 = Z_3: TC(X) <= 2 dim X when dim X is odd or dim X = 2m with a digit 2 in base-3 m "
    "(6 divides C(2m, m), so v^{2 dim} = 0)";
constexpr const char* kBerstein =
    "Berstein: cat(X) <= dim X for a closed manifold with pi_1 = Z_2 and w^n = 0";
constexpr const char* kDranishnikov =
    "Dranishnikov: cat(X) <= ceil((dim X - 1)/2) + cd(pi_1) + 1 when cd(pi_1) <= 2";
constexpr const char* kDeclaredCat = "declared Lusternik-Schnirelmann category";
constexpr const char* kCatToTc = "Farber: TC(X) <= 2 cat(X) - 1";
constexpr const char* kCd =
    "cd(pi_1) <= 2: TC(X) <= dim X + 2 cd(pi_1), plus 1 when dim X is even (Dranishnikov's cat "
    "bound combined with TC <= 2 cat - 1)";
constexpr const char* kMinimum = "TC(X) >= 1 in the unreduced convention";
constexpr const char* kCupLength =
    "zero-divisor cup-length: a nonzero product of k zero-divisors in H*(X x X) gives TC(X) >= k + 1";
constexpr const char* kWeighted =
    "weighted cup-length: a nonzero product of zero-divisors of total weight W gives TC(X) >= W + 1";
constexpr const char* kRp =
    "Farber-Tabachnikov-Yuzvinsky: TC(RP^n) = 2n if and only if n is a power of 2";
constexpr const char* kTorus =
    "Cohen-Pruidze: TC((T^mu)^(d)) = 2d + 1 for mu >= 2d >= 4";
constexpr const char* kLensSpace =
    "Farber-Grant: TC(L_3^{2n+1}) = 2 dim when n has only base-3 digits 0 and 1";
constexpr const char* kLensSkeleton =
    "2n-skeleton of L_3^{2n+1}: TC = 2 dim + 1 = 4n + 1 when n has only base-3 digits 0 and 1 "
    "(bar(y)^{2n} = (-1)^n C(2n, n) y^n x y^n is nonzero and bar(y) has weight 2)";
constexpr const char* kConjecture =
    "conjecture (not used as a rule): TC(X) <= dim X + F(cd(pi_1)) for some function F";
} // namespace cite

bool is_power_of_two(unsigned n)
{
    return n != 0 && (n & (n - 1)) == 0;
}

std::string describe_pi1(const Pi1& p)
{
    switch (p.kind) {
    case Pi1Kind::Trivial:
        return "trivial";
    case Pi1Kind::Cyclic:
        return "Z_" + std::to_string(p.order);
    case Pi1Kind::CdBounded:
        return "cd " + std::to_string(p.cd);
    case Pi1Kind::FreeAbelian:
        return p.rank ? "Z^" + std::to_string(*p.rank) : "free abelian";
    case Pi1Kind::Other:
        return "other";
    }
    return "?";
}

bool simply_connected(const Pi1& p)
{
    return p.kind == Pi1Kind::Trivial || (p.kind == Pi1Kind::Cyclic && p.order == 1) ||
           (p.kind == Pi1Kind::CdBounded && p.cd == 0) ||
           (p.kind == Pi1Kind::FreeAbelian && p.rank && *p.rank == 0);
}

// cd(pi_1) when it is known to be at most 2.
// Only a declared cd triggers the Dranishnikov rules; a trivial pi1 is left to
// the simply connected bound.
std::optional<unsigned> small_cd(const Pi1& p)
{
    if (p.kind == Pi1Kind::CdBounded && p.cd <= 2)
        return p.cd;
    if (p.kind == Pi1Kind::FreeAbelian && p.rank && *p.rank <= 2)
        return *p.rank;
    return std::nullopt;
}

class RuleSet {
public:
    void fire(std::string id, Direction dir, std::int64_t value, std::string citation,
              std::string inputs)
    {
        rules.push_back({std::move(id), dir, value, std::move(citation), std::move(inputs)});
    }

    const FiredRule* binding(Direction dir) const
    {
        const FiredRule* best = nullptr;
        for (const auto& r : rules) {
            if (r.direction != dir)
                continue;
            if (!best || (dir == Direction::Lower ? r.value > best->value : r.value < best->value))
                best = &r;
        }
        return best;
    }

    std::vector<FiredRule> rules;
};

} // namespace

void check_descriptor(const SpaceDescriptor& s)
{
    const auto bad = [&](const std::string& msg) { throw SchemaError(s.name + ": " + msg); };
    if (s.pi1.kind == Pi1Kind::Cyclic) {
        if (s.pi1.order == 0)
            bad("pi1.order must be >= 1");
        if (s.pi1.order >= 2 && s.dim < 2)
            bad("a complex with finite nontrivial pi1 has dim >= 2 (got dim " + std::to_string(s.dim) + ")");
    }
    if (s.cat && *s.cat < 1)
        bad("cat must be >= 1");
    if (s.known_tc && s.known_tc->value < 1)
        bad("known_tc.value must be >= 1");
    if (s.cohomology && static_cast<unsigned>(s.cohomology->top_degree()) > s.dim)
        bad("cohomology has classes above dim " + std::to_string(s.dim));
    if (!s.weights.empty() && !s.cohomology)
        bad("weights need a cohomology ring");
    for (const auto& w : s.weights)
        if (w.weight < 1)
            bad("weight of '" + w.expression + "' must be >= 1");

    if (!s.family)
        return;
    const auto& f = *s.family;
    const auto cyclic = [&](std::uint32_t m) {
        return s.pi1.kind == Pi1Kind::Cyclic && s.pi1.order == m;
    };
    switch (f.kind) {
    case Family::Kind::RealProjective:
        if (f.n < 1 || s.dim != f.n)
            bad("family rp needs n >= 1 and dim = n");
        if (f.n >= 2 && !cyclic(2))
            bad("RP^n with n >= 2 has pi1 = Z_2");
        if (f.n == 1 && s.pi1.kind == Pi1Kind::Cyclic)
            bad("RP^1 is a circle; pi1 = Z");
        break;
    case Family::Kind::LensSkeleton:
        if (f.n < 1 || s.dim != 2 * f.n || !cyclic(3))
            bad("family lens_skeleton needs n >= 1, dim = 2n and pi1 = Z_3");
        break;
    case Family::Kind::LensSpace:
        if (f.n < 1 || s.dim != 2 * f.n + 1 || !cyclic(3))
            bad("family lens_space needs n >= 1, dim = 2n + 1 and pi1 = Z_3");
        break;
    case Family::Kind::TorusSkeleton:
        if (f.d > f.mu || s.dim != f.d)
            bad("family torus_skeleton needs d <= mu and dim = d");
        break;
    }
}

std::optional<RegistryEntry> registry_lookup(const SpaceDescriptor& s)
{
    if (!s.family)
        return std::nullopt;
    const auto& f = *s.family;
    switch (f.kind) {
    case Family::Kind::RealProjective:
        if (is_power_of_two(f.n))
            return RegistryEntry{"RP^" + std::to_string(f.n), 2 * f.n, cite::kRp};
        return std::nullopt;
    case Family::Kind::TorusSkeleton:
        if (f.mu >= 2 * f.d && 2 * f.d >= 4)
            return RegistryEntry{"(T^" + std::to_string(f.mu) + ")^(" + std::to_string(f.d) + ")",
                                 2 * f.d + 1, cite::kTorus};
        return std::nullopt;
    case Family::Kind::LensSpace:
        if (padic::has_only_small_digits_base3(f.n))
            return RegistryEntry{"L_3^" + std::to_string(2 * f.n + 1), 2 * (2 * f.n + 1),
                                 cite::kLensSpace};
        return std::nullopt;
    case Family::Kind::LensSkeleton:
        if (padic::has_only_small_digits_base3(f.n))
            return RegistryEntry{"(L_3^" + std::to_string(2 * f.n + 1) + ")^(" +
                                     std::to_string(2 * f.n) + ")",
                                 4 * f.n + 1, cite::kLensSkeleton};
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::string> aspherical_inference(const SpaceDescriptor& s,
                                                std::optional<unsigned> certified_tc)
{
    if (!certified_tc || *certified_tc != 2 * s.dim + 1)
        return std::nullopt;
    std::ostringstream os;
    os << "TC(K(pi_1(X), 1)) >= " << 2 * s.dim + 1
       << ": the canonical class of K(pi_1, 1) pulls back to that of X, so its power " << 2 * s.dim
       << " is a nonzero zero-divisor";
    if (s.dim <= 1 || s.aspherical_target)
        os << " (X is itself aspherical here, so this restates TC(X) = " << 2 * s.dim + 1 << ")";
    return os.str();
}

BoundReport evaluate(const SpaceDescriptor& s, const EvaluateOptions& opts)
{
    check_descriptor(s);

    BoundReport report;
    report.name = s.name;
    RuleSet rs;
    const std::string dim_in = "dim=" + std::to_string(s.dim);
    const std::string pi1_in = "pi1=" + describe_pi1(s.pi1);

    rs.fire("unreduced_minimum", Direction::Lower, 1, cite::kMinimum, "");
    rs.fire("dimension", Direction::Upper, 2 * static_cast<std::int64_t>(s.dim) + 1, cite::kDimension,
            dim_in);
    if (simply_connected(s.pi1))
        rs.fire("simply_connected", Direction::Upper, s.dim + 1, cite::kSimplyConnected,
                dim_in + ", " + pi1_in);

    // Canonical-class criterion for pi_1 = Z_2, Z_3.
    if (s.pi1.kind == Pi1Kind::Cyclic && (s.pi1.order == 2 || s.pi1.order == 3)) {
        const auto verdict = *vclass::evaluate(s.pi1.order, s.dim);
        for (const auto& a : verdict.assumptions)
            report.assumptions.push_back(a);
        if (auto ub = vclass::tc_upper_from_v(s.dim, verdict))
            rs.fire(s.pi1.order == 2 ? "z2_canonical_class" : "z3_canonical_class", Direction::Upper,
                    ub->value, s.pi1.order == 2 ? cite::kZ2 : cite::kZ3,
                    dim_in + ", " + pi1_in + ", " + verdict.explanation);
        else
            report.notes.push_back("canonical class power undecided: " + verdict.explanation +
                                   "; the bound 2 dim + 1 is not improved");
    } else if (s.pi1.kind == Pi1Kind::Cyclic && s.pi1.order > 3) {
        report.notes.push_back("no fundamental-group rule covers Z_" + std::to_string(s.pi1.order));
    }

    // Category bounds feeding TC <= 2 cat - 1.
    if (s.cat)
        rs.fire("declared_cat", Direction::CatUpper, *s.cat, cite::kDeclaredCat,
                "cat=" + std::to_string(*s.cat));
    if (s.pi1.kind == Pi1Kind::Cyclic && s.pi1.order == 2 && s.manifold && s.manifold->closed &&
        s.manifold->wn_vanishes.value_or(false)) {
        rs.fire("berstein_cat", Direction::CatUpper, s.dim, cite::kBerstein,
                dim_in + ", closed manifold, w^n = 0");
        report.assumptions.push_back("closed manifold with w^n = 0 for the generator w of H^1(X; Z_2)");
    } else if (s.manifold && s.manifold->wn_vanishes && !(s.pi1.kind == Pi1Kind::Cyclic && s.pi1.order == 2)) {
        report.notes.push_back("manifold.wn_vanishes is only used when pi1 = Z_2");
    }
    const auto cd = small_cd(s.pi1);
    if (cd) {
        const std::int64_t cat = s.dim / 2 + *cd + 1;  // ceil((dim - 1)/2) = floor(dim/2)
        rs.fire("dranishnikov_cat", Direction::CatUpper, cat, cite::kDranishnikov,
                dim_in + ", cd=" + std::to_string(*cd));
        const std::int64_t tc = s.dim + 2 * static_cast<std::int64_t>(*cd) + (s.dim % 2 == 0 ? 1 : 0);
        rs.fire("cd_dimension", Direction::Upper, tc, cite::kCd, dim_in + ", cd=" + std::to_string(*cd));
    }
    if (const auto* c = rs.binding(Direction::CatUpper))
        rs.fire("cat_to_tc", Direction::Upper, 2 * c->value - 1, cite::kCatToTc,
                "cat<=" + std::to_string(c->value) + " from " + c->id);
    if (s.pi1.kind == Pi1Kind::CdBounded || s.pi1.kind == Pi1Kind::FreeAbelian)
        report.notes.push_back(cite::kConjecture);

    // Cohomological lower bounds.
    if (s.cohomology) {
        const auto square = cohomology::kunneth(s.cohomology, s.cohomology);
        const unsigned depth = opts.max_depth != 0 ? opts.max_depth : std::max(1u, 2 * s.dim);
        tclower::SearchOptions so;
        so.max_depth = depth;
        so.exhaustive = opts.exhaustive;
        so.frontier_cap = opts.frontier_cap;
        const auto cl = tclower::zero_divisor_cuplength(square, so);
        std::string witness;
        for (const auto& l : cl.witness_labels)
            witness += (witness.empty() ? "" : "*") + l;
        rs.fire("zero_divisor_cuplength", Direction::Lower, cl.certified_lower_bound_tc(),
                cite::kCupLength,
                "length=" + std::to_string(cl.length) + (witness.empty() ? "" : ", witness=" + witness) +
                    ", max_depth=" + std::to_string(depth) + (opts.exhaustive ? ", exhaustive" : ""));
        if (cl.frontier_truncated)
            report.notes.push_back("cup-length search frontier was truncated; the bound is still sound");

        if (!s.weights.empty()) {
            std::vector<tclower::WeightedClass> classes;
            for (const auto& w : s.weights) {
                classes.push_back({cohomology::parse_element(square, w.expression), w.weight,
                                   w.expression, w.provenance});
                report.assumptions.push_back("wgt(" + w.expression + ") >= " + std::to_string(w.weight) +
                                             ": " + w.provenance);
            }
            for (auto& g : tclower::barred_generators(square)) {
                const bool declared = std::any_of(classes.begin(), classes.end(), [&](const auto& c) {
                    return c.element == g.element;
                });
                if (!declared)
                    classes.push_back(std::move(g));
            }
            const auto wl = tclower::weighted_lower_bound(square, classes, depth);
            std::string wit;
            for (const auto& c : wl.witness)
                wit += (wit.empty() ? "" : "*") + c.label;
            rs.fire("weighted_cuplength", Direction::Lower, wl.certified_lower_bound_tc(), cite::kWeighted,
                    "weight=" + std::to_string(wl.total_weight) + (wit.empty() ? "" : ", witness=" + wit));
        }
    }

    const auto* lo = rs.binding(Direction::Lower);
    const auto* hi = rs.binding(Direction::Upper);
    report.lower = lo->value;
    report.upper = hi->value;
    report.lower_rule = lo->id;
    report.upper_rule = hi->id;
    report.rules = rs.rules;
    if (report.lower > report.upper)
        throw InconsistencyError(s.name + ": lower bound " + std::to_string(report.lower) + " (" + lo->id +
                                     ") exceeds upper bound " + std::to_string(report.upper) + " (" +
                                     hi->id + ")",
                                 lo->id, hi->id);

    const auto check_inside = [&](std::int64_t v, const std::string& what) {
        if (v < report.lower)
            throw InconsistencyError(s.name + ": " + what + " = " + std::to_string(v) +
                                         " is below the certified lower bound " +
                                         std::to_string(report.lower) + " (" + report.lower_rule + ")",
                                     report.lower_rule, what);
        if (v > report.upper)
            throw InconsistencyError(s.name + ": " + what + " = " + std::to_string(v) +
                                         " exceeds the certified upper bound " +
                                         std::to_string(report.upper) + " (" + report.upper_rule + ")",
                                     what, report.upper_rule);
    };

    report.registry = registry_lookup(s);
    if (report.registry)
        check_inside(report.registry->value, "registry");
    report.known_tc = s.known_tc;
    if (s.known_tc)
        check_inside(s.known_tc->value, "known_tc");

    std::optional<unsigned> certified;
    if (s.known_tc)
        certified = s.known_tc->value;
    else if (report.registry)
        certified = report.registry->value;
    else if (report.lower == report.upper)
        certified = static_cast<unsigned>(report.lower);
    report.aspherical_annotation = aspherical_inference(s, certified);
    return report;
}

BoundReport with_convention(BoundReport r, bool reduced)
{
    if (r.reduced == reduced)
        return r;
    const int shift = reduced ? -1 : 1;
    r.reduced = reduced;
    r.lower += shift;
    r.upper += shift;
    for (auto& rule : r.rules)
        if (rule.direction != Direction::CatUpper)
            rule.value += shift;
    if (r.registry)
        r.registry->value = static_cast<unsigned>(static_cast<int>(r.registry->value) + shift);
    if (r.known_tc)
        r.known_tc->value = static_cast<unsigned>(static_cast<int>(r.known_tc->value) + shift);
    return r;
}

const char* to_string(Direction d)
{
    switch (d) {
    case Direction::Lower:
        return "lower";
    case Direction::Upper:
        return "upper";
    case Direction::CatUpper:
        return "cat_upper";
    }
    return "?";
}

const char* to_string(Pi1Kind k)
{
    switch (k) {
    case Pi1Kind::Trivial:
        return "trivial";
    case Pi1Kind::Cyclic:
        return "cyclic";
    case Pi1Kind::CdBounded:
        return "cd";
    case Pi1Kind::FreeAbelian:
        return "free_abelian";
    case Pi1Kind::Other:
        return "other";
    }
    return "?";
}

} // namespace tcb::bounds
