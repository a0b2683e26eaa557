#include "tcbound/groupring.hpp"

#include "tcbound/error.hpp"

#include <cstdlib>
#include <string>

namespace tcb::groupring {

CyclicGroup::CyclicGroup(std::uint32_t order) : order_(order)
{
    if (order == 0)
        throw ValidationError("cyclic group order must be >= 1");
}

GroupRingElement::GroupRingElement(CyclicGroup g) : group_(g), coeffs_(g.order(), 0) {}

GroupRingElement::GroupRingElement(CyclicGroup g, IntVector coefficients)
    : group_(g), coeffs_(std::move(coefficients))
{
    if (coeffs_.size() != g.order())
        throw ValidationError("group ring element has " + std::to_string(coeffs_.size()) +
                              " coefficients, expected " + std::to_string(g.order()));
}

GroupRingElement GroupRingElement::basis(CyclicGroup g, std::uint32_t i)
{
    GroupRingElement e(g);
    e.coeffs_[i % g.order()] = 1;
    return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const
{
    if (!(group_ == o.group_))
        throw ValidationError("group ring elements over different groups");
    GroupRingElement r(group_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const
{
    GroupRingElement neg(o.group_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        neg.coeffs_[i] = checked::mul(-1, o.coeffs_[i]);
    return *this + neg;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const
{
    if (!(group_ == o.group_))
        throw ValidationError("group ring elements over different groups");
    GroupRingElement r(group_);
    const std::uint32_t m = group_.order();
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            auto& slot = r.coeffs_[group_.compose(i, j)];
            slot = checked::add(slot, checked::mul(coeffs_[i], o.coeffs_[j]));
        }
    return r;
}

std::int64_t GroupRingElement::augmentation() const
{
    std::int64_t s = 0;
    for (std::int64_t c : coeffs_)
        s = checked::add(s, c);
    return s;
}

GroupRingElement GroupRingElement::act(std::uint32_t g, std::uint32_t h) const
{
    GroupRingElement r(group_);
    const std::uint32_t hinv = group_.inverse(h % group_.order());
    for (std::uint32_t i = 0; i < group_.order(); ++i)
        r.coeffs_[group_.compose(group_.compose(g % group_.order(), i), hinv)] += coeffs_[i];
    return r;
}

IntMatrix BimoduleAction::action(std::uint32_t g, std::uint32_t h) const
{
    return act_left.pow(g) * act_right.pow(h);
}

bool BimoduleAction::satisfies_axioms() const
{
    const auto id = IntMatrix::identity(rank);
    if (act_left.rows() != rank || act_left.cols() != rank || act_right.rows() != rank ||
        act_right.cols() != rank)
        return false;
    return act_left.pow(group.order()) == id && act_right.pow(group.order()) == id &&
           act_left * act_right == act_right * act_left;
}

BimoduleAction group_ring_module(CyclicGroup g)
{
    const std::uint32_t m = g.order();
    BimoduleAction mod{g, m, IntMatrix(m, m), IntMatrix(m, m)};
    for (std::uint32_t i = 0; i < m; ++i) {
        mod.act_left(g.compose(1 % m, i), i) = 1;
        mod.act_right(g.compose(i, g.inverse(1 % m)), i) = 1;
    }
    return mod;
}

BimoduleAction trivial_module(CyclicGroup g, std::size_t rank)
{
    return {g, rank, IntMatrix::identity(rank), IntMatrix::identity(rank)};
}

IntVector ideal_coordinates(const GroupRingElement& x)
{
    if (x.augmentation() != 0)
        throw ValidationError("element is not in the augmentation ideal");
    // sum c_i t^i = sum_{i >= 1} c_i (t^i - 1) when sum c_i = 0
    return IntVector(x.coefficients().begin() + 1, x.coefficients().end());
}

BimoduleAction augmentation_ideal(CyclicGroup g)
{
    const std::uint32_t m = g.order();
    const std::size_t r = m - 1;
    BimoduleAction mod{g, r, IntMatrix(r, r), IntMatrix(r, r)};
    const auto one = GroupRingElement::basis(g, 0);
    for (std::uint32_t i = 1; i < m; ++i) {
        const auto u = GroupRingElement::basis(g, i) - one;
        const auto left = ideal_coordinates(u.act(1, 0));
        const auto right = ideal_coordinates(u.act(0, 1));
        for (std::size_t k = 0; k < r; ++k) {
            mod.act_left(k, i - 1) = left[k];
            mod.act_right(k, i - 1) = right[k];
        }
    }
    return mod;
}

Z3IdealAlphaBeta augmentation_ideal_z3_alpha_beta()
{
    const auto canonical = augmentation_ideal(CyclicGroup(3));
    // alpha = t - 1 = u1, beta = t^2 - t = u2 - u1
    const IntMatrix p{{1, -1}, {0, 1}};
    const IntMatrix pinv{{1, 1}, {0, 1}};
    BimoduleAction mod{canonical.group, 2, pinv * canonical.act_left * p,
                       pinv * canonical.act_right * p};
    return {mod, p, pinv};
}

std::size_t CrossedHom::crossed_identity_violations() const
{
    const std::uint32_t m = group.order();
    std::vector<IntMatrix> actions;
    actions.reserve(static_cast<std::size_t>(m) * m);
    for (std::uint32_t g = 0; g < m; ++g)
        for (std::uint32_t h = 0; h < m; ++h)
            actions.push_back(target.action(g, h));

    std::size_t bad = 0;
    for (std::uint32_t g = 0; g < m; ++g)
        for (std::uint32_t h = 0; h < m; ++h)
            for (std::uint32_t g2 = 0; g2 < m; ++g2)
                for (std::uint32_t h2 = 0; h2 < m; ++h2) {
                    const auto& lhs = value(group.compose(g, g2), group.compose(h, h2));
                    IntVector rhs = actions[static_cast<std::size_t>(g) * m + h] *
                                    std::span<const std::int64_t>(value(g2, h2));
                    const auto& fgh = value(g, h);
                    for (std::size_t k = 0; k < rhs.size(); ++k)
                        rhs[k] = checked::add(rhs[k], fgh[k]);
                    if (rhs != lhs)
                        ++bad;
                }
    return bad;
}

std::size_t CrossedHom::diagonal_violations() const
{
    std::size_t bad = 0;
    for (std::uint32_t g = 0; g < group.order(); ++g)
        for (std::int64_t c : value(g, g))
            if (c != 0) {
                ++bad;
                break;
            }
    return bad;
}

CrossedHom canonical_crossed_hom(CyclicGroup g)
{
    const std::uint32_t m = g.order();
    CrossedHom f{g, augmentation_ideal(g), {}};
    f.values.reserve(static_cast<std::size_t>(m) * m);
    const auto one = GroupRingElement::basis(g, 0);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            const auto v = GroupRingElement::basis(g, g.compose(a, g.inverse(b))) - one;
            f.values.push_back(ideal_coordinates(v));
        }
    return f;
}

std::vector<IntVector> invariants(const BimoduleAction& m)
{
    if (m.rank == 0)
        return {};
    const auto id = IntMatrix::identity(m.rank);
    return integer_kernel(vstack(m.act_left - id, m.act_right - id));
}

std::uint64_t order_of_canonical_class(CyclicGroup g)
{
    // H^0(Z[G]) -> H^0(Z) is multiplication by epsilon(N_0); its cokernel is
    // the cyclic group generated by beta(1).
    if (!invariants(augmentation_ideal(g)).empty())
        throw Error("augmentation ideal has nonzero invariants");
    const auto inv = invariants(group_ring_module(g));
    if (inv.size() != 1)
        throw Error("invariants of Z[G] are not infinite cyclic");
    const GroupRingElement n0(g, inv.front());
    return static_cast<std::uint64_t>(std::llabs(n0.augmentation()));
}

BimoduleAction tensor_product(const BimoduleAction& m, const BimoduleAction& n)
{
    if (!(m.group == n.group))
        throw ValidationError("tensor product of modules over different groups (orders " +
                              std::to_string(m.group.order()) + " and " +
                              std::to_string(n.group.order()) + ")");
    return {m.group, m.rank * n.rank, kronecker(m.act_left, n.act_left),
            kronecker(m.act_right, n.act_right)};
}

IntMatrix swap_map(const BimoduleAction& m)
{
    const std::size_t r = m.rank;
    IntMatrix t(r * r, r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            t(j * r + i, i * r + j) = 1;
    return t;
}

namespace {

// Solves col = base * q for an integer scalar q; throws if impossible.
std::int64_t scalar_multiple(const IntVector& col, const IntVector& base)
{
    std::size_t k = 0;
    while (k < base.size() && base[k] == 0)
        ++k;
    if (k == base.size())
        throw Error("zero base vector");
    if (col[k] % base[k] != 0)
        throw Error("vector is not an integer multiple of the generator");
    const std::int64_t q = col[k] / base[k];
    for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] != checked::mul(q, base[i]))
            throw Error("vector is not a multiple of the generator");
    return q;
}

bool is_z3_ideal(const BimoduleAction& m, const BimoduleAction& ref)
{
    return m.group.order() == 3 && m.rank == 2 && m.act_left == ref.act_left &&
           m.act_right == ref.act_right;
}

} // namespace

WedgeSymmetric wedge_and_symmetric(const BimoduleAction& ideal)
{
    const auto ab = augmentation_ideal_z3_alpha_beta();
    if (!is_z3_ideal(ideal, ab.module) && !is_z3_ideal(ideal, augmentation_ideal(CyclicGroup(3))))
        throw UnsupportedError("wedge_and_symmetric supports only the Z_3 augmentation ideal");

    WedgeSymmetric ws;
    ws.ideal = ab.module;
    ws.square = tensor_product(ws.ideal, ws.ideal);
    ws.swap = swap_map(ws.ideal);

    // I ^ I is the (-1)-eigenlattice of T, generated by a(x)b - b(x)a.
    const auto anti = integer_kernel(ws.swap + IntMatrix::identity(4));
    if (anti.size() != 1)
        throw Error("antisymmetric part of I (x) I is not of rank 1");
    const IntVector gen = anti.front();
    ws.inclusion = IntMatrix::column(gen);

    const auto restrict = [&](const IntMatrix& act) {
        return IntMatrix{{scalar_multiple(act * std::span<const std::int64_t>(gen), gen)}};
    };
    ws.wedge = {ws.ideal.group, 1, restrict(ws.square.act_left), restrict(ws.square.act_right)};

    // S(I) coordinates (x_aa, x_ab + x_ba, x_bb).
    ws.projection = IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    ws.section = IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 1}};
    ws.symmetric = {ws.ideal.group, 3, ws.projection * ws.square.act_left * ws.section,
                    ws.projection * ws.square.act_right * ws.section};

    const IntMatrix id_minus_t = IntMatrix::identity(4) - ws.swap;
    ws.antisymmetrizer = IntMatrix(1, 4);
    for (std::size_t c = 0; c < 4; ++c)
        ws.antisymmetrizer(0, c) = scalar_multiple(id_minus_t.col(c), gen);
    return ws;
}

} // namespace tcb::groupring
