#include "tcbound/cohomology.hpp"

#include "tcbound/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace tcb::cohomology {

namespace {

int koszul_sign(int deg_a, int deg_b)
{
    return (deg_a % 2 != 0 && deg_b % 2 != 0) ? -1 : 1;
}

SparseVector normalized(const GradedAlgebra& alg, SparseVector v)
{
    std::map<std::uint32_t, std::int64_t> acc;
    for (auto [i, c] : v) {
        if (i >= alg.dimension())
            throw ValidationError("product term index " + std::to_string(i) + " out of range");
        acc[i] = alg.reduce(i, checked::add(acc[i], c));
    }
    SparseVector out;
    for (auto [i, c] : acc)
        if (c != 0)
            out.emplace_back(i, c);
    return out;
}

} // namespace

GradedAlgebra::GradedAlgebra(std::int64_t modulus, int top_degree, std::vector<BasisElement> basis)
    : modulus_(modulus), top_degree_(top_degree), basis_(std::move(basis))
{
    if (modulus_ < 0 || modulus_ == 1)
        throw ValidationError("algebra modulus must be 0 or >= 2");
    if (basis_.empty() || basis_.front().degree != 0)
        throw ValidationError("algebra basis must start with a degree-0 unit");
    for (const auto& b : basis_)
        if (b.degree < 0 || b.degree > top_degree_)
            throw ValidationError("basis element '" + b.label + "' has degree outside [0, top_degree]");
    orders_.assign(basis_.size(), 0);
    products_.resize(basis_.size() * basis_.size());
    const auto n = dimension();
    for (std::uint32_t i = 0; i < n; ++i) {
        products_[i] = {{i, 1}};
        products_[static_cast<std::size_t>(i) * n] = {{i, 1}};
    }
}

std::optional<std::uint32_t> GradedAlgebra::index_of(const std::string& label) const
{
    for (std::uint32_t i = 0; i < dimension(); ++i)
        if (basis_[i].label == label)
            return i;
    return std::nullopt;
}

void GradedAlgebra::set_generators(std::vector<std::uint32_t> gens)
{
    for (auto g : gens)
        if (g >= dimension())
            throw ValidationError("generator index out of range");
    generators_ = std::move(gens);
}

void GradedAlgebra::set_product(std::uint32_t i, std::uint32_t j, SparseVector value)
{
    if (i >= dimension() || j >= dimension())
        throw ValidationError("product factor index out of range");
    auto& slot = products_[static_cast<std::size_t>(i) * basis_.size() + j];
    if (basis_[i].degree + basis_[j].degree > top_degree_)
        slot.clear();
    else
        slot = normalized(*this, std::move(value));
}

void GradedAlgebra::set_additive_order(std::uint32_t i, std::int64_t order)
{
    if (modulus_ != 0)
        throw ValidationError("additive orders are only meaningful over Z");
    if (order < 0)
        throw ValidationError("additive order must be >= 0");
    orders_.at(i) = order;
}

std::int64_t GradedAlgebra::reduce(std::uint32_t i, std::int64_t c) const
{
    const std::int64_t m = modulus_ != 0 ? modulus_ : orders_[i];
    if (m == 0)
        return c;
    const std::int64_t r = c % m;
    return r < 0 ? r + m : r;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), coeffs_(algebra_->dimension(), 0)
{
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, IntVector coefficients)
    : algebra_(std::move(algebra)), coeffs_(std::move(coefficients))
{
    if (coeffs_.size() != algebra_->dimension())
        throw ValidationError("coefficient vector length does not match algebra dimension");
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = algebra_->reduce(i, coeffs_[i]);
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, std::uint32_t i, std::int64_t c)
{
    AlgebraElement e(std::move(algebra));
    if (i >= e.coeffs_.size())
        throw ValidationError("basis index out of range");
    e.coeffs_[i] = e.algebra_->reduce(i, c);
    return e;
}

void AlgebraElement::require_same(const AlgebraElement& o) const
{
    if (algebra_ != o.algebra_)
        throw ValidationError("elements belong to different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const
{
    require_same(o);
    AlgebraElement r(algebra_);
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = algebra_->reduce(i, checked::add(coeffs_[i], o.coeffs_[i]));
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const
{
    return *this + o.scaled(-1);
}

AlgebraElement AlgebraElement::scaled(std::int64_t s) const
{
    AlgebraElement r(algebra_);
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = algebra_->reduce(i, checked::mul(algebra_->reduce(i, coeffs_[i]), s));
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const
{
    require_same(o);
    const auto& alg = *algebra_;
    AlgebraElement r(algebra_);
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0)
                continue;
            const std::int64_t cij = checked::mul(coeffs_[i], o.coeffs_[j]);
            for (auto [k, c] : alg.product(i, j))
                r.coeffs_[k] = alg.reduce(k, checked::add(r.coeffs_[k], checked::mul(cij, c)));
        }
    }
    return r;
}

bool AlgebraElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<int> AlgebraElement::homogeneous_degree() const
{
    std::optional<int> d;
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const int di = algebra_->degree(i);
        if (d && *d != di)
            return std::nullopt;
        d = di;
    }
    return d;
}

std::string AlgebraElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        os << (first ? "" : " + ");
        if (coeffs_[i] != 1)
            os << coeffs_[i] << '*';
        os << algebra_->label(i);
        first = false;
    }
    return first ? "0" : os.str();
}

bool AlgebraElement::operator==(const AlgebraElement& o) const
{
    return algebra_ == o.algebra_ && coeffs_ == o.coeffs_;
}

AlgebraElement power(const AlgebraElement& u, unsigned k)
{
    AlgebraElement r = AlgebraElement::unit(u.algebra());
    AlgebraElement base = u;
    for (; k > 0; k >>= 1) {
        if (k & 1u)
            r = r * base;
        if (k > 1)
            base = base * base;
    }
    return r;
}

std::vector<std::string> validate(const GradedAlgebra& a)
{
    std::vector<std::string> out;
    const auto n = a.dimension();
    const auto name = [&](std::uint32_t i) { return "'" + a.label(i) + "'"; };

    if (a.basis().front().degree != 0)
        out.push_back("unit is not in degree 0");

    // sparse x sparse -> dense
    const auto mul = [&](const SparseVector& x, std::uint32_t rhs, bool rhs_on_left) {
        IntVector acc(n, 0);
        for (auto [i, c] : x) {
            const auto& p = rhs_on_left ? a.product(rhs, i) : a.product(i, rhs);
            for (auto [k, d] : p)
                acc[k] = a.reduce(k, checked::add(acc[k], checked::mul(c, d)));
        }
        return acc;
    };

    for (std::uint32_t i = 0; i < n; ++i) {
        if (a.product(0, i) != SparseVector{{i, 1}} || a.product(i, 0) != SparseVector{{i, 1}})
            out.push_back("unit law fails on " + name(i));
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto& pij = a.product(i, j);
            const int dij = a.degree(i) + a.degree(j);
            for (auto [k, c] : pij) {
                if (a.degree(k) != dij)
                    out.push_back("degree of " + name(i) + "*" + name(j) + " term " + name(k) +
                                  " is not additive");
                if (a.reduce(k, c) != c || c == 0)
                    out.push_back("unreduced coefficient in " + name(i) + "*" + name(j));
            }
            const int sign = koszul_sign(a.degree(i), a.degree(j));
            IntVector lhs(n, 0), rhs(n, 0);
            for (auto [k, c] : pij)
                lhs[k] = c;
            for (auto [k, c] : a.product(j, i))
                rhs[k] = a.reduce(k, checked::mul(sign, c));
            if (lhs != rhs)
                out.push_back("graded commutativity fails for " + name(i) + ", " + name(j));
        }
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                const auto left = mul(a.product(i, j), k, false);
                const auto right = mul(a.product(j, k), i, true);
                if (left != right)
                    out.push_back("associativity fails for " + name(i) + ", " + name(j) + ", " +
                                  name(k));
            }
    return out;
}

AlgebraElement ProductAlgebra::left_embed(const AlgebraElement& a) const
{
    if (a.algebra() != left)
        throw ValidationError("element is not in the left factor");
    IntVector c(product->dimension(), 0);
    for (std::uint32_t i = 0; i < left->dimension(); ++i)
        c[index(i, 0)] = a.coefficient(i);
    return AlgebraElement(product, std::move(c));
}

AlgebraElement ProductAlgebra::right_embed(const AlgebraElement& b) const
{
    if (b.algebra() != right)
        throw ValidationError("element is not in the right factor");
    IntVector c(product->dimension(), 0);
    for (std::uint32_t j = 0; j < right->dimension(); ++j)
        c[index(0, j)] = b.coefficient(j);
    return AlgebraElement(product, std::move(c));
}

AlgebraElement ProductAlgebra::tensor(std::uint32_t i, std::uint32_t j, std::int64_t c) const
{
    return AlgebraElement::basis(product, index(i, j), c);
}

ProductAlgebra kunneth(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (a->modulus() != b->modulus())
        throw ValidationError("Künneth product of algebras with moduli " +
                              std::to_string(a->modulus()) + " and " + std::to_string(b->modulus()));
    const std::uint64_t dim = static_cast<std::uint64_t>(a->dimension()) * b->dimension();
    if (dim > kMaxKunnethDimension)
        throw ResourceError("Künneth product dimension " + std::to_string(dim) + " exceeds cap " +
                            std::to_string(kMaxKunnethDimension));

    const auto na = a->dimension();
    const auto nb = b->dimension();
    std::vector<BasisElement> basis;
    basis.reserve(dim);
    for (std::uint32_t i = 0; i < na; ++i)
        for (std::uint32_t j = 0; j < nb; ++j)
            basis.push_back({a->label(i) + "⊗" + b->label(j), a->degree(i) + b->degree(j)});

    auto prod = std::make_shared<GradedAlgebra>(a->modulus(), a->top_degree() + b->top_degree(),
                                                std::move(basis));
    if (a->modulus() == 0)
        for (std::uint32_t i = 0; i < na; ++i)
            for (std::uint32_t j = 0; j < nb; ++j)
                if (a->additive_order(i) != 0 || b->additive_order(j) != 0)
                    prod->set_additive_order(i * nb + j,
                                             std::gcd(a->additive_order(i), b->additive_order(j)));

    for (std::uint32_t i = 0; i < na; ++i)
        for (std::uint32_t j = 0; j < nb; ++j)
            for (std::uint32_t k = 0; k < na; ++k)
                for (std::uint32_t l = 0; l < nb; ++l) {
                    const auto& ak = a->product(i, k);
                    const auto& bl = b->product(j, l);
                    SparseVector v;
                    if (!ak.empty() && !bl.empty()) {
                        const int sign = koszul_sign(b->degree(j), a->degree(k));
                        for (auto [p, c] : ak)
                            for (auto [q, d] : bl)
                                v.emplace_back(p * nb + q, checked::mul(sign, checked::mul(c, d)));
                    }
                    prod->set_product(i * nb + j, k * nb + l, std::move(v));
                }

    std::vector<std::uint32_t> gens;
    for (auto g : a->generators())
        gens.push_back(g * nb);
    for (auto g : b->generators())
        gens.push_back(g);
    prod->set_generators(std::move(gens));
    return {a, b, std::move(prod)};
}

AlgebraElement bar(const ProductAlgebra& square, const AlgebraElement& x)
{
    if (!square.is_square())
        throw ValidationError("bar() needs a Künneth square A (x) A");
    if (!x.is_zero() && !x.homogeneous_degree())
        throw ValidationError("bar() of a non-homogeneous element");
    return square.left_embed(x) - square.right_embed(x);
}

AlgebraElement multiply_factors(const ProductAlgebra& square, const AlgebraElement& u)
{
    if (!square.is_square())
        throw ValidationError("diagonal restriction needs a Künneth square A (x) A");
    if (u.algebra() != square.product)
        throw ValidationError("element is not in the Künneth square");
    const auto& a = *square.left;
    IntVector acc(a.dimension(), 0);
    for (std::uint32_t i = 0; i < a.dimension(); ++i)
        for (std::uint32_t j = 0; j < a.dimension(); ++j) {
            const std::int64_t c = u.coefficient(square.index(i, j));
            if (c == 0)
                continue;
            for (auto [k, d] : a.product(i, j))
                acc[k] = a.reduce(k, checked::add(acc[k], checked::mul(c, d)));
        }
    return AlgebraElement(square.left, std::move(acc));
}

bool is_zero_divisor(const ProductAlgebra& square, const AlgebraElement& u)
{
    return multiply_factors(square, u).is_zero();
}

namespace {

std::string power_label(const std::string& var, int k)
{
    if (k == 0)
        return "1";
    if (k == 1)
        return var;
    return var + "^" + std::to_string(k);
}

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw ValidationError(std::string(what) + " parameter must be >= 1");
}

// Truncated polynomial algebra on one generator of degree `deg`.
std::shared_ptr<GradedAlgebra> truncated_polynomial(std::int64_t modulus, const std::string& var,
                                                    int deg, int n)
{
    std::vector<BasisElement> basis;
    for (int k = 0; k <= n; ++k)
        basis.push_back({power_label(var, k), deg * k});
    auto alg = std::make_shared<GradedAlgebra>(modulus, deg * n, std::move(basis));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            alg->set_product(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             i + j <= n ? SparseVector{{static_cast<std::uint32_t>(i + j), 1}}
                                        : SparseVector{});
    if (n >= 1)
        alg->set_generators({1});
    return alg;
}

AlgebraPtr lens_ring(int n, bool skeleton)
{
    // y^k at index k (0..n); x y^j at index n + 1 + j.
    const int top_xy = skeleton ? n - 1 : n;
    std::vector<BasisElement> basis;
    for (int k = 0; k <= n; ++k)
        basis.push_back({power_label("y", k), 2 * k});
    for (int j = 0; j <= top_xy; ++j)
        basis.push_back({j == 0 ? "x" : "x" + power_label("y", j), 2 * j + 1});
    auto alg = std::make_shared<GradedAlgebra>(3, skeleton ? 2 * n : 2 * n + 1, std::move(basis));

    const auto y = [](int k) { return static_cast<std::uint32_t>(k); };
    const auto xy = [n](int j) { return static_cast<std::uint32_t>(n + 1 + j); };
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b)
            alg->set_product(y(a), y(b), a + b <= n ? SparseVector{{y(a + b), 1}} : SparseVector{});
        for (int b = 0; b <= top_xy; ++b) {
            const SparseVector v =
                a + b <= top_xy ? SparseVector{{xy(a + b), 1}} : SparseVector{};
            alg->set_product(y(a), xy(b), v);
            alg->set_product(xy(b), y(a), v);
        }
    }
    for (int a = 0; a <= top_xy; ++a)
        for (int b = 0; b <= top_xy; ++b)
            alg->set_product(xy(a), xy(b), {});
    alg->set_generators({xy(0), y(1)});
    return alg;
}

} // namespace

AlgebraPtr preset_rp(int n)
{
    require_positive(n, "rp");
    return truncated_polynomial(2, "w", 1, n);
}

AlgebraPtr preset_lens_skeleton(int n)
{
    require_positive(n, "lens_skeleton");
    return lens_ring(n, true);
}

AlgebraPtr preset_lens_space(int n)
{
    require_positive(n, "lens_space");
    return lens_ring(n, false);
}

AlgebraPtr preset_cp(int n)
{
    require_positive(n, "cp");
    return truncated_polynomial(0, "x", 2, n);
}

AlgebraPtr preset_torus_skeleton(int mu, int d)
{
    require_positive(mu, "torus_skeleton mu");
    if (d < 0 || d > mu)
        throw ValidationError("torus_skeleton needs 0 <= d <= mu");
    if (mu > 20)
        throw ResourceError("torus_skeleton supports mu <= 20");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 0; s < (1u << mu); ++s)
        if (std::popcount(s) <= d)
            masks.push_back(s);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
        const int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    std::map<std::uint32_t, std::uint32_t> index;
    std::vector<BasisElement> basis;
    for (std::uint32_t s : masks) {
        index[s] = static_cast<std::uint32_t>(basis.size());
        std::string label;
        for (int i = 0; i < mu; ++i)
            if (s & (1u << i))
                label += "e" + std::to_string(i + 1);
        basis.push_back({label.empty() ? "1" : label, std::popcount(s)});
    }
    auto alg = std::make_shared<GradedAlgebra>(0, d, std::move(basis));
    std::vector<std::uint32_t> gens;
    for (std::uint32_t s : masks) {
        if (std::popcount(s) == 1)
            gens.push_back(index[s]);
        for (std::uint32_t t : masks) {
            if ((s & t) != 0 || std::popcount(s | t) > d) {
                alg->set_product(index[s], index[t], {});
                continue;
            }
            // sign of merging the sorted index lists: pairs (i in s, j in t) with i > j
            int inversions = 0;
            for (int i = 0; i < mu; ++i)
                if (s & (1u << i))
                    inversions += std::popcount(t & ((1u << i) - 1));
            alg->set_product(index[s], index[t], {{index[s | t], inversions % 2 ? -1 : 1}});
        }
    }
    alg->set_generators(std::move(gens));
    return alg;
}

AlgebraPtr preset_point()
{
    return std::make_shared<GradedAlgebra>(2, 0, std::vector<BasisElement>{{"1", 0}});
}

} // namespace tcb::cohomology
