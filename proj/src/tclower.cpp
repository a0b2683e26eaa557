#include "tcbound/tclower.hpp"

#include "tcbound/error.hpp"
#include "tcbound/padic.hpp"

#include <algorithm>
#include <optional>

namespace tcb::tclower {

using cohomology::AlgebraPtr;

namespace {

void require_valid(const ProductAlgebra& square)
{
    if (!square.is_square())
        throw ValidationError("lower-bound search needs a Künneth square A (x) A");
    const auto violations = cohomology::validate(*square.left);
    if (!violations.empty())
        throw ValidationError("algebra failed validation: " + violations.front() + " (" +
                              std::to_string(violations.size()) + " violations)");
}

void require_zero_divisor(const ProductAlgebra& square, const WeightedClass& c)
{
    if (c.element.algebra() != square.product)
        throw ValidationError("class '" + c.label + "' is not an element of the Künneth square");
    if (c.weight < 1)
        throw ValidationError("class '" + c.label + "' has weight < 1");
    if (!cohomology::is_zero_divisor(square, c.element))
        throw ValidationError("class '" + c.label + "' is not a zero-divisor");
}

unsigned default_depth(const ProductAlgebra& square, unsigned requested)
{
    return requested != 0 ? requested : static_cast<unsigned>(square.product->top_degree());
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1;
    std::int64_t b = ((a % p) + p) % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
    }
    return r;
}

struct Node {
    std::vector<std::uint32_t> factors;  // nondecreasing pool indices
    AlgebraElement product;
};

// Breadth-first enumeration of nonzero products over multisets of pool
// elements. Calls visit(node) for every nonzero product of >= 1 factors, in
// lexicographic order within each level.
template <class Visit>
bool enumerate_products(const std::vector<WeightedClass>& pool, const AlgebraPtr& product,
                        unsigned max_depth, std::size_t cap, Visit&& visit)
{
    bool truncated = false;
    std::vector<Node> frontier{{{}, AlgebraElement::unit(product)}};
    for (unsigned depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            const std::uint32_t start = node.factors.empty() ? 0 : node.factors.back();
            for (std::uint32_t i = start; i < pool.size(); ++i) {
                auto p = node.product * pool[i].element;
                if (p.is_zero())
                    continue;
                if (next.size() >= cap) {
                    truncated = true;
                    break;
                }
                auto f = node.factors;
                f.push_back(i);
                next.push_back({std::move(f), std::move(p)});
            }
        }
        for (const auto& node : next)
            visit(node);
        frontier = std::move(next);
    }
    return truncated;
}

} // namespace

std::vector<WeightedClass> barred_generators(const ProductAlgebra& square)
{
    const auto& a = square.left;
    std::vector<std::uint32_t> gens = a->generators();
    if (gens.empty())
        for (std::uint32_t i = 0; i < a->dimension(); ++i)
            if (a->degree(i) > 0)
                gens.push_back(i);
    std::vector<WeightedClass> out;
    for (auto g : gens)
        out.push_back({cohomology::bar(square, AlgebraElement::basis(a, g)), 1,
                       "bar(" + a->label(g) + ")", "barred generator"});
    return out;
}

std::vector<AlgebraElement> zero_divisor_kernel_basis(const ProductAlgebra& square)
{
    const auto& a = *square.left;
    const std::int64_t p = a.modulus();
    if (p == 0 || !padic::is_prime(static_cast<std::uint64_t>(p)))
        throw UnsupportedError("zero-divisor kernel basis needs a prime modulus");
    const auto n = a.dimension();

    std::vector<AlgebraElement> out;
    for (int deg = 0; deg <= square.product->top_degree(); ++deg) {
        std::vector<std::uint32_t> src;
        for (std::uint32_t u = 0; u < square.product->dimension(); ++u)
            if (square.product->degree(u) == deg)
                src.push_back(u);
        if (src.empty())
            continue;
        // Column c of m is mu(src[c]) in A.
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const std::uint32_t i = src[c] / n;
            const std::uint32_t j = src[c] % n;
            for (auto [k, v] : a.product(i, j))
                m[k][c] = ((v % p) + p) % p;
        }
        // Reduced row echelon form mod p.
        std::vector<std::optional<std::size_t>> pivot_row_of_col(src.size());
        std::size_t row = 0;
        for (std::size_t c = 0; c < src.size() && row < n; ++c) {
            std::size_t r = row;
            while (r < n && m[r][c] == 0)
                ++r;
            if (r == n)
                continue;
            std::swap(m[r], m[row]);
            const std::int64_t inv = inverse_mod(m[row][c], p);
            for (auto& x : m[row])
                x = x * inv % p;
            for (std::size_t rr = 0; rr < n; ++rr) {
                if (rr == row || m[rr][c] == 0)
                    continue;
                const std::int64_t f = m[rr][c];
                for (std::size_t cc = 0; cc < src.size(); ++cc)
                    m[rr][cc] = ((m[rr][cc] - f * m[row][cc]) % p + p) % p;
            }
            pivot_row_of_col[c] = row++;
        }
        for (std::size_t free = 0; free < src.size(); ++free) {
            if (pivot_row_of_col[free])
                continue;
            IntVector v(square.product->dimension(), 0);
            v[src[free]] = 1;
            for (std::size_t c = 0; c < src.size(); ++c)
                if (pivot_row_of_col[c])
                    v[src[c]] = (p - m[*pivot_row_of_col[c]][free]) % p;
            out.emplace_back(square.product, std::move(v));
        }
    }
    return out;
}

CupLengthResult zero_divisor_cuplength(const ProductAlgebra& square, const SearchOptions& opts)
{
    require_valid(square);
    std::vector<WeightedClass> pool;
    if (opts.exhaustive) {
        if (square.left->dimension() > kExhaustiveBasisCap)
            throw ResourceError("exhaustive search is capped at algebras with " +
                                std::to_string(kExhaustiveBasisCap) + " basis elements");
        for (auto& e : zero_divisor_kernel_basis(square))
            if (e.homogeneous_degree().value_or(0) > 0)
                pool.push_back({e, 1, "kernel[" + std::to_string(pool.size()) + "]", "kernel basis"});
    } else {
        pool = barred_generators(square);
    }
    for (const auto& f : opts.extra_factors) {
        require_zero_divisor(square, f);
        pool.push_back(f);
    }

    CupLengthResult best;
    std::vector<std::uint32_t> best_factors;
    best.frontier_truncated = enumerate_products(
        pool, square.product, default_depth(square, opts.max_depth), opts.frontier_cap,
        [&](const Node& node) {
            if (node.factors.size() > best.length) {
                best.length = static_cast<unsigned>(node.factors.size());
                best_factors = node.factors;
            }
        });
    for (auto i : best_factors) {
        best.witness.push_back(pool[i].element);
        best.witness_labels.push_back(pool[i].label);
    }
    return best;
}

WeightedLowerBound weighted_lower_bound(const ProductAlgebra& square,
                                       const std::vector<WeightedClass>& classes,
                                       unsigned max_depth)
{
    if (!square.is_square())
        throw ValidationError("weighted bound needs a Künneth square A (x) A");
    for (const auto& c : classes)
        require_zero_divisor(square, c);

    WeightedLowerBound best;
    std::vector<std::uint32_t> best_factors;
    best.frontier_truncated = enumerate_products(
        classes, square.product, default_depth(square, max_depth), 200000, [&](const Node& node) {
            unsigned w = 0;
            for (auto i : node.factors)
                w += classes[i].weight;
            if (w > best.total_weight || (w == best.total_weight && node.factors < best_factors)) {
                best.total_weight = w;
                best_factors = node.factors;
            }
        });
    for (auto i : best_factors)
        best.witness.push_back(classes[i]);
    return best;
}

} // namespace tcb::tclower
