#pragma once

#include "tcbound/intmatrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcb::cohomology {

using SparseVector = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct BasisElement {
    std::string label;
    int degree = 0;
};

// Finite-dimensional graded-commutative algebra over Z_p (modulus p) or Z
// (modulus 0). Basis element 0 is the unit. Products are stored per basis
// pair as sparse expansions; anything above top_degree is zero.
class GradedAlgebra {
public:
    GradedAlgebra(std::int64_t modulus, int top_degree, std::vector<BasisElement> basis);

    std::int64_t modulus() const noexcept { return modulus_; }
    int top_degree() const noexcept { return top_degree_; }
    std::uint32_t dimension() const noexcept { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    int degree(std::uint32_t i) const { return basis_.at(i).degree; }
    const std::string& label(std::uint32_t i) const { return basis_.at(i).label; }
    std::optional<std::uint32_t> index_of(const std::string& label) const;

    // Multiplicative generators used to seed zero-divisor searches.
    const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }
    void set_generators(std::vector<std::uint32_t> gens);

    const SparseVector& product(std::uint32_t i, std::uint32_t j) const
    {
        return products_[static_cast<std::size_t>(i) * basis_.size() + j];
    }
    // Stores the reduced expansion; a product whose degree exceeds top_degree
    // is stored as zero.
    void set_product(std::uint32_t i, std::uint32_t j, SparseVector value);

    // Additive order of a basis element for modulus-0 algebras; 0 = infinite.
    std::int64_t additive_order(std::uint32_t i) const { return orders_.at(i); }
    void set_additive_order(std::uint32_t i, std::int64_t order);

    // Reduction of a coefficient on basis element i.
    std::int64_t reduce(std::uint32_t i, std::int64_t c) const;

private:
    std::int64_t modulus_;
    int top_degree_;
    std::vector<BasisElement> basis_;
    std::vector<std::int64_t> orders_;
    std::vector<std::uint32_t> generators_;
    std::vector<SparseVector> products_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraPtr algebra);
    AlgebraElement(AlgebraPtr algebra, IntVector coefficients);

    static AlgebraElement basis(AlgebraPtr algebra, std::uint32_t i, std::int64_t c = 1);
    static AlgebraElement unit(AlgebraPtr algebra) { return basis(std::move(algebra), 0); }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const IntVector& coefficients() const noexcept { return coeffs_; }
    std::int64_t coefficient(std::uint32_t i) const { return coeffs_.at(i); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(std::int64_t s) const;

    bool is_zero() const;
    // Common degree of all nonzero terms; nullopt for mixed degrees. Zero has
    // no degree.
    std::optional<int> homogeneous_degree() const;

    std::string to_string() const;

    bool operator==(const AlgebraElement& o) const;

private:
    void require_same(const AlgebraElement& o) const;

    AlgebraPtr algebra_;
    IntVector coeffs_;
};

AlgebraElement power(const AlgebraElement& u, unsigned k);

// Associativity, graded commutativity, unit law, degree additivity and
// coefficient reduction; returns every violation found.
std::vector<std::string> validate(const GradedAlgebra& a);

// Künneth product with the Koszul sign (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'.
struct ProductAlgebra {
    AlgebraPtr left;
    AlgebraPtr right;
    AlgebraPtr product;

    std::uint32_t index(std::uint32_t i, std::uint32_t j) const { return i * right->dimension() + j; }

    AlgebraElement left_embed(const AlgebraElement& a) const;   // a (x) 1
    AlgebraElement right_embed(const AlgebraElement& b) const;  // 1 (x) b
    AlgebraElement tensor(std::uint32_t i, std::uint32_t j, std::int64_t c = 1) const;

    bool is_square() const noexcept { return left == right; }
};

inline constexpr std::uint32_t kMaxKunnethDimension = 4096;

ProductAlgebra kunneth(const AlgebraPtr& a, const AlgebraPtr& b);

// x (x) 1 - 1 (x) x in the Künneth square; rejects non-homogeneous x.
AlgebraElement bar(const ProductAlgebra& square, const AlgebraElement& x);

// Diagonal restriction A (x) A -> A, a (x) b |-> ab.
AlgebraElement multiply_factors(const ProductAlgebra& square, const AlgebraElement& u);

bool is_zero_divisor(const ProductAlgebra& square, const AlgebraElement& u);

// Z_2[w]/(w^{n+1}), |w| = 1.
AlgebraPtr preset_rp(int n);
// Z_3[x, y]/(x^2, y^{n+1}, x y^n), |x| = 1, |y| = 2.
AlgebraPtr preset_lens_skeleton(int n);
// Z_3[x, y]/(x^2, y^{n+1}), the full lens space L_3^{2n+1}.
AlgebraPtr preset_lens_space(int n);
// Z[x]/(x^{n+1}), |x| = 2.
AlgebraPtr preset_cp(int n);
// Exterior algebra on mu degree-1 generators over Z, truncated above degree d.
AlgebraPtr preset_torus_skeleton(int mu, int d);
// Just the unit.
AlgebraPtr preset_point();

} // namespace tcb::cohomology

namespace tcb::cohomology {

// Parses an element of a Künneth square. Grammar:
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := power ('*' power)*
//   power   := primary ['^' integer]
//   primary := integer | bar(label) | left(label) | right(label) | '(' expr ')'
// left(u) is u (x) 1 and right(u) is 1 (x) u. Throws ValidationError.
AlgebraElement parse_element(const ProductAlgebra& square, std::string_view text);

} // namespace tcb::cohomology
