#pragma once

#include "tcbound/cohomology.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tcb::tclower {

using cohomology::AlgebraElement;
using cohomology::ProductAlgebra;

// A zero-divisor in A (x) A with a declared weight and where it came from.
struct WeightedClass {
    AlgebraElement element;
    unsigned weight = 1;
    std::string label;
    std::string provenance;
};

struct CupLengthResult {
    unsigned length = 0;
    std::vector<AlgebraElement> witness;
    std::vector<std::string> witness_labels;
    bool frontier_truncated = false;

    unsigned certified_lower_bound_tc() const { return length + 1; }
};

struct WeightedLowerBound {
    unsigned total_weight = 0;
    std::vector<WeightedClass> witness;
    bool frontier_truncated = false;

    unsigned certified_lower_bound_tc() const { return total_weight + 1; }
};

struct SearchOptions {
    // 0 selects the top degree of A (x) A.
    unsigned max_depth = 0;
    // Use a basis of the whole kernel of A (x) A -> A instead of barred generators.
    bool exhaustive = false;
    // Extra zero-divisors added to the factor pool.
    std::vector<WeightedClass> extra_factors;
    // Per-level cap on the number of nonzero partial products kept.
    std::size_t frontier_cap = 200000;
};

inline constexpr unsigned kExhaustiveBasisCap = 12;

// Longest nonzero product of factors from the pool. Any nonzero product found
// certifies TC >= length + 1. Throws ValidationError if A fails validation or
// an extra factor is not a zero-divisor.
CupLengthResult zero_divisor_cuplength(const ProductAlgebra& square, const SearchOptions& opts = {});

// Maximum total weight over nonzero products of the given classes (with
// repetition) of at most max_depth factors. Ties go to the lexicographically
// smallest multiset of class indices.
WeightedLowerBound weighted_lower_bound(const ProductAlgebra& square,
                                       const std::vector<WeightedClass>& classes,
                                       unsigned max_depth = 0);

// Homogeneous basis of ker(A (x) A -> A) over Z_p. Requires a prime modulus.
std::vector<AlgebraElement> zero_divisor_kernel_basis(const ProductAlgebra& square);

// Barred generators bar(g); falls back to every positive-degree basis element
// when the algebra declares no generators.
std::vector<WeightedClass> barred_generators(const ProductAlgebra& square);

} // namespace tcb::tclower
