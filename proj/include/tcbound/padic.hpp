#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace tcb::padic {

using BigInt = mpz_class;

inline constexpr std::uint64_t kDefaultBinomLimit = 100000;

// Base-p digits of a nonnegative integer, least significant first.
// The value 0 is the single digit [0]; otherwise the last digit is nonzero.
struct PadicExpansion {
    std::uint64_t base = 2;
    std::vector<std::uint64_t> digits;

    std::uint64_t value() const;
    bool operator==(const PadicExpansion&) const = default;
};

struct BinomialQuery {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t p = 2;
};

// Trial division; inputs here are small.
bool is_prime(std::uint64_t p) noexcept;

// Throws ValidationError for non-prime p or p >= 2^32.
PadicExpansion to_base(std::uint64_t n, std::uint64_t p);

// C(n, k) mod p by Lucas' theorem.
std::uint64_t binom_mod_p(const BinomialQuery& q);
inline std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    return binom_mod_p(BinomialQuery{n, k, p});
}

// C(m, k) mod 6, combined from the residues mod 2 and mod 3.
std::uint64_t binom_mod_6(std::uint64_t m, std::uint64_t k);

// Number of carries when adding k and m - k in base p; this is the p-adic
// valuation of C(m, k) (Kummer).
std::uint64_t kummer_carries(std::uint64_t m, std::uint64_t k, std::uint64_t p);

bool has_digit_two_base3(std::uint64_t m);

// Only digits 0 and 1 in base 3.
inline bool has_only_small_digits_base3(std::uint64_t m) { return !has_digit_two_base3(m); }

// Exact C(n, k). Throws ResourceError when n exceeds `limit`.
BigInt binom_exact(std::uint64_t n, std::uint64_t k, std::uint64_t limit = kDefaultBinomLimit);

} // namespace tcb::padic
