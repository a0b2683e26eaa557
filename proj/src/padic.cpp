#include "tcbound/padic.hpp"

#include "tcbound/error.hpp"

#include <string>

namespace tcb::padic {

namespace {

void require_prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    // residue products must fit in 64 bits
    if (p >= (std::uint64_t{1} << 32))
        throw ValidationError("modulus " + std::to_string(p) + " exceeds 2^32");
}

void require_k_le_n(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        throw ValidationError("binomial query has k = " + std::to_string(k) + " > n = " +
                              std::to_string(n));
}

// C(n, k) mod p for 0 <= k, n < p, by the multiplicative formula with inverses.
std::uint64_t small_binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    if (k > n)
        return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den^(p-2) is the inverse of den, which is nonzero since k < p.
    std::uint64_t inv = 1;
    std::uint64_t b = den;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1u)
            inv = inv * b % p;
        b = b * b % p;
    }
    return num * inv % p;
}

} // namespace

std::uint64_t PadicExpansion::value() const
{
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        v = v * base + *it;
    return v;
}

bool is_prime(std::uint64_t p) noexcept
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

PadicExpansion to_base(std::uint64_t n, std::uint64_t p)
{
    require_prime(p);
    PadicExpansion e{p, {}};
    do {
        e.digits.push_back(n % p);
        n /= p;
    } while (n > 0);
    return e;
}

std::uint64_t binom_mod_p(const BinomialQuery& q)
{
    require_prime(q.p);
    require_k_le_n(q.n, q.k);
    std::uint64_t n = q.n;
    std::uint64_t k = q.k;
    std::uint64_t r = 1;
    while (k > 0 && r != 0) {
        r = r * small_binom_mod_p(n % q.p, k % q.p, q.p) % q.p;
        n /= q.p;
        k /= q.p;
    }
    return r % q.p;
}

std::uint64_t binom_mod_6(std::uint64_t m, std::uint64_t k)
{
    const std::uint64_t r2 = binom_mod_p(m, k, 2);
    const std::uint64_t r3 = binom_mod_p(m, k, 3);
    // x = r3 (mod 3), x = r2 (mod 2)
    for (std::uint64_t x = 0; x < 6; ++x)
        if (x % 2 == r2 && x % 3 == r3)
            return x;
    return 0;
}

std::uint64_t kummer_carries(std::uint64_t m, std::uint64_t k, std::uint64_t p)
{
    require_prime(p);
    require_k_le_n(m, k);
    std::uint64_t a = k;
    std::uint64_t b = m - k;
    std::uint64_t carry = 0;
    std::uint64_t carries = 0;
    while (a > 0 || b > 0 || carry > 0) {
        const std::uint64_t s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

bool has_digit_two_base3(std::uint64_t m)
{
    for (; m > 0; m /= 3)
        if (m % 3 == 2)
            return true;
    return false;
}

BigInt binom_exact(std::uint64_t n, std::uint64_t k, std::uint64_t limit)
{
    require_k_le_n(n, k);
    if (n > limit)
        throw ResourceError("binom_exact: n = " + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit));
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace tcb::padic
