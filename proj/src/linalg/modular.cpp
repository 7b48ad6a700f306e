#include "atlas/linalg/modular.hpp"

#include <array>

namespace atlas::linalg {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0) {
        throw BadPrimeError("zero has no inverse modulo p");
    }
    return pow_mod(a, p - 2, p);
}

// Deterministic Miller-Rabin; these bases cover all 64-bit inputs.
bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) {
            return n == b;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

std::uint64_t random_probe_prime(std::mt19937_64& rng)
{
    const std::uint64_t span = kMaxProbePrime - kMinProbePrime;
    for (;;) {
        std::uint64_t candidate = kMinProbePrime + rng() % span;
        candidate |= 1;
        if (candidate < kMaxProbePrime && is_prime(candidate)) {
            return candidate;
        }
    }
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t p)
{
    Integer r = value % static_cast<unsigned long>(p);
    if (r < 0) {
        r += static_cast<unsigned long>(p);
    }
    return r.get_ui();
}

std::uint64_t reduce_mod(const Rational& value, std::uint64_t p)
{
    const std::uint64_t num = reduce_mod(value.get_num(), p);
    if (value.get_den() == 1) {
        return num;
    }
    const std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0) {
        throw BadPrimeError("probe prime divides a denominator");
    }
    return mul_mod(num, inv_mod(den, p), p);
}

std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& modulus)
{
    Integer bound = sqrt(Integer(modulus / 2));
    Integer r0 = modulus;
    Integer r1 = residue % modulus;
    if (r1 < 0) {
        r1 += modulus;
    }
    Integer t0 = 0;
    Integer t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (abs(t1) > bound || t1 == 0) {
        return std::nullopt;
    }
    Integer g = gcd(r1, t1);
    if (g != 1) {
        return std::nullopt;
    }
    return make_rational(r1, t1);
}

} // namespace atlas::linalg
