#pragma once

#include <cstdint>
#include <vector>

namespace fibcycle {

// Mathematical (floor) remainder: result is in [0, m) for any x, m > 0.
std::uint64_t floor_mod(std::int64_t x, std::uint64_t m);

std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);

std::uint64_t unsigned_abs(std::int64_t x);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

// Prime factorization by trial division, smallest prime first.
std::vector<PrimePower> factorize(std::uint64_t n);

// Largest e with p^e dividing n (p >= 2); valuation(0, p) is undefined.
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace fibcycle
