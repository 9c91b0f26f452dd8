#pragma once

#include <cstdint>
#include <vector>

#include "fibcycle/core.hpp"

namespace fibcycle {

// Cycle length k(a, b, m): number of steps until the state pair (x_n, x_{n+1})
// returns to (a, b).  Computed by iteration without storing the residues.
std::uint64_t cycle_length(const SeedPair& seed);

enum class PeriodSource {
    iterated,   // direct state iteration from (0, 1)
    composed,   // lcm over the prime-power factors, each iterated once
};

struct PeriodRecord {
    std::uint64_t m;
    std::uint64_t k_m;
    PeriodSource source;

    friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

// Pisano period k(m) = cycle_length of the seed (0, 1).
PeriodRecord pisano_period(Modulus m, PeriodSource source = PeriodSource::iterated);

// For coprime m and n: k(mn) == lcm(k(m), k(n)), all three by iteration.
// Rejects non-coprime pairs.
bool check_lcm_composition(Modulus m, Modulus n);

struct PrimeDivisibilityReport {
    std::uint64_t p;
    std::uint64_t p_mod_5;
    std::uint64_t k_p;
    std::uint64_t divisor_bound;  // p-1, 2(p+1), or 20 according to p mod 5
    bool divides;
};

// For prime p: k(p) | p-1 when p ≡ ±1 (mod 5), k(p) | 2(p+1) when
// p ≡ ±2 (mod 5), and k(5) = 20.
PrimeDivisibilityReport check_prime_divisibility(std::uint64_t p);

// Closed prime-power formulas, checked against iteration:
//   k(2^e) = 3 * 2^(e-1),   k(3^e) = 8 * 3^(e-1),   k(5^e) = 4 * 5^e.
// Only bases 2, 3, 5 have a proven formula; others are rejected.
bool check_prime_power_formula(std::uint64_t base, unsigned e);

enum class WallOutcome {
    holds,           // gcd condition met and k(a, b, m) == k(m)
    violated,        // gcd condition met but the lengths differ
    not_applicable,  // gcd(m, |d|) != 1: no promise either way
};

const char* to_string(WallOutcome o);

// Wall's lemma: if gcd(m, |d|) = 1 for d = b^2 - a*b - a^2, the cycle of
// (a, b) has the full Pisano length k(m).
WallOutcome check_wall(const SeedPair& seed);

}  // namespace fibcycle
