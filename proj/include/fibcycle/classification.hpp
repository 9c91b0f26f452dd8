#pragma once

#include <cstdint>
#include <vector>

#include "fibcycle/core.hpp"

namespace fibcycle {

// Where the 5-free residual of m lands:
//   small    — residual in {1, 2, 4, 6, 7, 14}
//   ternary  — residual = 3^j with j >= 1
//   none     — anything else (m is outside the completeness family)
enum class ResidualClass { small, ternary, none };

const char* to_string(ResidualClass c);

// Membership of m in the family
//   F = { 5^k, 2*5^k, 4*5^k, 3^j*5^k, 6*5^k, 7*5^k, 14*5^k : k >= 0, j >= 1 },
// decided by stripping the 5-part and classifying the residual.
struct FMembership {
    bool member;
    unsigned five_exponent;     // largest k with 5^k | m
    std::uint64_t residual;     // m / 5^five_exponent, coprime to 5
    ResidualClass residual_class;
    unsigned ternary_exponent;  // j when residual_class == ternary, else 0

    friend bool operator==(const FMembership&, const FMembership&) = default;
};

FMembership in_F(Modulus m);

// Residue completeness of the cycle of (a, b) mod m, decided without
// generating the cycle: complete iff m is in F and gcd(m, |d|) = 1 for the
// characteristic invariant d.  (For the zero seed d = 0 and gcd(m, 0) = m,
// so the zero cycle is complete only for m = 1.)
struct Classification {
    SeedPair seed;
    InvariantValue invariant;
    FMembership membership;
    std::uint64_t gcd_value;
    bool complete;
};

Classification classify(const SeedPair& seed);

// Ground truth by generation: the cycle's residue set is all of Z_m.
bool is_residue_complete_oracle(const SeedPair& seed);

struct Disagreement {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t m;
    bool theorem_verdict;
    bool oracle_verdict;
};

struct SweepReport {
    std::uint64_t max_m;
    std::uint64_t seeds_checked;
    std::vector<Disagreement> disagreements;

    bool agree() const { return disagreements.empty(); }
};

// Compare the closed-form predicate against the generating oracle for every
// seed of every modulus m <= max_m.  Runs orbit-by-orbit, so the total cost
// is O(m^2) states per modulus rather than one cycle generation per seed.
SweepReport sweep_agreement(std::uint64_t max_m);

// Lifting a cycle from modulus m to modulus 5m.  Applicable when the base
// cycle is residue complete and gcd(5m, |d|) = 1; then the lifted cycle is
// residue complete as well, so each base residue r has exactly five distinct
// preimages r + t*m (t = 0..4) among the lifted residues.
struct LiftReport {
    SeedPair seed;
    bool applicable;
    std::uint64_t base_m;
    std::uint64_t lifted_m;
    std::uint64_t k_base;
    std::uint64_t k_lifted;
    bool ratio_ok;  // k_lifted == 5 * k_base; guaranteed when 5 divides m
    std::vector<std::uint32_t> preimage_counts;
    bool all_five;
};

LiftReport verify_lift(const SeedPair& seed);

// All m <= cap whose Lucas cycle (seed 2, 1) is residue complete, in
// increasing order, each decided by the generating oracle.  Expected to be
// {1, 2, 4, 6, 7, 14} plus the powers of 3 (d = -5 rules out multiples of 5).
std::vector<std::uint64_t> lucas_complete_set(std::uint64_t cap);

}  // namespace fibcycle
