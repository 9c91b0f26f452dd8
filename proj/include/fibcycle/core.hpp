#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fibcycle/modular.hpp"

namespace fibcycle {

// Hard ceiling on moduli: arithmetic on residues and on the characteristic
// invariant stays exactly representable in 64 bits below this bound.
inline constexpr std::uint64_t modulus_cap = std::uint64_t{1} << 31;

// A validated modulus m with 1 <= m <= modulus_cap.
class Modulus {
  public:
    explicit Modulus(std::uint64_t m);

    std::uint64_t value() const { return m_; }

    friend auto operator<=>(const Modulus&, const Modulus&) = default;

  private:
    std::uint64_t m_;
};

// A seed (a, b) already reduced modulo m: 0 <= a, b < m.
struct SeedPair {
    SeedPair(std::uint64_t a, std::uint64_t b, Modulus m);

    std::uint64_t a;
    std::uint64_t b;
    Modulus m;

    friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

// Reduce arbitrary integer initial terms into a SeedPair for m.
SeedPair reduce_seed(std::int64_t a, std::int64_t b, Modulus m);

// The characteristic invariant of a seed: d = b^2 - a*b - a^2 computed over
// the integers from the reduced representatives, plus its residue mod m.
struct InvariantValue {
    std::int64_t d;
    std::uint64_t d_mod_m;

    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

InvariantValue characteristic_invariant(const SeedPair& seed);

// One cycle of the recurrence x_{n+1} = x_n + x_{n-1} (mod m): the residues
// visited from the seed state until the state pair first repeats.  Always
// nonempty; for m = 1 it is the single residue 0.
class Cycle {
  public:
    // Validates that `residues` is cyclically closed under the recurrence
    // modulo m and is not a proper repetition of a shorter cycle.
    Cycle(std::vector<std::uint64_t> residues, Modulus m);

    const std::vector<std::uint64_t>& residues() const { return residues_; }
    Modulus modulus() const { return m_; }
    std::size_t length() const { return residues_.size(); }

    // Lexicographically least rotation; equal cycles-up-to-rotation have
    // equal canonical forms.
    std::vector<std::uint64_t> canonical() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

  private:
    std::vector<std::uint64_t> residues_;
    Modulus m_;
};

Cycle generate_cycle(const SeedPair& seed);

// Termwise check that consecutive invariants alternate in sign:
//   x_{n+1}^2 - x_{n+1} x_n - x_n^2  ==  (-1)^n * d   (mod m)
// around the whole cycle, including the wrap-around step.  The cycle must
// have been generated from `seed` (same modulus, starts at the seed pair).
bool invariant_check(const Cycle& cycle, const SeedPair& seed);

// Convenience: read the seed off the first two entries of the cycle.
bool invariant_check(const Cycle& cycle);

// The cycle u * C obtained by multiplying every residue by u (mod m);
// u must be a unit mod m so the length is preserved.
Cycle scale_cycle(std::uint64_t u, const Cycle& cycle);

bool cycles_equivalent(const Cycle& lhs, const Cycle& rhs);

// Index of the lexicographically least rotation of `v` (Booth's algorithm).
std::size_t least_rotation(const std::vector<std::uint64_t>& v);

}  // namespace fibcycle
