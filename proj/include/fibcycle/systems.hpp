#pragma once

#include <cstdint>
#include <vector>

#include "fibcycle/core.hpp"

namespace fibcycle {

// Full enumeration walks all m^2 states, so moduli are capped; the default
// is generous for interactive use and can be raised explicitly.
inline constexpr std::uint64_t default_enumeration_cap = 300;

// The complete system FS(m): every cycle of the recurrence mod m, each in
// canonical rotation, sorted by length and then lexicographically.  The
// cycle lengths always sum to m^2 (the step map is a bijection on states).
struct SystemCatalog {
    Modulus m;
    std::vector<Cycle> cycles;
    std::uint64_t total_states;  // sum of cycle lengths; always m^2

    std::size_t size() const { return cycles.size(); }
};

SystemCatalog enumerate_system(Modulus m, std::uint64_t cap = default_enumeration_cap);

// |FS(m)| without materializing the catalog.
std::size_t count_cycles(Modulus m, std::uint64_t cap = default_enumeration_cap);

// The ternary decomposition of FS(3^j) for j >= 1:
//   FS(3^j)  =  { u * w(3^j) : 0 < u < 3^j / 2, gcd(u, 3) = 1 }
//            disjoint-union  { 3 * C : C in FS(3^(j-1)) },
// where w(3^j) is the cycle of (0, 1) mod 3^j and 3 * C re-reads a cycle
// mod 3^(j-1) as a cycle mod 3^j through the residue embedding r -> 3r.
struct TernaryDecompositionReport {
    unsigned j;
    std::uint64_t modulus;
    std::size_t system_size;    // |FS(3^j)| by direct enumeration
    std::size_t scaled_count;   // multiples of the Pisano cycle
    std::size_t embedded_count; // cycles inherited from FS(3^(j-1))
    bool overlap_found;         // the two halves are expected disjoint
    bool equal;                 // union matches the enumerated system

    bool holds() const { return equal && !overlap_found; }
};

TernaryDecompositionReport ternary_decomposition_report(unsigned j, std::uint64_t cap = 81);

bool verify_ternary_decomposition(unsigned j, std::uint64_t cap = 81);

}  // namespace fibcycle
