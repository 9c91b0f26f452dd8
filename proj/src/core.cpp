#include "fibcycle/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fibcycle {

Modulus::Modulus(std::uint64_t m) : m_(m) {
    if (m == 0) throw std::invalid_argument("Modulus: m must be positive");
    if (m > modulus_cap)
        throw std::invalid_argument("Modulus: m exceeds cap " + std::to_string(modulus_cap));
}

SeedPair::SeedPair(std::uint64_t a_, std::uint64_t b_, Modulus m_) : a(a_), b(b_), m(m_) {
    if (a >= m.value() || b >= m.value())
        throw std::invalid_argument("SeedPair: components must lie in [0, m)");
}

SeedPair reduce_seed(std::int64_t a, std::int64_t b, Modulus m) {
    return SeedPair(floor_mod(a, m.value()), floor_mod(b, m.value()), m);
}

InvariantValue characteristic_invariant(const SeedPair& seed) {
    const auto a = static_cast<std::int64_t>(seed.a);
    const auto b = static_cast<std::int64_t>(seed.b);
    // a, b < 2^31 keeps every term below 2^62, so the difference stays in
    // int64 range; this is what the modulus cap guarantees.
    const std::int64_t d = b * b - a * b - a * a;
    return InvariantValue{d, floor_mod(d, seed.m.value())};
}

namespace {

bool rotation_fixed_by(const std::vector<std::uint64_t>& v, std::size_t p) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != v[(i + p) % n]) return false;
    }
    return true;
}

}  // namespace

Cycle::Cycle(std::vector<std::uint64_t> residues, Modulus m)
    : residues_(std::move(residues)), m_(m) {
    if (residues_.empty()) throw std::invalid_argument("Cycle: empty residue list");
    const std::uint64_t mod = m_.value();
    const std::size_t n = residues_.size();
    for (std::uint64_t r : residues_) {
        if (r >= mod) throw std::invalid_argument("Cycle: residue out of range");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t expect = add_mod(residues_[i], residues_[(i + 1) % n], mod);
        if (residues_[(i + 2) % n] != expect)
            throw std::invalid_argument("Cycle: sequence does not satisfy the recurrence");
    }
    // Reject non-primitive lists (a shorter cycle written out several times).
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p == 0 && rotation_fixed_by(residues_, p))
            throw std::invalid_argument("Cycle: residue list repeats a shorter cycle");
    }
}

std::vector<std::uint64_t> Cycle::canonical() const {
    const std::size_t k = least_rotation(residues_);
    std::vector<std::uint64_t> out;
    out.reserve(residues_.size());
    out.insert(out.end(), residues_.begin() + static_cast<std::ptrdiff_t>(k), residues_.end());
    out.insert(out.end(), residues_.begin(), residues_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

Cycle generate_cycle(const SeedPair& seed) {
    const std::uint64_t m = seed.m.value();
    std::vector<std::uint64_t> residues;
    std::uint64_t x = seed.a;
    std::uint64_t y = seed.b;
    do {
        residues.push_back(x);
        const std::uint64_t next = add_mod(x, y, m);
        x = y;
        y = next;
    } while (x != seed.a || y != seed.b);
    return Cycle(std::move(residues), seed.m);
}

bool invariant_check(const Cycle& cycle, const SeedPair& seed) {
    if (cycle.modulus() != seed.m)
        throw std::invalid_argument("invariant_check: cycle and seed modulus differ");
    const auto& r = cycle.residues();
    const std::uint64_t m = cycle.modulus().value();
    const std::size_t n = r.size();
    const std::uint64_t d0 = characteristic_invariant(seed).d_mod_m;
    const std::uint64_t d1 = (m - d0 % m) % m;  // the alternate sign
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t x = r[i];
        const std::uint64_t y = r[(i + 1) % n];
        const std::uint64_t lhs =
            sub_mod(sub_mod(mul_mod(y, y, m), mul_mod(y, x, m), m), mul_mod(x, x, m), m);
        if (lhs != (i % 2 == 0 ? d0 : d1)) return false;
    }
    return true;
}

bool invariant_check(const Cycle& cycle) {
    const auto& r = cycle.residues();
    return invariant_check(cycle, SeedPair(r[0], r[1 % r.size()], cycle.modulus()));
}

Cycle scale_cycle(std::uint64_t u, const Cycle& cycle) {
    const std::uint64_t m = cycle.modulus().value();
    const std::uint64_t v = u % m;
    if (gcd_u64(v == 0 ? m : v, m) != 1)
        throw std::invalid_argument("scale_cycle: scalar must be invertible mod m");
    std::vector<std::uint64_t> out;
    out.reserve(cycle.length());
    for (std::uint64_t r : cycle.residues()) out.push_back(mul_mod(r, v, m));
    return Cycle(std::move(out), cycle.modulus());
}

bool cycles_equivalent(const Cycle& lhs, const Cycle& rhs) {
    if (lhs.modulus() != rhs.modulus()) return false;
    if (lhs.length() != rhs.length()) return false;
    return lhs.canonical() == rhs.canonical();
}

std::size_t least_rotation(const std::vector<std::uint64_t>& v) {
    const std::size_t n = v.size();
    if (n == 0) throw std::invalid_argument("least_rotation: empty sequence");
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const std::uint64_t a = v[(i + k) % n];
        const std::uint64_t b = v[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i = i + k + 1;
        } else {
            j = j + k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

}  // namespace fibcycle
