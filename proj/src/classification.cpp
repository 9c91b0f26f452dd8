#include "fibcycle/classification.hpp"

#include <array>
#include <stdexcept>

#include "fibcycle/periods.hpp"

namespace fibcycle {

const char* to_string(ResidualClass c) {
    switch (c) {
        case ResidualClass::small: return "small";
        case ResidualClass::ternary: return "ternary";
        case ResidualClass::none: return "none";
    }
    return "?";
}

FMembership in_F(Modulus m) {
    FMembership f{false, 0, m.value(), ResidualClass::none, 0};
    while (f.residual % 5 == 0) {
        f.residual /= 5;
        ++f.five_exponent;
    }

    static constexpr std::array<std::uint64_t, 6> small = {1, 2, 4, 6, 7, 14};
    for (std::uint64_t v : small) {
        if (f.residual == v) {
            f.member = true;
            f.residual_class = ResidualClass::small;
            return f;
        }
    }
    std::uint64_t r = f.residual;
    unsigned j = 0;
    while (r % 3 == 0) {
        r /= 3;
        ++j;
    }
    if (r == 1 && j >= 1) {
        f.member = true;
        f.residual_class = ResidualClass::ternary;
        f.ternary_exponent = j;
    }
    return f;
}

Classification classify(const SeedPair& seed) {
    Classification c{seed, characteristic_invariant(seed), in_F(seed.m), 0, false};
    c.gcd_value = gcd_u64(seed.m.value(), unsigned_abs(c.invariant.d));
    c.complete = c.membership.member && c.gcd_value == 1;
    return c;
}

bool is_residue_complete_oracle(const SeedPair& seed) {
    const std::uint64_t m = seed.m.value();
    std::vector<bool> seen(m, false);
    std::uint64_t distinct = 0;
    std::uint64_t x = seed.a;
    std::uint64_t y = seed.b;
    do {
        if (!seen[x]) {
            seen[x] = true;
            ++distinct;
        }
        const std::uint64_t next = add_mod(x, y, m);
        x = y;
        y = next;
    } while (x != seed.a || y != seed.b);
    return distinct == m;
}

SweepReport sweep_agreement(std::uint64_t max_m) {
    SweepReport report{max_m, 0, {}};
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        const Modulus mod(m);
        std::vector<char> visited(m * m, 0);
        // Orbit-stamped scratch for counting distinct residues per cycle.
        std::vector<std::uint64_t> stamp(m, 0);
        std::uint64_t orbit_id = 0;
        for (std::uint64_t a0 = 0; a0 < m; ++a0) {
            for (std::uint64_t b0 = 0; b0 < m; ++b0) {
                if (visited[a0 * m + b0]) continue;
                ++orbit_id;
                std::uint64_t distinct = 0;
                std::uint64_t orbit_len = 0;
                std::uint64_t x = a0;
                std::uint64_t y = b0;
                do {
                    visited[x * m + y] = 1;
                    ++orbit_len;
                    if (stamp[x] != orbit_id) {
                        stamp[x] = orbit_id;
                        ++distinct;
                    }
                    const std::uint64_t next = add_mod(x, y, m);
                    x = y;
                    y = next;
                } while (x != a0 || y != b0);

                // Both verdicts are constant along an orbit: the residue set
                // is shared, and gcd(m, |d|) survives the step map because
                // consecutive invariants differ only in sign mod m.
                const bool theorem = classify(SeedPair(a0, b0, mod)).complete;
                const bool oracle = distinct == m;
                report.seeds_checked += orbit_len;
                if (theorem != oracle) {
                    x = a0;
                    y = b0;
                    do {
                        report.disagreements.push_back({x, y, m, theorem, oracle});
                        const std::uint64_t next = add_mod(x, y, m);
                        x = y;
                        y = next;
                    } while (x != a0 || y != b0);
                }
            }
        }
    }
    return report;
}

LiftReport verify_lift(const SeedPair& seed) {
    const std::uint64_t m = seed.m.value();
    if (m > modulus_cap / 5)
        throw std::invalid_argument("verify_lift: 5m exceeds modulus cap");
    LiftReport rep{seed, false, m, 5 * m, 0, 0, false, {}, false};
    const Classification cls = classify(seed);
    rep.k_base = cycle_length(seed);
    rep.applicable =
        cls.complete && gcd_u64(rep.lifted_m, unsigned_abs(cls.invariant.d)) == 1;
    if (!rep.applicable) return rep;

    const SeedPair lifted(seed.a, seed.b, Modulus(rep.lifted_m));
    const Cycle cycle = generate_cycle(lifted);
    rep.k_lifted = cycle.length();
    rep.ratio_ok = rep.k_lifted == 5 * rep.k_base;

    std::vector<bool> seen(rep.lifted_m, false);
    for (std::uint64_t r : cycle.residues()) seen[r] = true;
    rep.preimage_counts.assign(m, 0);
    for (std::uint64_t s = 0; s < rep.lifted_m; ++s) {
        if (seen[s]) ++rep.preimage_counts[s % m];
    }
    rep.all_five = true;
    for (std::uint32_t c : rep.preimage_counts) {
        if (c != 5) {
            rep.all_five = false;
            break;
        }
    }
    return rep;
}

std::vector<std::uint64_t> lucas_complete_set(std::uint64_t cap) {
    if (cap > modulus_cap)
        throw std::invalid_argument("lucas_complete_set: cap exceeds modulus cap");
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= cap; ++m) {
        if (is_residue_complete_oracle(reduce_seed(2, 1, Modulus(m)))) out.push_back(m);
    }
    return out;
}

}  // namespace fibcycle
