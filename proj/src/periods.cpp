#include "fibcycle/periods.hpp"

#include <stdexcept>

namespace fibcycle {

std::uint64_t cycle_length(const SeedPair& seed) {
    const std::uint64_t m = seed.m.value();
    std::uint64_t x = seed.a;
    std::uint64_t y = seed.b;
    std::uint64_t k = 0;
    do {
        const std::uint64_t next = add_mod(x, y, m);
        x = y;
        y = next;
        ++k;
    } while (x != seed.a || y != seed.b);
    return k;
}

namespace {

std::uint64_t pisano_iterated(std::uint64_t m) {
    return cycle_length(reduce_seed(0, 1, Modulus(m)));
}

}  // namespace

PeriodRecord pisano_period(Modulus m, PeriodSource source) {
    if (source == PeriodSource::iterated) {
        return PeriodRecord{m.value(), pisano_iterated(m.value()), source};
    }
    std::uint64_t k = 1;
    for (const auto& [p, e] : factorize(m.value())) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        k = lcm_u64(k, pisano_iterated(pe));
    }
    return PeriodRecord{m.value(), k, source};
}

bool check_lcm_composition(Modulus m, Modulus n) {
    if (gcd_u64(m.value(), n.value()) != 1)
        throw std::invalid_argument("check_lcm_composition: moduli must be coprime");
    const Modulus mn(m.value() * n.value());  // validates the product is in range
    return pisano_iterated(mn.value()) ==
           lcm_u64(pisano_iterated(m.value()), pisano_iterated(n.value()));
}

PrimeDivisibilityReport check_prime_divisibility(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("check_prime_divisibility: p must be prime");
    PrimeDivisibilityReport rep{};
    rep.p = p;
    rep.p_mod_5 = p % 5;
    rep.k_p = pisano_iterated(p);
    switch (rep.p_mod_5) {
        case 0:
            rep.divisor_bound = 20;  // p == 5 itself
            break;
        case 1:
        case 4:
            rep.divisor_bound = p - 1;
            break;
        default:
            rep.divisor_bound = 2 * (p + 1);
            break;
    }
    rep.divides = rep.divisor_bound % rep.k_p == 0;
    return rep;
}

bool check_prime_power_formula(std::uint64_t base, unsigned e) {
    if (base != 2 && base != 3 && base != 5)
        throw std::invalid_argument("check_prime_power_formula: base must be 2, 3, or 5");
    if (e == 0) throw std::invalid_argument("check_prime_power_formula: e must be positive");
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (pe > modulus_cap / base)
            throw std::invalid_argument("check_prime_power_formula: base^e exceeds modulus cap");
        pe *= base;
    }
    std::uint64_t formula = 0;
    switch (base) {
        case 2: formula = 3 * (pe / 2); break;
        case 3: formula = 8 * (pe / 3); break;
        case 5: formula = 4 * pe; break;
    }
    return pisano_iterated(pe) == formula;
}

const char* to_string(WallOutcome o) {
    switch (o) {
        case WallOutcome::holds: return "holds";
        case WallOutcome::violated: return "violated";
        case WallOutcome::not_applicable: return "not_applicable";
    }
    return "?";
}

WallOutcome check_wall(const SeedPair& seed) {
    const InvariantValue inv = characteristic_invariant(seed);
    if (gcd_u64(seed.m.value(), unsigned_abs(inv.d)) != 1) return WallOutcome::not_applicable;
    return cycle_length(seed) == pisano_iterated(seed.m.value()) ? WallOutcome::holds
                                                                : WallOutcome::violated;
}

}  // namespace fibcycle
