#include "fibcycle/systems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fibcycle {

namespace {

void require_within_cap(std::uint64_t m, std::uint64_t cap, const char* who) {
    if (m > cap)
        throw std::invalid_argument(std::string(who) + ": modulus " + std::to_string(m) +
                                    " exceeds enumeration cap " + std::to_string(cap));
}

// Visit every orbit of the state map once; `sink(residues)` receives the
// residue sequence of each cycle in first-encounter order.
template <typename Sink>
void walk_orbits(std::uint64_t m, Sink&& sink) {
    std::vector<char> visited(m * m, 0);
    for (std::uint64_t a0 = 0; a0 < m; ++a0) {
        for (std::uint64_t b0 = 0; b0 < m; ++b0) {
            if (visited[a0 * m + b0]) continue;
            std::vector<std::uint64_t> residues;
            std::uint64_t x = a0;
            std::uint64_t y = b0;
            do {
                visited[x * m + y] = 1;
                residues.push_back(x);
                const std::uint64_t next = add_mod(x, y, m);
                x = y;
                y = next;
            } while (x != a0 || y != b0);
            sink(std::move(residues));
        }
    }
}

}  // namespace

SystemCatalog enumerate_system(Modulus m, std::uint64_t cap) {
    require_within_cap(m.value(), cap, "enumerate_system");
    SystemCatalog cat{m, {}, 0};
    walk_orbits(m.value(), [&](std::vector<std::uint64_t> residues) {
        const Cycle cycle(std::move(residues), m);
        cat.total_states += cycle.length();
        cat.cycles.emplace_back(cycle.canonical(), m);
    });
    std::sort(cat.cycles.begin(), cat.cycles.end(), [](const Cycle& l, const Cycle& r) {
        if (l.length() != r.length()) return l.length() < r.length();
        return l.residues() < r.residues();
    });
    return cat;
}

std::size_t count_cycles(Modulus m, std::uint64_t cap) {
    require_within_cap(m.value(), cap, "count_cycles");
    std::size_t n = 0;
    walk_orbits(m.value(), [&](std::vector<std::uint64_t>&&) { ++n; });
    return n;
}

TernaryDecompositionReport ternary_decomposition_report(unsigned j, std::uint64_t cap) {
    if (j == 0)
        throw std::invalid_argument("ternary_decomposition_report: j must be at least 1");
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < j; ++i) {
        if (mod > modulus_cap / 3)
            throw std::invalid_argument("ternary_decomposition_report: 3^j exceeds modulus cap");
        mod *= 3;
    }
    require_within_cap(mod, cap, "ternary_decomposition_report");

    const Modulus m(mod);
    TernaryDecompositionReport rep{j, mod, 0, 0, 0, false, false};

    std::set<std::vector<std::uint64_t>> system;
    for (const Cycle& c : enumerate_system(m, cap).cycles) system.insert(c.residues());
    rep.system_size = system.size();

    std::set<std::vector<std::uint64_t>> assembled;
    const Cycle pisano = generate_cycle(reduce_seed(0, 1, m));
    for (std::uint64_t u = 1; 2 * u < mod; ++u) {
        if (u % 3 == 0) continue;
        ++rep.scaled_count;
        if (!assembled.insert(scale_cycle(u, pisano).canonical()).second)
            rep.overlap_found = true;
    }

    const Modulus prev(mod / 3);
    for (const Cycle& c : enumerate_system(prev, cap).cycles) {
        ++rep.embedded_count;
        std::vector<std::uint64_t> scaled;
        scaled.reserve(c.length());
        for (std::uint64_t r : c.residues()) scaled.push_back(3 * r);
        if (!assembled.insert(Cycle(std::move(scaled), m).canonical()).second)
            rep.overlap_found = true;
    }

    rep.equal = assembled == system;
    return rep;
}

bool verify_ternary_decomposition(unsigned j, std::uint64_t cap) {
    return ternary_decomposition_report(j, cap).holds();
}

}  // namespace fibcycle
