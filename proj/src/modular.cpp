#include "fibcycle/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace fibcycle {

std::uint64_t floor_mod(std::int64_t x, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("floor_mod: modulus must be positive");
    // Cast is safe: (-x) mod m needs only m's range, and m <= 2^63 here.
    if (x >= 0) return static_cast<std::uint64_t>(x) % m;
    std::uint64_t r = unsigned_abs(x) % m;
    return r == 0 ? 0 : m - r;
}

std::uint64_t add_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return (x + y) % m;
}

std::uint64_t sub_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return (x + m - y % m) % m;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * y) % m);
}

std::uint64_t unsigned_abs(std::int64_t x) {
    // Avoids UB on INT64_MIN that std::abs would hit.
    return x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return std::lcm(a, b);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    // Wheel over residues coprime to 30.
    static constexpr std::uint64_t steps[] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t d = 7;
    for (std::size_t i = 0; d * d <= n; i = (i + 1) % 8) {
        if (n % d == 0) return false;
        d += steps[i];
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    static constexpr std::uint64_t steps[] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    for (std::size_t i = 0; p * p <= n; i = (i + 1) % 8) {
        strip(p);
        p += steps[i];
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0 || p < 2) throw std::invalid_argument("valuation: need n > 0 and p >= 2");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace fibcycle
