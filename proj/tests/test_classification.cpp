#include <doctest.h>

#include <map>
#include <set>

#include "fibcycle/classification.hpp"
#include "fibcycle/periods.hpp"

using namespace fibcycle;

TEST_CASE("family membership decomposes the 5-part") {
    const FMembership f45 = in_F(Modulus(45));
    CHECK(f45.member);
    CHECK(f45.five_exponent == 1);
    CHECK(f45.residual == 9);
    CHECK(f45.residual_class == ResidualClass::ternary);
    CHECK(f45.ternary_exponent == 2);

    const FMembership f1 = in_F(Modulus(1));
    CHECK(f1.member);
    CHECK(f1.residual_class == ResidualClass::small);

    const FMembership f8 = in_F(Modulus(8));
    CHECK_FALSE(f8.member);
    CHECK(f8.residual == 8);
    CHECK(f8.residual_class == ResidualClass::none);

    const FMembership f50 = in_F(Modulus(50));
    CHECK(f50.member);
    CHECK(f50.five_exponent == 2);
    CHECK(f50.residual == 2);
}

TEST_CASE("family members below 150 are the expected list") {
    const std::vector<std::uint64_t> expected = {1,  2,  3,  4,   5,   6,   7,  9,  10,
                                                 14, 15, 20, 25,  27,  30,  35, 45, 50,
                                                 70, 75, 81, 100, 125, 135, 150};
    std::vector<std::uint64_t> got;
    for (std::uint64_t m = 1; m <= 150; ++m) {
        if (in_F(Modulus(m)).member) got.push_back(m);
    }
    CHECK(got == expected);
}

TEST_CASE("five-part decomposition is structural for large ranges") {
    for (std::uint64_t m = 1; m <= 1000000; ++m) {
        const FMembership f = in_F(Modulus(m));
        std::uint64_t five_part = 1;
        for (unsigned i = 0; i < f.five_exponent; ++i) five_part *= 5;
        if (f.residual * five_part != m || f.residual % 5 == 0) {
            REQUIRE(f.residual * five_part == m);  // report the offending m once
            REQUIRE(f.residual % 5 != 0);
        }
    }
    CHECK(true);
}

TEST_CASE("classification verdicts") {
    CHECK(classify(SeedPair(0, 1, Modulus(7))).complete);
    const Classification lucas5 = classify(SeedPair(2, 1, Modulus(5)));
    CHECK_FALSE(lucas5.complete);
    CHECK(lucas5.gcd_value == 5);
    CHECK(lucas5.membership.member);

    CHECK_FALSE(classify(SeedPair(0, 0, Modulus(9))).complete);  // gcd(9, 0) = 9
    CHECK(classify(SeedPair(0, 0, Modulus(1))).complete);
    CHECK_FALSE(classify(SeedPair(0, 1, Modulus(8))).complete);  // 8 outside the family
}

TEST_CASE("verdict depends only on m and the gcd value") {
    for (std::uint64_t m : {9ull, 14ull, 25ull, 24ull}) {
        std::map<std::uint64_t, bool> verdict_by_gcd;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const Classification c = classify(SeedPair(a, b, Modulus(m)));
                auto [it, inserted] = verdict_by_gcd.emplace(c.gcd_value, c.complete);
                CHECK(it->second == c.complete);
            }
        }
    }
}

TEST_CASE("brute-force oracle on known cycles") {
    CHECK(is_residue_complete_oracle(SeedPair(0, 1, Modulus(5))));
    CHECK_FALSE(is_residue_complete_oracle(SeedPair(0, 1, Modulus(8))));
    CHECK(is_residue_complete_oracle(SeedPair(0, 0, Modulus(1))));
}

TEST_CASE("predicate agrees with the oracle everywhere below 120") {
    const SweepReport rep = sweep_agreement(120);
    CHECK(rep.agree());
    CHECK(rep.max_m == 120);
    // Sum of m^2 for m = 1..120: every state pair visited exactly once.
    CHECK(rep.seeds_checked == 583220);

    std::vector<std::uint64_t> complete_01;
    for (std::uint64_t m = 1; m <= 14; ++m) {
        if (classify(reduce_seed(0, 1, Modulus(m))).complete) complete_01.push_back(m);
    }
    CHECK(complete_01 == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 9, 10, 14});
}

TEST_CASE("sweep matches a direct per-seed comparison on small moduli") {
    const SweepReport rep = sweep_agreement(25);
    std::uint64_t seeds = 0;
    for (std::uint64_t m = 1; m <= 25; ++m) {
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                ++seeds;
                const SeedPair seed(a, b, Modulus(m));
                CHECK(classify(seed).complete == is_residue_complete_oracle(seed));
            }
        }
    }
    CHECK(rep.seeds_checked == seeds);
}

TEST_CASE("lifting a complete cycle to 5m") {
    const LiftReport five = verify_lift(SeedPair(0, 1, Modulus(5)));
    CHECK(five.applicable);
    CHECK(five.k_base == 20);
    CHECK(five.k_lifted == 100);
    CHECK(five.ratio_ok);
    CHECK(five.all_five);
    CHECK(five.preimage_counts == std::vector<std::uint32_t>(5, 5));

    const LiftReport three = verify_lift(SeedPair(0, 1, Modulus(3)));
    CHECK(three.applicable);
    CHECK(three.k_base == 8);
    CHECK(three.k_lifted == 40);
    CHECK(three.ratio_ok);
    CHECK(three.all_five);

    // gcd(15, -5) = 5: the lemmas promise nothing for the Lucas seed mod 3.
    CHECK_FALSE(verify_lift(SeedPair(2, 1, Modulus(3))).applicable);
    // Incomplete base cycle: out of scope as well.
    CHECK_FALSE(verify_lift(SeedPair(0, 1, Modulus(8))).applicable);
}

TEST_CASE("the 1:5 length ratio has exceptions the preimage count does not") {
    // k(2) = 3 but k(10) = 60, and k(4) = 6 but k(20) = 60: lifting from a
    // base coprime to 5 rescales by lcm with 20, which is 5x only when the
    // base period is divisible by 4 and not by 5.  The five-preimage
    // structure holds regardless.
    const LiftReport two = verify_lift(SeedPair(0, 1, Modulus(2)));
    CHECK(two.applicable);
    CHECK(two.k_base == 3);
    CHECK(two.k_lifted == 60);
    CHECK_FALSE(two.ratio_ok);
    CHECK(two.all_five);

    const LiftReport four = verify_lift(SeedPair(0, 1, Modulus(4)));
    CHECK(four.applicable);
    CHECK(four.k_base == 6);
    CHECK(four.k_lifted == 60);
    CHECK_FALSE(four.ratio_ok);
    CHECK(four.all_five);

    const LiftReport seven = verify_lift(SeedPair(0, 1, Modulus(7)));
    CHECK(seven.applicable);
    CHECK(seven.k_base == 16);
    CHECK(seven.k_lifted == 80);
    CHECK(seven.ratio_ok);
    CHECK(seven.all_five);
}

TEST_CASE("every applicable lift below 100 has complete five-fold preimages") {
    std::uint64_t applicable = 0;
    std::uint64_t ratio_exceptions = 0;
    for (std::uint64_t m = 1; m <= 100; ++m) {
        if (!in_F(Modulus(m)).member) continue;
        for (std::uint64_t a = 0; a < m; ++a) {
            for (std::uint64_t b = 0; b < m; ++b) {
                const LiftReport rep = verify_lift(SeedPair(a, b, Modulus(m)));
                if (!rep.applicable) continue;
                ++applicable;
                CHECK(rep.all_five);
                if (!rep.ratio_ok) {
                    ++ratio_exceptions;
                    CHECK((m == 2 || m == 4));
                }
            }
        }
    }
    CHECK(applicable == 23673);
    CHECK(ratio_exceptions == 13);
}

TEST_CASE("Lucas-complete moduli by oracle sweep") {
    CHECK(lucas_complete_set(5) == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(lucas_complete_set(14) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 7, 9, 14});
    CHECK(lucas_complete_set(500) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 7, 9, 14, 27, 81, 243});
}
