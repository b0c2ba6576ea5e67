#include <catch2/catch_amalgamated.hpp>

#include "qfw/numeric.hpp"

using namespace qfw;

TEST_CASE("integer helpers", "[numeric]") {
    REQUIRE(int_gcd(12, 18) == 6);
    REQUIRE(int_lcm(4, 6) == 12);
    REQUIRE(isqrt(Int(0)) == 0);
    REQUIRE(isqrt(Int(35)) == 5);
    REQUIRE(isqrt(Int(36)) == 6);
    Int root;
    REQUIRE(is_perfect_square(Int(49), &root));
    REQUIRE(root == 7);
    REQUIRE_FALSE(is_perfect_square(Int(50)));
    REQUIRE_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("rational floor/ceil", "[numeric]") {
    REQUIRE(rat_floor(Rat(7, 2)) == 3);
    REQUIRE(rat_ceil(Rat(7, 2)) == 4);
    REQUIRE(rat_floor(Rat(-7, 2)) == -4);
    REQUIRE(rat_ceil(Rat(-7, 2)) == -3);
    REQUIRE(rat_floor(Rat(6, 2)) == 3);
    REQUIRE(rat_ceil(Rat(6, 2)) == 3);
}

TEST_CASE("primality and factorization", "[numeric]") {
    REQUIRE(is_prime(Int(2)));
    REQUIRE(is_prime(Int(97)));
    REQUIRE_FALSE(is_prime(Int(1)));
    REQUIRE_FALSE(is_prime(Int(91)));

    auto f = factor(Int(-360));
    REQUIRE(f.size() == 3);
    REQUIRE(f[0] == std::pair<Int, int>{2, 3});
    REQUIRE(f[1] == std::pair<Int, int>{3, 2});
    REQUIRE(f[2] == std::pair<Int, int>{5, 1});

    REQUIRE(is_squarefree(Int(-5)));
    REQUIRE(is_squarefree(Int(6)));
    REQUIRE_FALSE(is_squarefree(Int(12)));
    REQUIRE_FALSE(is_squarefree(Int(0)));

    auto ps = primes_up_to(30);
    REQUIRE(ps == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("kronecker symbol", "[numeric]") {
    // (-20 / 3) = 1: 3 splits in Q(sqrt(-5)).
    REQUIRE(kronecker(Int(-20), Int(3)) == 1);
    // (-20 / 7) = 0? no: 7 does not divide -20; -20 = 1 mod 7, square -> 1.
    REQUIRE(kronecker(Int(-20), Int(7)) == 1);
    // (-20 / 11): -20 = 2 mod 11, 2 is not a QR mod 11.
    REQUIRE(kronecker(Int(-20), Int(11)) == -1);
    // ramified prime
    REQUIRE(kronecker(Int(-20), Int(5)) == 0);
    // 2 via the Kronecker extension: (-23 / 2): -23 = 1 mod 8 -> +1.
    REQUIRE(kronecker(Int(-23), Int(2)) == 1);
    // (-3 / 2): -3 = 5 mod 8 -> -1.
    REQUIRE(kronecker(Int(-3), Int(2)) == -1);
}

TEST_CASE("pi enclosure and sqrt bounds", "[numeric]") {
    REQUIRE(pi_lower() < pi_upper());
    REQUIRE(pi_upper() - pi_lower() == Rat(1, Int("1000000000000000")));
    // 3.14159 < pi < 3.1416
    REQUIRE(pi_lower() > Rat(314159, 100000));
    REQUIRE(pi_upper() < Rat(31416, 10000));

    Rat lo = sqrt_lower(Int(20)), hi = sqrt_upper(Int(20));
    REQUIRE(lo < hi);
    REQUIRE(lo * lo <= 20);
    REQUIRE(hi * hi >= 20);
    REQUIRE(hi - lo <= Rat(2, 100000000));
}
