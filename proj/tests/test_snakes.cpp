#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "springer/snakes.hpp"

using namespace springer;

TEST_CASE("signed permutation validation") {
    CHECK_NOTHROW(SignedPermutation({2, -1, 5, 4, 7, -6, -3}));
    CHECK_NOTHROW(SignedPermutation(std::vector<int>{}));
    CHECK_THROWS_AS(SignedPermutation({0}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({1, 3}), std::invalid_argument);  // magnitude gap
}

TEST_CASE("is_snake") {
    CHECK(is_snake(SignedPermutation({1, -3, 2})));
    CHECK(is_snake(SignedPermutation(std::vector<int>{})));
    CHECK_FALSE(is_snake(SignedPermutation({-1})));
    CHECK_FALSE(is_snake(SignedPermutation({1, 2})));
    CHECK(is_snake(SignedPermutation({2, 1})));
    // natural order: -2 < 1, so 1,-2 descends correctly but 1,-2 of length 2 is fine
    CHECK(is_snake(SignedPermutation({1, -2})));
}

TEST_CASE("snake constructor rejects non-snakes") {
    CHECK_THROWS_AS(Snake({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Snake({-1}), std::invalid_argument);
    CHECK_NOTHROW(Snake(std::vector<int>{}));
}

TEST_CASE("enumeration matches the reference list for n = 3") {
    const std::vector<std::vector<int>> want = {
        {1, -2, 3}, {1, -3, 2}, {1, -3, -2}, {2, 1, 3},  {2, -1, 3},  {2, -3, 1},
        {2, -3, -1}, {3, 1, 2}, {3, -1, 2},  {3, -2, 1}, {3, -2, -1}};
    std::vector<std::vector<int>> got;
    for_each_snake(3, [&](const Snake& s) { got.push_back(s.entries()); });
    CHECK(got == want);
}

TEST_CASE("enumeration counts are the Springer numbers") {
    const long long want[] = {1, 1, 3, 11, 57, 361, 2763, 24611};
    for (int n = 0; n <= 7; ++n) {
        long long count = 0;
        for_each_snake(n, [&](const Snake&) { ++count; });
        CHECK(count == want[n]);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(for_each_snake(11, [](const Snake&) {}), std::length_error);
    CHECK_THROWS_AS(for_each_snake(-1, [](const Snake&) {}), std::invalid_argument);
    long long count = 0;
    for_each_snake(0, [&](const Snake& s) {
        ++count;
        CHECK(s.size() == 0);
    });
    CHECK(count == 1);
}

TEST_CASE("inversion code worked examples") {
    CHECK(inversion_code(Snake({3, -5, 2, 1, 4, -7, 6})) == InversionCode{2, 1, 2, 1, 1, 0, 0});
    CHECK(inversion_code(Snake({5, 3, 8, -2, -1, -4, 7, 6})) ==
          InversionCode{1, 1, 0, 1, 0, 0, 0, 0});
    CHECK(inversion_code(Snake({1})) == InversionCode{0});
    CHECK(inversion_code(Snake(std::vector<int>{})) == InversionCode{});
}

TEST_CASE("inversion codes are nonnegative for all snakes up to n = 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_snake(n, [&](const Snake& s) {
            for (int c : inversion_code(s)) CHECK(c >= 0);
        });
    }
}

TEST_CASE("alpha") {
    CHECK(alpha(Snake({2, -1, 5, 4, 7, -6, -3})) == 3);
    CHECK(alpha(Snake(std::vector<int>{})) == 0);
    CHECK(alpha(Snake({2, 1})) == 0);
    CHECK(alpha(Snake({1})) == 1);
}

TEST_CASE("alpha bounds and parity over all snakes up to n = 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_snake(n, [&](const Snake& s) {
            const int a = alpha(s);
            CHECK(a >= -n);
            CHECK(a <= n);
            CHECK((a - n) % 2 == 0);
        });
    }
}

TEST_CASE("standardize") {
    CHECK(standardize({2, -1, 5}) == SignedPermutation({2, -1, 3}));
    CHECK(standardize({2, -1}) == SignedPermutation({2, -1}));
    CHECK(standardize({2, -1, 5, 4}) == SignedPermutation({2, -1, 4, 3}));
    CHECK(standardize({}) == SignedPermutation(std::vector<int>{}));
    CHECK_THROWS_AS(standardize({3, -3}), std::invalid_argument);
    CHECK_THROWS_AS(standardize({0}), std::invalid_argument);
}

TEST_CASE("standardize is idempotent and preserves snakes, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_snake(n, [&](const Snake& s) {
            const SignedPermutation once = standardize(s.entries());
            CHECK(once == s.perm());
            CHECK(standardize(once.entries()) == once);
            CHECK(is_snake(once));
        });
    }
}

TEST_CASE("text round trip") {
    const Snake s({2, -1, 5, 4, 7, -6, -3});
    CHECK(to_string(s) == "2,-1,5,4,7,-6,-3");
    CHECK(parse_signed_permutation("2,-1,5,4,7,-6,-3") == s.perm());
    CHECK(parse_signed_permutation(" 2 , -1 ") == SignedPermutation({2, -1}));
    CHECK(parse_signed_permutation("") == SignedPermutation(std::vector<int>{}));
    CHECK_THROWS_AS(parse_signed_permutation("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signed_permutation("1,"), std::invalid_argument);

    for (int n = 0; n <= 5; ++n)
        for_each_snake(n, [&](const Snake& sn) {
            CHECK(parse_signed_permutation(to_string(sn)) == sn.perm());
        });
}
