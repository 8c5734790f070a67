#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "springer/bijection.hpp"
#include "springer/triangles.hpp"

using namespace springer;

TEST_CASE("B triangle reference entries") {
    const Triangle b = Triangle::build(TriangleKind::B, 8);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(4, 2) == 28);
    CHECK(b.at(6, 2) == 662);
    CHECK(b.at(8, 2) == 24568);
    CHECK(b.at(7, 3) == 7266);
    CHECK(b.at(7, 7) == 5040);
    CHECK(b.at(5, 3) == 180);
    CHECK(b.at(6, 4) == 1320);
    CHECK(b.at(8, 4) == 83664);
    CHECK(b.at(8, 6) == 100800);
    // the recurrence forces 10920 here: 6*720 + 5*1320
    CHECK(b.at(7, 5) == 10920);
    for (int n = 0; n <= 8; ++n) CHECK(b.at(n, n) == factorial(n));
}

TEST_CASE("B row sums are the Springer numbers") {
    const Triangle b = Triangle::build(TriangleKind::B, 7);
    const long long want[] = {1, 1, 3, 11, 57, 361, 2763, 24611};
    for (int n = 0; n <= 7; ++n) CHECK(b.row_sum(n) == want[n]);
    CHECK(springer_number(5) == 361);
    CHECK(springer_number(0) == 1);
}

TEST_CASE("springer_number cross-checked against labeling counts") {
    // independent route: sum the labeling counts over all ballot paths
    for (int n : {9, 10}) {
        BigInt by_paths = 0;
        for_each_ballot_path(n, std::nullopt, [&](const BallotPath& p) {
            by_paths += labeling_count(p);
        });
        CHECK(by_paths == springer_number(n));
    }
}

TEST_CASE("parity zeros") {
    const Triangle b = Triangle::build(TriangleKind::B, 9);
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            if ((n + k) % 2 == 1) CHECK(b.at(n, k) == 0);
    CHECK(b.at(3, 9) == 0);  // out of band reads as zero
}

TEST_CASE("E triangle") {
    const Triangle e = Triangle::build(TriangleKind::E, 8);
    CHECK(e.at(0, 1) == 1);
    CHECK(e.at(1, 2) == 1);
    CHECK(e.at(2, 1) == 1);
    const long long secant[] = {1, 1, 5, 61, 1385};
    for (int n = 0; n <= 8; n += 2) CHECK(e.at(n, 1) == secant[n / 2]);
}

TEST_CASE("B equals E shifted") {
    CHECK_FALSE(b_equals_e_shift(0).has_value());
    CHECK_FALSE(b_equals_e_shift(8).has_value());
    CHECK_FALSE(b_equals_e_shift(12).has_value());
}

TEST_CASE("T triangle against the path weight oracle") {
    const Triangle t = Triangle::build(TriangleKind::T, 7);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(3, 1) == 2);
    CHECK(t.at(5, 1) == 16);
    CHECK(t.at(7, 1) == 272);
    CHECK(t.at(2, 2) == 1);
    CHECK(t.at(4, 2) == 8);

    // brute-force weight sums over step sequences from (1,1)
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            BigInt total = 0;
            const int len = n - 1;
            for (int mask = 0; mask < (1 << len); ++mask) {
                std::vector<Step> steps;
                int y = 1;
                bool valid = true;
                for (int i = 0; i < len && valid; ++i) {
                    const Step s = (mask >> i) & 1 ? Step::up : Step::down;
                    steps.push_back(s);
                    y += s == Step::up ? 1 : -1;
                    if (i + 1 < len && y < 1) valid = false;
                }
                if (!valid || y != k) continue;
                total += path_weight(steps);
            }
            CHECK(total == t.at(n, k));
        }
    }
}

TEST_CASE("row polynomial") {
    CHECK(row_polynomial(3).coefficients == std::vector<BigInt>{0, 5, 0, 6});
    CHECK(row_polynomial(0).coefficients == std::vector<BigInt>{1});
    CHECK(row_polynomial(4).coefficients == std::vector<BigInt>{5, 0, 28, 0, 24});
    CHECK(row_polynomial(4).eval_one() == 57);
}

TEST_CASE("build errors") {
    CHECK_THROWS_AS(Triangle::build(TriangleKind::B, -1), std::invalid_argument);
    CHECK_THROWS_AS(Triangle::build(TriangleKind::B, 65), std::length_error);
    CHECK_THROWS_AS(parse_triangle_kind("Q"), std::invalid_argument);
    CHECK(parse_triangle_kind("T") == TriangleKind::T);
    const Triangle b = Triangle::build(TriangleKind::B, 2);
    CHECK_THROWS_AS(b.at(3, 0), std::out_of_range);
}

TEST_CASE("csv export") {
    const Triangle b = Triangle::build(TriangleKind::B, 2);
    CHECK(b.to_csv() == "n,k,value\n0,0,1\n1,1,1\n2,0,1\n2,2,2\n");
    const Triangle t0 = Triangle::build(TriangleKind::B, 0);
    CHECK(t0.to_csv() == "n,k,value\n0,0,1\n");
    const Triangle e = Triangle::build(TriangleKind::E, 1);
    CHECK(e.to_csv() == "n,k,value\n0,1,1\n1,2,1\n");
}

TEST_CASE("json export shape") {
    const Triangle b = Triangle::build(TriangleKind::B, 1);
    CHECK(b.to_json() ==
          R"([{"entries":[{"k":0,"value":"1"}],"n":0},{"entries":[{"k":1,"value":"1"}],"n":1}])");
}
