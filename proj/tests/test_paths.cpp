#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "springer/paths.hpp"

using namespace springer;

TEST_CASE("ballot path validation and heights") {
    CHECK_THROWS_AS(parse_path("d"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("udd"), std::invalid_argument);
    CHECK_THROWS_AS(parse_path("uxd"), std::invalid_argument);

    const BallotPath p = parse_path("uuudduu");
    // spec indexes steps from 1; the API is 0-based
    CHECK(p.height(4) == 1);
    CHECK(p.height(0) == 0);
    CHECK(p.height(6) == 2);
    CHECK(p.heights() == std::vector<int>{0, 1, 2, 2, 1, 1, 2});
    CHECK(p.end_height() == 3);
    CHECK_THROWS_AS(p.height(7), std::out_of_range);
}

TEST_CASE("labeled ballot path validation") {
    const BallotPath p = parse_path("uu");
    CHECK_NOTHROW(LabeledBallotPath(p, {0, 1}));
    CHECK_THROWS_AS(LabeledBallotPath(p, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledBallotPath(p, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledBallotPath(p, {0}), std::invalid_argument);
    CHECK(to_string(LabeledBallotPath(parse_path("uuudduu"), {0, 1, 1, 0, 1, 1, 2})) ==
          "uuudduu 0,1,1,0,1,1,2");
}

TEST_CASE("labeling_count") {
    CHECK(labeling_count(parse_path("uuudduu")) == 216);
    CHECK(labeling_count(parse_path("udu")) == 1);
    CHECK(labeling_count(parse_path("")) == 1);
}

TEST_CASE("labeled path enumeration counts") {
    // n=3: three ballot paths with 6, 4 and 1 labelings
    long long by_path[3] = {0, 0, 0};
    std::vector<std::string> paths;
    for_each_ballot_path(3, std::nullopt, [&](const BallotPath& p) { paths.push_back(to_string(p)); });
    CHECK(paths == std::vector<std::string>{"uuu", "uud", "udu"});
    long long total = 0;
    for_each_labeled_path(3, std::nullopt, [&](const LabeledBallotPath& lp) {
        ++total;
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (to_string(lp.path()) == paths[i]) ++by_path[i];
    });
    CHECK(total == 11);
    CHECK(by_path[0] == 6);
    CHECK(by_path[1] == 4);
    CHECK(by_path[2] == 1);

    const long long springer_list[] = {1, 1, 3, 11, 57, 361, 2763};
    for (int n = 0; n <= 6; ++n) {
        long long count = 0;
        for_each_labeled_path(n, std::nullopt, [&](const LabeledBallotPath&) { ++count; });
        CHECK(count == springer_list[n]);
    }

    long long uuudduu_labelings = 0;
    for_each_labeled_path(7, std::nullopt, [&](const LabeledBallotPath& lp) {
        if (to_string(lp.path()) == "uuudduu") ++uuudduu_labelings;
    });
    CHECK(uuudduu_labelings == 216);
}

TEST_CASE("terminal height restriction") {
    long long count = 0;
    for_each_labeled_path(1, 0, [&](const LabeledBallotPath&) { ++count; });
    CHECK(count == 0);  // parity mismatch yields an empty stream
    for_each_labeled_path(4, 6, [&](const LabeledBallotPath&) { ++count; });
    CHECK(count == 0);  // end height above n
    for_each_labeled_path(0, 0, [&](const LabeledBallotPath& lp) {
        ++count;
        CHECK(lp.size() == 0);
    });
    CHECK(count == 1);
    count = 0;
    for_each_labeled_path(4, 2, [&](const LabeledBallotPath& lp) {
        ++count;
        CHECK(lp.path().end_height() == 2);
    });
    CHECK(count > 0);
}

TEST_CASE("level code validation") {
    CHECK_NOTHROW(LevelCode({1, 2, 2}));
    CHECK_THROWS_AS(LevelCode({2}), std::invalid_argument);
    CHECK_THROWS_AS(LevelCode({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(LevelCode({1, 0}), std::invalid_argument);
}

TEST_CASE("level code enumeration") {
    std::vector<std::string> got;
    for_each_level_code(3, [&](const LevelCode& c) { got.push_back(to_string(c)); });
    CHECK(got == std::vector<std::string>{"111", "112", "121", "122", "123"});

    long long count = 0;
    for_each_level_code(0, [&](const LevelCode& c) {
        ++count;
        CHECK(c.size() == 0);
    });
    CHECK(count == 1);

    // Catalan(4) via the independent Dyck path count
    long long codes = 0, dycks = 0;
    for_each_level_code(4, [&](const LevelCode&) { ++codes; });
    for_each_ballot_path(8, 0, [&](const BallotPath&) { ++dycks; });
    CHECK(codes == 14);
    CHECK(codes == dycks);
}

TEST_CASE("level code to Dyck path and back") {
    CHECK(to_string(level_code_to_dyck(LevelCode({1, 2, 2}))) == "uududd");
    CHECK(to_string(level_code_to_dyck(LevelCode({1}))) == "ud");
    CHECK(to_string(level_code_to_dyck(LevelCode({1, 2, 3}))) == "uuuddd");

    CHECK(dyck_to_level_code(parse_path("uududd")) == LevelCode({1, 2, 2}));
    CHECK(dyck_to_level_code(parse_path("ud")) == LevelCode({1}));
    CHECK(dyck_to_level_code(parse_path("uudduudd")) == LevelCode({1, 2, 1, 2}));
    CHECK_THROWS_AS(dyck_to_level_code(parse_path("u")), std::invalid_argument);
    CHECK_THROWS_AS(dyck_to_level_code(parse_path("uu")), std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        for_each_level_code(n, [&](const LevelCode& c) {
            const BallotPath d = level_code_to_dyck(c);
            CHECK(d.size() == static_cast<std::size_t>(2 * n));
            CHECK(d.is_dyck());
            CHECK(dyck_to_level_code(d) == c);
        });
        for_each_ballot_path(2 * n, 0, [&](const BallotPath& d) {
            CHECK(level_code_to_dyck(dyck_to_level_code(d)) == d);
        }, 2 * n);
    }
}

TEST_CASE("labeling count equals the squared level code product") {
    for (int n = 0; n <= 6; ++n) {
        for_each_ballot_path(2 * n, 0, [&](const BallotPath& d) {
            BigInt prod = 1;
            const LevelCode code = dyck_to_level_code(d);
            for (int v : code.values()) prod *= BigInt(v) * v;
            CHECK(labeling_count(d) == prod);
        }, 2 * n);
    }
}

TEST_CASE("path_weight") {
    CHECK(path_weight({}) == 1);
    CHECK(path_weight({Step::up}) == 1);
    CHECK(path_weight({Step::up, Step::down}) == 2);
    // a final endpoint on the axis is fine, an intermediate one is not
    CHECK(path_weight({Step::down}) == 1);
    CHECK_THROWS_AS(path_weight({Step::down, Step::up}), std::invalid_argument);
    CHECK(path_weight({Step::up, Step::up, Step::down, Step::down}) == 1 * 2 * 3 * 2);
}

TEST_CASE("path and label text round trips are exact") {
    for (int n = 0; n <= 6; ++n)
        for_each_ballot_path(n, std::nullopt, [&](const BallotPath& p) {
            CHECK(parse_path(to_string(p)) == p);
        });
    CHECK(parse_labels("0,1,1,0,1,1,2") == std::vector<int>{0, 1, 1, 0, 1, 1, 2});
    CHECK(parse_labels("") == std::vector<int>{});
    CHECK(labels_to_string({0, 1, 2}) == "0,1,2");
    CHECK_THROWS_AS(parse_labels("1,x"), std::invalid_argument);
}

TEST_CASE("level code text forms") {
    CHECK(parse_level_code("122") == LevelCode({1, 2, 2}));
    CHECK(parse_level_code("1,2,3") == LevelCode({1, 2, 3}));
    CHECK(to_string(LevelCode({1, 2, 2})) == "122");
    CHECK_THROWS_AS(parse_level_code("1a2"), std::invalid_argument);
    std::vector<int> big(12);
    for (int i = 0; i < 12; ++i) big[static_cast<std::size_t>(i)] = i + 1;
    CHECK(to_string(LevelCode(big)) == "1,2,3,4,5,6,7,8,9,10,11,12");
    CHECK(parse_level_code(to_string(LevelCode(big))) == LevelCode(big));
}
