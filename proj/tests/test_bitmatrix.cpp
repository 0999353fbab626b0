#include <doctest.h>

#include "helpers.hpp"
#include "tlp/binary_matrix.hpp"

using namespace tlp;

TEST_CASE("support containment") {
    auto bits = [](const std::string& s) {
        BitVec b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') b.set(i);
        return b;
    };
    CHECK(support_contains(bits("1101"), bits("0101")));
    CHECK_FALSE(support_contains(bits("0101"), bits("1101")));
    CHECK(support_contains(bits("1010"), bits("1010")));
    CHECK_THROWS(support_contains(bits("101"), bits("1011")));
}

TEST_CASE("dominated row removal") {
    SUBCASE("identity untouched") {
        auto [m, kept] = remove_dominated_rows(BinaryMatrix::identity(3));
        CHECK(m == BinaryMatrix::identity(3));
        CHECK(kept == std::vector<int>{0, 1, 2});
    }
    SUBCASE("all-ones row dies") {
        auto in = BinaryMatrix::from_strings({"100", "010", "001", "111"});
        auto [m, kept] = remove_dominated_rows(in);
        CHECK(m == BinaryMatrix::identity(3));
        CHECK(kept == std::vector<int>{0, 1, 2});
    }
    SUBCASE("identical rows keep the first") {
        auto in = BinaryMatrix::from_strings({"101", "101"});
        auto [m, kept] = remove_dominated_rows(in);
        CHECK(m.rows() == 1);
        CHECK(kept == std::vector<int>{0});
        CHECK(m.at(0, 0));
        CHECK(m.at(0, 2));
    }
}

TEST_CASE("dominated row removal is idempotent and leaves an antichain") {
    for (int trial = 0; trial < 200; ++trial) {
        BinaryMatrix m = testing::random_matrix(6, 7);
        auto [r1, k1] = remove_dominated_rows(m);
        auto [r2, k2] = remove_dominated_rows(r1);
        CHECK(r1 == r2);
        for (int i = 0; i < r1.rows(); ++i)
            for (int j = 0; j < r1.rows(); ++j)
                if (i != j) CHECK_FALSE(support_contains(r1.row(i), r1.row(j)));
    }
}

TEST_CASE("dominated row removal does not depend on row order") {
    for (int trial = 0; trial < 100; ++trial) {
        BinaryMatrix m = testing::random_matrix(6, 6);
        std::vector<int> ro(6), co(6);
        std::iota(ro.begin(), ro.end(), 0);
        std::iota(co.begin(), co.end(), 0);
        std::shuffle(ro.begin(), ro.end(), testing::rng());
        BinaryMatrix shuffled = m.permuted(ro, co);
        auto [a, ka] = remove_dominated_rows(m);
        auto [b, kb] = remove_dominated_rows(shuffled);
        auto rows_of = [](const BinaryMatrix& x) {
            std::vector<std::string> v;
            for (int i = 0; i < x.rows(); ++i) v.push_back(x.row(i).bytes());
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(rows_of(a) == rows_of(b));
    }
}

TEST_CASE("zero positions per row and column") {
    auto id4 = BinaryMatrix::identity(4);
    CHECK(zeros_in_row(id4, 0) == std::vector<int>{1, 2, 3});
    CHECK(zeros_in_col(id4, 2) == std::vector<int>{0, 1, 3});
    auto ones = BinaryMatrix::from_strings({"11", "11"});
    CHECK(zeros_in_row(ones, 0).empty());
    CHECK(zeros_in_row(ones, 1).empty());
    for (int i = 0; i < 4; ++i) CHECK(zeros_in_row(id4, i).size() == 3);
    CHECK_THROWS(zeros_in_row(id4, 4));
    CHECK_THROWS(zeros_in_col(id4, -1));
}
