#include <doctest.h>

#include "helpers.hpp"
#include "tlp/canonical.hpp"

using namespace tlp;

namespace {

// Slack matrix of the square in core order.
BinaryMatrix square_slack() {
    return BinaryMatrix::from_strings({"1001", "0101", "0110", "1010"});
}

}  // namespace

TEST_CASE("permutation matrices share the identity's key") {
    auto key = canonical_form(BinaryMatrix::identity(3));
    CHECK(key == canonical_form(BinaryMatrix::from_strings({"010", "001", "100"})));
    CHECK(key == canonical_form(BinaryMatrix::from_strings({"001", "100", "010"})));
}

TEST_CASE("row and column classes are never exchanged") {
    auto a = BinaryMatrix::from_strings({"111", "111"});
    auto b = BinaryMatrix::from_strings({"11", "11", "11"});
    CHECK(canonical_form(a) != canonical_form(b));
    CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("triangle and square slack matrices are distinguished") {
    auto tri = BinaryMatrix::identity(3);
    auto sq = square_slack();
    CHECK(canonical_form(tri) != canonical_form(sq));
    // Same-shape cross-check against the exhaustive search: the square's
    // slack versus the 4x4 identity.
    CHECK_FALSE(testing::isomorphic_by_permutation_search(sq, BinaryMatrix::identity(4)));
    CHECK(canonical_form(sq) != canonical_form(BinaryMatrix::identity(4)));
    CHECK(testing::isomorphic_by_permutation_search(
        sq, sq.permuted({2, 0, 3, 1}, {1, 3, 0, 2})));
    CHECK(canonical_form(sq) == canonical_form(sq.permuted({2, 0, 3, 1}, {1, 3, 0, 2})));
}

TEST_CASE("isomorphism decisions match an exhaustive permutation search") {
    auto id4 = BinaryMatrix::identity(4);
    std::vector<int> rev{3, 2, 1, 0}, idp{0, 1, 2, 3};
    CHECK(are_isomorphic(id4, id4.permuted(idp, rev)));

    BinaryMatrix flipped = id4;
    flipped.set(0, 1, true);
    CHECK_FALSE(testing::isomorphic_by_permutation_search(id4, flipped));
    CHECK_FALSE(are_isomorphic(id4, flipped));

    CHECK_FALSE(are_isomorphic(BinaryMatrix::identity(3), id4));
}

TEST_CASE("keys are invariant under random shuffles") {
    for (int trial = 0; trial < 1000; ++trial) {
        int r = 1 + int(testing::rng()() % 8);
        int c = 1 + int(testing::rng()() % 8);
        BinaryMatrix m = testing::random_matrix(r, c);
        BinaryMatrix s = testing::random_shuffle_rows_cols(m);
        CHECK(canonical_form(m) == canonical_form(s));
    }
}

TEST_CASE("keys differ exactly when an exhaustive search finds no bijection") {
    int agree = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int r = 2 + int(testing::rng()() % 3);
        int c = 2 + int(testing::rng()() % 3);
        BinaryMatrix a = testing::random_matrix(r, c);
        BinaryMatrix b = testing::random_matrix(r, c);
        bool brute = testing::isomorphic_by_permutation_search(a, b);
        bool keyed = canonical_form(a) == canonical_form(b);
        CHECK(brute == keyed);
        agree += brute == keyed;
    }
    CHECK(agree == 120);
}

TEST_CASE("empty matrices are rejected") {
    CHECK_THROWS(canonical_form(BinaryMatrix(0, 3)));
    CHECK_THROWS(canonical_form(BinaryMatrix(2, 0)));
}

TEST_CASE("registry insert is idempotent") {
    CanonicalRegistry reg;
    auto key = canonical_form(BinaryMatrix::identity(2));
    CHECK(reg.insert_if_absent(key, 7));
    CHECK_FALSE(reg.insert_if_absent(key, 9));
    CHECK(reg.size() == 1);
    CHECK(reg.contains(key));
    CHECK(reg.payload(key) == std::size_t{7});
}

TEST_CASE("hex round trip") {
    auto key = canonical_form(square_slack());
    auto back = CanonicalKey::from_hex(key.hex());
    REQUIRE(back.has_value());
    CHECK(*back == key);
}

TEST_CASE("cache agrees with direct canonicalization") {
    CanonicalCache cache;
    for (int trial = 0; trial < 200; ++trial) {
        BinaryMatrix m = testing::random_matrix(5, 5);
        CHECK(cache.get(m) == canonical_form(m));
        CHECK(cache.get(testing::random_shuffle_rows_cols(m)) == canonical_form(m));
    }
}
