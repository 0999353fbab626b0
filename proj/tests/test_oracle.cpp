#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "tlp/enumerate.hpp"
#include "tlp/oracle.hpp"

using namespace tlp;

namespace {

PointConfig cube_points(int d, std::uint32_t keep_mask) {
    PointConfig cfg;
    cfg.dim = d;
    for (int v = 0; v < (1 << d); ++v) {
        if (!((keep_mask >> v) & 1u)) continue;
        std::vector<long long> p(std::size_t(d), 0);
        for (int j = 0; j < d; ++j) p[std::size_t(j)] = (v >> j) & 1;
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

}  // namespace

TEST_CASE("hull of the unit square") {
    HullResult h = facet_description(cube_points(2, 0b1111));
    REQUIRE(h.full_dim);
    CHECK(h.facets.size() == 4);
    CHECK(h.vertices.size() == 4);
}

TEST_CASE("hull of the cube and of the cube minus a corner") {
    HullResult cube = facet_description(cube_points(3, 0xff));
    REQUIRE(cube.full_dim);
    CHECK(cube.facets.size() == 6);
    CHECK(cube.vertices.size() == 8);

    HullResult cut = facet_description(cube_points(3, 0x7f));  // drop (1,1,1)
    REQUIRE(cut.full_dim);
    CHECK(cut.facets.size() == 7);
    CHECK(cut.vertices.size() == 7);
}

TEST_CASE("degenerate configurations are reported") {
    PointConfig flat;
    flat.dim = 3;
    flat.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    CHECK_FALSE(facet_description(flat).full_dim);
    CHECK_FALSE(two_level_slack(flat).has_value());
}

TEST_CASE("interior points are not vertices") {
    PointConfig cfg;
    cfg.dim = 2;
    cfg.points = {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
    HullResult h = facet_description(cfg);
    REQUIRE(h.full_dim);
    CHECK(h.vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("slack of the cube minus a corner is not two-level") {
    CHECK_FALSE(two_level_slack(cube_points(3, 0x7f)).has_value());
    auto cube = two_level_slack(cube_points(3, 0xff));
    REQUIRE(cube.has_value());
    CHECK(cube->rows() == 6);
    CHECK(cube->cols() == 8);
}

TEST_CASE("brute force classes for tiny dimensions") {
    CHECK(brute_force_two_level(1).size() == 1);
    CHECK(brute_force_two_level(2).size() == 2);
}

TEST_CASE("brute force matches the engine in dimension 3") {
    Database db = enumerate_dimension(3, enumerate_dimension(2, seed_database()));
    auto oracle_keys = brute_force_two_level(3);
    REQUIRE(oracle_keys.size() == 5);
    std::set<std::string> engine, oracle;
    for (const CanonicalKey& k : db.keys) engine.insert(k.bytes);
    for (const CanonicalKey& k : oracle_keys) oracle.insert(k.bytes);
    CHECK(engine == oracle);
}

TEST_CASE("oracle slack matrices pass the combinatorial test") {
    Database l2 = enumerate_dimension(2, seed_database());
    TwoLevelVerifier verifier(3, l2.key_set);
    for (std::uint32_t mask : {0xffu, 0x17u, 0x7eu}) {
        auto slack = two_level_slack(cube_points(3, mask));
        if (!slack) continue;
        CHECK(verifier.is_two_level(*slack));
    }
}
