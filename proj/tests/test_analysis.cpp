#include <doctest.h>

#include <map>
#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "tlp/analysis.hpp"

using namespace tlp;

namespace {

Database level(int dim) {
    static std::map<int, Database> cache;
    auto it = cache.find(dim);
    if (it != cache.end()) return it->second;
    Database db = dim == 1 ? seed_database() : enumerate_dimension(dim, level(dim - 1));
    cache[dim] = db;
    return db;
}

const PolytopeRecord& by_shape(const Database& db, int verts, int facets) {
    for (const PolytopeRecord& r : db.records)
        if (r.vertex_count() == verts && r.facet_count() == facets) return r;
    throw std::runtime_error("shape not found");
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("f-vectors of the classical solids") {
    Database l3 = level(3);
    CHECK(f_vector(by_shape(l3, 6, 8)).f == std::vector<long long>{6, 12, 8});
    CHECK(f_vector(by_shape(l3, 8, 6)).f == std::vector<long long>{8, 12, 6});
    CHECK(f_vector(by_shape(l3, 4, 4)).f == std::vector<long long>{4, 6, 4});
    CHECK(f_vector(by_shape(l3, 5, 5)).f == std::vector<long long>{5, 8, 5});
    CHECK(f_vector(by_shape(l3, 6, 5)).f == std::vector<long long>{6, 9, 5});
}

TEST_CASE("simplex f-vectors are binomial") {
    for (int d = 1; d <= 5; ++d) {
        PolytopeRecord simplex{d, BinaryMatrix::identity(d + 1)};
        FVector fv = f_vector(simplex);
        for (int i = 0; i < d; ++i) CHECK(fv.f[std::size_t(i)] == binom(d + 1, i + 1));
    }
}

TEST_CASE("f-vector computation enforces the Euler relation") {
    for (int d = 2; d <= 4; ++d)
        for (const PolytopeRecord& rec : level(d).records) CHECK_NOTHROW(f_vector(rec));
}

TEST_CASE("central symmetry") {
    Database l3 = level(3);
    CHECK(is_centrally_symmetric(by_shape(l3, 8, 6)));   // cube
    CHECK(is_centrally_symmetric(by_shape(l3, 6, 8)));   // cross-polytope
    CHECK_FALSE(is_centrally_symmetric(by_shape(l3, 4, 4)));
    CHECK(is_centrally_symmetric(PolytopeRecord{1, BinaryMatrix::identity(2)}));
    int cs3 = 0;
    for (const PolytopeRecord& r : l3.records) cs3 += is_centrally_symmetric(r);
    CHECK(cs3 == 2);
    int cs4 = 0;
    for (const PolytopeRecord& r : level(4).records) cs4 += is_centrally_symmetric(r);
    CHECK(cs4 == 4);
}

TEST_CASE("simple vertices and simplicial facets") {
    Database l3 = level(3);
    const PolytopeRecord& cross = by_shape(l3, 6, 8);
    CHECK(has_simplicial_facet(cross));
    CHECK_FALSE(has_simple_vertex(cross));  // every vertex sits on 4 facets

    int stab3 = 0, dfacet3 = 0;
    for (const PolytopeRecord& r : l3.records) {
        stab3 += has_simple_vertex(r);
        dfacet3 += has_simplicial_facet(r);
    }
    CHECK(stab3 == 4);
    CHECK(dfacet3 == 4);

    int stab4 = 0, dfacet4 = 0;
    for (const PolytopeRecord& r : level(4).records) {
        stab4 += has_simple_vertex(r);
        dfacet4 += has_simplicial_facet(r);
    }
    CHECK(stab4 == 11);
    CHECK(dfacet4 == 12);
}

TEST_CASE("polar types via the transposed slack matrix") {
    Database l3 = level(3);
    CHECK(is_polar_two_level(by_shape(l3, 4, 4), l3));  // simplex is self-polar
    CHECK(canonical_form(by_shape(l3, 8, 6).slack.transposed()) ==
          canonical_form(by_shape(l3, 6, 8).slack));  // cube and cross swap
    int polar3 = 0;
    for (const PolytopeRecord& r : l3.records) polar3 += is_polar_two_level(r, l3);
    CHECK(polar3 == 4);
    Database l4 = level(4);
    int polar4 = 0;
    for (const PolytopeRecord& r : l4.records) polar4 += is_polar_two_level(r, l4);
    CHECK(polar4 == 12);
}

TEST_CASE("suspensions") {
    Database l3 = level(3);
    CHECK(is_suspension(by_shape(l3, 4, 4)));  // simplex = pyramid over the triangle
    CHECK(is_suspension(by_shape(l3, 5, 5)));  // pyramid
    CHECK(is_suspension(by_shape(l3, 6, 5)));  // prism
    CHECK(is_suspension(by_shape(l3, 8, 6)));  // cube as a prism
    // The octahedron's opposite triangles are antipodal, not translates.
    CHECK_FALSE(is_suspension(by_shape(l3, 6, 8)));
    int s3 = 0;
    for (const PolytopeRecord& r : l3.records) s3 += is_suspension(r);
    CHECK(s3 == 4);
    int s4 = 0;
    for (const PolytopeRecord& r : level(4).records) s4 += is_suspension(r);
    CHECK(s4 == 15);
}

TEST_CASE("pyramids over every base are suspensions") {
    for (int d = 2; d <= 4; ++d)
        for (const PolytopeRecord& base : level(d).records) {
            // Cone facets keep the base slacks and contain the apex; the
            // base itself becomes the one facet missing only the apex.
            int m = base.facet_count(), n = base.vertex_count();
            BinaryMatrix s(m + 1, n + 1);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) s.set(i, j, base.slack.at(i, j));
            s.set(m, n, true);
            PolytopeRecord pyr = with_core_first(PolytopeRecord{d + 1, s}, 0);
            CHECK(is_suspension(pyr));
        }
}

TEST_CASE("polar partners have reversed f-vectors") {
    for (int d = 3; d <= 4; ++d) {
        Database db = level(d);
        for (const PolytopeRecord& rec : db.records) {
            CanonicalKey k = canonical_form(rec.slack.transposed());
            if (!db.contains(k)) continue;
            for (std::size_t q = 0; q < db.size(); ++q)
                if (db.keys[q] == k) {
                    std::vector<long long> rev = f_vector(db.records[q]).f;
                    std::reverse(rev.begin(), rev.end());
                    CHECK(f_vector(rec).f == rev);
                }
        }
    }
}

TEST_CASE("conjecture report flags nothing through dimension 4") {
    for (int d = 3; d <= 4; ++d) {
        Database db = level(d);
        std::vector<FVector> fvecs;
        for (const PolytopeRecord& r : db.records) fvecs.push_back(f_vector(r));
        std::string report = conjecture_report(db, fvecs);
        CHECK(report.find("VIOLATED") == std::string::npos);
        // cube and cross-polytope attain the bound
        std::ostringstream want;
        want << "max f0*f" << d - 1 << " = " << ((long long)d << (d + 1));
        CHECK(report.find(want.str()) != std::string::npos);
    }
}

TEST_CASE("csv exports") {
    Database db = level(3);
    std::vector<FVector> fvecs;
    std::vector<ClassFlags> flags;
    for (const PolytopeRecord& r : db.records) {
        fvecs.push_back(f_vector(r));
        flags.push_back(classify(r, db));
    }
    std::string hist = export_stats(db, fvecs, flags, StatsKind::vertices_histogram);
    CHECK(hist == "vertices,count\n4,1\n5,1\n6,2\n8,1\n");
    std::string fv = export_stats(db, fvecs, flags, StatsKind::facets_vs_vertices);
    CHECK(std::count(fv.begin(), fv.end(), '\n') == 6);  // header + 5 records
    std::string susp = export_stats(db, fvecs, flags, StatsKind::suspension_table);
    CHECK(susp == "dim,two_level,suspensions,ratio\n3,5,4,0.800\n");
}
