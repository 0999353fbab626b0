#pragma once

#include <string>
#include <vector>

#include "tlp/enumerate.hpp"
#include "tlp/geometry.hpp"

namespace tlp {

/// Face counts f_0..f_{dim-1}; satisfies the Euler relation and has
/// f_0 = vertex count, f_{dim-1} = facet count.
struct FVector {
    std::vector<long long> f;

    long long total_proper() const {
        long long s = 0;
        for (long long x : f) s += x;
        return s;
    }
};

/// Vertex sets of all proper nonempty faces: the closure system generated by
/// intersecting facet vertex sets, enumerated lectically.
std::vector<BitVec> proper_faces(const BinaryMatrix& slack);

FVector f_vector(const PolytopeRecord& rec);

struct ClassFlags {
    bool centrally_symmetric = false;
    bool polar_two_level = false;
    bool simple_vertex = false;
    bool simplicial_facet = false;
    bool suspension = false;
};

/// Every vertex column has a complementary column.
bool is_centrally_symmetric(const PolytopeRecord& rec);
/// Some vertex lies on exactly dim facets.
bool has_simple_vertex(const PolytopeRecord& rec);
/// Some facet has exactly dim vertices.
bool has_simplicial_facet(const PolytopeRecord& rec);
/// The transposed slack matrix is a known type of the same dimension.
bool is_polar_two_level(const PolytopeRecord& rec, const Database& same_dim);
/// Some facet F admits a translate of one of its faces as the opposite
/// vertex set: checked per facet row on a re-cored integer embedding.
bool is_suspension(const PolytopeRecord& rec);

ClassFlags classify(const PolytopeRecord& rec, const Database& same_dim);

/// One finding per line: the facet-vertex product bound with witnesses, and
/// the face-count comparison against 3^dim for every centrally symmetric
/// record.
std::string conjecture_report(const Database& db, const std::vector<FVector>& fvecs);

enum class StatsKind { vertices_histogram, facets_vs_vertices, suspension_table };

std::string export_stats(const Database& db, const std::vector<FVector>& fvecs,
                         const std::vector<ClassFlags>& flags, StatsKind kind);

}  // namespace tlp
