#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "tlp/canonical.hpp"
#include "tlp/closure.hpp"

namespace tlp {

/// Slack matrix of the pair (conv(base + candidate points), slab polyhedron),
/// with support-dominated rows removed. Columns are base vertices first, then
/// the candidate's ground points in ground order. Row provenance keeps the
/// hyperedge and which side of its slab produced the row.
struct ReducedSlack {
    BinaryMatrix matrix;
    std::vector<std::pair<std::uint32_t, bool>> row_edges;  // (mask, lower side)
    int base_cols = 0;
    std::vector<int> col_points;  // ground index per non-base column
};

ReducedSlack reduced_slack(const ClosureContext& ctx, const BitVec& a);

/// Rows i and j are adjacent iff no third row's zero set contains the
/// intersection of theirs.
bool facets_adjacent(const BinaryMatrix& m, int i, int j);

/// Candidate slack matrix of the facet given by row i: rows are the
/// intersections with adjacent rows (non-incidence over the columns of
/// zeros(i)), dominated rows removed. source_rows/source_cols map back.
struct FacetSubmatrix {
    BinaryMatrix matrix;
    std::vector<int> source_rows;
    std::vector<int> source_cols;
};
FacetSubmatrix facet_submatrix(const BinaryMatrix& m, int i);

/// Combinatorial slack-matrix recognition against a complete previous
/// dimension: a reduced 0/1 matrix is accepted iff it has at least dim+1
/// rows, every row has at least dim adjacent rows, and every row's facet
/// submatrix canonicalizes to a known (dim-1)-dimensional class. The
/// optional cap rejects any row with more zeros than the given count.
class TwoLevelVerifier {
public:
    TwoLevelVerifier(int dim, std::unordered_set<std::string> prev_keys)
        : d_(dim), prev_keys_(std::move(prev_keys)) {}

    bool is_two_level(const BinaryMatrix& m,
                      std::optional<int> max_facet_vertices = std::nullopt);

    std::size_t lookups() const { return lookups_; }

private:
    int d_;
    std::unordered_set<std::string> prev_keys_;
    CanonicalCache cache_;
    std::size_t lookups_ = 0;
};

}  // namespace tlp
