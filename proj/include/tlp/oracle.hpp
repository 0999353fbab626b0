#pragma once

#include <optional>
#include <vector>

#include "tlp/binary_matrix.hpp"
#include "tlp/canonical.hpp"

namespace tlp {

/// A finite 0/1 point set in dimension dim, input to the exact brute-force
/// hull. Test-only machinery: correctness over speed, and deliberately
/// independent of the combinatorial engine.
struct PointConfig {
    int dim = 0;
    std::vector<std::vector<long long>> points;
};

struct OracleFacet {
    std::vector<long long> normal;  // normal . x >= offset valid, tight on the facet
    long long offset = 0;
};

struct HullResult {
    bool full_dim = false;
    std::vector<OracleFacet> facets;
    std::vector<int> vertices;  // indices into the input points
};

/// Exhaustive supporting-hyperplane scan over all affinely independent
/// dim-subsets; exact integer arithmetic throughout.
HullResult facet_description(const PointConfig& cfg);

/// Slack matrix over the hull's vertices when every facet's slacks take at
/// most the two values {0, s}; nullopt when the hull is degenerate or some
/// facet sees three slack values.
std::optional<BinaryMatrix> two_level_slack(const PointConfig& cfg);

/// Canonical keys of every full-dimensional 2-level polytope with vertices
/// in {0,1}^dim, by testing all point subsets from the raw definition.
/// dim must be at most 4.
std::vector<CanonicalKey> brute_force_two_level(int dim);

}  // namespace tlp
