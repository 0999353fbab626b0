#pragma once

#include <cstdint>
#include <vector>

#include "tlp/binary_matrix.hpp"

namespace tlp {

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

/// A 2-level polytope of dimension dim, stored as its 0/1 slack matrix
/// (facets x vertices) with a simplicial core occupying the top-left
/// (dim+1) x (dim+1) block: unit diagonal, zeros above it.
struct PolytopeRecord {
    int dim = 0;
    BinaryMatrix slack;

    int vertex_count() const { return slack.cols(); }
    int facet_count() const { return slack.rows(); }
    /// Throws std::invalid_argument when a structural invariant fails.
    void validate() const;
};

/// One facet in an embedding where facets read x(E) >= 0 (lower) or
/// x(E) <= 1. edge_mask is E as a bitmask over local coordinates
/// (bit j = coordinate j).
struct FacetForm {
    std::uint32_t edge_mask = 0;
    bool lower = true;
};

/// Full-dimensional integer embedding of a record: core vertices map to the
/// unit vectors and the origin, every facet becomes a hyperedge form, and
/// transform is the top-left dim x dim block of the slack matrix.
struct HEmbedding {
    int dim = 0;
    IntMat vertices;               // one coordinate vector per slack column
    std::vector<FacetForm> facets; // one form per slack row
    IntMat transform;
};

/// Candidate new-vertex locations over a base embedding, lifted into ambient
/// dimension dim = base.dim + 1. Points live in {1} x Z^(dim-1), sorted
/// ascending in the base-transform lexicographic order; index 0 is e_1.
struct GroundSet {
    int dim = 0;
    IntMat points;
    IntMat m_d0;  // ambient transform with zero mixing column
};

/// Unique integer solution of M x = v for lower-triangular unit-diagonal M.
IntVec solve_unimodular_lower(const IntMat& m, const IntVec& v);

/// a precedes b iff M*a lexicographically precedes M*b (non-strict).
bool lex_leq_dot(const IntVec& a, const IntVec& b, const IntMat& m);

HEmbedding h_embedding(const PolytopeRecord& rec);

GroundSet ground_set(const HEmbedding& base);

/// The 2^(dim-1) points M_d(0)^{-1} ({1} x prod {0-c_i, 1-c_i}).
IntMat tile(const IntMat& m_d0, const std::vector<int>& c);

/// All of M_d(0)^{-1} ({1} x {-1,0,1}^(dim-1)), unfiltered.
IntMat full_ground_points(const IntMat& m_d0);

/// Sum of x over the coordinates in mask.
int mask_sum(const IntVec& x, std::uint32_t mask);

/// Simplicial core of a valid slack matrix with the given first row: returns
/// (core rows, core vertices); placing them first yields the
/// lower-triangular unit-diagonal core layout. Input must be the slack
/// matrix of an actual polytope.
std::pair<std::vector<int>, std::vector<int>> find_simplicial_core(const BinaryMatrix& slack,
                                                                   int first_row);

/// Reorders rows/columns so the core found by find_simplicial_core sits
/// top-left; remaining rows/columns keep their relative order.
PolytopeRecord with_core_first(const PolytopeRecord& rec, int first_row);

}  // namespace tlp
