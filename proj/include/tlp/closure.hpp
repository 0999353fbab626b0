#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlp/bitvec.hpp"
#include "tlp/geometry.hpp"

namespace tlp {

/// All nonempty E in [d] (as bitmasks) whose slab 0 <= x(E) <= 1 holds on
/// every given point. d must be at most 20.
std::vector<std::uint32_t> valid_hyperedges(const IntMat& points, int d);

/// Evaluation context for the composite closure operator over a fixed base
/// polytope and ground point list. The ground is normally the reduced set X;
/// tests may pass the unreduced point list instead.
///
/// Precomputed per base: for each slab valid on all base vertices, the bit
/// mask of ground points it admits; and for each base facet hyperedge, the
/// ground points where the form evaluates to -1 / +1 / outside {-1,0,1}.
class ClosureContext {
public:
    ClosureContext(const HEmbedding& base, IntMat ground_points);

    int dim() const { return d_; }
    std::size_t ground_size() const { return points_.size(); }
    const IntMat& ground_points() const { return points_; }
    const IntMat& base_vertices() const { return base_pts_; }
    int base_vertex_count() const { return int(base_pts_.size()); }

    /// Hyperedges valid on the base vertices together with the given points.
    std::vector<std::uint32_t> hyperedges(const BitVec& a) const;

    /// Ground points satisfying every slab valid on base + a. Always
    /// contains a and the point e_1 when present in the ground.
    BitVec cl_dch(const BitVec& a) const;

    /// False iff some base facet hyperedge takes value -1 on one point of a
    /// and +1 on another (or a value outside {-1,0,1} anywhere on a).
    bool compatible(const BitVec& a) const;

    /// Composite closure; nullopt is the Top sentinel (the full unreduced
    /// ground set), which never yields a 2-level polytope.
    std::optional<BitVec> cl(const BitVec& a) const;

    int point_value(std::size_t p, std::uint32_t mask) const {
        return val_[p * std::size_t(nmask_) + mask];
    }

private:
    int d_ = 0;
    int nmask_ = 0;
    IntMat points_;
    IntMat base_pts_;
    std::vector<std::uint32_t> base_masks_;  // slabs valid on the base
    std::vector<BitVec> ok_;                 // per base mask: admitted points
    struct Fam {
        std::uint32_t mask;
        BitVec neg, pos, bad;
    };
    std::vector<Fam> fam_;
    std::vector<std::int16_t> val_;  // point value per (point, mask)
};

/// Lectic cursor over the proper closed sets of a context, smallest first.
/// The first result is cl of the empty set; Top results are skipped.
class NextClosure {
public:
    explicit NextClosure(const ClosureContext& ctx) : ctx_(&ctx) {}

    /// Next proper closed set, or nullopt once exhausted.
    std::optional<BitVec> next();

private:
    const ClosureContext* ctx_;
    BitVec cur_;
    enum class State { before_first, active, done } state_ = State::before_first;
};

/// Test oracle: closures of all subsets, deduplicated, in lectic order.
/// Ground size must be at most 20.
std::vector<BitVec> brute_force_closed_sets(const ClosureContext& ctx);

}  // namespace tlp
