#include "tlp/closure.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tlp {

std::vector<std::uint32_t> valid_hyperedges(const IntMat& points, int d) {
    if (d < 1 || d > 20) throw std::invalid_argument("valid_hyperedges: dimension out of range");
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 1; m < (1u << d); ++m) {
        bool ok = true;
        for (const IntVec& p : points) {
            int v = mask_sum(p, m);
            if (v < 0 || v > 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(m);
    }
    return out;
}

ClosureContext::ClosureContext(const HEmbedding& base, IntMat ground_points)
    : d_(base.dim + 1), points_(std::move(ground_points)) {
    nmask_ = 1 << d_;
    // Base vertices lifted into the x_1 = 0 hyperplane.
    for (const IntVec& v : base.vertices) {
        IntVec u(std::size_t(d_), 0);
        u[0] = 0;
        for (int i = 0; i < base.dim; ++i) u[std::size_t(i + 1)] = v[std::size_t(i)];
        base_pts_.push_back(std::move(u));
    }
    base_masks_ = valid_hyperedges(base_pts_, d_);

    const std::size_t n = points_.size();
    val_.assign(n * std::size_t(nmask_), 0);
    for (std::size_t p = 0; p < n; ++p) {
        val_[p * std::size_t(nmask_)] = 0;
        for (std::uint32_t m = 1; m < std::uint32_t(nmask_); ++m) {
            std::uint32_t low = m & (m - 1);
            int j = std::countr_zero(m);
            long long v = val_[p * std::size_t(nmask_) + low] + points_[p][std::size_t(j)];
            assert(v >= -32768 && v <= 32767);
            val_[p * std::size_t(nmask_) + m] = std::int16_t(v);
        }
    }

    ok_.reserve(base_masks_.size());
    for (std::uint32_t m : base_masks_) {
        BitVec b(n);
        for (std::size_t p = 0; p < n; ++p) {
            int v = point_value(p, m);
            if (v == 0 || v == 1) b.set(p);
        }
        ok_.push_back(std::move(b));
    }

    std::vector<std::uint32_t> seen;
    for (const FacetForm& f : base.facets) {
        std::uint32_t m = f.edge_mask << 1;
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
        seen.push_back(m);
        Fam fam{m, BitVec(n), BitVec(n), BitVec(n)};
        for (std::size_t p = 0; p < n; ++p) {
            int v = point_value(p, m);
            if (v == -1)
                fam.neg.set(p);
            else if (v == 1)
                fam.pos.set(p);
            else if (v != 0)
                fam.bad.set(p);
        }
        fam_.push_back(std::move(fam));
    }
}

std::vector<std::uint32_t> ClosureContext::hyperedges(const BitVec& a) const {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < base_masks_.size(); ++k)
        if (a.subset_of(ok_[k])) out.push_back(base_masks_[k]);
    return out;
}

BitVec ClosureContext::cl_dch(const BitVec& a) const {
    BitVec res = BitVec::ones(points_.size());
    for (std::size_t k = 0; k < base_masks_.size(); ++k)
        if (a.subset_of(ok_[k])) res &= ok_[k];
    return res;
}

bool ClosureContext::compatible(const BitVec& a) const {
    for (const Fam& f : fam_) {
        if (a.intersects(f.bad)) return false;
        if (a.intersects(f.neg) && a.intersects(f.pos)) return false;
    }
    return true;
}

std::optional<BitVec> ClosureContext::cl(const BitVec& a) const {
    BitVec b = cl_dch(a);
    if (!compatible(b)) return std::nullopt;
    return b;
}

std::optional<BitVec> NextClosure::next() {
    const std::size_t n = ctx_->ground_size();
    switch (state_) {
        case State::done:
            return std::nullopt;
        case State::before_first: {
            auto first = ctx_->cl(BitVec(n));
            // cl of the empty set is always the proper singleton {e_1}.
            assert(first.has_value());
            cur_ = *first;
            state_ = State::active;
            return cur_;
        }
        case State::active:
            break;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        if (cur_.test(ii)) continue;
        BitVec probe = cur_;
        probe.truncate_from(ii);
        probe.set(ii);
        auto res = ctx_->cl(probe);
        BitVec b = res ? *res : BitVec::ones(n);
        BitVec fresh = b;
        fresh.and_not(cur_);
        if (fresh.any_below(ii)) continue;
        if (!res) break;  // the next closed set is Top; nothing follows it
        cur_ = b;
        return cur_;
    }
    state_ = State::done;
    return std::nullopt;
}

std::vector<BitVec> brute_force_closed_sets(const ClosureContext& ctx) {
    const std::size_t n = ctx.ground_size();
    if (n > 20) throw std::invalid_argument("brute_force_closed_sets: ground too large");
    std::set<std::string> seen;
    std::vector<BitVec> out;
    for (std::uint64_t sub = 0; sub < (1ULL << n); ++sub) {
        BitVec a(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((sub >> i) & 1ULL) a.set(i);
        auto c = ctx.cl(a);
        if (!c) continue;
        if (seen.insert(c->bytes()).second) out.push_back(*c);
    }
    std::sort(out.begin(), out.end(), [](const BitVec& a, const BitVec& b) {
        // lectic: at the first differing index, the set containing it wins
        return BitVec::lex_less(a, b);
    });
    return out;
}

}  // namespace tlp
