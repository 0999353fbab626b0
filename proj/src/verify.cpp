#include "tlp/verify.hpp"

#include <cassert>
#include <stdexcept>

namespace tlp {

ReducedSlack reduced_slack(const ClosureContext& ctx, const BitVec& a) {
    std::vector<std::uint32_t> edges = ctx.hyperedges(a);
    std::vector<int> pts = a.to_indices();
    const int nb = ctx.base_vertex_count();
    const int n = nb + int(pts.size());

    BinaryMatrix cand(2 * int(edges.size()), n);
    std::vector<std::pair<std::uint32_t, bool>> origin;
    origin.reserve(edges.size() * 2);
    int r = 0;
    for (std::uint32_t e : edges) {
        for (bool lower : {true, false}) {
            for (int j = 0; j < n; ++j) {
                int v = j < nb ? mask_sum(ctx.base_vertices()[std::size_t(j)], e)
                               : ctx.point_value(std::size_t(pts[std::size_t(j - nb)]), e);
                int s = lower ? v : 1 - v;
                assert(s == 0 || s == 1);
                if (s) cand.set(r, j, true);
            }
            origin.emplace_back(e, lower);
            ++r;
        }
    }
    auto [reduced, kept] = remove_dominated_rows(cand);

    ReducedSlack out;
    out.matrix = std::move(reduced);
    for (int k : kept) out.row_edges.push_back(origin[std::size_t(k)]);
    out.base_cols = nb;
    out.col_points = pts;
    return out;
}

bool facets_adjacent(const BinaryMatrix& m, int i, int j) {
    if (i == j) throw std::invalid_argument("facets_adjacent: equal indices");
    BitVec inter = m.row_zeros(i);
    inter &= m.row_zeros(j);
    for (int k = 0; k < m.rows(); ++k) {
        if (k == i || k == j) continue;
        if (inter.subset_of(m.row_zeros(k))) return false;
    }
    return true;
}

FacetSubmatrix facet_submatrix(const BinaryMatrix& m, int i) {
    BitVec zi = m.row_zeros(i);
    std::vector<int> cols = zi.to_indices();
    std::vector<BitVec> zeros;
    zeros.reserve(std::size_t(m.rows()));
    for (int k = 0; k < m.rows(); ++k) zeros.push_back(m.row_zeros(k));

    std::vector<int> adj;
    for (int j = 0; j < m.rows(); ++j) {
        if (j == i) continue;
        BitVec inter = zi;
        inter &= zeros[std::size_t(j)];
        bool ok = true;
        for (int k = 0; k < m.rows() && ok; ++k) {
            if (k == i || k == j) continue;
            if (inter.subset_of(zeros[std::size_t(k)])) ok = false;
        }
        if (ok) adj.push_back(j);
    }

    BinaryMatrix cand(int(adj.size()), int(cols.size()));
    for (std::size_t r = 0; r < adj.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!zeros[std::size_t(adj[r])].test(std::size_t(cols[c]))) cand.set(int(r), int(c), true);

    auto [reduced, kept] = remove_dominated_rows(cand);
    FacetSubmatrix out;
    out.matrix = std::move(reduced);
    for (int k : kept) out.source_rows.push_back(adj[std::size_t(k)]);
    out.source_cols = cols;
    return out;
}

bool TwoLevelVerifier::is_two_level(const BinaryMatrix& m,
                                    std::optional<int> max_facet_vertices) {
    const int q = m.rows();
    std::vector<BitVec> zeros;
    zeros.reserve(std::size_t(q));
    for (int i = 0; i < q; ++i) zeros.push_back(m.row_zeros(i));

    if (max_facet_vertices)
        for (int i = 0; i < q; ++i)
            if (int(zeros[std::size_t(i)].count()) > *max_facet_vertices) return false;

    if (q < d_ + 1) return false;

    std::vector<std::vector<int>> adj(std::size_t(q), std::vector<int>{});
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            BitVec inter = zeros[std::size_t(i)];
            inter &= zeros[std::size_t(j)];
            bool ok = true;
            for (int k = 0; k < q && ok; ++k) {
                if (k == i || k == j) continue;
                if (inter.subset_of(zeros[std::size_t(k)])) ok = false;
            }
            if (ok) {
                adj[std::size_t(i)].push_back(j);
                adj[std::size_t(j)].push_back(i);
            }
        }
    for (int i = 0; i < q; ++i)
        if (int(adj[std::size_t(i)].size()) < d_) return false;

    for (int i = 0; i < q; ++i) {
        std::vector<int> cols = zeros[std::size_t(i)].to_indices();
        BinaryMatrix cand(int(adj[std::size_t(i)].size()), int(cols.size()));
        for (std::size_t r = 0; r < adj[std::size_t(i)].size(); ++r) {
            const BitVec& zj = zeros[std::size_t(adj[std::size_t(i)][r])];
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!zj.test(std::size_t(cols[c]))) cand.set(int(r), int(c), true);
        }
        auto [facet, kept] = remove_dominated_rows(cand);
        ++lookups_;
        CanonicalKey key = cache_.get(facet);
        if (!prev_keys_.count(key.bytes)) return false;
    }
    return true;
}

}  // namespace tlp
