#include "tlp/geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tlp/verify.hpp"

namespace tlp {

void PolytopeRecord::validate() const {
    const int d = dim;
    const int m = slack.rows(), n = slack.cols();
    auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
    if (d < 1) fail("record: dimension must be positive");
    if (m < d + 1 || n < d + 1) fail("record: slack matrix smaller than the core");
    for (int i = 0; i <= d; ++i) {
        if (!slack.at(i, i)) fail("record: core diagonal entry is zero");
        for (int j = i + 1; j <= d; ++j)
            if (slack.at(i, j)) fail("record: core is not lower-triangular");
    }
    for (int i = 0; i < m; ++i)
        if (int(slack.row_zeros(i).count()) < d) fail("record: facet with fewer than dim vertices");
    for (int j = 0; j < n; ++j) {
        int z = 0;
        for (int i = 0; i < m; ++i)
            if (!slack.at(i, j)) ++z;
        if (z < d) fail("record: vertex on fewer than dim facets");
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && slack.row(j).subset_of(slack.row(i)))
                fail("record: comparable row supports");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (slack.col(a) == slack.col(b)) fail("record: duplicate vertex columns");
}

IntVec solve_unimodular_lower(const IntMat& m, const IntVec& v) {
    const std::size_t d = v.size();
    IntVec x(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        long long s = v[i];
        for (std::size_t j = 0; j < i; ++j) s -= (long long)m[i][j] * x[j];
        x[i] = int(s);
    }
    return x;
}

namespace {

IntVec apply(const IntMat& m, const IntVec& x) {
    IntVec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += (long long)m[i][j] * x[j];
        y[i] = int(s);
    }
    return y;
}

}  // namespace

bool lex_leq_dot(const IntVec& a, const IntVec& b, const IntMat& m) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_leq_dot: dimension mismatch");
    IntVec ma = apply(m, a), mb = apply(m, b);
    return ma <= mb;
}

int mask_sum(const IntVec& x, std::uint32_t mask) {
    int s = 0;
    while (mask) {
        int j = std::countr_zero(mask);
        s += x[std::size_t(j)];
        mask &= mask - 1;
    }
    return s;
}

HEmbedding h_embedding(const PolytopeRecord& rec) {
    rec.validate();
    const int d = rec.dim;
    const BinaryMatrix& s = rec.slack;
    HEmbedding emb;
    emb.dim = d;
    emb.transform.assign(std::size_t(d), IntVec(std::size_t(d), 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) emb.transform[std::size_t(i)][std::size_t(j)] = s.at(i, j);

    // Vertex j solves M x = (first d slack entries of column j).
    for (int j = 0; j < s.cols(); ++j) {
        IntVec rhs(std::size_t(d), 0);
        for (int i = 0; i < d; ++i) rhs[std::size_t(i)] = s.at(i, j);
        emb.vertices.push_back(solve_unimodular_lower(emb.transform, rhs));
    }

    // Row i contains the origin column (index d) iff its form is x(E) >= 0.
    for (int i = 0; i < s.rows(); ++i) {
        FacetForm f;
        f.lower = !s.at(i, d);
        for (int j = 0; j < d; ++j)
            if (s.at(i, j) == f.lower) f.edge_mask |= 1u << j;
        if (f.edge_mask == 0)
            throw std::invalid_argument("h_embedding: row decodes to an empty hyperedge");
        for (int j = 0; j < s.cols(); ++j) {
            int v = mask_sum(emb.vertices[std::size_t(j)], f.edge_mask);
            int slack = f.lower ? v : 1 - v;
            if (slack != int(s.at(i, j)))
                throw std::invalid_argument("h_embedding: not a 2-level slack matrix");
        }
        emb.facets.push_back(f);
    }
    return emb;
}

IntMat full_ground_points(const IntMat& m_d0) {
    const int d = int(m_d0.size());
    const int b = d - 1;
    IntMat pts;
    IntVec t(std::size_t(b), -1);
    for (;;) {
        IntVec u(std::size_t(d), 0);
        u[0] = 1;
        // M_d(0) is block diagonal: solve the base block against t.
        IntMat base(std::size_t(b), IntVec(std::size_t(b), 0));
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) base[std::size_t(i)][std::size_t(j)] = m_d0[std::size_t(i + 1)][std::size_t(j + 1)];
        IntVec x = solve_unimodular_lower(base, t);
        for (int i = 0; i < b; ++i) u[std::size_t(i + 1)] = x[std::size_t(i)];
        pts.push_back(std::move(u));
        int k = b - 1;
        while (k >= 0 && t[std::size_t(k)] == 1) t[std::size_t(k--)] = -1;
        if (k < 0) break;
        ++t[std::size_t(k)];
    }
    return pts;
}

GroundSet ground_set(const HEmbedding& base) {
    const int b = base.dim;     // base dimension
    const int d = b + 1;        // ambient dimension
    GroundSet gs;
    gs.dim = d;
    gs.m_d0.assign(std::size_t(d), IntVec(std::size_t(d), 0));
    gs.m_d0[0][0] = 1;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            gs.m_d0[std::size_t(i + 1)][std::size_t(j + 1)] = base.transform[std::size_t(i)][std::size_t(j)];

    // Distinct facet hyperedges of the base, lifted to ambient coordinates.
    std::vector<std::uint32_t> fam;
    for (const FacetForm& f : base.facets) {
        std::uint32_t m = f.edge_mask << 1;
        if (std::find(fam.begin(), fam.end(), m) == fam.end()) fam.push_back(m);
    }

    // Walk t in {-1,0,1}^b in lexicographic order; points come out sorted.
    IntVec t(std::size_t(b), -1);
    for (;;) {
        bool lex_ok = true;  // e_1 precedes u iff t >= 0 lexicographically
        for (int i = 0; i < b; ++i) {
            if (t[std::size_t(i)] > 0) break;
            if (t[std::size_t(i)] < 0) {
                lex_ok = false;
                break;
            }
        }
        if (lex_ok) {
            IntVec u(std::size_t(d), 0);
            u[0] = 1;
            IntVec x = solve_unimodular_lower(base.transform, t);
            for (int i = 0; i < b; ++i) u[std::size_t(i + 1)] = x[std::size_t(i)];
            bool inc_ok = true;
            for (std::uint32_t m : fam) {
                int v = mask_sum(u, m);
                if (v < -1 || v > 1) {
                    inc_ok = false;
                    break;
                }
            }
            if (inc_ok) gs.points.push_back(std::move(u));
        }
        int k = b - 1;
        while (k >= 0 && t[std::size_t(k)] == 1) t[std::size_t(k--)] = -1;
        if (k < 0) break;
        ++t[std::size_t(k)];
    }
    return gs;
}

IntMat tile(const IntMat& m_d0, const std::vector<int>& c) {
    const int d = int(m_d0.size());
    const int b = d - 1;
    if (int(c.size()) != b) throw std::invalid_argument("tile: bad offset length");
    IntMat base(std::size_t(b), IntVec(std::size_t(b), 0));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) base[std::size_t(i)][std::size_t(j)] = m_d0[std::size_t(i + 1)][std::size_t(j + 1)];
    IntMat pts;
    for (std::uint32_t sel = 0; sel < (1u << b); ++sel) {
        IntVec t(std::size_t(b), 0);
        for (int i = 0; i < b; ++i) t[std::size_t(i)] = int((sel >> i) & 1) - c[std::size_t(i)];
        IntVec u(std::size_t(d), 0);
        u[0] = 1;
        IntVec x = solve_unimodular_lower(base, t);
        for (int i = 0; i < b; ++i) u[std::size_t(i + 1)] = x[std::size_t(i)];
        pts.push_back(std::move(u));
    }
    return pts;
}

std::pair<std::vector<int>, std::vector<int>> find_simplicial_core(const BinaryMatrix& slack,
                                                                   int first_row) {
    if (slack.rows() == 2) {
        // 1-polytope: a 2x2 permutation of the identity.
        int other_row = 1 - first_row;
        int v1 = slack.at(first_row, 0) ? 0 : 1;
        if (!slack.at(first_row, v1) || !slack.at(other_row, 1 - v1))
            throw std::invalid_argument("find_simplicial_core: not a segment slack matrix");
        return {{first_row, other_row}, {v1, 1 - v1}};
    }
    FacetSubmatrix sub = facet_submatrix(slack, first_row);
    auto [srows, scols] = find_simplicial_core(sub.matrix, 0);
    int v1 = -1;
    for (int j = 0; j < slack.cols(); ++j)
        if (slack.at(first_row, j)) {
            v1 = j;
            break;
        }
    if (v1 < 0) throw std::invalid_argument("find_simplicial_core: facet misses no vertex");
    std::vector<int> rows{first_row}, cols{v1};
    for (int r : srows) rows.push_back(sub.source_rows[std::size_t(r)]);
    for (int c : scols) cols.push_back(sub.source_cols[std::size_t(c)]);
    return {rows, cols};
}

PolytopeRecord with_core_first(const PolytopeRecord& rec, int first_row) {
    auto [core_rows, core_cols] = find_simplicial_core(rec.slack, first_row);
    std::vector<int> row_order = core_rows, col_order = core_cols;
    std::vector<char> used_r(std::size_t(rec.slack.rows()), 0), used_c(std::size_t(rec.slack.cols()), 0);
    for (int r : core_rows) used_r[std::size_t(r)] = 1;
    for (int c : core_cols) used_c[std::size_t(c)] = 1;
    for (int i = 0; i < rec.slack.rows(); ++i)
        if (!used_r[std::size_t(i)]) row_order.push_back(i);
    for (int j = 0; j < rec.slack.cols(); ++j)
        if (!used_c[std::size_t(j)]) col_order.push_back(j);
    PolytopeRecord out{rec.dim, rec.slack.permuted(row_order, col_order)};
    out.validate();
    return out;
}

}  // namespace tlp
