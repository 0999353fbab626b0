#include "tlp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tlp {

namespace {

using Row = std::vector<long long>;

long long det(std::vector<Row> m) {
    // Bareiss fraction-free elimination; exact for integer input.
    const std::size_t n = m.size();
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n ? sign * m[n - 1][n - 1] : 1;
}

std::size_t rank(std::vector<Row> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long a = m[i][c], b = m[r][c];
            long long g = std::gcd(a, b);
            long long fi = b / g, fr = a / g;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * fi - m[r][j] * fr;
        }
        ++r;
    }
    return r;
}

std::size_t affine_rank(const std::vector<Row>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<Row> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Row d(pts[i].size(), 0);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

void next_combination_done(std::vector<int>& idx, int n, bool& done) {
    int k = int(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - k + i) --i;
    if (i < 0) {
        done = true;
        return;
    }
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
}

}  // namespace

HullResult facet_description(const PointConfig& cfg) {
    const int d = cfg.dim;
    if (d < 1 || d > 4) throw std::invalid_argument("facet_description: dimension out of range");
    const auto& pts = cfg.points;
    HullResult res;
    if (affine_rank(pts) < std::size_t(d)) return res;  // degenerate
    res.full_dim = true;

    std::set<std::pair<Row, long long>> seen;
    std::vector<int> idx(std::size_t(d), 0);
    std::iota(idx.begin(), idx.end(), 0);
    bool done = int(pts.size()) < d;
    while (!done) {
        // Normal of the hyperplane through the chosen points, via signed
        // minors of the difference matrix.
        std::vector<Row> diffs;
        for (int i = 1; i < d; ++i) {
            Row r(std::size_t(d), 0);
            for (int j = 0; j < d; ++j)
                r[std::size_t(j)] =
                    pts[std::size_t(idx[std::size_t(i)])][std::size_t(j)] -
                    pts[std::size_t(idx[0])][std::size_t(j)];
            diffs.push_back(std::move(r));
        }
        Row normal(std::size_t(d), 0);
        for (int j = 0; j < d; ++j) {
            std::vector<Row> minor;
            for (const Row& r : diffs) {
                Row mr;
                for (int c = 0; c < d; ++c)
                    if (c != j) mr.push_back(r[std::size_t(c)]);
                minor.push_back(std::move(mr));
            }
            long long dj = det(std::move(minor));
            normal[std::size_t(j)] = (j % 2 ? -dj : dj);
        }
        bool nonzero = false;
        for (long long v : normal) nonzero = nonzero || v != 0;
        if (nonzero) {
            long long g = 0;
            for (long long v : normal) g = std::gcd(g, v < 0 ? -v : v);
            for (long long& v : normal) v /= g;
            long long offset = 0;
            for (int j = 0; j < d; ++j)
                offset += normal[std::size_t(j)] * pts[std::size_t(idx[0])][std::size_t(j)];
            bool below = false, above = false;
            for (const Row& p : pts) {
                long long dot = 0;
                for (int j = 0; j < d; ++j) dot += normal[std::size_t(j)] * p[std::size_t(j)];
                if (dot < offset) below = true;
                if (dot > offset) above = true;
            }
            if (!(below && above)) {
                // Orient so normal . x >= offset holds for every point.
                Row n2 = normal;
                long long b2 = offset;
                if (below) {
                    for (long long& v : n2) v = -v;
                    b2 = -b2;
                }
                seen.insert({n2, b2});
            }
        }
        next_combination_done(idx, int(pts.size()), done);
    }

    for (const auto& [n, b] : seen) res.facets.push_back({n, b});

    // A point is a vertex iff its tight facet normals span the space.
    for (std::size_t p = 0; p < pts.size(); ++p) {
        std::vector<Row> tight;
        for (const OracleFacet& f : res.facets) {
            long long dot = 0;
            for (int j = 0; j < d; ++j) dot += f.normal[std::size_t(j)] * pts[p][std::size_t(j)];
            if (dot == f.offset) tight.push_back(f.normal);
        }
        if (rank(std::move(tight)) == std::size_t(d)) res.vertices.push_back(int(p));
    }
    return res;
}

std::optional<BinaryMatrix> two_level_slack(const PointConfig& cfg) {
    HullResult hull = facet_description(cfg);
    if (!hull.full_dim) return std::nullopt;
    const int m = int(hull.facets.size());
    const int n = int(hull.vertices.size());
    BinaryMatrix slack(m, n);
    for (int i = 0; i < m; ++i) {
        const OracleFacet& f = hull.facets[std::size_t(i)];
        std::vector<long long> vals(std::size_t(n), 0);
        long long level = 0;
        for (int j = 0; j < n; ++j) {
            const auto& p = cfg.points[std::size_t(hull.vertices[std::size_t(j)])];
            long long dot = 0;
            for (int c = 0; c < cfg.dim; ++c) dot += f.normal[std::size_t(c)] * p[std::size_t(c)];
            long long s = dot - f.offset;
            vals[std::size_t(j)] = s;
            if (s != 0) {
                if (level == 0)
                    level = s;
                else if (s != level)
                    return std::nullopt;  // a third slack value: not 2-level
            }
        }
        if (level == 0) return std::nullopt;  // facet row cannot be constant zero
        for (int j = 0; j < n; ++j)
            if (vals[std::size_t(j)]) slack.set(i, j, true);
    }
    return slack;
}

std::vector<CanonicalKey> brute_force_two_level(int dim) {
    if (dim < 1 || dim > 4) throw std::invalid_argument("brute_force_two_level: dim must be 1..4");
    const int npts = 1 << dim;
    std::vector<Row> cube;
    for (int v = 0; v < npts; ++v) {
        Row p(std::size_t(dim), 0);
        for (int j = 0; j < dim; ++j) p[std::size_t(j)] = (v >> j) & 1;
        cube.push_back(std::move(p));
    }
    std::set<std::string> keys;
    for (std::uint32_t sub = 1; sub < (1u << npts); ++sub) {
        if (std::popcount(sub) < dim + 1) continue;
        PointConfig cfg;
        cfg.dim = dim;
        for (int v = 0; v < npts; ++v)
            if ((sub >> v) & 1u) cfg.points.push_back(cube[std::size_t(v)]);
        auto slack = two_level_slack(cfg);
        if (!slack) continue;
        keys.insert(canonical_form(*slack).bytes);
    }
    std::vector<CanonicalKey> out;
    for (const std::string& b : keys) out.push_back(CanonicalKey{b});
    return out;
}

}  // namespace tlp
