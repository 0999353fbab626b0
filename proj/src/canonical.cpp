#include "tlp/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tlp {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string h;
    h.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        h.push_back(digits[c >> 4]);
        h.push_back(digits[c & 15]);
    }
    return h;
}

std::optional<CanonicalKey> CanonicalKey::from_hex(const std::string& h) {
    if (h.size() % 2) return std::nullopt;
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    CanonicalKey k;
    k.bytes.reserve(h.size() / 2);
    for (std::size_t i = 0; i < h.size(); i += 2) {
        int hi = nib(h[i]), lo = nib(h[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        k.bytes.push_back(char((hi << 4) | lo));
    }
    return k;
}

namespace {

// Ordered partition of the bipartite vertex set. Row vertices are 0..m-1,
// column vertices are m..m+n-1; a cell never mixes the two sides.
struct Partition {
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        for (const auto& c : cells)
            if (c.size() > 1) return false;
        return true;
    }
};

class Canonicalizer {
public:
    explicit Canonicalizer(const BinaryMatrix& m) : m_(m), cols_of_row_(), rows_of_col_() {
        for (int i = 0; i < m.rows(); ++i) cols_of_row_.push_back(m.row(i));
        BinaryMatrix t = m.transposed();
        for (int j = 0; j < m.cols(); ++j) rows_of_col_.push_back(t.row(j));
    }

    std::string run() {
        Partition p;
        std::vector<int> rows(std::size_t(m_.rows()));
        std::vector<int> cols(std::size_t(m_.cols()));
        for (int i = 0; i < m_.rows(); ++i) rows[std::size_t(i)] = i;
        for (int j = 0; j < m_.cols(); ++j) cols[std::size_t(j)] = m_.rows() + j;
        p.cells.push_back(std::move(rows));
        p.cells.push_back(std::move(cols));
        search(p);
        return best_;
    }

    std::pair<std::vector<int>, std::vector<int>> arrangement() const {
        return {best_rows_, best_cols_};
    }

private:
    bool is_row(int v) const { return v < m_.rows(); }

    // Split every cell by the member's incidence counts into all cells of the
    // opposite side; iterate to a fixpoint. Sub-cells are ordered by their
    // signatures, which is invariant under relabeling.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            // Masks of current cells, per side, aligned with cell indices.
            std::vector<BitVec> mask(p.cells.size());
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                bool rowside = is_row(p.cells[c][0]);
                BitVec b(rowside ? std::size_t(m_.rows()) : std::size_t(m_.cols()));
                for (int v : p.cells[c]) b.set(std::size_t(rowside ? v : v - m_.rows()));
                mask[c] = std::move(b);
            }
            std::vector<std::vector<int>> next;
            next.reserve(p.cells.size());
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                auto& cell = p.cells[c];
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                bool rowside = is_row(cell[0]);
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig;
                    sig.reserve(p.cells.size());
                    const BitVec& inc =
                        rowside ? cols_of_row_[std::size_t(v)] : rows_of_col_[std::size_t(v - m_.rows())];
                    for (std::size_t c2 = 0; c2 < p.cells.size(); ++c2) {
                        if (is_row(p.cells[c2][0]) == rowside) continue;
                        BitVec x = inc;
                        x &= mask[c2];
                        sig.push_back(int(x.count()));
                    }
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, members] : groups) next.push_back(std::move(members));
            }
            p.cells = std::move(next);
        }
    }

    void search(Partition p) {
        refine(p);
        int target = -1;
        for (std::size_t c = 0; c < p.cells.size(); ++c)
            if (p.cells[c].size() > 1) {
                target = int(c);
                break;
            }
        if (target < 0) {
            std::string s = serialize(p);
            if (best_.empty() || s < best_) {
                best_ = std::move(s);
                best_rows_.clear();
                best_cols_.clear();
                for (const auto& c : p.cells)
                    for (int v : c) {
                        if (is_row(v))
                            best_rows_.push_back(v);
                        else
                            best_cols_.push_back(v - m_.rows());
                    }
            }
            return;
        }
        for (int v : p.cells[std::size_t(target)]) {
            Partition child;
            child.cells.reserve(p.cells.size() + 1);
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                if (int(c) != target) {
                    child.cells.push_back(p.cells[c]);
                    continue;
                }
                child.cells.push_back({v});
                std::vector<int> rest;
                for (int u : p.cells[c])
                    if (u != v) rest.push_back(u);
                child.cells.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }

    std::string serialize(const Partition& p) const {
        std::vector<int> row_order, col_order;
        for (const auto& c : p.cells)
            for (int v : c) {
                if (is_row(v))
                    row_order.push_back(v);
                else
                    col_order.push_back(v - m_.rows());
            }
        std::string s;
        std::size_t rb = (col_order.size() + 7) / 8;
        s.resize(row_order.size() * rb, '\0');
        for (std::size_t i = 0; i < row_order.size(); ++i) {
            const BitVec& r = cols_of_row_[std::size_t(row_order[i])];
            for (std::size_t j = 0; j < col_order.size(); ++j)
                if (r.test(std::size_t(col_order[j])))
                    s[i * rb + j / 8] |= char(0x80 >> (j % 8));
        }
        return s;
    }

    const BinaryMatrix& m_;
    std::vector<BitVec> cols_of_row_;
    std::vector<BitVec> rows_of_col_;
    std::string best_;
    std::vector<int> best_rows_;
    std::vector<int> best_cols_;
};

void put_u32_be(std::string& s, std::uint32_t v) {
    s.push_back(char((v >> 24) & 0xff));
    s.push_back(char((v >> 16) & 0xff));
    s.push_back(char((v >> 8) & 0xff));
    s.push_back(char(v & 0xff));
}

}  // namespace

CanonicalKey canonical_form(const BinaryMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1)
        throw std::invalid_argument("canonical_form: empty matrix");
    Canonicalizer c(m);
    CanonicalKey key;
    put_u32_be(key.bytes, std::uint32_t(m.rows()));
    put_u32_be(key.bytes, std::uint32_t(m.cols()));
    key.bytes += c.run();
    return key;
}

std::pair<std::vector<int>, std::vector<int>> canonical_arrangement(const BinaryMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1)
        throw std::invalid_argument("canonical_arrangement: empty matrix");
    Canonicalizer c(m);
    c.run();
    return c.arrangement();
}

bool are_isomorphic(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool CanonicalRegistry::insert_if_absent(const CanonicalKey& key, std::size_t payload) {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key.bytes, payload).second;
}

bool CanonicalRegistry::contains(const CanonicalKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.count(key.bytes) > 0;
}

std::optional<std::size_t> CanonicalRegistry::payload(const CanonicalKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key.bytes);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

std::size_t CanonicalRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

namespace {

// Deterministic sort-based normal form: alternately sort rows and columns by
// bit pattern until stable. Not canonical, but any two inputs with equal
// normal forms are row/column permutations of each other.
BinaryMatrix sort_normal_form(const BinaryMatrix& m) {
    BinaryMatrix cur = m;
    for (int pass = 0; pass < 4; ++pass) {
        std::vector<int> ro(std::size_t(cur.rows()));
        for (int i = 0; i < cur.rows(); ++i) ro[std::size_t(i)] = i;
        std::sort(ro.begin(), ro.end(),
                  [&](int a, int b) { return BitVec::lex_less(cur.row(a), cur.row(b)); });
        BinaryMatrix t = cur.transposed();
        std::vector<int> co(std::size_t(cur.cols()));
        for (int j = 0; j < cur.cols(); ++j) co[std::size_t(j)] = j;
        std::sort(co.begin(), co.end(),
                  [&](int a, int b) { return BitVec::lex_less(t.row(a), t.row(b)); });
        bool ident = true;
        for (int i = 0; i < cur.rows() && ident; ++i) ident = ro[std::size_t(i)] == i;
        for (int j = 0; j < cur.cols() && ident; ++j) ident = co[std::size_t(j)] == j;
        if (ident) break;
        cur = cur.permuted(ro, co);
    }
    return cur;
}

}  // namespace

CanonicalKey CanonicalCache::get(const BinaryMatrix& m) {
    std::string nf = sort_normal_form(m).bytes();
    auto it = map_.find(nf);
    if (it != map_.end()) return it->second;
    ++misses_;
    CanonicalKey key = canonical_form(m);
    map_.emplace(std::move(nf), key);
    return key;
}

}  // namespace tlp
