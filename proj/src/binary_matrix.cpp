#include "tlp/binary_matrix.hpp"

#include <stdexcept>

namespace tlp {

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[std::size_t(i)].size()) != c)
            throw std::invalid_argument("ragged row strings");
        for (int j = 0; j < c; ++j) {
            char ch = rows[std::size_t(i)][std::size_t(j)];
            if (ch != '0' && ch != '1') throw std::invalid_argument("row strings must be 0/1");
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

BitVec BinaryMatrix::col(int j) const {
    BitVec c{std::size_t(rows_)};
    for (int i = 0; i < rows_; ++i)
        if (at(i, j)) c.set(std::size_t(i));
    return c;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        r_[std::size_t(i)].for_each_set([&](std::size_t j) { t.set(int(j), i, true); });
    return t;
}

BinaryMatrix BinaryMatrix::permuted(const std::vector<int>& row_order,
                                    const std::vector<int>& col_order) const {
    BinaryMatrix m(int(row_order.size()), int(col_order.size()));
    for (std::size_t i = 0; i < row_order.size(); ++i)
        for (std::size_t j = 0; j < col_order.size(); ++j)
            if (at(row_order[i], col_order[j])) m.set(int(i), int(j), true);
    return m;
}

std::string BinaryMatrix::bytes() const {
    std::string s;
    s.reserve(8 + std::size_t(rows_) * ((std::size_t(cols_) + 63) / 8));
    s.push_back(char(rows_ & 0xff));
    s.push_back(char((rows_ >> 8) & 0xff));
    s.push_back(char(cols_ & 0xff));
    s.push_back(char((cols_ >> 8) & 0xff));
    for (int i = 0; i < rows_; ++i) s += r_[std::size_t(i)].bytes();
    return s;
}

bool support_contains(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("support_contains: length mismatch");
    return b.subset_of(a);
}

std::pair<BinaryMatrix, std::vector<int>> remove_dominated_rows(const BinaryMatrix& m) {
    std::vector<int> kept;
    for (int i = 0; i < m.rows(); ++i) {
        bool dominated = false;
        for (int j = 0; j < m.rows() && !dominated; ++j) {
            if (j == i) continue;
            if (!m.row(j).subset_of(m.row(i))) continue;
            // Equal rows: only the first occurrence survives.
            if (m.row(j) == m.row(i))
                dominated = j < i;
            else
                dominated = true;
        }
        if (!dominated) kept.push_back(i);
    }
    BinaryMatrix out(int(kept.size()), m.cols());
    for (std::size_t k = 0; k < kept.size(); ++k) out.row(int(k)) = m.row(kept[k]);
    return {std::move(out), std::move(kept)};
}

std::vector<int> zeros_in_row(const BinaryMatrix& m, int i) {
    if (i < 0 || i >= m.rows()) throw std::out_of_range("zeros_in_row: bad row index");
    return m.row_zeros(i).to_indices();
}

std::vector<int> zeros_in_col(const BinaryMatrix& m, int j) {
    if (j < 0 || j >= m.cols()) throw std::out_of_range("zeros_in_col: bad col index");
    std::vector<int> z;
    for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, j)) z.push_back(i);
    return z;
}

}  // namespace tlp
