#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tlp/bitvec.hpp"

namespace tlp {

/// Dense 0/1 matrix with one bit-vector per row. Immutable in spirit once
/// built; all mutation happens during construction.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), r_(rows, BitVec(std::size_t(cols))) {}

    static BinaryMatrix identity(int n);
    /// Test helper: one string of '0'/'1' per row.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int i, int j) const { return r_[std::size_t(i)].test(std::size_t(j)); }
    void set(int i, int j, bool v) {
        if (v)
            r_[std::size_t(i)].set(std::size_t(j));
        else
            r_[std::size_t(i)].reset(std::size_t(j));
    }

    const BitVec& row(int i) const { return r_[std::size_t(i)]; }
    BitVec& row(int i) { return r_[std::size_t(i)]; }
    /// Zero positions of row i (the facet's vertex set in slack semantics).
    BitVec row_zeros(int i) const { return r_[std::size_t(i)].complement(); }
    BitVec col(int j) const;

    BinaryMatrix transposed() const;
    /// Row i of the result is row row_order[i] of *this, likewise columns.
    BinaryMatrix permuted(const std::vector<int>& row_order,
                          const std::vector<int>& col_order) const;

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
    }
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

    std::string bytes() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

/// True iff the support of b is contained in the support of a.
bool support_contains(const BitVec& a, const BitVec& b);

/// Removes every row whose support strictly contains another row's support;
/// among identical rows exactly the first is kept. Returns the reduced
/// matrix and, per kept row, its index in the input.
std::pair<BinaryMatrix, std::vector<int>> remove_dominated_rows(const BinaryMatrix& m);

std::vector<int> zeros_in_row(const BinaryMatrix& m, int i);
std::vector<int> zeros_in_col(const BinaryMatrix& m, int j);

}  // namespace tlp
