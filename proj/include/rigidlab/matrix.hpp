#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidlab/rational.hpp"

namespace rigidlab {

/// Unordered vertex pair, stored with first < second, 1-based.
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) {
    if (i == j) throw PreconditionError("edge endpoints must differ");
    return i < j ? Edge{i, j} : Edge{j, i};
}

std::string edge_str(const Edge& e);

/// Dense matrix of exact rationals. Optionally carries row labels (edges)
/// and a column-block structure (blocks of uniform width, as in the
/// rigidity matrices where columns come in n blocks of size d).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const;
    Rational& at(int r, int c);

    bool has_row_labels() const { return !row_labels_.empty(); }
    const std::vector<Edge>& row_labels() const { return row_labels_; }
    void set_row_labels(std::vector<Edge> labels);

    int block_width() const { return block_width_; }
    int num_blocks() const { return block_width_ ? cols_ / block_width_ : 0; }
    void set_block_width(int w);

    Matrix transpose() const;
    Matrix submatrix_rows(const std::vector<int>& row_indices) const;

    bool same_entries(const Matrix& other) const;
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.same_entries(b); }

    /// Text format: first line `rows cols`, then one row per line with
    /// entries as `num/den` or bare integers. Lines starting with '#' are
    /// skipped on input.
    std::string to_text() const;
    static Matrix from_text(std::istream& in);
    static Matrix from_text(const std::string& text);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
    std::vector<Edge> row_labels_;  // empty = unlabeled
    int block_width_ = 0;           // 0 = unstructured

    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
};

} // namespace rigidlab
