#include "rigidlab/matrix.hpp"

#include <set>
#include <sstream>

namespace rigidlab {

std::string edge_str(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

const Rational& Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw PreconditionError("matrix index out of range");
    return entries_[idx(r, c)];
}

Rational& Matrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw PreconditionError("matrix index out of range");
    return entries_[idx(r, c)];
}

void Matrix::set_row_labels(std::vector<Edge> labels) {
    if (static_cast<int>(labels.size()) != rows_)
        throw PreconditionError("row label count does not match row count");
    std::set<Edge> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != rows_)
        throw PreconditionError("row labels must be distinct");
    row_labels_ = std::move(labels);
}

void Matrix::set_block_width(int w) {
    if (w < 0 || (w > 0 && cols_ % w != 0))
        throw PreconditionError("block width must divide column count");
    block_width_ = w;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::submatrix_rows(const std::vector<int>& row_indices) const {
    Matrix s(static_cast<int>(row_indices.size()), cols_);
    for (std::size_t k = 0; k < row_indices.size(); ++k) {
        const int r = row_indices[k];
        if (r < 0 || r >= rows_) throw PreconditionError("row index out of range");
        for (int c = 0; c < cols_; ++c) s.at(static_cast<int>(k), c) = at(r, c);
    }
    s.block_width_ = block_width_;
    return s;
}

bool Matrix::same_entries(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i]) return false;
    return true;
}

std::string Matrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Pulls the next whitespace-separated token, skipping '#' comment lines.
bool next_token(std::istream& in, std::string& tok) {
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        return true;
    }
    return false;
}

long parse_count(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace

Matrix Matrix::from_text(std::istream& in) {
    std::string tok;
    if (!next_token(in, tok)) throw ParseError("empty matrix text");
    const long rows = parse_count(tok, "row count");
    if (!next_token(in, tok)) throw ParseError("missing column count");
    const long cols = parse_count(tok, "column count");
    Matrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) {
            if (!next_token(in, tok)) throw ParseError("matrix text truncated");
            m.at(static_cast<int>(r), static_cast<int>(c)) = Rational::parse(tok);
        }
    return m;
}

Matrix Matrix::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

} // namespace rigidlab
