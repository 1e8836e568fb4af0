#include "rigidlab/linalg.hpp"

namespace rigidlab::linalg {

namespace {

using Grid = std::vector<std::vector<Int>>;

// Integer grid with the same rank profile as m: each row multiplied by the
// lcm of its denominators.
Grid cleared_rows(const Matrix& m) {
    Grid g(m.rows(), std::vector<Int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        Int l = 1;
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            const Rational& q = m.at(r, c);
            g[r][c] = q.num() * (l / q.den());
        }
    }
    return g;
}

// Fraction-free elimination. Returns the number of pivots; if sign is
// non-null it receives the row-swap parity (for determinants).
int bareiss(Grid& a, int* sign = nullptr) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (sign) *sign = 1;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            if (pr < 0 || mpz_cmpabs(a[i][c].get_mpz_t(), a[pr][c].get_mpz_t()) > 0) pr = i;
        }
        if (pr < 0) continue;  // column has no pivot below r
        if (pr != r) {
            std::swap(a[pr], a[r]);
            if (sign) *sign = -*sign;
        }
        const Int& piv = a[r][c];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = a[i][j] * piv - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

} // namespace

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Grid g = cleared_rows(m);
    return bareiss(g);
}

int left_nullspace_dim(const Matrix& m) { return m.rows() - rank(m); }

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    // Track the row multipliers used to clear denominators.
    Rational scale = 1;
    for (int r = 0; r < n; ++r) {
        Int l = 1;
        for (int c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        scale = scale * Rational(l);
    }
    Grid g = cleared_rows(m);
    int sign = 1;
    const int r = bareiss(g, &sign);
    if (r < n) return 0;
    // After full elimination the last pivot equals det of the integer grid.
    Rational d(g[n - 1][n - 1]);
    if (sign < 0) d = -d;
    return d / scale;
}

namespace {

// Rational reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(Matrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        const Rational inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Rational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix nullspace_basis(const Matrix& m) {
    Matrix a = m;
    const std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix basis(m.cols() - static_cast<int>(pivots.size()), m.cols());
    int k = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.at(k, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(k, pivots[i]) = -a.at(static_cast<int>(i), f);
        ++k;
    }
    return basis;
}

Matrix left_nullspace_basis(const Matrix& m) { return nullspace_basis(m.transpose()); }

Matrix scale_rows(const Matrix& m, const std::vector<Rational>& s) {
    if (static_cast<int>(s.size()) != m.rows())
        throw PreconditionError("scale_rows: scalar count must equal row count");
    for (const Rational& x : s)
        if (x.is_zero()) throw PreconditionError("scale_rows: zero scalar");
    Matrix out = m;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) *= s[r];
    return out;
}

Matrix scale_col_blocks(const Matrix& m, const std::vector<Rational>& s) {
    if (m.block_width() == 0)
        throw PreconditionError("scale_col_blocks: matrix has no block structure");
    if (static_cast<int>(s.size()) != m.num_blocks())
        throw PreconditionError("scale_col_blocks: scalar count must equal block count");
    for (const Rational& x : s)
        if (x.is_zero()) throw PreconditionError("scale_col_blocks: zero scalar");
    Matrix out = m;
    const int w = m.block_width();
    for (int b = 0; b < m.num_blocks(); ++b)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = b * w; c < (b + 1) * w; ++c) out.at(r, c) *= s[b];
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("multiply: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    int rows = 0, cols = 0;
    for (const Matrix& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    int r0 = 0, c0 = 0;
    for (const Matrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) out.at(r0 + r, c0 + c) = b.at(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of non-square matrix");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots.back() >= n)
        throw PreconditionError("matrix is singular");
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t to_fp(const Int& z, std::uint64_t p) {
    Int r = z % Int(static_cast<unsigned long>(p));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    return r.get_ui();
}

} // namespace

std::optional<int> rank_mod_p(const Matrix& m, std::uint64_t p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const std::uint64_t den = to_fp(m.at(r, c).den(), p);
            if (den == 0) return std::nullopt;
            a[r][c] = mulmod(to_fp(m.at(r, c).num(), p), powmod(den, p - 2, p), p);
        }
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pr = -1;
        for (int i = rk; i < rows; ++i)
            if (a[i][c]) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[rk]);
        const std::uint64_t inv = powmod(a[rk][c], p - 2, p);
        for (int i = rk + 1; i < rows; ++i) {
            if (!a[i][c]) continue;
            const std::uint64_t f = mulmod(a[i][c], inv, p);
            for (int j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod(f, a[rk][j], p);
                a[i][j] = (a[i][j] >= sub) ? a[i][j] - sub : a[i][j] + p - sub;
            }
        }
        ++rk;
    }
    return rk;
}

} // namespace rigidlab::linalg
