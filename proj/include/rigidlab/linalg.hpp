#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigidlab/matrix.hpp"

namespace rigidlab::linalg {

/// Exact rank over Q: row denominators are cleared, then fraction-free
/// (Bareiss) integer elimination with partial pivoting by absolute value.
int rank(const Matrix& m);

/// rows - rank.
int left_nullspace_dim(const Matrix& m);

/// Exact determinant of a square matrix (Bareiss, sign-tracked).
Rational det(const Matrix& m);

/// Basis of the right kernel {x : Mx = 0}, one kernel vector per row of the
/// result (which is a (cols - rank) x cols matrix). Rational Gauss-Jordan.
Matrix nullspace_basis(const Matrix& m);

/// Basis of {y : y^T M = 0}, one vector per row.
Matrix left_nullspace_basis(const Matrix& m);

Matrix scale_rows(const Matrix& m, const std::vector<Rational>& s);

/// Scales column block i (of the matrix's declared block structure) by s[i].
Matrix scale_col_blocks(const Matrix& m, const std::vector<Rational>& s);

Matrix multiply(const Matrix& a, const Matrix& b);

Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Inverse of a square invertible matrix; throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Probabilistic prefilter: rank over F_p. Always <= rank over Q, equal
/// unless a pivot minor vanishes mod p. Returns nullopt when an entry's
/// denominator is divisible by p (reduction undefined). The verification
/// suite never substitutes this for the exact rank.
std::optional<int> rank_mod_p(const Matrix& m, std::uint64_t p = kDefaultPrime);

} // namespace rigidlab::linalg
