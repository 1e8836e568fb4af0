#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rigidlab/graph.hpp"
#include "rigidlab/matrix.hpp"

namespace rigidlab {

/// Curve parameters (t_1, ..., t_n), pairwise distinct.
struct Params {
    std::vector<Rational> t;

    static Params make(std::vector<Rational> values);
    int n() const { return static_cast<int>(t.size()); }
    bool all_nonzero() const;
};

/// n labeled points with exact rational coordinates in R^d. Coincident
/// points are permitted at the container level (monomial vectors in d = 1
/// are all equal); builders that cannot tolerate them reject them.
class PointConfig {
public:
    PointConfig() = default;
    PointConfig(int d, std::vector<std::vector<Rational>> points);

    int d() const { return d_; }
    int n() const { return static_cast<int>(pts_.size()); }
    const std::vector<Rational>& point(int i) const;  // 1-based
    const std::vector<std::vector<Rational>>& points() const { return pts_; }

    bool points_distinct() const;

    /// Rows = points, as an n x d matrix.
    Matrix as_matrix() const;

    /// Text format: line 1 `n d`; then n lines of d rationals.
    std::string to_text() const;
    static PointConfig from_text(std::istream& in);
    static PointConfig from_text(const std::string& text);

private:
    int d_ = 0;
    std::vector<std::vector<Rational>> pts_;
};

/// Point i = (t_i, t_i^2, ..., t_i^d).
PointConfig moment_curve(int d, const Params& params);

/// moment_curve with d = 2.
PointConfig parabola(const Params& params);

/// Point i = (1, t_i, ..., t_i^{d-1}).
PointConfig monomial_vectors(int d, const Params& params);

enum class PositionMode { Linear, Affine };

/// Linear mode: every min(n,d)-subset of points is linearly independent.
/// Affine mode: every min(n,d+1)-subset is affinely independent.
bool general_position(const PointConfig& p, PositionMode mode);

/// Integer coordinates uniform in [-bound, bound], resampled (at most 1000
/// attempts) until the points are distinct and in both linear and affine
/// general position. Deterministic per seed.
PointConfig random_generic(int d, int n, std::uint64_t seed, long bound);

/// n distinct integers in [-bound, bound]; deterministic per seed.
Params random_params(int n, std::uint64_t seed, long bound);

/// Appends coordinate 0 on X and 1 on Y.
PointConfig lift_bipartite(const PointConfig& p, const Bipartition& bip);

/// Appends coordinate 1 everywhere.
PointConfig homogenize(const PointConfig& p);

inline constexpr long kDefaultBound = 1L << 20;

} // namespace rigidlab
