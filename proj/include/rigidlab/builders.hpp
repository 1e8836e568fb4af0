#pragma once

#include <string>
#include <vector>

#include "rigidlab/geometry.hpp"
#include "rigidlab/graph.hpp"
#include "rigidlab/matrix.hpp"

namespace rigidlab {

/// One basis of the polynomials of degree < d, per vertex. The named bases
/// are the ones the coincidence proof uses; Custom carries an explicit
/// (invertible) coefficient matrix, rows = basis polynomials in the
/// monomial basis 1, t, ..., t^{d-1}.
struct BasisChoice {
    enum class Kind { Monomial, BarJoint, Cofactor, Custom };
    Kind kind = Kind::Monomial;
    Matrix custom;

    static BasisChoice monomial() { return {Kind::Monomial, {}}; }
    static BasisChoice bar_joint() { return {Kind::BarJoint, {}}; }
    static BasisChoice cofactor() { return {Kind::Cofactor, {}}; }
    static BasisChoice custom_basis(Matrix coeffs) { return {Kind::Custom, std::move(coeffs)}; }
};

/// Coefficient matrix of a basis choice at vertex parameter t_i:
///   Monomial: identity
///   BarJoint: row k = (t_i^{k+1} - t^{k+1})/(t_i - t)
///   Cofactor: row k = (t_i + t)^k
Matrix basis_coeff_matrix(const BasisChoice& choice, const Rational& t_i, int d);

/// A rigidity matrix: edge-labeled rows, n column blocks of uniform width,
/// and a tag recording which builder produced it.
struct RigidityMatrix {
    Matrix mat;
    std::string provenance;

    int rows() const { return mat.rows(); }
    int cols() const { return mat.cols(); }
};

/// Row (i,j): p_i - p_j in block i, p_j - p_i in block j.
RigidityMatrix bar_joint(const Graph& g, const PointConfig& p);

/// Row (i,j), i < j: p_j in block i, -p_i in block j.
RigidityMatrix hyperconnectivity(const Graph& g, const PointConfig& p);

/// Planar points; c(x,y) = (x^{d-1}, x^{d-2} y, ..., y^{d-1}).
/// Row (i,j): c(q_i - q_j) in block i, -c(q_i - q_j) in block j.
RigidityMatrix cofactor(const Graph& g, const PointConfig& q, int d);

/// Row (i,j): F^i(t_j) in block i, -F^j(t_i) in block j; evaluation by
/// Horner on each basis polynomial.
RigidityMatrix polynomial_matrix(const Graph& g, const Params& params, int d,
                                 const std::vector<BasisChoice>& bases);
RigidityMatrix polynomial_matrix(const Graph& g, const Params& params, int d,
                                 const BasisChoice& basis_for_all);

enum class AffineVariant { Lifted, Homogeneous };

/// Bipartite affine rigidity matrix of points in R^{d-1} (output blocks of
/// width d). Lifted: F^i(x) = (x - p_i, 1) on X, (x - p_i, -1) on Y.
/// Homogeneous: F^i(x) = (x, 1) everywhere.
RigidityMatrix affine_rigidity(const Graph& g, const PointConfig& p, AffineVariant variant);

/// Coefficient matrix of the affine basis at vertex v in the reference
/// basis (x_1, ..., x_{d-1}, 1).
Matrix affine_basis_matrix(AffineVariant variant, int v, const PointConfig& p,
                           const Bipartition& bip);

/// Jacobian of the rank-2k skew-symmetric parametrization
/// T(a_1,b_1,...,a_k,b_k) = sum_l (a_{l,i} b_{l,j} - a_{l,j} b_{l,i}) at the
/// given point, with rows labeled by pairs (i,j), i < j, and columns in n
/// blocks of width 2k ordered (a_{1,m}, b_{1,m}, ..., a_{k,m}, b_{k,m}).
/// Entries are the hand-differentiated partials of T.
RigidityMatrix skew_jacobian(int n, int k, const std::vector<std::vector<Rational>>& a,
                             const std::vector<std::vector<Rational>>& b);

/// The configuration p_i = (b_{1,i}, -a_{1,i}, ..., b_{k,i}, -a_{k,i}) whose
/// hyperconnectivity matrix the skew Jacobian equals.
PointConfig skew_config(int n, int k, const std::vector<std::vector<Rational>>& a,
                        const std::vector<std::vector<Rational>>& b);

/// n x (d+2 choose 2) evaluation matrix of all monomials of degree <= 2:
/// constant, then x_1..x_d, then x_a x_b in lexicographic (a <= b) order.
/// Its kernel dimension counts independent quadrics through p.
Matrix quadric_matrix(const PointConfig& p);

/// Number of linearly independent quadrics containing p.
int quadric_count(const PointConfig& p);

} // namespace rigidlab
