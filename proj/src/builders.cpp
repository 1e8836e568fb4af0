#include "rigidlab/builders.hpp"

#include <sstream>

#include "rigidlab/linalg.hpp"

namespace rigidlab {

namespace {

Rational horner(const Matrix& coeffs, int row, const Rational& t) {
    Rational acc = 0;
    for (int c = coeffs.cols() - 1; c >= 0; --c) acc = acc * t + coeffs.at(row, c);
    return acc;
}

void require_one_point_per_vertex(const Graph& g, const PointConfig& p) {
    if (p.n() != g.n())
        throw PreconditionError("configuration must have one point per vertex");
}

Matrix edge_block_matrix(const Graph& g, int d) {
    Matrix m(g.edge_count(), g.n() * d);
    m.set_row_labels(g.edges());
    m.set_block_width(d);
    return m;
}

std::string tag(const std::string& name, const Graph& g, int d) {
    std::ostringstream out;
    out << name << "(n=" << g.n() << ",m=" << g.edge_count() << ",d=" << d << ")";
    return out.str();
}

} // namespace

Matrix basis_coeff_matrix(const BasisChoice& choice, const Rational& t_i, int d) {
    if (d < 1) throw PreconditionError("basis needs d >= 1");
    switch (choice.kind) {
        case BasisChoice::Kind::Monomial:
            return Matrix::identity(d);
        case BasisChoice::Kind::BarJoint: {
            // (t_i^{k+1} - t^{k+1})/(t_i - t) = sum_{m<=k} t_i^{k-m} t^m
            Matrix a(d, d);
            for (int k = 0; k < d; ++k)
                for (int m = 0; m <= k; ++m)
                    a.at(k, m) = pow(t_i, static_cast<unsigned long>(k - m));
            return a;
        }
        case BasisChoice::Kind::Cofactor: {
            // (t_i + t)^k = sum_m C(k,m) t_i^{k-m} t^m
            Matrix a(d, d);
            for (int k = 0; k < d; ++k) {
                Int binom = 1;
                for (int m = 0; m <= k; ++m) {
                    a.at(k, m) = Rational(binom) * pow(t_i, static_cast<unsigned long>(k - m));
                    binom = binom * (k - m) / (m + 1);
                }
            }
            return a;
        }
        case BasisChoice::Kind::Custom: {
            if (choice.custom.rows() != d || choice.custom.cols() != d)
                throw PreconditionError("custom basis matrix must be d x d");
            if (linalg::rank(choice.custom) < d)
                throw PreconditionError("custom basis matrix is singular");
            return choice.custom;
        }
    }
    throw PreconditionError("unknown basis kind");
}

RigidityMatrix bar_joint(const Graph& g, const PointConfig& p) {
    require_one_point_per_vertex(g, p);
    const int d = p.d();
    Matrix m = edge_block_matrix(g, d);
    int r = 0;
    for (const Edge& e : g.edges()) {
        const auto& pi = p.point(e.first);
        const auto& pj = p.point(e.second);
        for (int c = 0; c < d; ++c) {
            m.at(r, (e.first - 1) * d + c) = pi[c] - pj[c];
            m.at(r, (e.second - 1) * d + c) = pj[c] - pi[c];
        }
        ++r;
    }
    return {std::move(m), tag("bar_joint", g, d)};
}

RigidityMatrix hyperconnectivity(const Graph& g, const PointConfig& p) {
    require_one_point_per_vertex(g, p);
    const int d = p.d();
    Matrix m = edge_block_matrix(g, d);
    int r = 0;
    for (const Edge& e : g.edges()) {
        const auto& pi = p.point(e.first);
        const auto& pj = p.point(e.second);
        for (int c = 0; c < d; ++c) {
            m.at(r, (e.first - 1) * d + c) = pj[c];
            m.at(r, (e.second - 1) * d + c) = -pi[c];
        }
        ++r;
    }
    return {std::move(m), tag("hyperconnectivity", g, d)};
}

RigidityMatrix cofactor(const Graph& g, const PointConfig& q, int d) {
    require_one_point_per_vertex(g, q);
    if (q.d() != 2) throw PreconditionError("cofactor requires planar points");
    if (d < 1) throw PreconditionError("cofactor needs d >= 1");
    if (!q.points_distinct())
        throw PreconditionError("cofactor requires pairwise distinct points");
    Matrix m = edge_block_matrix(g, d);
    int r = 0;
    for (const Edge& e : g.edges()) {
        const Rational x = q.point(e.first)[0] - q.point(e.second)[0];
        const Rational y = q.point(e.first)[1] - q.point(e.second)[1];
        // c(x,y)_k = x^{d-k} y^{k-1}, k = 1..d
        for (int k = 1; k <= d; ++k) {
            const Rational v = pow(x, static_cast<unsigned long>(d - k)) *
                               pow(y, static_cast<unsigned long>(k - 1));
            m.at(r, (e.first - 1) * d + (k - 1)) = v;
            m.at(r, (e.second - 1) * d + (k - 1)) = -v;
        }
        ++r;
    }
    return {std::move(m), tag("cofactor", g, d)};
}

RigidityMatrix polynomial_matrix(const Graph& g, const Params& params, int d,
                                 const std::vector<BasisChoice>& bases) {
    if (params.n() != g.n())
        throw PreconditionError("parameter list must have one entry per vertex");
    if (static_cast<int>(bases.size()) != g.n())
        throw PreconditionError("basis list must have one entry per vertex");
    Params::make(params.t);
    std::vector<Matrix> coeff;
    coeff.reserve(g.n());
    for (int i = 0; i < g.n(); ++i)
        coeff.push_back(basis_coeff_matrix(bases[i], params.t[i], d));
    Matrix m = edge_block_matrix(g, d);
    int r = 0;
    for (const Edge& e : g.edges()) {
        const Rational& ti = params.t[e.first - 1];
        const Rational& tj = params.t[e.second - 1];
        for (int k = 0; k < d; ++k) {
            m.at(r, (e.first - 1) * d + k) = horner(coeff[e.first - 1], k, tj);
            m.at(r, (e.second - 1) * d + k) = -horner(coeff[e.second - 1], k, ti);
        }
        ++r;
    }
    return {std::move(m), tag("polynomial", g, d)};
}

RigidityMatrix polynomial_matrix(const Graph& g, const Params& params, int d,
                                 const BasisChoice& basis_for_all) {
    return polynomial_matrix(g, params, d,
                             std::vector<BasisChoice>(g.n(), basis_for_all));
}

Matrix affine_basis_matrix(AffineVariant variant, int v, const PointConfig& p,
                           const Bipartition& bip) {
    const int d = p.d() + 1;
    Matrix a = Matrix::identity(d);
    if (variant == AffineVariant::Homogeneous) return a;
    for (int k = 0; k < d - 1; ++k) a.at(k, d - 1) = -p.point(v)[k];
    if (!bip.in_x(v)) a.at(d - 1, d - 1) = -1;
    return a;
}

RigidityMatrix affine_rigidity(const Graph& g, const PointConfig& p, AffineVariant variant) {
    require_one_point_per_vertex(g, p);
    if (!g.bipartition()) throw PreconditionError("affine rigidity needs a bipartition");
    if (!g.respects_bipartition())
        throw PreconditionError("graph has an edge inside one side of the bipartition");
    const Bipartition& bip = *g.bipartition();
    const int d = p.d() + 1;
    std::vector<Matrix> coeff;
    coeff.reserve(g.n());
    for (int v = 1; v <= g.n(); ++v)
        coeff.push_back(affine_basis_matrix(variant, v, p, bip));
    Matrix m = edge_block_matrix(g, d);
    // F^v(x) = A_v (x, 1); evaluate by the matrix-vector product.
    auto eval = [&](int v, int row, int at) {
        Rational acc = 0;
        for (int c = 0; c < d - 1; ++c) acc += coeff[v - 1].at(row, c) * p.point(at)[c];
        acc += coeff[v - 1].at(row, d - 1);
        return acc;
    };
    int r = 0;
    for (const Edge& e : g.edges()) {
        for (int k = 0; k < d; ++k) {
            m.at(r, (e.first - 1) * d + k) = eval(e.first, k, e.second);
            m.at(r, (e.second - 1) * d + k) = -eval(e.second, k, e.first);
        }
        ++r;
    }
    const char* name = variant == AffineVariant::Lifted ? "affine_lifted" : "affine_homogeneous";
    return {std::move(m), tag(name, g, d)};
}

namespace {

void check_skew_inputs(int n, int k, const std::vector<std::vector<Rational>>& a,
                       const std::vector<std::vector<Rational>>& b) {
    if (n < 2) throw PreconditionError("skew Jacobian needs n >= 2");
    if (k < 1) throw PreconditionError("skew Jacobian needs k >= 1");
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k)
        throw PreconditionError("need k vectors a and k vectors b");
    for (int l = 0; l < k; ++l)
        if (static_cast<int>(a[l].size()) != n || static_cast<int>(b[l].size()) != n)
            throw PreconditionError("a and b vectors must have length n");
}

} // namespace

RigidityMatrix skew_jacobian(int n, int k, const std::vector<std::vector<Rational>>& a,
                             const std::vector<std::vector<Rational>>& b) {
    check_skew_inputs(n, k, a, b);
    const Graph g = Graph::complete(n);
    const int w = 2 * k;
    Matrix m = edge_block_matrix(g, w);
    int r = 0;
    for (const Edge& e : g.edges()) {
        const int i = e.first - 1, j = e.second - 1;
        // T_{ij} = sum_l (a_{l,i} b_{l,j} - a_{l,j} b_{l,i})
        for (int l = 0; l < k; ++l) {
            m.at(r, i * w + 2 * l) = b[l][j];       // d/d a_{l,i}
            m.at(r, i * w + 2 * l + 1) = -a[l][j];  // d/d b_{l,i}
            m.at(r, j * w + 2 * l) = -b[l][i];      // d/d a_{l,j}
            m.at(r, j * w + 2 * l + 1) = a[l][i];   // d/d b_{l,j}
        }
        ++r;
    }
    std::ostringstream t;
    t << "skew_jacobian(n=" << n << ",k=" << k << ")";
    return {std::move(m), t.str()};
}

PointConfig skew_config(int n, int k, const std::vector<std::vector<Rational>>& a,
                        const std::vector<std::vector<Rational>>& b) {
    check_skew_inputs(n, k, a, b);
    std::vector<std::vector<Rational>> pts(n, std::vector<Rational>(2 * k));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            pts[i][2 * l] = b[l][i];
            pts[i][2 * l + 1] = -a[l][i];
        }
    return PointConfig(2 * k, std::move(pts));
}

Matrix quadric_matrix(const PointConfig& p) {
    const int d = p.d();
    const int cols = 1 + d + d * (d + 1) / 2;
    Matrix m(p.n(), cols);
    for (int i = 1; i <= p.n(); ++i) {
        const auto& pt = p.point(i);
        int c = 0;
        m.at(i - 1, c++) = 1;
        for (int a = 0; a < d; ++a) m.at(i - 1, c++) = pt[a];
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) m.at(i - 1, c++) = pt[a] * pt[b];
    }
    return m;
}

int quadric_count(const PointConfig& p) {
    const Matrix m = quadric_matrix(p);
    return m.cols() - linalg::rank(m);
}

} // namespace rigidlab
