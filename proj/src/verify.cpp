#include "rigidlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>

#include "rigidlab/linalg.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab::verify {

using ojson = nlohmann::ordered_json;

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::ProbabilisticPass: return "probabilistic-pass";
    }
    return "?";
}

ojson CheckReport::to_json() const {
    ojson j;
    j["name"] = name;
    j["inputs"] = inputs;
    j["status"] = status_name(status);
    j["details"] = details;
    return j;
}

namespace {

ojson edges_json(const std::vector<Edge>& edges) {
    ojson a = ojson::array();
    for (const Edge& e : edges) a.push_back(edge_str(e));
    return a;
}

std::optional<std::pair<int, int>> first_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::make_pair(-1, -1);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return std::make_pair(r, c);
    return std::nullopt;
}

// Records one bit-exact comparison; a mismatch becomes the fail witness.
bool expect_same(const Matrix& got, const Matrix& want, const std::string& what, ojson& details) {
    const auto diff = first_diff(got, want);
    if (!diff) {
        details["identities"].push_back(what);
        return true;
    }
    ojson w;
    w["identity"] = what;
    if (diff->first < 0) {
        w["mismatch"] = "shape";
    } else {
        w["row"] = diff->first;
        w["col"] = diff->second;
        w["got"] = got.at(diff->first, diff->second).str();
        w["want"] = want.at(diff->first, diff->second).str();
    }
    details["witness"] = w;
    return false;
}

std::vector<Rational> edge_scalars(const Graph& g,
                                   const std::function<Rational(const Edge&)>& f) {
    std::vector<Rational> s;
    s.reserve(g.edge_count());
    for (const Edge& e : g.edges()) s.push_back(f(e));
    return s;
}

int binom2(int k) { return k * (k - 1) / 2; }

} // namespace

CheckReport check_scaling_invariance(const PointConfig& p, const std::vector<Rational>& alphas,
                                     const Matrix& l) {
    const int n = p.n(), d = p.d();
    if (static_cast<int>(alphas.size()) != n)
        throw PreconditionError("need one scalar per point");
    for (const Rational& a : alphas)
        if (a.is_zero()) throw PreconditionError("zero alpha");
    if (l.rows() != d || l.cols() != d)
        throw PreconditionError("linear map must be d x d");
    if (linalg::rank(l) < d) throw PreconditionError("singular linear map");

    CheckReport rep;
    rep.name = "scaling_invariance";
    rep.inputs = {{"n", n}, {"d", d}};

    // q_i = alpha_i * l(p_i)
    std::vector<std::vector<Rational>> qpts(n, std::vector<Rational>(d));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < d; ++r) {
            Rational acc = 0;
            for (int c = 0; c < d; ++c) acc += l.at(r, c) * p.point(i + 1)[c];
            qpts[i][r] = alphas[i] * acc;
        }
    const PointConfig q(d, std::move(qpts));

    const Graph g = Graph::complete(n);
    const RigidityMatrix hp = hyperconnectivity(g, p);
    const RigidityMatrix hq = hyperconnectivity(g, q);

    const std::vector<Rational> row_scale = edge_scalars(
        g, [&](const Edge& e) { return alphas[e.first - 1] * alphas[e.second - 1]; });
    const Matrix lt = l.transpose();
    std::vector<Matrix> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i) {
        Matrix b = lt;
        const Rational inv = alphas[i].inverse();
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) b.at(r, c) *= inv;
        blocks.push_back(std::move(b));
    }
    const Matrix lhs =
        linalg::multiply(linalg::scale_rows(hp.mat, row_scale), linalg::block_diagonal(blocks));

    if (!expect_same(lhs, hq.mat, "H(q) == D * H(p) * C", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    if (n <= 5) {
        const LinearMatroid m1(hp), m2(hq);
        const CompareVerdict v = matroids_equal(m1, m2, CompareMode::exhaustive());
        rep.details["exhaustive_matroid_equal"] = v.holds;
        if (!v.holds) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"subset", edges_json(*v.witness)},
                                      {"ranks", {v.rank_left, v.rank_right}}};
            return rep;
        }
    }
    rep.status = CheckStatus::Pass;
    return rep;
}

CheckReport check_coincidence(const Params& params, int d) {
    const int n = params.n();
    if (n < 2) throw PreconditionError("coincidence check needs n >= 2");
    if (d < 1) throw PreconditionError("coincidence check needs d >= 1");
    Params::make(params.t);

    CheckReport rep;
    rep.name = "coincidence";
    rep.inputs = {{"n", n}, {"d", d}};
    ojson tlist = ojson::array();
    for (const Rational& t : params.t) tlist.push_back(t.str());
    rep.inputs["t"] = tlist;

    const Graph g = Graph::complete(n);
    auto t_of = [&](int v) { return params.t[v - 1]; };

    // (a) moment-curve bar-joint vs bar-joint bases
    const RigidityMatrix r_mc = bar_joint(g, moment_curve(d, params));
    const RigidityMatrix p_bj = polynomial_matrix(g, params, d, BasisChoice::bar_joint());
    const std::vector<Rational> s_a =
        edge_scalars(g, [&](const Edge& e) { return t_of(e.first) - t_of(e.second); });
    if (!expect_same(linalg::scale_rows(p_bj.mat, s_a), r_mc.mat,
                     "R(moment) == (t_i - t_j) * P(barjoint bases)", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    // (b) parabola cofactor vs cofactor bases
    const PointConfig par = parabola(params);
    const RigidityMatrix c_par = cofactor(g, par, d);
    const RigidityMatrix p_cf = polynomial_matrix(g, params, d, BasisChoice::cofactor());
    const std::vector<Rational> s_b = edge_scalars(g, [&](const Edge& e) {
        return pow(t_of(e.first) - t_of(e.second), static_cast<unsigned long>(d - 1));
    });
    if (!expect_same(linalg::scale_rows(p_cf.mat, s_b), c_par.mat,
                     "C_d(parabola) == (t_i - t_j)^{d-1} * P(cofactor bases)", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    // (b') per-entry product identity on the parabola
    for (const Edge& e : g.edges()) {
        const Rational dx = par.point(e.first)[0] - par.point(e.second)[0];
        const Rational dy = par.point(e.first)[1] - par.point(e.second)[1];
        const Rational dt = t_of(e.first) - t_of(e.second);
        const Rational st = t_of(e.first) + t_of(e.second);
        for (int k = 1; k <= d; ++k) {
            const Rational lhs = pow(dx, static_cast<unsigned long>(d - k)) *
                                 pow(dy, static_cast<unsigned long>(k - 1));
            const Rational rhs = pow(dt, static_cast<unsigned long>(d - 1)) *
                                 pow(st, static_cast<unsigned long>(k - 1));
            if (lhs != rhs) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"identity", "parabola entry product"},
                                          {"edge", edge_str(e)},
                                          {"k", k},
                                          {"lhs", lhs.str()},
                                          {"rhs", rhs.str()}};
                return rep;
            }
        }
    }
    rep.details["identities"].push_back("parabola per-entry product identity");

    // (c) monomial hyperconnectivity vs monomial bases (exact equality)
    const RigidityMatrix h_mon = hyperconnectivity(g, monomial_vectors(d, params));
    const RigidityMatrix p_mon = polynomial_matrix(g, params, d, BasisChoice::monomial());
    if (!expect_same(p_mon.mat, h_mon.mat, "H(monomial) == P(monomial bases)", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    // Change of basis between every pair: P_to = P_from * blockdiag(C_i),
    // C_i = (A_i^T)^{-1} B_i^T solved from the two coefficient matrices.
    const std::vector<std::pair<BasisChoice, const RigidityMatrix*>> forms = {
        {BasisChoice::bar_joint(), &p_bj},
        {BasisChoice::cofactor(), &p_cf},
        {BasisChoice::monomial(), &p_mon}};
    for (std::size_t from = 0; from < forms.size(); ++from)
        for (std::size_t to = 0; to < forms.size(); ++to) {
            if (from == to) continue;
            std::vector<Matrix> blocks;
            blocks.reserve(n);
            bool invertible = true;
            for (int i = 1; i <= n; ++i) {
                const Matrix a = basis_coeff_matrix(forms[from].first, t_of(i), d);
                const Matrix b = basis_coeff_matrix(forms[to].first, t_of(i), d);
                const Matrix cb = linalg::multiply(linalg::inverse(a.transpose()), b.transpose());
                if (linalg::rank(cb) < d) invertible = false;
                blocks.push_back(cb);
            }
            if (!invertible) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"identity", "change of basis"},
                                          {"error", "non-invertible change-of-basis block"}};
                return rep;
            }
            const Matrix lhs =
                linalg::multiply(forms[from].second->mat, linalg::block_diagonal(blocks));
            if (!expect_same(lhs, forms[to].second->mat, "change of basis " +
                                 std::to_string(from) + "->" + std::to_string(to),
                             rep.details)) {
                rep.status = CheckStatus::Fail;
                return rep;
            }
        }

    // Rescaling equivalence of the two hyperconnectivity embeddings; only
    // meaningful when every t_i is nonzero.
    const bool rescale = params.all_nonzero();
    rep.details["rescaling_checked"] = rescale;
    if (rescale) {
        const RigidityMatrix h_mc = hyperconnectivity(g, moment_curve(d, params));
        const std::vector<Rational> rs =
            edge_scalars(g, [&](const Edge& e) { return t_of(e.first) * t_of(e.second); });
        std::vector<Matrix> blocks;
        for (int i = 1; i <= n; ++i) {
            Matrix b = Matrix::identity(d);
            const Rational inv = t_of(i).inverse();
            for (int r = 0; r < d; ++r) b.at(r, r) = inv;
            blocks.push_back(std::move(b));
        }
        const Matrix lhs = linalg::multiply(linalg::scale_rows(h_mon.mat, rs),
                                            linalg::block_diagonal(blocks));
        if (!expect_same(lhs, h_mc.mat, "H(moment) == D * H(monomial) * C", rep.details)) {
            rep.status = CheckStatus::Fail;
            return rep;
        }
    }

    rep.status = CheckStatus::Pass;
    return rep;
}

namespace {

// Span dimension helpers for the bipartite checks.
Matrix part_matrix(const PointConfig& p, const std::vector<int>& part) {
    Matrix m(static_cast<int>(part.size()), p.d());
    for (std::size_t r = 0; r < part.size(); ++r)
        for (int c = 0; c < p.d(); ++c) m.at(static_cast<int>(r), c) = p.point(part[r])[c];
    return m;
}

Matrix homogenized_part_matrix(const PointConfig& p, const std::vector<int>& part) {
    Matrix m(static_cast<int>(part.size()), p.d() + 1);
    for (std::size_t r = 0; r < part.size(); ++r) {
        for (int c = 0; c < p.d(); ++c) m.at(static_cast<int>(r), c) = p.point(part[r])[c];
        m.at(static_cast<int>(r), p.d()) = 1;
    }
    return m;
}

} // namespace

CheckReport check_bipartite_rank(int n1, int n2, int d, const PointConfig& p,
                                 BipartiteTheory theory) {
    const int n = n1 + n2;
    if (p.n() != n || p.d() != d)
        throw PreconditionError("configuration must have n1+n2 points in R^d");
    const Graph g = Graph::complete_bipartite(n1, n2);
    std::vector<int> xs(n1), ys(n2);
    for (int i = 0; i < n1; ++i) xs[i] = i + 1;
    for (int j = 0; j < n2; ++j) ys[j] = n1 + j + 1;
    const int mn = std::min(n1, n2);

    CheckReport rep;
    rep.name = theory == BipartiteTheory::H ? "bipartite_rank_H" : "bipartite_rank_R";
    rep.inputs = {{"n1", n1}, {"n2", n2}, {"d", d}};

    if (theory == BipartiteTheory::H) {
        if (!general_position(p, PositionMode::Linear))
            throw PreconditionError("points not in linear general position");
        const LinearMatroid m(hyperconnectivity(g, p));
        const int expected = mn <= d ? n1 * n2 : d * n - d * d;
        rep.details["rank"] = m.full_rank();
        rep.details["expected"] = expected;
        if (m.full_rank() != expected) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"subset", "full edge set"},
                                      {"rank", m.full_rank()},
                                      {"expected", expected}};
            return rep;
        }
        if (mn <= d) {
            if (!m.is_independent(g.edges())) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = "full edge set not independent";
                return rep;
            }
            rep.details["independent"] = true;
        } else {
            // Lower bound: K_{d,d} plus one-by-one attachment to d previous
            // vertices of the other side.
            std::vector<Edge> constr;
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j) constr.push_back(make_edge(i, n1 + j));
            for (int i = d + 1; i <= n1; ++i)
                for (int j = 1; j <= d; ++j) constr.push_back(make_edge(i, n1 + j));
            for (int j = d + 1; j <= n2; ++j)
                for (int i = 1; i <= d; ++i) constr.push_back(make_edge(i, n1 + j));
            if (static_cast<int>(constr.size()) != d * n - d * d ||
                !m.is_independent(constr)) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"construction_size", constr.size()},
                                          {"rank", m.rank_of(constr)}};
                return rep;
            }
            rep.details["lower_bound_construction"] = "independent";

            // Upper bound: tensor products of part-wise linear dependences
            // are orthogonal to every column.
            const Matrix lx = linalg::left_nullspace_basis(part_matrix(p, xs));
            const Matrix ly = linalg::left_nullspace_basis(part_matrix(p, ys));
            if (lx.rows() != n1 - d || ly.rows() != n2 - d) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"dependences_x", lx.rows()},
                                          {"dependences_y", ly.rows()}};
                return rep;
            }
            Matrix kernel(lx.rows() * ly.rows(), n1 * n2);
            int idx = 0;
            for (int a = 0; a < lx.rows(); ++a)
                for (int b = 0; b < ly.rows(); ++b) {
                    // Edge order is lexicographic: (i, n1+j) with i outer.
                    for (int i = 0; i < n1; ++i)
                        for (int j = 0; j < n2; ++j)
                            kernel.at(idx, i * n2 + j) = lx.at(a, i) * ly.at(b, j);
                    ++idx;
                }
            const Matrix prod = linalg::multiply(kernel, m.rows());
            for (int r = 0; r < prod.rows(); ++r)
                for (int c = 0; c < prod.cols(); ++c)
                    if (!prod.at(r, c).is_zero()) {
                        rep.status = CheckStatus::Fail;
                        rep.details["witness"] = {{"kernel_vector", r},
                                                  {"column", c},
                                                  {"value", prod.at(r, c).str()}};
                        return rep;
                    }
            const int kr = linalg::rank(kernel);
            rep.details["tensor_kernel_vectors"] = kernel.rows();
            rep.details["tensor_kernel_rank"] = kr;
            if (kr != (n1 - d) * (n2 - d)) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = "tensor kernel vectors not independent";
                return rep;
            }
        }
    } else {
        const LinearMatroid m(bar_joint(g, p));
        rep.details["rank"] = m.full_rank();
        if (mn <= d) {
            const int rx = linalg::rank(homogenized_part_matrix(p, xs));
            const int ry = linalg::rank(homogenized_part_matrix(p, ys));
            if (rx != n1 || ry != n2)
                throw PreconditionError("a part is not affinely independent");
            rep.details["expected"] = n1 * n2;
            if (m.full_rank() != n1 * n2 || !m.is_independent(g.edges())) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"rank", m.full_rank()}, {"expected", n1 * n2}};
                return rep;
            }
        } else {
            const int rx = linalg::rank(homogenized_part_matrix(p, xs));
            const int ry = linalg::rank(homogenized_part_matrix(p, ys));
            if (rx != d + 1 || ry != d + 1)
                throw PreconditionError("a part does not affinely span R^d");
            const int quadrics = quadric_count(p);
            const int expected = n * d - binom2(d + 1) - quadrics;
            rep.details["quadrics"] = quadrics;
            rep.details["expected"] = expected;
            if (m.full_rank() != expected) {
                rep.status = CheckStatus::Fail;
                rep.details["witness"] = {{"rank", m.full_rank()}, {"expected", expected}};
                return rep;
            }
        }
    }
    rep.status = CheckStatus::Pass;
    return rep;
}

CheckReport check_bipartite_general_rank(const PointConfig& p, const Bipartition& bip) {
    if (bip.n() != p.n()) throw PreconditionError("bipartition does not match configuration");
    const int n1 = static_cast<int>(bip.x.size());
    const int n2 = static_cast<int>(bip.y.size());
    if (n1 == 0 || n2 == 0) throw PreconditionError("bipartition side is empty");
    std::vector<Edge> edges;
    for (int i : bip.x)
        for (int j : bip.y) edges.push_back(make_edge(i, j));
    Graph g(p.n(), std::move(edges));
    g.set_bipartition(bip);

    const LinearMatroid m(hyperconnectivity(g, p));
    const int d1 = linalg::rank(part_matrix(p, bip.x));
    const int d2 = linalg::rank(part_matrix(p, bip.y));
    const int expected = n1 * n2 - (n1 - d1) * (n2 - d2);

    CheckReport rep;
    rep.name = "bipartite_general_rank";
    rep.inputs = {{"n1", n1}, {"n2", n2}, {"d", p.d()}};
    rep.details = {{"d1", d1}, {"d2", d2}, {"rank", m.full_rank()}, {"expected", expected}};
    if (m.full_rank() != expected) {
        rep.status = CheckStatus::Fail;
        rep.details["witness"] = {{"rank", m.full_rank()}, {"expected", expected}};
        return rep;
    }
    rep.status = CheckStatus::Pass;
    return rep;
}

CheckReport check_bipartite_coincidence(const PointConfig& p, const Bipartition& bip,
                                        const CompareMode& mode, bool probe_corollary,
                                        std::uint64_t probe_seed) {
    if (bip.n() != p.n()) throw PreconditionError("bipartition does not match configuration");
    if (!p.points_distinct()) throw PreconditionError("points must be distinct");
    const int d = p.d() + 1;
    std::vector<Edge> edges;
    for (int i : bip.x)
        for (int j : bip.y) edges.push_back(make_edge(i, j));
    Graph g(p.n(), std::move(edges));
    g.set_bipartition(bip);

    CheckReport rep;
    rep.name = "bipartite_coincidence";
    rep.inputs = {{"n1", bip.x.size()}, {"n2", bip.y.size()}, {"d", d}};

    const RigidityMatrix bj = bar_joint(g, lift_bipartite(p, bip));
    const RigidityMatrix hyp = hyperconnectivity(g, homogenize(p));
    const LinearMatroid m1(bj), m2(hyp);
    const CompareVerdict v = matroids_equal(m1, m2, mode);
    rep.details["subsets_exhaustive"] = v.exhaustive;
    if (!v.holds) {
        rep.status = CheckStatus::Fail;
        rep.details["witness"] = {{"subset", edges_json(*v.witness)},
                                  {"rank_barjoint", v.rank_left},
                                  {"rank_hyper", v.rank_right}};
        return rep;
    }
    rep.details["subset_ranks_equal"] = true;

    // The proof mechanism, bit-exactly.
    const RigidityMatrix a_hom = affine_rigidity(g, p, AffineVariant::Homogeneous);
    if (!expect_same(a_hom.mat, hyp.mat, "affine(homogeneous) == H(homogenized)", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }
    const RigidityMatrix a_lift = affine_rigidity(g, p, AffineVariant::Lifted);
    std::vector<Matrix> blocks;
    for (int vtx = 1; vtx <= p.n(); ++vtx) {
        const Matrix a = affine_basis_matrix(AffineVariant::Lifted, vtx, p, bip);
        if (linalg::rank(a) < d) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"identity", "affine change of basis"},
                                      {"error", "singular basis block"},
                                      {"vertex", vtx}};
            return rep;
        }
        blocks.push_back(a.transpose());
    }
    const Matrix lifted_via_cob = linalg::multiply(a_hom.mat, linalg::block_diagonal(blocks));
    if (!expect_same(lifted_via_cob, a_lift.mat,
                     "affine(lifted) == affine(homogeneous) * blockdiag(B_i)", rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    // Column-block and row sign flips turn the lifted affine matrix into
    // the bar-joint matrix of the lifted configuration.
    std::vector<Rational> col_signs;
    for (int vtx = 1; vtx <= p.n(); ++vtx) col_signs.push_back(bip.in_x(vtx) ? -1 : 1);
    std::vector<Rational> row_signs;
    for (const Edge& e : g.edges()) row_signs.push_back(bip.in_x(e.first) ? 1 : -1);
    const Matrix flipped =
        linalg::scale_rows(linalg::scale_col_blocks(a_lift.mat, col_signs), row_signs);
    if (!expect_same(flipped, bj.mat, "affine(lifted), signs flipped == R(lifted points)",
                     rep.details)) {
        rep.status = CheckStatus::Fail;
        return rep;
    }

    bool probabilistic = !v.exhaustive;
    if (probe_corollary) {
        probabilistic = true;
        Rng rng(probe_seed);
        const LinearMatroid mh =
            sample_matroid(BuilderKind::Hyper, g, d, rng.fork(0).next());
        const LinearMatroid mr =
            sample_matroid(BuilderKind::BarJoint, g, d, rng.fork(1).next());
        const CompareVerdict fv = freer_than(mh, mr, mode);
        rep.details["corollary_H_le_R"] = fv.holds;
        if (!fv.holds) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"subset", edges_json(*fv.witness)},
                                      {"rank_H", fv.rank_left},
                                      {"rank_R", fv.rank_right}};
            return rep;
        }
    }

    rep.status = probabilistic ? CheckStatus::ProbabilisticPass : CheckStatus::Pass;
    return rep;
}

CheckReport check_split_monotonicity(BuilderKind kind, const Graph& g, int d, SplitKind split,
                                     const SplitArgs& args, std::uint64_t seed) {
    if (kind != BuilderKind::Hyper && kind != BuilderKind::Polynomial)
        throw PreconditionError("split monotonicity is stated for the H and P matroids");
    const Graph g2 = split == SplitKind::Vertex
                         ? g.vertex_split(args.v, args.a, args.b, args.c, d)
                         : g.diamond_split(args.v, args.a, args.b, args.c, d);

    Rng rng(seed);
    const GenericRankResult r1 = generic_rank(kind, g, d, 3, rng.fork(0).next());
    const GenericRankResult r2 = generic_rank(kind, g2, d, 3, rng.fork(1).next());
    const int corank1 = g.edge_count() - r1.rank;
    const int corank2 = g2.edge_count() - r2.rank;

    CheckReport rep;
    rep.name = "split_monotonicity";
    rep.inputs = {{"builder", builder_name(kind)},
                  {"d", d},
                  {"kind", split == SplitKind::Vertex ? "vertex" : "diamond"},
                  {"v", args.v},
                  {"seed", seed}};
    rep.details = {{"edges_before", g.edge_count()},
                   {"edges_after", g2.edge_count()},
                   {"rank_before", r1.rank},
                   {"rank_after", r2.rank},
                   {"corank_before", corank1},
                   {"corank_after", corank2}};
    if (corank2 > corank1) {
        rep.status = CheckStatus::Fail;
        rep.details["witness"] = {{"graph_after", g2.to_text()},
                                  {"corank_before", corank1},
                                  {"corank_after", corank2}};
        return rep;
    }
    rep.status = CheckStatus::ProbabilisticPass;
    return rep;
}

CheckReport check_random_splits(BuilderKind kind, int d, int count, std::uint64_t seed) {
    if (kind != BuilderKind::Hyper && kind != BuilderKind::Polynomial)
        throw PreconditionError("split monotonicity is stated for the H and P matroids");
    CheckReport rep;
    rep.name = "random_splits";
    rep.inputs = {{"builder", builder_name(kind)}, {"d", d}, {"count", count}, {"seed", seed}};
    Rng root(seed);
    int performed = 0;
    std::uint64_t iter = 0;
    while (performed < count) {
        Rng rng = root.fork(iter++);
        if (iter > static_cast<std::uint64_t>(count) * 50 + 1000)
            throw PreconditionError("could not generate enough eligible splits");
        const int n = static_cast<int>(rng.int_in(d + 2, d + 5));
        const Graph kn = Graph::complete(n);
        std::vector<Edge> sample;
        for (const Edge& e : kn.edges())
            if (rng.coin()) sample.push_back(e);
        if (sample.empty()) continue;
        const LinearMatroid probe = sample_matroid(kind, Graph(n, sample), d, rng.next());
        const std::vector<Edge> indep = probe.basis_of(probe.ground());
        if (indep.empty()) continue;
        const Graph g0(n, indep);

        const bool diamond = rng.coin();
        const int need = diamond ? d : d - 1;
        std::vector<int> eligible;
        for (int v = 1; v <= n; ++v)
            if (g0.degree(v) >= need) eligible.push_back(v);
        if (eligible.empty()) continue;
        const int v = eligible[rng.below(eligible.size())];
        std::vector<int> nb = g0.neighbors(v);
        // Fisher-Yates with the deterministic stream.
        for (std::size_t i = nb.size(); i > 1; --i)
            std::swap(nb[i - 1], nb[rng.below(i)]);
        SplitArgs args;
        args.v = v;
        for (int i = 0; i < need; ++i) args.b.push_back(nb[i]);
        for (std::size_t i = need; i < nb.size(); ++i)
            (rng.coin() ? args.a : args.c).push_back(nb[i]);

        const Graph g1 = diamond ? g0.diamond_split(v, args.a, args.b, args.c, d)
                                 : g0.vertex_split(v, args.a, args.b, args.c, d);
        const GenericRankResult r = generic_rank(kind, g1, d, 3, rng.next());
        if (r.rank != g1.edge_count()) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"graph_before", g0.to_text()},
                                      {"graph_after", g1.to_text()},
                                      {"kind", diamond ? "diamond" : "vertex"},
                                      {"rank", r.rank},
                                      {"edges", g1.edge_count()}};
            return rep;
        }
        ++performed;
    }
    rep.details["splits_checked"] = performed;
    rep.status = CheckStatus::ProbabilisticPass;
    return rep;
}

namespace {

bool digraph_acyclic(int n, const std::vector<int>& tail, const std::vector<int>& head) {
    std::vector<std::vector<int>> out(n + 1);
    std::vector<int> indeg(n + 1, 0);
    for (std::size_t e = 0; e < tail.size(); ++e) {
        out[tail[e]].push_back(head[e]);
        ++indeg[head[e]];
    }
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

// Cycle search in the meta-digraph whose nodes are (edge, next-connection
// kind) and whose arcs join edges sharing the required endpoint.
bool has_alternating_closed_walk(const std::vector<int>& tail, const std::vector<int>& head) {
    const int m = static_cast<int>(tail.size());
    const int nodes = 2 * m;  // 2e = HH next, 2e+1 = TT next
    std::vector<std::vector<int>> adj(nodes);
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f) {
            if (e == f) continue;
            if (head[e] == head[f]) adj[2 * e].push_back(2 * f + 1);
            if (tail[e] == tail[f]) adj[2 * e + 1].push_back(2 * f);
        }
    std::vector<int> color(nodes, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < nodes; ++s) {
        if (color[s]) continue;
        stack.emplace_back(s, 0);
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < adj[v].size()) {
                const int w = adj[v][i++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

bool h2_independent_combinatorial(const Graph& g) {
    const int m = g.edge_count();
    if (m > 20) throw PreconditionError("combinatorial test limited to |E| <= 20");
    if (m == 0) return true;
    const std::vector<Edge>& edges = g.edges();
    std::vector<int> tail(m), head(m);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int e = 0; e < m; ++e) {
            const bool flip = (mask >> e) & 1;
            tail[e] = flip ? edges[e].second : edges[e].first;
            head[e] = flip ? edges[e].first : edges[e].second;
        }
        if (!digraph_acyclic(g.n(), tail, head)) continue;
        if (!has_alternating_closed_walk(tail, head)) return true;
    }
    return false;
}

CheckReport check_h2_oracle(const Graph& g, bool all_subgraphs, std::uint64_t seed) {
    CheckReport rep;
    rep.name = "h2_oracle";
    rep.inputs = {{"n", g.n()}, {"m", g.edge_count()}, {"all_subgraphs", all_subgraphs},
                  {"seed", seed}};
    Rng rng(seed);
    if (!all_subgraphs) {
        const bool comb = h2_independent_combinatorial(g);
        const GenericRankResult r = generic_rank(BuilderKind::Hyper, g, 2, 3, rng.next());
        const bool oracle = r.rank == g.edge_count();
        rep.details = {{"combinatorial", comb}, {"rank_oracle", oracle}, {"rank", r.rank}};
        if (comb != oracle) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = g.to_text();
            return rep;
        }
        rep.status = CheckStatus::ProbabilisticPass;
        return rep;
    }

    if (g.edge_count() > 20)
        throw PreconditionError("exhaustive cross-check limited to |E| <= 20");
    std::vector<LinearMatroid> trials;
    for (int t = 0; t < 3; ++t)
        trials.push_back(sample_matroid(BuilderKind::Hyper, g, 2, rng.fork(t).next()));
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    int checked = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::vector<Edge> sub = trials[0].edges_of_mask(mask);
        const bool comb = h2_independent_combinatorial(Graph(g.n(), sub));
        int best = 0;
        for (const LinearMatroid& m : trials) best = std::max(best, m.rank_of_mask(mask));
        const bool oracle = best == static_cast<int>(sub.size());
        if (comb != oracle) {
            rep.status = CheckStatus::Fail;
            rep.details["witness"] = {{"subgraph", edges_json(sub)},
                                      {"combinatorial", comb},
                                      {"rank", best}};
            return rep;
        }
        ++checked;
    }
    rep.details["subgraphs_checked"] = checked;
    rep.status = CheckStatus::ProbabilisticPass;
    return rep;
}

Graph paper_example_graph() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
}

namespace {

bool graph_is_bipartite(const Graph& g) {
    std::vector<int> color(g.n() + 1, 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (color[s]) continue;
        color[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!color[w]) {
                    color[w] = 3 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

CheckReport probe_conjectures(int n, int d, int samples, std::uint64_t seed) {
    if (n > 13) throw PreconditionError("probe limited to n <= 13");
    if (n < 2 || d < 1) throw PreconditionError("probe needs n >= 2, d >= 1");

    CheckReport rep;
    rep.name = "probe_conjectures";
    rep.inputs = {{"n", n}, {"d", d}, {"samples", samples}, {"seed", seed}};
    rep.details["decisive"] = false;  // probes never decide a conjecture

    Rng root(seed);
    ojson rows = ojson::array();
    ojson conjecture_violations = ojson::array();
    ojson p_vs_h = ojson::array();
    bool theorem_violated = false;

    const Graph kn = Graph::complete(n);
    for (int s = 0; s < samples; ++s) {
        Rng rng = root.fork(s);
        std::vector<Edge> sample;
        for (const Edge& e : kn.edges())
            if (rng.coin()) sample.push_back(e);
        const Graph g(n, sample);
        const int rH = generic_rank(BuilderKind::Hyper, g, d, 3, rng.next()).rank;
        const int rR = generic_rank(BuilderKind::BarJoint, g, d, 3, rng.next()).rank;
        const int rC = generic_rank(BuilderKind::Cofactor, g, d, 3, rng.next()).rank;
        const int rP = generic_rank(BuilderKind::Polynomial, g, d, 3, rng.next()).rank;
        const bool bip = graph_is_bipartite(g);
        ojson row = {{"edges", g.edge_count()}, {"rank_H", rH}, {"rank_R", rR},
                     {"rank_C", rC},           {"rank_P", rP}, {"bipartite", bip}};
        rows.push_back(row);
        if (rH > rR || rR > rC) {
            ojson v = row;
            v["graph"] = edges_json(g.edges());
            conjecture_violations.push_back(v);
            // On bipartite graphs H <= R is a theorem, not a conjecture.
            if (bip && rH > rR) theorem_violated = true;
        }
        if (rP != rH) {
            ojson v = row;
            v["graph"] = edges_json(g.edges());
            p_vs_h.push_back(v);
        }
    }
    rep.details["samples"] = rows;
    rep.details["conjecture_order_violations"] = conjecture_violations;
    rep.details["p_vs_h_disagreements"] = p_vs_h;

    // Known fixtures. These are backed by theorems or cited results, so a
    // miss here fails the check.
    ojson fixtures;
    {
        const Graph kdd = Graph::complete_bipartite(d + 1, d + 1);
        Rng rng = root.fork(1000);
        const LinearMatroid mh = sample_matroid(BuilderKind::Hyper, kdd, d, rng.next());
        const LinearMatroid mp = sample_matroid(BuilderKind::Polynomial, kdd, d, rng.next());
        const bool ch = mh.is_circuit(kdd.edges());
        const bool cp = mp.is_circuit(kdd.edges());
        fixtures["K_{d+1,d+1}"] = {{"circuit_in_H", ch}, {"circuit_in_P", cp}};
        if (!ch || !cp) theorem_violated = true;
    }
    if (d >= 2) {
        const Graph kb = Graph::complete_bipartite(d + 1, binom2(d + 1));
        Rng rng = root.fork(1001);
        const int rH = generic_rank(BuilderKind::Hyper, kb, d, 3, rng.next()).rank;
        const int rR = generic_rank(BuilderKind::BarJoint, kb, d, 3, rng.next()).rank;
        const int rC = generic_rank(BuilderKind::Cofactor, kb, d, 3, rng.next()).rank;
        const int rP = generic_rank(BuilderKind::Polynomial, kb, d, 3, rng.next()).rank;
        const int nb = kb.n();
        fixtures["K_{d+1,(d+1 choose 2)}"] = {
            {"edges", kb.edge_count()}, {"rank_H", rH}, {"rank_R", rR},
            {"rank_C", rC},             {"rank_P", rP}};
        const bool ok = rR == kb.edge_count() && rC == kb.edge_count() &&
                        rH == d * nb - d * d && rP == rH;
        if (!ok) theorem_violated = true;
    }
    if (d >= 4) {
        const Graph cone67 = Graph::complete_bipartite(6, 7).cone(d - 4);
        Rng rng = root.fork(1002);
        const int rC = generic_rank(BuilderKind::Cofactor, cone67, d, 3, rng.next()).rank;
        const int rR = generic_rank(BuilderKind::BarJoint, cone67, d, 3, rng.next()).rank;
        fixtures["cone^{d-4}(K_{6,7})"] = {{"edges", cone67.edge_count()},
                                           {"rank_C", rC},
                                           {"rank_R", rR},
                                           {"basis_in_C", rC == cone67.edge_count()},
                                           {"dependent_in_R", rR < cone67.edge_count()}};
        if (rC != cone67.edge_count() || rR >= cone67.edge_count()) theorem_violated = true;
    }
    rep.details["fixtures"] = fixtures;

    if (theorem_violated) {
        rep.status = CheckStatus::Fail;
        rep.details["witness"] = "theorem-backed fixture or bipartite direction failed";
        return rep;
    }
    rep.status = CheckStatus::ProbabilisticPass;
    return rep;
}

CheckReport check_claim(BuilderKind kind, const Graph& g, int d, Predicate pred,
                        bool expect_bool, int expect_rank, std::uint64_t seed) {
    const GenericRankResult gr = generic_rank(kind, g, d, 3, seed);
    const LinearMatroid m = sample_matroid(kind, g, d, gr.achieving_seed);

    CheckReport rep;
    rep.name = "claim";
    rep.inputs = {{"builder", builder_name(kind)}, {"d", d}, {"edges", g.edge_count()},
                  {"seed", seed}};
    rep.details = {{"rank", gr.rank}, {"trials", gr.per_trial}, {"trials_agree", gr.trials_agree}};

    bool ok = false;
    switch (pred) {
        case Predicate::Independent:
            rep.inputs["predicate"] = "independent";
            ok = (gr.rank == g.edge_count()) == expect_bool;
            break;
        case Predicate::Circuit:
            rep.inputs["predicate"] = "circuit";
            ok = m.is_circuit(g.edges()) == expect_bool;
            break;
        case Predicate::Basis:
            rep.inputs["predicate"] = "basis";
            ok = m.is_basis(g.edges()) == expect_bool;
            break;
        case Predicate::Spanning:
            rep.inputs["predicate"] = "spanning";
            ok = m.is_spanning(g.edges()) == expect_bool;
            break;
        case Predicate::Rank:
            rep.inputs["predicate"] = "rank";
            rep.inputs["expect"] = expect_rank;
            ok = gr.rank == expect_rank;
            break;
    }
    if (!ok) {
        rep.status = CheckStatus::Fail;
        rep.details["witness"] = {{"graph", edges_json(g.edges())},
                                  {"rank", gr.rank},
                                  {"edge_count", g.edge_count()}};
        return rep;
    }
    rep.status = CheckStatus::ProbabilisticPass;
    return rep;
}

} // namespace rigidlab::verify
