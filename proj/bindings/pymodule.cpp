#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rigidlab/linalg.hpp"
#include "rigidlab/suite.hpp"

namespace py = pybind11;
using namespace rigidlab;

namespace {

Rational to_rational(py::handle h) {
    // Accepts int (arbitrary precision), "num/den" strings, and Fraction.
    return Rational::parse(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rationals(py::iterable it) {
    std::vector<Rational> out;
    for (py::handle h : it) out.push_back(to_rational(h));
    return out;
}

Matrix to_matrix(py::iterable rows) {
    std::vector<std::vector<Rational>> grid;
    for (py::handle row : rows) grid.push_back(to_rationals(row.cast<py::iterable>()));
    const int r = static_cast<int>(grid.size());
    const int c = r ? static_cast<int>(grid[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(grid[i].size()) != c)
            throw PreconditionError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = grid[i][j];
    }
    return m;
}

py::list matrix_rows(const Matrix& m) {
    py::list rows;
    for (int r = 0; r < m.rows(); ++r) {
        py::list row;
        for (int c = 0; c < m.cols(); ++c) row.append(m.at(r, c).str());
        rows.append(row);
    }
    return rows;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object report_to_py(const verify::CheckReport& rep) {
    return json_to_py(rep.to_json());
}

BasisChoice basis_from_py(py::handle h) {
    if (py::isinstance<py::str>(h)) {
        const std::string name = h.cast<std::string>();
        if (name == "monomial") return BasisChoice::monomial();
        if (name == "barjoint") return BasisChoice::bar_joint();
        if (name == "cofactor") return BasisChoice::cofactor();
        throw PreconditionError("unknown basis '" + name + "'");
    }
    return BasisChoice::custom_basis(to_matrix(h.cast<py::iterable>()));
}

std::vector<std::vector<Rational>> nested(py::iterable rows) {
    std::vector<std::vector<Rational>> out;
    for (py::handle r : rows) out.push_back(to_rationals(r.cast<py::iterable>()));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact rigidity matrices (bar-joint, hyperconnectivity, cofactor, "
              "polynomial), their linear matroids, and the machine checks.";

    py::register_exception<ParseError>(m, "RigidlabParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Matrix>(m, "Matrix")
        .def(py::init([](py::iterable rows) { return to_matrix(rows); }))
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def("entry", [](const Matrix& m_, int r, int c) { return m_.at(r, c).str(); })
        .def("to_lists", &matrix_rows)
        .def("to_text", &Matrix::to_text)
        .def_static("from_text",
                    [](const std::string& t) { return Matrix::from_text(t); })
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& m_) {
            std::ostringstream s;
            s << "Matrix(" << m_.rows() << "x" << m_.cols() << ")";
            return s.str();
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> e(edges.begin(), edges.end());
                 return Graph(n, std::move(e));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   py::list out;
                                   for (const Edge& e : g.edges())
                                       out.append(py::make_tuple(e.first, e.second));
                                   return out;
                               })
        .def("cone", &Graph::cone, py::arg("k"))
        .def("vertex_split", &Graph::vertex_split, py::arg("v"), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def("diamond_split", &Graph::diamond_split, py::arg("v"), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def("set_bipartition",
             [](Graph& g, const std::vector<int>& x) {
                 g.set_bipartition(Bipartition::make(g.n(), x));
             })
        .def("to_text", &Graph::to_text)
        .def_static("from_text", [](const std::string& t) { return Graph::from_text(t); })
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("complete_bipartite", &Graph::complete_bipartite, py::arg("n1"),
                    py::arg("n2"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<Params>(m, "Params")
        .def(py::init([](py::iterable vals) { return Params::make(to_rationals(vals)); }))
        .def_property_readonly("t", [](const Params& p) {
            py::list out;
            for (const Rational& v : p.t) out.append(v.str());
            return out;
        });

    py::class_<PointConfig>(m, "PointConfig")
        .def(py::init([](py::iterable rows) {
            std::vector<std::vector<Rational>> pts = nested(rows);
            const int d = pts.empty() ? 0 : static_cast<int>(pts[0].size());
            return PointConfig(d, std::move(pts));
        }))
        .def_property_readonly("n", &PointConfig::n)
        .def_property_readonly("d", &PointConfig::d)
        .def("point",
             [](const PointConfig& p, int i) {
                 py::list out;
                 for (const Rational& v : p.point(i)) out.append(v.str());
                 return out;
             })
        .def("to_text", &PointConfig::to_text)
        .def_static("from_text",
                    [](const std::string& t) { return PointConfig::from_text(t); });

    py::class_<RigidityMatrix>(m, "RigidityMatrix")
        .def_readonly("matrix", &RigidityMatrix::mat)
        .def_readonly("provenance", &RigidityMatrix::provenance)
        .def_property_readonly("edges", [](const RigidityMatrix& rm) {
            py::list out;
            for (const Edge& e : rm.mat.row_labels())
                out.append(py::make_tuple(e.first, e.second));
            return out;
        });

    py::class_<LinearMatroid>(m, "LinearMatroid")
        .def(py::init([](const RigidityMatrix& rm) { return LinearMatroid(rm); }))
        .def_property_readonly("full_rank", &LinearMatroid::full_rank)
        .def_property_readonly("ground",
                               [](const LinearMatroid& mm) {
                                   py::list out;
                                   for (const Edge& e : mm.ground())
                                       out.append(py::make_tuple(e.first, e.second));
                                   return out;
                               })
        .def("rank_of", &LinearMatroid::rank_of)
        .def("corank_of", &LinearMatroid::corank_of)
        .def("is_independent", &LinearMatroid::is_independent)
        .def("is_circuit", &LinearMatroid::is_circuit)
        .def("is_spanning", &LinearMatroid::is_spanning)
        .def("is_basis", &LinearMatroid::is_basis);

    // geometry
    m.def("moment_curve", &moment_curve, py::arg("d"), py::arg("params"));
    m.def("parabola", &parabola);
    m.def("monomial_vectors", &monomial_vectors, py::arg("d"), py::arg("params"));
    m.def("random_generic", &random_generic, py::arg("d"), py::arg("n"), py::arg("seed"),
          py::arg("bound") = kDefaultBound);
    m.def("random_params", &random_params, py::arg("n"), py::arg("seed"),
          py::arg("bound") = kDefaultBound);
    m.def("lift_bipartite", [](const PointConfig& p, const std::vector<int>& x) {
        return lift_bipartite(p, Bipartition::make(p.n(), x));
    });
    m.def("homogenize", &homogenize);
    m.def("general_position", [](const PointConfig& p, const std::string& mode) {
        return general_position(p, mode == "affine" ? PositionMode::Affine
                                                    : PositionMode::Linear);
    });

    // builders
    m.def("bar_joint", &bar_joint);
    m.def("hyperconnectivity", &hyperconnectivity);
    m.def("cofactor", &cofactor, py::arg("graph"), py::arg("points"), py::arg("d"));
    m.def(
        "polynomial_matrix",
        [](const Graph& g, const Params& t, int d, py::handle basis) {
            return polynomial_matrix(g, t, d, basis_from_py(basis));
        },
        py::arg("graph"), py::arg("params"), py::arg("d"), py::arg("basis") = "monomial");
    m.def("affine_rigidity", [](const Graph& g, const PointConfig& p, const std::string& v) {
        return affine_rigidity(g, p, v == "homogeneous" ? AffineVariant::Homogeneous
                                                        : AffineVariant::Lifted);
    });
    m.def("skew_jacobian", [](int n, int k, py::iterable a, py::iterable b) {
        return skew_jacobian(n, k, nested(a), nested(b));
    });
    m.def("skew_config", [](int n, int k, py::iterable a, py::iterable b) {
        return skew_config(n, k, nested(a), nested(b));
    });
    m.def("quadric_matrix", &quadric_matrix);
    m.def("quadric_count", &quadric_count);

    // exact linear algebra
    m.def("rank", &linalg::rank);
    m.def("left_nullspace_dim", &linalg::left_nullspace_dim);
    m.def("det", [](const Matrix& mm) { return linalg::det(mm).str(); });
    m.def("multiply", &linalg::multiply);
    m.def("rank_mod_p", [](const Matrix& mm) -> py::object {
        const auto r = linalg::rank_mod_p(mm);
        if (!r) return py::none();
        return py::int_(*r);
    });

    // matroid comparisons and generic ranks
    m.def(
        "generic_rank",
        [](const std::string& builder, const Graph& g, int d, int trials,
           std::uint64_t seed) {
            const GenericRankResult r =
                generic_rank(builder_from_name(builder), g, d, trials, seed);
            py::dict out;
            out["rank"] = r.rank;
            out["achieving_seed"] = r.achieving_seed;
            out["per_trial"] = r.per_trial;
            out["trials_agree"] = r.trials_agree;
            return out;
        },
        py::arg("builder"), py::arg("graph"), py::arg("d"), py::arg("trials") = 3,
        py::arg("seed") = 42);
    m.def(
        "sample_matroid",
        [](const std::string& builder, const Graph& g, int d, std::uint64_t seed) {
            return sample_matroid(builder_from_name(builder), g, d, seed);
        },
        py::arg("builder"), py::arg("graph"), py::arg("d"), py::arg("seed"));
    m.def(
        "matroids_equal",
        [](const LinearMatroid& a, const LinearMatroid& b, bool exhaustive, int count,
           std::uint64_t seed) {
            const CompareVerdict v = matroids_equal(
                a, b, exhaustive ? CompareMode::exhaustive() : CompareMode::sampled(count, seed));
            py::dict out;
            out["equal"] = v.holds;
            out["exhaustive"] = v.exhaustive;
            if (v.witness) {
                py::list w;
                for (const Edge& e : *v.witness) w.append(py::make_tuple(e.first, e.second));
                out["witness"] = w;
                out["ranks"] = py::make_tuple(v.rank_left, v.rank_right);
            }
            return out;
        },
        py::arg("m1"), py::arg("m2"), py::arg("exhaustive") = true, py::arg("count") = 512,
        py::arg("seed") = 42);
    m.def(
        "freer_than",
        [](const LinearMatroid& small, const LinearMatroid& big, bool exhaustive, int count,
           std::uint64_t seed) {
            const CompareVerdict v = freer_than(
                small, big,
                exhaustive ? CompareMode::exhaustive() : CompareMode::sampled(count, seed));
            py::dict out;
            out["freer"] = v.holds;
            out["exhaustive"] = v.exhaustive;
            if (v.witness) {
                py::list w;
                for (const Edge& e : *v.witness) w.append(py::make_tuple(e.first, e.second));
                out["witness"] = w;
            }
            return out;
        },
        py::arg("m_small"), py::arg("m_big"), py::arg("exhaustive") = true,
        py::arg("count") = 512, py::arg("seed") = 42);
    m.def("circuits_up_to", [](const LinearMatroid& mm, int max_size) {
        py::list out;
        for (const auto& circ : circuits_up_to(mm, max_size)) {
            py::list c;
            for (const Edge& e : circ) c.append(py::make_tuple(e.first, e.second));
            out.append(c);
        }
        return out;
    });

    // machine checks
    m.def("check_coincidence", [](const Params& t, int d) {
        return report_to_py(verify::check_coincidence(t, d));
    });
    m.def("check_scaling_invariance",
          [](const PointConfig& p, py::iterable alphas, const Matrix& l) {
              return report_to_py(verify::check_scaling_invariance(p, to_rationals(alphas), l));
          });
    m.def(
        "check_bipartite_coincidence",
        [](const PointConfig& p, const std::vector<int>& x, bool exhaustive, int count,
           std::uint64_t seed) {
            return report_to_py(verify::check_bipartite_coincidence(
                p, Bipartition::make(p.n(), x),
                exhaustive ? CompareMode::exhaustive() : CompareMode::sampled(count, seed),
                false, seed));
        },
        py::arg("p"), py::arg("x_side"), py::arg("exhaustive") = true, py::arg("count") = 512,
        py::arg("seed") = 42);
    m.def("h2_independent_combinatorial", &verify::h2_independent_combinatorial);
    m.def("probe_conjectures", [](int n, int d, int samples, std::uint64_t seed) {
        return report_to_py(verify::probe_conjectures(n, d, samples, seed));
    });

    m.attr("__version__") = kVersion;
}
