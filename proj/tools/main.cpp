// rigidlab CLI: build rigidity matrices, query ranks, run verification
// suites and conjecture probes. Exit codes: 0 ok, 1 check failure,
// 2 input/parse error, 3 operation precondition violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/suite.hpp"

namespace {

using namespace rigidlab;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

struct BuildArgs {
    std::string builder;
    std::string graph_file;
    std::string points_file;
    std::string params_file;
    std::string basis = "monomial";
    std::string variant = "lifted";
    std::string skew_file;
    std::string out_file;
    std::string subset;
    int d = 0;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return Graph::from_text(in);
}

PointConfig load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open point file '" + path + "'");
    return PointConfig::from_text(in);
}

// Params file: whitespace-separated rationals; '#' comments allowed.
Params load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open params file '" + path + "'");
    std::vector<Rational> t;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        t.push_back(Rational::parse(tok));
    }
    if (t.empty()) throw ParseError("params file '" + path + "' is empty");
    return Params::make(std::move(t));
}

BasisChoice parse_basis(const std::string& name) {
    if (name == "monomial") return BasisChoice::monomial();
    if (name == "barjoint") return BasisChoice::bar_joint();
    if (name == "cofactor") return BasisChoice::cofactor();
    throw ParseError("unknown basis '" + name + "'");
}

// Skew input file: line 1 `n k`; then 2k lines of n rationals, alternating
// a_1, b_1, ..., a_k, b_k.
RigidityMatrix build_skew(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open skew input file '" + path + "'");
    int n = 0, k = 0;
    if (!(in >> n >> k) || n < 2 || k < 1) throw ParseError("bad skew input header");
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(n));
    std::string tok;
    for (int l = 0; l < k; ++l)
        for (auto* vec : {&a[l], &b[l]})
            for (int i = 0; i < n; ++i) {
                if (!(in >> tok)) throw ParseError("skew input truncated");
                (*vec)[i] = Rational::parse(tok);
            }
    return skew_jacobian(n, k, a, b);
}

RigidityMatrix build_matrix(const BuildArgs& args) {
    if (args.builder == "skewjac") return build_skew(args.skew_file);
    if (args.builder == "quadric") {
        const PointConfig p = load_points(args.points_file);
        Matrix m = quadric_matrix(p);
        return {std::move(m), "quadric(n=" + std::to_string(p.n()) +
                                  ",d=" + std::to_string(p.d()) + ")"};
    }
    const Graph g = load_graph(args.graph_file);
    if (args.builder == "barjoint") return bar_joint(g, load_points(args.points_file));
    if (args.builder == "hyper") return hyperconnectivity(g, load_points(args.points_file));
    if (args.builder == "cofactor") {
        if (args.d < 1) throw ParseError("cofactor needs --d");
        return cofactor(g, load_points(args.points_file), args.d);
    }
    if (args.builder == "poly") {
        if (args.d < 1) throw ParseError("poly needs --d");
        return polynomial_matrix(g, load_params(args.params_file), args.d,
                                 parse_basis(args.basis));
    }
    if (args.builder == "affine") {
        const AffineVariant v = args.variant == "homogeneous" ? AffineVariant::Homogeneous
                                                              : AffineVariant::Lifted;
        return affine_rigidity(g, load_points(args.points_file), v);
    }
    throw ParseError("unknown builder '" + args.builder + "'");
}

int cmd_build_matrix(const BuildArgs& args) {
    const RigidityMatrix rm = build_matrix(args);
    std::ostringstream out;
    out << "# " << rm.provenance << '\n' << rm.mat.to_text();
    if (args.out_file.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(args.out_file);
        if (!f) throw ParseError("cannot open output file '" + args.out_file + "'");
        f << out.str();
    }
    return kExitOk;
}

std::vector<Edge> parse_subset(const std::string& text) {
    std::vector<Edge> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw ParseError("bad edge '" + item + "'");
        try {
            out.push_back(make_edge(std::stoi(item.substr(0, dash)),
                                    std::stoi(item.substr(dash + 1))));
        } catch (const std::exception&) {
            throw ParseError("bad edge '" + item + "'");
        }
    }
    return out;
}

int cmd_rank(const BuildArgs& args, bool has_subset) {
    const RigidityMatrix rm = build_matrix(args);
    const LinearMatroid m(rm);
    const std::vector<Edge> subset = has_subset ? parse_subset(args.subset) : m.ground();
    ojson j;
    j["rank"] = m.rank_of(subset);
    j["corank"] = m.corank_of(subset);
    j["independent"] = m.is_independent(subset);
    j["spanning"] = m.is_spanning(subset);
    j["circuit"] = m.is_circuit(subset);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& manifest_path, const verify::SuiteOptions& opts,
               const std::string& out_file, const std::string& command) {
    std::ifstream in(manifest_path);
    if (!in) throw ParseError("cannot open manifest '" + manifest_path + "'");
    const std::vector<verify::CheckReport> reports = verify::run_suite(in, opts);
    const ojson envelope = verify::report_envelope(reports, command, opts.seed);
    if (out_file.empty()) {
        std::cout << envelope.dump(2) << '\n';
    } else {
        std::ofstream f(out_file);
        if (!f) throw ParseError("cannot open output file '" + out_file + "'");
        f << envelope.dump(2) << '\n';
    }
    return envelope["overall"] == "pass" ? kExitOk : kExitCheckFailed;
}

int cmd_probe(int n, int d, int samples, std::uint64_t seed, const std::string& command) {
    const verify::CheckReport rep = verify::probe_conjectures(n, d, samples, seed);
    const ojson envelope = verify::report_envelope({rep}, command, seed);
    std::cout << envelope.dump(2) << '\n';
    // Probes report findings; they fail the process only on internal error.
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigidlab: exact rigidity matrices, their matroids, and machine checks"};
    app.require_subcommand(1);

    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

    BuildArgs args;
    verify::SuiteOptions opts;
    std::string manifest_path, out_file;
    int probe_n = 6, probe_d = 2, probe_samples = 5;
    std::uint64_t seed = 42;
    bool has_subset = false;

    auto add_build_opts = [&](CLI::App* sub, bool need_out) {
        sub->add_option("--builder", args.builder,
                        "barjoint|hyper|cofactor|poly|affine|skewjac|quadric")
            ->required();
        sub->add_option("--graph", args.graph_file, "graph file");
        sub->add_option("--points", args.points_file, "point configuration file");
        sub->add_option("--params", args.params_file, "curve parameter file");
        sub->add_option("--skew", args.skew_file, "skew parametrization file (n k; a/b rows)");
        sub->add_option("--d", args.d, "dimension / degree parameter");
        sub->add_option("--basis", args.basis, "poly basis: monomial|barjoint|cofactor");
        sub->add_option("--variant", args.variant, "affine variant: lifted|homogeneous");
        if (need_out) sub->add_option("--out", args.out_file, "output file (default stdout)");
    };

    CLI::App* build = app.add_subcommand("build-matrix", "write a rigidity matrix");
    add_build_opts(build, true);

    CLI::App* rank = app.add_subcommand("rank", "rank/corank and matroid predicates");
    add_build_opts(rank, false);
    rank->add_option("--subset", args.subset, "edge subset, e.g. 1-2,2-3 (default: all rows)")
        ->each([&](const std::string&) { has_subset = true; });

    CLI::App* ver = app.add_subcommand("verify", "run a check-suite manifest");
    ver->add_option("manifest", manifest_path, "suite manifest file")->required();
    ver->add_option("--seed", opts.seed, "root seed (default 42)");
    ver->add_option("--exhaustive-limit", opts.exhaustive_limit,
                    "max ground size for exhaustive subset comparison (default 16)");
    ver->add_option("--out", out_file, "write the JSON report here instead of stdout");

    CLI::App* probe = app.add_subcommand("probe", "conjecture probes at fixed small size");
    probe->add_option("--n", probe_n, "vertex count (<= 13)")->required();
    probe->add_option("--d", probe_d, "dimension")->required();
    probe->add_option("--samples", probe_samples, "number of sampled graphs");
    probe->add_option("--seed", seed, "seed (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (build->parsed()) return cmd_build_matrix(args);
        if (rank->parsed()) return cmd_rank(args, has_subset);
        if (ver->parsed()) return cmd_verify(manifest_path, opts, out_file, cmdline.str());
        if (probe->parsed()) return cmd_probe(probe_n, probe_d, probe_samples, seed, cmdline.str());
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
