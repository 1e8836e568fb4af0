#include "rigidlab/suite.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rigidlab/linalg.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab::verify {

using ojson = nlohmann::ordered_json;

Params random_rational_params(int n, std::uint64_t seed, long num_bound, long den_bound) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> t(n);
        std::set<Rational> seen;
        for (int i = 0; i < n; ++i) {
            t[i] = Rational(static_cast<long>(rng.int_in(-num_bound, num_bound)),
                            static_cast<long>(rng.int_in(1, den_bound)));
            seen.insert(t[i]);
        }
        if (static_cast<int>(seen.size()) == n) return Params{std::move(t)};
    }
    throw PreconditionError("random_rational_params: no distinct sample found");
}

Graph parse_graph_spec(const std::string& spec) {
    if (spec == "paper") return paper_example_graph();
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw ParseError("cannot open graph file '" + spec.substr(5) + "'");
        return Graph::from_text(in);
    }
    if (spec.rfind("cone(", 0) == 0) {
        const auto semi = spec.rfind(';');
        const auto close = spec.rfind(')');
        if (semi == std::string::npos || close == std::string::npos || close < semi)
            throw ParseError("bad cone spec '" + spec + "'");
        const Graph base = parse_graph_spec(spec.substr(5, semi - 5));
        try {
            return base.cone(std::stoi(spec.substr(semi + 1, close - semi - 1)));
        } catch (const std::exception&) {
            throw ParseError("bad cone count in '" + spec + "'");
        }
    }
    auto num_after = [&](std::size_t at) {
        try {
            return std::stoi(spec.substr(at));
        } catch (const std::exception&) {
            throw ParseError("bad graph spec '" + spec + "'");
        }
    };
    if (spec.rfind("path", 0) == 0) {
        const int n = num_after(4);
        std::vector<Edge> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        return Graph(n, std::move(e));
    }
    if (spec.rfind("star", 0) == 0) {
        const int n = num_after(4);
        std::vector<Edge> e;
        for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
        return Graph(n, std::move(e));
    }
    if (!spec.empty() && spec[0] == 'K') {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) return Graph::complete(num_after(1));
        try {
            const int a = std::stoi(spec.substr(1, comma - 1));
            const int b = std::stoi(spec.substr(comma + 1));
            return Graph::complete_bipartite(a, b);
        } catch (const std::exception&) {
            throw ParseError("bad graph spec '" + spec + "'");
        }
    }
    throw ParseError("unknown graph spec '" + spec + "'");
}

namespace {

struct Args {
    std::string check;
    std::map<std::string, std::string> kv;
    int line_no = 0;

    bool has(const std::string& k) const { return kv.count(k) != 0; }

    std::string str(const std::string& k) const {
        const auto it = kv.find(k);
        if (it == kv.end())
            throw ParseError("line " + std::to_string(line_no) + ": " + check +
                             " needs " + k + "=");
        return it->second;
    }

    std::string str_or(const std::string& k, const std::string& dflt) const {
        const auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }

    long num(const std::string& k) const {
        try {
            return std::stol(str(k));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad integer for " + k);
        }
    }

    long num_or(const std::string& k, long dflt) const { return has(k) ? num(k) : dflt; }

    bool flag_or(const std::string& k, bool dflt) const {
        if (!has(k)) return dflt;
        const std::string v = str(k);
        if (v == "1" || v == "true" || v == "yes") return true;
        if (v == "0" || v == "false" || v == "no") return false;
        throw ParseError("line " + std::to_string(line_no) + ": bad flag for " + k);
    }

    std::vector<int> int_list(const std::string& k) const {
        std::vector<int> out;
        if (!has(k)) return out;
        std::string v = str(k);
        std::replace(v.begin(), v.end(), ',', ' ');
        std::istringstream in(v);
        int x;
        while (in >> x) out.push_back(x);
        return out;
    }
};

CompareMode pick_mode(int ground_size, const SuiteOptions& opts, const Args& a, Rng& rng) {
    if (ground_size <= opts.exhaustive_limit && ground_size <= 20)
        return CompareMode::exhaustive();
    return CompareMode::sampled(static_cast<int>(a.num_or("count", 512)), rng.next());
}

CheckReport run_one(const Args& a, const SuiteOptions& opts, Rng rng) {
    const std::uint64_t seed =
        a.has("seed") ? static_cast<std::uint64_t>(a.num("seed")) : rng.next();
    Rng local(seed);

    if (a.check == "coincidence") {
        const int d = static_cast<int>(a.num("d"));
        const int n = static_cast<int>(a.num("n"));
        const Params t = a.flag_or("rational", false)
                             ? random_rational_params(n, local.next(), 1000, 40)
                             : random_params(n, local.next(), std::max<long>(n, 1000));
        CheckReport rep = check_coincidence(t, d);
        rep.inputs["seed"] = seed;
        return rep;
    }
    if (a.check == "scaling") {
        const int d = static_cast<int>(a.num("d"));
        const int n = static_cast<int>(a.num("n"));
        const PointConfig p = random_generic(d, n, local.next(), opts.bound);
        std::vector<Rational> alphas(n);
        for (int i = 0; i < n; ++i)
            alphas[i] = Rational(static_cast<long>(local.int_in(1, 50)) *
                                     (local.coin() ? 1 : -1),
                                 static_cast<long>(local.int_in(1, 20)));
        Matrix l(d, d);
        do {
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    l.at(r, c) = Rational(Int(static_cast<long>(local.int_in(-20, 20))));
        } while (linalg::rank(l) < d);
        CheckReport rep = check_scaling_invariance(p, alphas, l);
        rep.inputs["seed"] = seed;
        return rep;
    }
    if (a.check == "bipartite_rank") {
        const int n1 = static_cast<int>(a.num("n1"));
        const int n2 = static_cast<int>(a.num("n2"));
        const int d = static_cast<int>(a.num("d"));
        const std::string theory = a.str("theory");
        const std::string points = a.str_or("points", "generic");
        PointConfig p = points == "moment"
                            ? moment_curve(d, random_params(n1 + n2, local.next(),
                                                            std::max<long>(n1 + n2, 1000)))
                            : random_generic(d, n1 + n2, local.next(), opts.bound);
        CheckReport rep = check_bipartite_rank(
            n1, n2, d, p, theory == "R" ? BipartiteTheory::R : BipartiteTheory::H);
        rep.inputs["seed"] = seed;
        rep.inputs["points"] = points;
        return rep;
    }
    if (a.check == "bipartite_general") {
        const int n1 = static_cast<int>(a.num("n1"));
        const int n2 = static_cast<int>(a.num("n2"));
        const int d = static_cast<int>(a.num("d"));
        const int d1 = static_cast<int>(a.num("d1"));
        const int d2 = static_cast<int>(a.num("d2"));
        if (d1 < 1 || d1 > std::min(n1, d) || d2 < 1 || d2 > std::min(n2, d))
            throw ParseError("bipartite_general: need 1 <= d_i <= min(n_i, d)");
        // Parts sampled inside coordinate subspaces of the requested dims.
        auto sample_part = [&](int count, int dim) {
            while (true) {
                std::vector<std::vector<Rational>> pts(count, std::vector<Rational>(d, 0));
                for (int i = 0; i < count; ++i)
                    for (int c = 0; c < dim; ++c)
                        pts[i][c] = Rational(
                            Int(static_cast<long>(local.int_in(-opts.bound, opts.bound))));
                Matrix m(count, d);
                for (int i = 0; i < count; ++i)
                    for (int c = 0; c < d; ++c) m.at(i, c) = pts[i][c];
                if (linalg::rank(m) == dim) return pts;
            }
        };
        std::vector<std::vector<Rational>> pts = sample_part(n1, d1);
        for (auto& row : sample_part(n2, d2)) pts.push_back(row);
        std::vector<int> xs(n1);
        for (int i = 0; i < n1; ++i) xs[i] = i + 1;
        CheckReport rep = check_bipartite_general_rank(
            PointConfig(d, std::move(pts)), Bipartition::make(n1 + n2, xs));
        rep.inputs["seed"] = seed;
        return rep;
    }
    if (a.check == "bipartite_coincidence") {
        const int d = static_cast<int>(a.num("d"));
        const int n1 = static_cast<int>(a.num("n1"));
        const int n2 = static_cast<int>(a.num("n2"));
        if (d < 2) throw ParseError("bipartite_coincidence needs d >= 2");
        const PointConfig p = random_generic(d - 1, n1 + n2, local.next(), opts.bound);
        std::vector<int> xs(n1);
        for (int i = 0; i < n1; ++i) xs[i] = i + 1;
        const Bipartition bip = Bipartition::make(n1 + n2, xs);
        const CompareMode mode = pick_mode(n1 * n2, opts, a, local);
        CheckReport rep = check_bipartite_coincidence(p, bip, mode,
                                                      a.flag_or("corollary", false),
                                                      local.next());
        rep.inputs["seed"] = seed;
        return rep;
    }
    if (a.check == "split") {
        const BuilderKind kind = builder_from_name(a.str("builder"));
        const int d = static_cast<int>(a.num("d"));
        const Graph g = parse_graph_spec(a.str("graph"));
        SplitArgs args;
        args.v = static_cast<int>(a.num("v"));
        args.a = a.int_list("A");
        args.b = a.int_list("B");
        args.c = a.int_list("C");
        const SplitKind kindv = a.str("kind") == "diamond" ? SplitKind::Diamond
                                                           : SplitKind::Vertex;
        return check_split_monotonicity(kind, g, d, kindv, args, seed);
    }
    if (a.check == "split_random") {
        return check_random_splits(builder_from_name(a.str("builder")),
                                   static_cast<int>(a.num("d")),
                                   static_cast<int>(a.num("count")), seed);
    }
    if (a.check == "h2_oracle") {
        return check_h2_oracle(parse_graph_spec(a.str("graph")),
                               a.flag_or("exhaustive", false), seed);
    }
    if (a.check == "claim") {
        const std::string pred = a.str("predicate");
        Predicate p;
        if (pred == "independent") p = Predicate::Independent;
        else if (pred == "circuit") p = Predicate::Circuit;
        else if (pred == "basis") p = Predicate::Basis;
        else if (pred == "spanning") p = Predicate::Spanning;
        else if (pred == "rank") p = Predicate::Rank;
        else throw ParseError("unknown predicate '" + pred + "'");
        bool expect_bool = false;
        int expect_rank = -1;
        if (p == Predicate::Rank) {
            expect_rank = static_cast<int>(a.num("expect"));
        } else {
            const std::string e = a.str("expect");
            if (e == "true") expect_bool = true;
            else if (e == "false") expect_bool = false;
            else throw ParseError("claim: expect must be true or false");
        }
        return check_claim(builder_from_name(a.str("builder")),
                           parse_graph_spec(a.str("graph")), static_cast<int>(a.num("d")),
                           p, expect_bool, expect_rank, seed);
    }
    if (a.check == "probe") {
        return probe_conjectures(static_cast<int>(a.num("n")), static_cast<int>(a.num("d")),
                                 static_cast<int>(a.num_or("samples", 5)), seed);
    }
    throw ParseError("line " + std::to_string(a.line_no) + ": unknown check '" + a.check + "'");
}

} // namespace

std::vector<CheckReport> run_suite(std::istream& manifest, const SuiteOptions& opts) {
    std::vector<CheckReport> reports;
    const Rng root(opts.seed);
    std::string line;
    int line_no = 0;
    std::uint64_t counter = 0;
    while (std::getline(manifest, line)) {
        ++line_no;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        Args a;
        a.line_no = line_no;
        std::istringstream in(line);
        in >> a.check;
        std::string tok;
        while (in >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected key=value, got '" + tok + "'");
            a.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        try {
            reports.push_back(run_one(a, opts, root.fork(counter)));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            CheckReport rep;
            rep.name = a.check;
            rep.inputs = {{"line", line_no}};
            rep.status = CheckStatus::Fail;
            rep.details = {{"witness", {{"error", e.what()}}}};
            reports.push_back(std::move(rep));
        }
        ++counter;
    }
    return reports;
}

ojson report_envelope(const std::vector<CheckReport>& checks, const std::string& command,
                      std::uint64_t seed) {
    ojson j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["command"] = command;
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
    j["seed"] = seed;
    bool all_pass = true;
    bool any_probabilistic = false;
    ojson arr = ojson::array();
    for (const CheckReport& c : checks) {
        all_pass = all_pass && c.passed();
        any_probabilistic = any_probabilistic || c.status == CheckStatus::ProbabilisticPass;
        arr.push_back(c.to_json());
    }
    j["checks"] = arr;
    j["probabilistic"] = any_probabilistic;
    j["overall"] = all_pass ? "pass" : "fail";
    return j;
}

} // namespace rigidlab::verify
