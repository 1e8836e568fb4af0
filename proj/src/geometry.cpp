#include "rigidlab/geometry.hpp"

#include <set>
#include <sstream>

#include "rigidlab/linalg.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab {

Params Params::make(std::vector<Rational> values) {
    std::set<Rational> seen(values.begin(), values.end());
    if (seen.size() != values.size())
        throw PreconditionError("curve parameters must be pairwise distinct");
    return Params{std::move(values)};
}

bool Params::all_nonzero() const {
    for (const Rational& v : t)
        if (v.is_zero()) return false;
    return true;
}

PointConfig::PointConfig(int d, std::vector<std::vector<Rational>> points)
    : d_(d), pts_(std::move(points)) {
    if (d < 1) throw PreconditionError("point dimension must be >= 1");
    if (pts_.empty()) throw PreconditionError("point configuration must be nonempty");
    for (const auto& p : pts_)
        if (static_cast<int>(p.size()) != d)
            throw PreconditionError("point has wrong dimension");
}

const std::vector<Rational>& PointConfig::point(int i) const {
    if (i < 1 || i > n()) throw PreconditionError("point index out of range");
    return pts_[i - 1];
}

bool PointConfig::points_distinct() const {
    std::set<std::vector<Rational>> seen;
    for (const auto& p : pts_)
        if (!seen.insert(p).second) return false;
    return true;
}

Matrix PointConfig::as_matrix() const {
    Matrix m(n(), d_);
    for (int i = 0; i < n(); ++i)
        for (int c = 0; c < d_; ++c) m.at(i, c) = pts_[i][c];
    return m;
}

std::string PointConfig::to_text() const {
    std::ostringstream out;
    out << n() << ' ' << d_ << '\n';
    for (const auto& p : pts_) {
        for (int c = 0; c < d_; ++c) {
            if (c) out << ' ';
            out << p[c].str();
        }
        out << '\n';
    }
    return out.str();
}

PointConfig PointConfig::from_text(std::istream& in) {
    // Same tokenizer rules as the matrix format: whitespace separated,
    // '#' starts a comment line.
    std::string tok;
    auto next = [&](const char* what) {
        while (in >> tok) {
            if (tok[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return;
        }
        throw ParseError(std::string("point config text: missing ") + what);
    };
    next("point count");
    long n = 0, d = 0;
    try {
        n = std::stol(tok);
        next("dimension");
        d = std::stol(tok);
    } catch (const std::exception&) {
        throw ParseError("bad point config header");
    }
    if (n < 1 || d < 1) throw ParseError("bad point config header");
    std::vector<std::vector<Rational>> pts(n, std::vector<Rational>(d));
    for (long i = 0; i < n; ++i)
        for (long c = 0; c < d; ++c) {
            next("coordinate");
            pts[i][c] = Rational::parse(tok);
        }
    return PointConfig(static_cast<int>(d), std::move(pts));
}

PointConfig PointConfig::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

PointConfig moment_curve(int d, const Params& params) {
    if (d < 1) throw PreconditionError("moment curve needs d >= 1");
    Params::make(params.t);  // re-validate distinctness
    std::vector<std::vector<Rational>> pts;
    for (const Rational& t : params.t) {
        std::vector<Rational> p(d);
        Rational acc = 1;
        for (int k = 0; k < d; ++k) {
            acc *= t;
            p[k] = acc;
        }
        pts.push_back(std::move(p));
    }
    return PointConfig(d, std::move(pts));
}

PointConfig parabola(const Params& params) { return moment_curve(2, params); }

PointConfig monomial_vectors(int d, const Params& params) {
    if (d < 1) throw PreconditionError("monomial vectors need d >= 1");
    Params::make(params.t);
    std::vector<std::vector<Rational>> pts;
    for (const Rational& t : params.t) {
        std::vector<Rational> p(d);
        Rational acc = 1;
        for (int k = 0; k < d; ++k) {
            p[k] = acc;
            acc *= t;
        }
        pts.push_back(std::move(p));
    }
    return PointConfig(d, std::move(pts));
}

namespace {

// All k-subsets of {1..n}, visited in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

bool general_position(const PointConfig& p, PositionMode mode) {
    const int n = p.n(), d = p.d();
    bool ok = true;
    if (mode == PositionMode::Linear) {
        const int k = std::min(n, d);
        for_each_subset(n, k, [&](const std::vector<int>& s) {
            if (!ok) return;
            Matrix m(k, d);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < d; ++c) m.at(r, c) = p.point(s[r])[c];
            if (linalg::rank(m) < k) ok = false;
        });
    } else {
        const int k = std::min(n, d + 1);
        for_each_subset(n, k, [&](const std::vector<int>& s) {
            if (!ok) return;
            Matrix m(k, d + 1);
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < d; ++c) m.at(r, c) = p.point(s[r])[c];
                m.at(r, d) = 1;
            }
            if (linalg::rank(m) < k) ok = false;
        });
    }
    return ok;
}

PointConfig random_generic(int d, int n, std::uint64_t seed, long bound) {
    if (bound < n) throw PreconditionError("random_generic: bound must be >= n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<Rational>> pts(n, std::vector<Rational>(d));
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < d; ++c)
                pts[i][c] = Rational(Int(static_cast<long>(rng.int_in(-bound, bound))));
        PointConfig p(d, std::move(pts));
        if (p.points_distinct() && general_position(p, PositionMode::Linear) &&
            general_position(p, PositionMode::Affine))
            return p;
    }
    throw PreconditionError("random_generic: no generic configuration found; bound too small");
}

Params random_params(int n, std::uint64_t seed, long bound) {
    if (bound < n) throw PreconditionError("random_params: bound must be >= n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> t(n);
        std::set<Rational> seen;
        for (int i = 0; i < n; ++i) {
            t[i] = Rational(Int(static_cast<long>(rng.int_in(-bound, bound))));
            seen.insert(t[i]);
        }
        if (static_cast<int>(seen.size()) == n) return Params{std::move(t)};
    }
    throw PreconditionError("random_params: no distinct sample found; bound too small");
}

PointConfig lift_bipartite(const PointConfig& p, const Bipartition& bip) {
    if (bip.n() != p.n()) throw PreconditionError("bipartition does not match point count");
    std::vector<std::vector<Rational>> pts;
    for (int i = 1; i <= p.n(); ++i) {
        std::vector<Rational> q = p.point(i);
        q.push_back(bip.in_x(i) ? Rational(0) : Rational(1));
        pts.push_back(std::move(q));
    }
    return PointConfig(p.d() + 1, std::move(pts));
}

PointConfig homogenize(const PointConfig& p) {
    std::vector<std::vector<Rational>> pts;
    for (int i = 1; i <= p.n(); ++i) {
        std::vector<Rational> q = p.point(i);
        q.push_back(1);
        pts.push_back(std::move(q));
    }
    return PointConfig(p.d() + 1, std::move(pts));
}

} // namespace rigidlab
