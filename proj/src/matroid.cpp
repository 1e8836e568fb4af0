#include "rigidlab/matroid.hpp"

#include <algorithm>
#include <map>

#include "rigidlab/linalg.hpp"
#include "rigidlab/rng.hpp"

namespace rigidlab {

LinearMatroid::LinearMatroid(Matrix rows, std::vector<Edge> ground,
                             std::optional<int> ambient_rank_bound)
    : rows_(std::move(rows)), ground_(std::move(ground)), ambient_bound_(ambient_rank_bound) {
    if (static_cast<int>(ground_.size()) != rows_.rows())
        throw PreconditionError("ground set must label the matrix rows");
    std::vector<Edge> sorted = ground_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("ground labels must be distinct");
    full_rank_ = linalg::rank(rows_);
}

LinearMatroid::LinearMatroid(const RigidityMatrix& rm, std::optional<int> ambient_rank_bound)
    : LinearMatroid(rm.mat, rm.mat.row_labels(), ambient_rank_bound) {}

LinearMatroid::LinearMatroid(LinearMatroid&& o) noexcept
    : rows_(std::move(o.rows_)),
      ground_(std::move(o.ground_)),
      full_rank_(o.full_rank_),
      ambient_bound_(o.ambient_bound_),
      cache_(std::move(o.cache_)) {}

LinearMatroid& LinearMatroid::operator=(LinearMatroid&& o) noexcept {
    rows_ = std::move(o.rows_);
    ground_ = std::move(o.ground_);
    full_rank_ = o.full_rank_;
    ambient_bound_ = o.ambient_bound_;
    cache_ = std::move(o.cache_);
    return *this;
}

std::uint64_t LinearMatroid::mask_of(const std::vector<Edge>& s) const {
    if (ground_.size() > 64) throw PreconditionError("ground set too large for masks");
    std::uint64_t mask = 0;
    for (const Edge& e : s) {
        const Edge norm = make_edge(e.first, e.second);
        const auto it = std::find(ground_.begin(), ground_.end(), norm);
        if (it == ground_.end())
            throw PreconditionError("unknown edge label " + edge_str(norm));
        mask |= std::uint64_t{1} << (it - ground_.begin());
    }
    return mask;
}

std::vector<Edge> LinearMatroid::edges_of_mask(std::uint64_t mask) const {
    std::vector<Edge> out;
    for (std::size_t k = 0; k < ground_.size(); ++k)
        if (mask & (std::uint64_t{1} << k)) out.push_back(ground_[k]);
    return out;
}

int LinearMatroid::rank_uncached(std::uint64_t mask) const {
    std::vector<int> rows;
    for (std::size_t k = 0; k < ground_.size(); ++k)
        if (mask & (std::uint64_t{1} << k)) rows.push_back(static_cast<int>(k));
    return linalg::rank(rows_.submatrix_rows(rows));
}

int LinearMatroid::rank_of_mask(std::uint64_t mask) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        const auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
    }
    const int r = rank_uncached(mask);
    std::lock_guard<std::mutex> lock(cache_mu_);
    cache_.emplace(mask, r);
    return r;
}

int LinearMatroid::rank_of(const std::vector<Edge>& s) const {
    if (ground_.size() <= 64) return rank_of_mask(mask_of(s));
    std::vector<int> rows;
    for (const Edge& e : s) {
        const Edge norm = make_edge(e.first, e.second);
        const auto it = std::find(ground_.begin(), ground_.end(), norm);
        if (it == ground_.end())
            throw PreconditionError("unknown edge label " + edge_str(norm));
        rows.push_back(static_cast<int>(it - ground_.begin()));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return linalg::rank(rows_.submatrix_rows(rows));
}

int LinearMatroid::corank_of(const std::vector<Edge>& s) const {
    return static_cast<int>(s.size()) - rank_of(s);
}

bool LinearMatroid::is_independent(const std::vector<Edge>& s) const {
    return rank_of(s) == static_cast<int>(s.size());
}

bool LinearMatroid::is_circuit(const std::vector<Edge>& s) const {
    const int size = static_cast<int>(s.size());
    if (size == 0) return false;
    if (rank_of(s) != size - 1) return false;
    for (int skip = 0; skip < size; ++skip) {
        std::vector<Edge> sub;
        for (int k = 0; k < size; ++k)
            if (k != skip) sub.push_back(s[k]);
        if (rank_of(sub) != size - 1) return false;
    }
    return true;
}

bool LinearMatroid::is_spanning(const std::vector<Edge>& s) const {
    return rank_of(s) == full_rank_;
}

bool LinearMatroid::is_basis(const std::vector<Edge>& s) const {
    return is_independent(s) && is_spanning(s);
}

std::vector<Edge> LinearMatroid::basis_of(const std::vector<Edge>& s) const {
    std::vector<Edge> chosen;
    for (const Edge& e : s) {
        chosen.push_back(e);
        if (rank_of(chosen) < static_cast<int>(chosen.size())) chosen.pop_back();
    }
    return chosen;
}

namespace {

void require_same_ground(const LinearMatroid& m1, const LinearMatroid& m2) {
    if (m1.ground() != m2.ground())
        throw PreconditionError("matroid comparison needs identical ground sets");
}

template <typename Check>
CompareVerdict compare_subsets(const LinearMatroid& m1, const CompareMode& mode,
                               Check&& check) {
    const int g = m1.ground_size();
    CompareVerdict v;
    if (mode.kind == CompareMode::Kind::Exhaustive) {
        if (g > 20)
            throw PreconditionError("exhaustive comparison limited to ground size <= 20");
        v.exhaustive = true;
        const std::uint64_t total = std::uint64_t{1} << g;
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (!check(mask, v)) return v;
        v.holds = true;
        return v;
    }
    if (mode.count < 1) throw PreconditionError("sampled comparison needs count >= 1");
    if (g > 64) throw PreconditionError("ground set too large");
    v.exhaustive = false;
    Rng rng(mode.seed);
    const std::uint64_t span = g == 64 ? UINT64_MAX : (std::uint64_t{1} << g) - 1;
    for (int i = 0; i < mode.count; ++i) {
        const std::uint64_t mask = rng.next() & span;
        if (!check(mask, v)) return v;
    }
    v.holds = true;
    return v;
}

} // namespace

CompareVerdict matroids_equal(const LinearMatroid& m1, const LinearMatroid& m2,
                              const CompareMode& mode) {
    require_same_ground(m1, m2);
    return compare_subsets(m1, mode, [&](std::uint64_t mask, CompareVerdict& v) {
        const int r1 = m1.rank_of_mask(mask);
        const int r2 = m2.rank_of_mask(mask);
        if (r1 != r2) {
            v.holds = false;
            v.witness = m1.edges_of_mask(mask);
            v.rank_left = r1;
            v.rank_right = r2;
            return false;
        }
        return true;
    });
}

CompareVerdict freer_than(const LinearMatroid& m_small, const LinearMatroid& m_big,
                          const CompareMode& mode) {
    require_same_ground(m_small, m_big);
    return compare_subsets(m_small, mode, [&](std::uint64_t mask, CompareVerdict& v) {
        const int rs = m_small.rank_of_mask(mask);
        const int rb = m_big.rank_of_mask(mask);
        if (rs > rb) {
            v.holds = false;
            // Refine: a basis of the subset in m_small is independent there
            // and dependent in m_big.
            v.witness = m_small.basis_of(m_small.edges_of_mask(mask));
            v.rank_left = rs;
            v.rank_right = rb;
            return false;
        }
        return true;
    });
}

std::vector<std::vector<Edge>> circuits_up_to(const LinearMatroid& m, int max_size) {
    const int g = m.ground_size();
    if (g > 20) throw PreconditionError("circuit enumeration limited to ground size <= 20");
    std::vector<std::uint64_t> found_masks;
    std::vector<std::vector<Edge>> out;
    const int cap = std::min(max_size, g);
    // Subsets by increasing cardinality; a dependent set none of whose
    // proper subsets is dependent (no found circuit inside) is a circuit.
    std::vector<int> idx;
    for (int size = 1; size <= cap; ++size) {
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= std::uint64_t{1} << i;
            bool contains_circuit = false;
            for (std::uint64_t cm : found_masks)
                if ((cm & mask) == cm) {
                    contains_circuit = true;
                    break;
                }
            if (!contains_circuit && m.rank_of_mask(mask) < size) {
                found_masks.push_back(mask);
                out.push_back(m.edges_of_mask(mask));
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == g - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

const char* builder_name(BuilderKind k) {
    switch (k) {
        case BuilderKind::BarJoint: return "barjoint";
        case BuilderKind::Hyper: return "hyper";
        case BuilderKind::Cofactor: return "cofactor";
        case BuilderKind::Polynomial: return "poly";
    }
    return "?";
}

BuilderKind builder_from_name(const std::string& name) {
    if (name == "barjoint" || name == "bar_joint" || name == "R") return BuilderKind::BarJoint;
    if (name == "hyper" || name == "hyperconnectivity" || name == "H") return BuilderKind::Hyper;
    if (name == "cofactor" || name == "C") return BuilderKind::Cofactor;
    if (name == "poly" || name == "polynomial" || name == "P") return BuilderKind::Polynomial;
    throw ParseError("unknown builder '" + name + "'");
}

LinearMatroid sample_matroid(BuilderKind kind, const Graph& g, int d,
                             std::uint64_t config_seed, long bound) {
    std::optional<int> ambient;
    if (g.n() >= d) ambient = g.n() * d - d * (d + 1) / 2;
    switch (kind) {
        case BuilderKind::BarJoint:
            return LinearMatroid(bar_joint(g, random_generic(d, g.n(), config_seed, bound)),
                                 ambient);
        case BuilderKind::Hyper:
            return LinearMatroid(
                hyperconnectivity(g, random_generic(d, g.n(), config_seed, bound)), ambient);
        case BuilderKind::Cofactor:
            return LinearMatroid(
                cofactor(g, random_generic(2, g.n(), config_seed, bound), d), ambient);
        case BuilderKind::Polynomial:
            return LinearMatroid(
                polynomial_matrix(g, random_params(g.n(), config_seed, bound), d,
                                  BasisChoice::monomial()),
                ambient);
    }
    throw PreconditionError("unknown builder kind");
}

GenericRankResult generic_rank(BuilderKind kind, const Graph& g, int d, int trials,
                               std::uint64_t seed, long bound) {
    if (trials < 1) throw PreconditionError("generic_rank needs trials >= 1");
    Rng root(seed);
    GenericRankResult res;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = root.fork(static_cast<std::uint64_t>(t)).next();
        const LinearMatroid m = sample_matroid(kind, g, d, trial_seed, bound);
        const int r = m.full_rank();
        res.per_trial.push_back(r);
        if (t == 0 || r > res.rank) {
            res.rank = r;
            res.achieving_seed = trial_seed;
        }
    }
    res.trials_agree = std::all_of(res.per_trial.begin(), res.per_trial.end(),
                                   [&](int r) { return r == res.rank; });
    return res;
}

} // namespace rigidlab
