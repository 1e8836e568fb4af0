#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rigidlab/builders.hpp"

namespace rigidlab {

/// Subset comparison strategy. Exhaustive enumerates all 2^|ground|
/// subsets and is accepted only for grounds of size <= 20.
struct CompareMode {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    int count = 0;
    std::uint64_t seed = 0;

    static CompareMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static CompareMode sampled(int count, std::uint64_t seed) {
        return {Kind::Sampled, count, seed};
    }
};

/// Linear matroid of the rows of an edge-labeled matrix. Immutable after
/// construction; rank queries are pure and may run concurrently (the
/// subset-rank memo is mutex-guarded).
class LinearMatroid {
public:
    LinearMatroid(Matrix rows, std::vector<Edge> ground,
                  std::optional<int> ambient_rank_bound = std::nullopt);
    explicit LinearMatroid(const RigidityMatrix& rm,
                           std::optional<int> ambient_rank_bound = std::nullopt);

    LinearMatroid(LinearMatroid&&) noexcept;
    LinearMatroid& operator=(LinearMatroid&&) noexcept;
    LinearMatroid(const LinearMatroid&) = delete;
    LinearMatroid& operator=(const LinearMatroid&) = delete;

    const std::vector<Edge>& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    const Matrix& rows() const { return rows_; }
    int full_rank() const { return full_rank_; }
    std::optional<int> ambient_rank_bound() const { return ambient_bound_; }

    int rank_of(const std::vector<Edge>& s) const;
    int corank_of(const std::vector<Edge>& s) const;
    bool is_independent(const std::vector<Edge>& s) const;
    bool is_circuit(const std::vector<Edge>& s) const;
    bool is_spanning(const std::vector<Edge>& s) const;
    bool is_basis(const std::vector<Edge>& s) const;

    /// Bitmask interface (bit k = ground()[k]); requires ground size <= 64.
    std::uint64_t mask_of(const std::vector<Edge>& s) const;
    std::vector<Edge> edges_of_mask(std::uint64_t mask) const;
    int rank_of_mask(std::uint64_t mask) const;

    /// Greedy maximal independent subset of s (a basis of s).
    std::vector<Edge> basis_of(const std::vector<Edge>& s) const;

private:
    Matrix rows_;
    std::vector<Edge> ground_;
    int full_rank_ = 0;
    std::optional<int> ambient_bound_;
    mutable std::mutex cache_mu_;
    mutable std::unordered_map<std::uint64_t, int> cache_;

    int rank_uncached(std::uint64_t mask) const;
};

struct CompareVerdict {
    bool holds = false;       // equal / freer
    bool exhaustive = false;  // false => probabilistic verdict
    std::optional<std::vector<Edge>> witness;
    int rank_left = -1;
    int rank_right = -1;
};

/// Equal subset ranks (all subsets or sampled ones). Returns the first
/// witness subset with differing ranks on failure.
CompareVerdict matroids_equal(const LinearMatroid& m1, const LinearMatroid& m2,
                              const CompareMode& mode);

/// Checks that m_big is freer: rank_{m_small}(S) <= rank_{m_big}(S) for all
/// (or sampled) S. The witness on failure is a subset independent in
/// m_small and dependent in m_big.
CompareVerdict freer_than(const LinearMatroid& m_small, const LinearMatroid& m_big,
                          const CompareMode& mode);

/// All circuits of cardinality <= max_size, by subset enumeration with
/// supersets of found circuits pruned. Requires ground size <= 20.
std::vector<std::vector<Edge>> circuits_up_to(const LinearMatroid& m, int max_size);

enum class BuilderKind { BarJoint, Hyper, Cofactor, Polynomial };

const char* builder_name(BuilderKind k);
BuilderKind builder_from_name(const std::string& name);

/// One sampled realization of the generic matroid of `kind` in dimension d
/// (random points for the point builders, random parameters for the
/// polynomial one). Deterministic per seed.
LinearMatroid sample_matroid(BuilderKind kind, const Graph& g, int d,
                             std::uint64_t config_seed, long bound = kDefaultBound);

struct GenericRankResult {
    int rank = 0;
    std::uint64_t achieving_seed = 0;  // per-trial seed that attained the max
    std::vector<int> per_trial;
    bool trials_agree = true;
};

/// Max rank of the full edge set over `trials` sampled configurations.
GenericRankResult generic_rank(BuilderKind kind, const Graph& g, int d, int trials,
                               std::uint64_t seed, long bound = kDefaultBound);

} // namespace rigidlab
