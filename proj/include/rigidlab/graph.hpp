#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rigidlab/matrix.hpp"

namespace rigidlab {

/// Vertex bipartition X ∪ Y = [n], disjoint. Sides are kept sorted.
struct Bipartition {
    std::vector<int> x;
    std::vector<int> y;

    static Bipartition make(int n, std::vector<int> x_side);
    int n() const { return static_cast<int>(x.size() + y.size()); }
    bool in_x(int v) const;
};

/// Simple graph on vertex set [n] = {1..n}; edges kept sorted
/// lexicographically. May carry a bipartition (e.g. complete bipartite
/// generators attach the canonical one).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    static Graph complete(int n);
    static Graph complete_bipartite(int n1, int n2);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    const std::optional<Bipartition>& bipartition() const { return bip_; }
    void set_bipartition(Bipartition b);
    /// True iff every edge crosses the stored bipartition.
    bool respects_bipartition() const;

    /// Iterated cone: each of k new apexes is adjacent to every vertex
    /// present at its insertion, including earlier apexes.
    Graph cone(int k) const;

    /// Vertex d-split at v with neighbor partition A,B,C (|B| = d-1):
    /// edges v-C removed, new vertex n+1 adjacent to B ∪ C ∪ {v}.
    Graph vertex_split(int v, const std::vector<int>& a, const std::vector<int>& b,
                       const std::vector<int>& c, int d) const;

    /// Diamond d-split at v with |B| = d: edges v-C removed, new vertex n+1
    /// adjacent to B ∪ C (no edge v-v').
    Graph diamond_split(int v, const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& c, int d) const;

    /// Text format: line 1 `n m`; then m lines `i j` (1-based); optional
    /// trailing line `B: v1 v2 ...` listing the X side.
    std::string to_text() const;
    static Graph from_text(std::istream& in);
    static Graph from_text(const std::string& text);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<Bipartition> bip_;

    void check_split_args(int v, const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& c) const;
};

} // namespace rigidlab
