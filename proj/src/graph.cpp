#include "rigidlab/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rigidlab {

Bipartition Bipartition::make(int n, std::vector<int> x_side) {
    std::sort(x_side.begin(), x_side.end());
    x_side.erase(std::unique(x_side.begin(), x_side.end()), x_side.end());
    Bipartition b;
    b.x = std::move(x_side);
    for (int v : b.x)
        if (v < 1 || v > n) throw PreconditionError("bipartition vertex out of range");
    std::size_t k = 0;
    for (int v = 1; v <= n; ++v) {
        if (k < b.x.size() && b.x[k] == v) {
            ++k;
        } else {
            b.y.push_back(v);
        }
    }
    return b;
}

bool Bipartition::in_x(int v) const {
    return std::binary_search(x.begin(), x.end(), v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        const Edge norm = make_edge(e.first, e.second);
        if (norm.first < 1 || norm.second > n)
            throw PreconditionError("edge endpoint outside [n]");
        if (!seen.insert(norm).second) throw PreconditionError("duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
}

Graph Graph::complete(int n) {
    if (n < 1) throw PreconditionError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw PreconditionError("complete bipartite needs n1, n2 >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= n1; ++i)
        for (int j = n1 + 1; j <= n1 + n2; ++j) e.emplace_back(i, j);
    Graph g(n1 + n2, std::move(e));
    std::vector<int> x(n1);
    for (int i = 0; i < n1; ++i) x[i] = i + 1;
    g.set_bipartition(Bipartition::make(n1 + n2, std::move(x)));
    return g;
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(i, j));
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

void Graph::set_bipartition(Bipartition b) {
    if (b.n() != n_) throw PreconditionError("bipartition does not cover [n]");
    bip_ = std::move(b);
}

bool Graph::respects_bipartition() const {
    if (!bip_) return false;
    for (const Edge& e : edges_)
        if (bip_->in_x(e.first) == bip_->in_x(e.second)) return false;
    return true;
}

Graph Graph::cone(int k) const {
    if (k < 0) throw PreconditionError("negative cone count");
    std::vector<Edge> e = edges_;
    int n = n_;
    for (int apex = 0; apex < k; ++apex) {
        ++n;
        for (int v = 1; v < n; ++v) e.emplace_back(v, n);
    }
    Graph g(n, std::move(e));
    if (k == 0) g.bip_ = bip_;
    return g;
}

void Graph::check_split_args(int v, const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& c) const {
    if (v < 1 || v > n_) throw PreconditionError("split vertex out of range");
    const std::vector<int> nb = neighbors(v);
    std::vector<int> merged;
    merged.insert(merged.end(), a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    merged.insert(merged.end(), c.begin(), c.end());
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw PreconditionError("split parts A, B, C must be disjoint");
    if (merged != nb)
        throw PreconditionError("split parts must partition the neighborhood of v");
}

Graph Graph::vertex_split(int v, const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& c, int d) const {
    check_split_args(v, a, b, c);
    if (static_cast<int>(b.size()) != d - 1)
        throw PreconditionError("vertex split requires |B| = d-1");
    const int vp = n_ + 1;
    std::vector<Edge> e;
    for (const Edge& ed : edges_) {
        const bool drop = (ed.first == v && std::count(c.begin(), c.end(), ed.second)) ||
                          (ed.second == v && std::count(c.begin(), c.end(), ed.first));
        if (!drop) e.push_back(ed);
    }
    for (int w : b) e.emplace_back(w, vp);
    for (int w : c) e.emplace_back(w, vp);
    e.emplace_back(v, vp);
    return Graph(vp, std::move(e));
}

Graph Graph::diamond_split(int v, const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& c, int d) const {
    check_split_args(v, a, b, c);
    if (static_cast<int>(b.size()) != d)
        throw PreconditionError("diamond split requires |B| = d");
    const int vp = n_ + 1;
    std::vector<Edge> e;
    for (const Edge& ed : edges_) {
        const bool drop = (ed.first == v && std::count(c.begin(), c.end(), ed.second)) ||
                          (ed.second == v && std::count(c.begin(), c.end(), ed.first));
        if (!drop) e.push_back(ed);
    }
    for (int w : b) e.emplace_back(w, vp);
    for (int w : c) e.emplace_back(w, vp);
    Graph g(vp, std::move(e));
    // v' takes v's side, so a bipartite input stays bipartite.
    if (bip_ && respects_bipartition()) {
        std::vector<int> x = bip_->x;
        if (bip_->in_x(v)) x.push_back(vp);
        g.set_bipartition(Bipartition::make(vp, std::move(x)));
    }
    return g;
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (const Edge& e : edges_) out << e.first << ' ' << e.second << '\n';
    if (bip_) {
        out << "B:";
        for (int v : bip_->x) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

Graph Graph::from_text(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty graph text");
    std::istringstream head(line);
    long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("bad graph header '" + line + "'");
    std::vector<Edge> edges;
    std::optional<std::vector<int>> x_side;
    while (static_cast<long>(edges.size()) < m || !in.eof()) {
        if (!next_line()) break;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "B:") {
            std::vector<int> xs;
            int v;
            while (ls >> v) xs.push_back(v);
            x_side = std::move(xs);
            continue;
        }
        int i = 0, j = 0;
        std::istringstream es(line);
        if (!(es >> i >> j)) throw ParseError("bad edge line '" + line + "'");
        edges.emplace_back(i, j);
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(edges.size()));
    try {
        Graph g(static_cast<int>(n), std::move(edges));
        if (x_side) g.set_bipartition(Bipartition::make(g.n(), std::move(*x_side)));
        return g;
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

} // namespace rigidlab
