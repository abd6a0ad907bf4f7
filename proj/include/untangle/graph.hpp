#ifndef UNTANGLE_GRAPH_HPP
#define UNTANGLE_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "untangle/error.hpp"

namespace untangle {

using Vertex = int;

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool has(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t edge_key(Vertex a, Vertex b)
{
    const auto lo = static_cast<std::uint32_t>(std::min(a, b));
    const auto hi = static_cast<std::uint32_t>(std::max(a, b));
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

// Simple undirected graph on vertices [0, n).
class Graph {
    static int checked_count(int n)
    {
        if (n < 0)
            throw InputError("negative vertex count");
        return n;
    }

public:
    Graph() = default;

    explicit Graph(int n) : n_(checked_count(n)), adj_(static_cast<std::size_t>(n_)) {}

    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n)
    {
        edges_.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            check_vertex(a);
            check_vertex(b);
            if (a == b)
                throw InputError("self loop at vertex " + std::to_string(a));
            edges_.emplace_back(a, b);
        }
        finalize();
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (const auto& e : edges) {
            check_vertex(e.u);
            check_vertex(e.v);
            if (e.u == e.v)
                throw InputError("self loop at vertex " + std::to_string(e.u));
        }
        edges_ = edges;
        finalize();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbors in ascending order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex a, Vertex b) const
    {
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            return false;
        const auto& nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    // Index of edge {a, b} in edges(), or -1.
    int edge_index(Vertex a, Vertex b) const
    {
        const Edge e(a, b);
        const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw InputError("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void finalize()
    {
        std::sort(edges_.begin(), edges_.end());
        const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw InputError("multi-edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
        for (const auto& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<std::size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

// Induced subgraph on `vertices` (any order); local id i corresponds to
// to_global[i], and to_global is sorted ascending.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_global;

    Vertex local(Vertex global) const
    {
        const auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
        if (it == to_global.end() || *it != global)
            return -1;
        return static_cast<Vertex>(it - to_global.begin());
    }
};

inline Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Subgraph sub;
    sub.to_global = vertices;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            if (w <= vertices[i])
                continue;
            const Vertex j = sub.local(w);
            if (j >= 0)
                edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    sub.graph = Graph(static_cast<int>(vertices.size()), edges);
    return sub;
}

} // namespace untangle

#endif // UNTANGLE_GRAPH_HPP
