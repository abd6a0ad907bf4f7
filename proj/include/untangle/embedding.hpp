#ifndef UNTANGLE_EMBEDDING_HPP
#define UNTANGLE_EMBEDDING_HPP

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/graph.hpp"

namespace untangle {

// A facial walk: vertices in traversal order, the face lying to the left
// of every step. With counterclockwise rotations, bounded faces of a
// matching plane drawing are traversed counterclockwise and the outer face
// clockwise.
struct Face {
    std::vector<Vertex> walk;

    int length() const { return static_cast<int>(walk.size()); }
    bool contains(Vertex v) const { return std::find(walk.begin(), walk.end(), v) != walk.end(); }
};

// Combinatorial embedding: per vertex, the cyclic (counterclockwise) order
// of its neighbors. Faces are derived on construction.
class RotationEmbedding {
public:
    RotationEmbedding() = default;

    RotationEmbedding(Graph g, std::vector<std::vector<Vertex>> rotation)
        : graph_(std::move(g)), rotation_(std::move(rotation))
    {
        validate_rotation();
        trace_faces();
    }

    const Graph& graph() const { return graph_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    // Face to the left of the dart u -> v.
    int face_left_of(Vertex u, Vertex v) const
    {
        return dart_face_[static_cast<std::size_t>(u)][static_cast<std::size_t>(index_in_rotation(u, v))];
    }

    int index_in_rotation(Vertex at, Vertex nb) const
    {
        const auto& idx = nb_index_[static_cast<std::size_t>(at)];
        const auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(nb, -1));
        if (it == idx.end() || it->first != nb)
            throw InputError("vertex " + std::to_string(nb) + " is not a neighbor of " + std::to_string(at));
        return it->second;
    }

    Vertex next_ccw(Vertex at, Vertex nb) const
    {
        const auto& rot = rotation(at);
        return rot[(static_cast<std::size_t>(index_in_rotation(at, nb)) + 1) % rot.size()];
    }

    Vertex prev_ccw(Vertex at, Vertex nb) const
    {
        const auto& rot = rotation(at);
        return rot[(static_cast<std::size_t>(index_in_rotation(at, nb)) + rot.size() - 1) % rot.size()];
    }

    // Index of the face whose walk equals `walk` up to a cyclic shift, or -1.
    int find_face(const std::vector<Vertex>& walk) const
    {
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            const auto& w = faces_[f].walk;
            if (w.size() != walk.size())
                continue;
            for (std::size_t s = 0; s < w.size(); ++s) {
                bool same = true;
                for (std::size_t i = 0; i < w.size() && same; ++i)
                    same = w[(s + i) % w.size()] == walk[i];
                if (same)
                    return static_cast<int>(f);
            }
        }
        return -1;
    }

private:
    void validate_rotation()
    {
        const int n = graph_.vertex_count();
        if (static_cast<int>(rotation_.size()) != n)
            throw InputError("rotation system has " + std::to_string(rotation_.size()) + " entries for " +
                             std::to_string(n) + " vertices");
        nb_index_.assign(static_cast<std::size_t>(n), {});
        for (Vertex v = 0; v < n; ++v) {
            auto sorted = rotation(v);
            std::sort(sorted.begin(), sorted.end());
            if (sorted != graph_.neighbors(v))
                throw InputError("rotation at vertex " + std::to_string(v) + " does not list its neighbors exactly once");
            auto& idx = nb_index_[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < rotation(v).size(); ++i)
                idx.emplace_back(rotation(v)[i], static_cast<int>(i));
            std::sort(idx.begin(), idx.end());
        }
    }

    void trace_faces()
    {
        const int n = graph_.vertex_count();
        dart_face_.assign(static_cast<std::size_t>(n), {});
        for (Vertex v = 0; v < n; ++v)
            dart_face_[static_cast<std::size_t>(v)].assign(rotation(v).size(), -1);
        faces_.clear();
        for (Vertex s = 0; s < n; ++s) {
            for (std::size_t i = 0; i < rotation(s).size(); ++i) {
                if (dart_face_[static_cast<std::size_t>(s)][i] != -1)
                    continue;
                const int id = static_cast<int>(faces_.size());
                Face face;
                Vertex u = s;
                std::size_t k = i;
                while (dart_face_[static_cast<std::size_t>(u)][k] == -1) {
                    dart_face_[static_cast<std::size_t>(u)][k] = id;
                    face.walk.push_back(u);
                    const Vertex v = rotation(u)[k];
                    // Keep the face on the left: turn to the neighbor just
                    // clockwise of u around v.
                    const auto& rv = rotation(v);
                    k = (static_cast<std::size_t>(index_in_rotation(v, u)) + rv.size() - 1) % rv.size();
                    u = v;
                }
                if (u != s || k != i)
                    throw InputError("inconsistent rotation: facial walk does not close");
                faces_.push_back(std::move(face));
            }
        }
        if (graph_.edge_count() > 0 && is_connected(graph_)) {
            const int euler = graph_.vertex_count() - graph_.edge_count() + face_count();
            if (euler != 2)
                throw InputError("rotation system is not planar: v - e + f = " + std::to_string(euler));
        }
    }

    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::vector<std::pair<Vertex, int>>> nb_index_;
    std::vector<std::vector<int>> dart_face_;
    std::vector<Face> faces_;
};

// Build an embedding from consistently oriented facial cycles. Each face
// (f0, f1, ..., fk) yields the rotation step f1 -> f_{k} at f0, i.e. in the
// counterclockwise order around f0, f1 comes right before the last vertex.
inline RotationEmbedding embedding_from_faces(int n, const std::vector<std::vector<Vertex>>& faces)
{
    std::vector<std::pair<Vertex, Vertex>> edge_list;
    std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
    for (const auto& f : faces) {
        const std::size_t k = f.size();
        if (k < 3)
            throw InputError("face with fewer than 3 vertices");
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex v = f[i];
            const Vertex next = f[(i + 1) % k];
            const Vertex prev = f[(i + k - 1) % k];
            if (v < 0 || v >= n)
                throw InputError("face vertex " + std::to_string(v) + " out of range");
            edge_list.emplace_back(std::min(v, next), std::max(v, next));
            if (!succ[static_cast<std::size_t>(v)].emplace(next, prev).second)
                throw InputError("faces are not consistently oriented at vertex " + std::to_string(v));
        }
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    Graph g(n, edge_list);

    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& s = succ[static_cast<std::size_t>(v)];
        if (s.empty())
            continue;
        Vertex cur = s.begin()->first;
        for (std::size_t step = 0; step < s.size(); ++step) {
            rotation[static_cast<std::size_t>(v)].push_back(cur);
            const auto it = s.find(cur);
            if (it == s.end())
                throw InputError("faces around vertex " + std::to_string(v) + " do not form a disk");
            cur = it->second;
        }
        if (cur != s.begin()->first)
            throw InputError("faces around vertex " + std::to_string(v) + " do not close up");
    }
    return {std::move(g), std::move(rotation)};
}

// True iff every face is a triangle on three distinct vertices (3f = 2e).
inline bool is_triangulation(const RotationEmbedding& e)
{
    const Graph& g = e.graph();
    if (g.vertex_count() < 3 || !is_connected(g))
        return false;
    for (const auto& f : e.faces()) {
        if (f.length() != 3)
            return false;
        if (f.walk[0] == f.walk[1] || f.walk[1] == f.walk[2] || f.walk[0] == f.walk[2])
            return false;
    }
    return 3 * e.face_count() == 2 * g.edge_count();
}

struct DualGraph {
    Graph graph;                    // vertex i <-> face i of the primal
    RotationEmbedding embedding;    // dual rotation: faces across each edge of the walk
    std::vector<Edge> primal_edge;  // dual edge index -> primal edge it crosses
};

// G*: faces as vertices, adjacent iff sharing an edge. Rejects embeddings
// where a face touches itself (bridges) or two faces share several edges,
// both of which rule out a 3-connected input.
inline DualGraph dual_graph(const RotationEmbedding& e)
{
    const Graph& g = e.graph();
    std::vector<std::pair<Vertex, Vertex>> dual_edges;
    std::map<std::pair<int, int>, Edge> crossing;
    for (const auto& ed : g.edges()) {
        const int f1 = e.face_left_of(ed.u, ed.v);
        const int f2 = e.face_left_of(ed.v, ed.u);
        if (f1 == f2)
            throw InputError("edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) +
                             " has the same face on both sides; input is not polyhedral");
        const auto key = std::minmax(f1, f2);
        if (!crossing.emplace(key, ed).second)
            throw InputError("faces " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                             " share more than one edge; input is not polyhedral");
        dual_edges.emplace_back(key.first, key.second);
    }
    DualGraph out;
    out.graph = Graph(e.face_count(), dual_edges);
    out.primal_edge.resize(static_cast<std::size_t>(out.graph.edge_count()));
    for (const auto& [key, ed] : crossing)
        out.primal_edge[static_cast<std::size_t>(out.graph.edge_index(key.first, key.second))] = ed;

    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(e.face_count()));
    for (int f = 0; f < e.face_count(); ++f) {
        const auto& w = e.faces()[static_cast<std::size_t>(f)].walk;
        for (std::size_t i = 0; i < w.size(); ++i)
            rot[static_cast<std::size_t>(f)].push_back(e.face_left_of(w[(i + 1) % w.size()], w[i]));
    }
    out.embedding = RotationEmbedding(out.graph, std::move(rot));
    return out;
}

// Block / cutvertex decomposition.
struct BlockTree {
    std::vector<std::vector<Vertex>> blocks;   // sorted vertex sets
    std::vector<std::vector<Edge>> block_edges;
    std::vector<Vertex> cutvertices;           // ascending
    std::vector<int> edge_block;               // g.edges() index -> block index

    bool is_cutvertex(Vertex v) const { return std::binary_search(cutvertices.begin(), cutvertices.end(), v); }
};

namespace detail {

// Iterative Hopcroft-Tarjan on every component. Isolated vertices get no
// block.
inline BlockTree biconnected_components(const Graph& g)
{
    const int n = g.vertex_count();
    BlockTree bt;
    bt.edge_block.assign(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    std::vector<int> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1)
            continue;
        int root_children = 0;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const Vertex v = fr.v;
            const auto& nb = g.neighbors(v);
            if (fr.next < nb.size()) {
                const Vertex w = nb[fr.next++];
                if (w == fr.parent)
                    continue;
                const int ei = g.edge_index(v, w);
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.push_back(ei);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    if (v == root)
                        ++root_children;
                    stack.push_back({w, v, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                    edge_stack.push_back(ei);
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const Vertex parent = fr.parent;
            stack.pop_back();
            if (parent == -1)
                continue;
            low[static_cast<std::size_t>(parent)] =
                std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
                if (parent != root)
                    is_cut[static_cast<std::size_t>(parent)] = true;
                const int id = static_cast<int>(bt.blocks.size());
                const int stop = g.edge_index(parent, v);
                std::vector<Vertex> verts;
                std::vector<Edge> edges;
                while (true) {
                    const int ei = edge_stack.back();
                    edge_stack.pop_back();
                    bt.edge_block[static_cast<std::size_t>(ei)] = id;
                    const Edge& ed = g.edges()[static_cast<std::size_t>(ei)];
                    edges.push_back(ed);
                    verts.push_back(ed.u);
                    verts.push_back(ed.v);
                    if (ei == stop)
                        break;
                }
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                std::sort(edges.begin(), edges.end());
                bt.blocks.push_back(std::move(verts));
                bt.block_edges.push_back(std::move(edges));
            }
        }
        if (root_children > 1)
            is_cut[static_cast<std::size_t>(root)] = true;
    }
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)])
            bt.cutvertices.push_back(v);
    return bt;
}

} // namespace detail

inline BlockTree blocks_and_cutvertices(const Graph& g)
{
    const auto comps = connected_components(g);
    if (comps.size() > 1) {
        std::string msg = "graph is disconnected; components:";
        for (const auto& c : comps) {
            msg += " {";
            for (std::size_t i = 0; i < c.size() && i < 8; ++i)
                msg += (i ? "," : "") + std::to_string(c[i]);
            if (c.size() > 8)
                msg += ",...";
            msg += "}";
        }
        throw InputError(msg);
    }
    return detail::biconnected_components(g);
}

} // namespace untangle

#endif // UNTANGLE_EMBEDDING_HPP
