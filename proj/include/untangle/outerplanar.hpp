#ifndef UNTANGLE_OUTERPLANAR_HPP
#define UNTANGLE_OUTERPLANAR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "untangle/embedding.hpp"
#include "untangle/error.hpp"
#include "untangle/graph.hpp"

namespace untangle {

// One block of an outerplanar graph. For a bridge, cycle holds its two
// endpoints and there are no faces.
struct OuterplanarBlock {
    std::vector<Vertex> cycle;                    // outer (Hamiltonian) cycle, global ids
    std::vector<Edge> chords;
    std::vector<std::vector<Vertex>> faces;       // inner facial cycles, each in outer-cycle order
    std::vector<std::pair<int, int>> face_tree;   // faces sharing a chord
    std::unordered_map<Vertex, int> position;     // index in cycle
    std::unordered_map<Vertex, std::vector<int>> faces_at;

    bool is_bridge() const { return cycle.size() == 2; }
    int size() const { return static_cast<int>(cycle.size()); }

    // Steps from `from` to `to` along the cycle order.
    int offset(Vertex from, Vertex to) const
    {
        const int h = size();
        return ((position.at(to) - position.at(from)) % h + h) % h;
    }
};

struct OuterplanarStructure {
    Graph graph;
    BlockTree blocks;
    std::vector<OuterplanarBlock> block_info; // parallel to blocks.blocks

    int block_of_edge(Vertex a, Vertex b) const
    {
        const int idx = graph.edge_index(a, b);
        if (idx < 0)
            throw InputError("no edge " + std::to_string(a) + "-" + std::to_string(b));
        return blocks.edge_block[static_cast<std::size_t>(idx)];
    }
};

struct OuterplanarRejection {
    enum class Reason { edge_excess, no_outer_cycle, crossing_chords };
    Reason reason;
    int block = -1;
    std::string detail;

    std::string describe() const
    {
        switch (reason) {
        case Reason::edge_excess: return "not outerplanar: " + detail;
        case Reason::no_outer_cycle: return "not outerplanar: block " + std::to_string(block) + " " + detail;
        case Reason::crossing_chords: return "not outerplanar: block " + std::to_string(block) + " " + detail;
        }
        return "not outerplanar";
    }
};

struct Recognition {
    std::optional<OuterplanarStructure> structure;
    std::optional<OuterplanarRejection> rejection;

    bool accepted() const { return structure.has_value(); }
};

struct FaceTree {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
};

namespace detail {

// Outer cycle of a 2-connected block on local vertices [0, h), or nullopt.
// Degree-2 vertices are peeled one at a time; a peeled x with neighbors
// y, z forces y-x-z to be consecutive on the cycle, and y-z is added if
// missing. The cycle is rebuilt by reinserting in reverse.
inline std::optional<std::vector<int>> peel_outer_cycle(int h, const std::vector<Edge>& edges, std::string& why)
{
    std::vector<std::unordered_set<int>> adj(static_cast<std::size_t>(h));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<char> alive(static_cast<std::size_t>(h), 1);
    std::vector<int> queue;
    for (int x = 0; x < h; ++x)
        if (adj[static_cast<std::size_t>(x)].size() == 2)
            queue.push_back(x);
    struct Peel {
        int x, y, z;
    };
    std::vector<Peel> peels;
    int remaining = h;
    while (remaining > 3) {
        int x = -1;
        while (!queue.empty()) {
            const int c = queue.back();
            queue.pop_back();
            if (alive[static_cast<std::size_t>(c)] && adj[static_cast<std::size_t>(c)].size() == 2) {
                x = c;
                break;
            }
        }
        if (x < 0) {
            why = "has no degree-2 vertex left after peeling " + std::to_string(h - remaining) + " of " +
                  std::to_string(h) + " vertices";
            return std::nullopt;
        }
        auto it = adj[static_cast<std::size_t>(x)].begin();
        const int y = *it++;
        const int z = *it;
        alive[static_cast<std::size_t>(x)] = 0;
        --remaining;
        adj[static_cast<std::size_t>(x)].clear();
        adj[static_cast<std::size_t>(y)].erase(x);
        adj[static_cast<std::size_t>(z)].erase(x);
        adj[static_cast<std::size_t>(y)].insert(z);
        adj[static_cast<std::size_t>(z)].insert(y);
        peels.push_back({x, y, z});
        for (int w : {y, z})
            if (adj[static_cast<std::size_t>(w)].size() == 2)
                queue.push_back(w);
    }
    std::vector<int> last;
    for (int x = 0; x < h; ++x)
        if (alive[static_cast<std::size_t>(x)])
            last.push_back(x);
    for (int x : last) {
        if (adj[static_cast<std::size_t>(x)].size() != 2) {
            why = "does not reduce to a triangle";
            return std::nullopt;
        }
    }
    std::vector<int> next(static_cast<std::size_t>(h), -1), prev(static_cast<std::size_t>(h), -1);
    for (std::size_t i = 0; i < 3; ++i) {
        next[static_cast<std::size_t>(last[i])] = last[(i + 1) % 3];
        prev[static_cast<std::size_t>(last[(i + 1) % 3])] = last[i];
    }
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        int a = it->y;
        int b = it->z;
        if (next[static_cast<std::size_t>(b)] == a)
            std::swap(a, b);
        if (next[static_cast<std::size_t>(a)] != b) {
            why = "has no Hamiltonian outer cycle (vertex " + std::to_string(it->x) + " cannot be reinserted)";
            return std::nullopt;
        }
        next[static_cast<std::size_t>(a)] = it->x;
        prev[static_cast<std::size_t>(it->x)] = a;
        next[static_cast<std::size_t>(it->x)] = b;
        prev[static_cast<std::size_t>(b)] = it->x;
    }
    std::vector<int> cycle;
    int cur = 0;
    do {
        cycle.push_back(cur);
        cur = next[static_cast<std::size_t>(cur)];
    } while (cur != 0 && static_cast<int>(cycle.size()) <= h);
    if (static_cast<int>(cycle.size()) != h) {
        why = "outer cycle reconstruction failed";
        return std::nullopt;
    }
    return cycle;
}

// Chords as position intervals must be laminar (nested or disjoint).
inline std::optional<std::pair<Edge, Edge>> crossing_chord_pair(std::vector<std::pair<int, int>> intervals,
                                                                const std::vector<int>& cycle)
{
    std::sort(intervals.begin(), intervals.end(), [](const auto& p, const auto& q) {
        return p.first < q.first || (p.first == q.first && p.second > q.second);
    });
    std::vector<std::pair<int, int>> stack;
    for (const auto& iv : intervals) {
        while (!stack.empty() && stack.back().second <= iv.first)
            stack.pop_back();
        if (!stack.empty() && stack.back().second < iv.second) {
            const auto& top = stack.back();
            return std::make_pair(Edge(cycle[static_cast<std::size_t>(top.first)], cycle[static_cast<std::size_t>(top.second)]),
                                  Edge(cycle[static_cast<std::size_t>(iv.first)], cycle[static_cast<std::size_t>(iv.second)]));
        }
        stack.push_back(iv);
    }
    return std::nullopt;
}

} // namespace detail

inline FaceTree face_tree(const OuterplanarBlock& block)
{
    return {static_cast<int>(block.faces.size()), block.face_tree};
}

// Outerplanarity test with a certificate either way: per block an outer
// cycle with laminar chords, or the reason no such cycle exists.
// Disconnected graphs are handled component by component.
inline Recognition recognize(const Graph& g)
{
    Recognition result;
    const int n = g.vertex_count();
    if (n >= 2 && g.edge_count() > 2 * n - 3) {
        result.rejection = OuterplanarRejection{OuterplanarRejection::Reason::edge_excess, -1,
                                                "e = " + std::to_string(g.edge_count()) + " > 2n - 3 = " +
                                                    std::to_string(2 * n - 3)};
        return result;
    }
    OuterplanarStructure st;
    st.graph = g;
    st.blocks = detail::biconnected_components(g);
    for (std::size_t b = 0; b < st.blocks.blocks.size(); ++b) {
        const auto& verts = st.blocks.blocks[b];
        const auto& bedges = st.blocks.block_edges[b];
        OuterplanarBlock info;
        const int h = static_cast<int>(verts.size());
        auto local = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        if (h == 2) {
            info.cycle = verts;
            info.position = {{verts[0], 0}, {verts[1], 1}};
            st.block_info.push_back(std::move(info));
            continue;
        }
        if (static_cast<int>(bedges.size()) > 2 * h - 3) {
            result.rejection = OuterplanarRejection{OuterplanarRejection::Reason::edge_excess, static_cast<int>(b),
                                                    "block has e = " + std::to_string(bedges.size()) + " > 2n - 3 = " +
                                                        std::to_string(2 * h - 3)};
            return result;
        }
        std::vector<Edge> ledges;
        for (const auto& e : bedges)
            ledges.emplace_back(local(e.u), local(e.v));
        std::string why;
        const auto cyc = detail::peel_outer_cycle(h, ledges, why);
        if (!cyc) {
            result.rejection = OuterplanarRejection{OuterplanarRejection::Reason::no_outer_cycle, static_cast<int>(b), why};
            return result;
        }
        std::vector<int> pos(static_cast<std::size_t>(h));
        for (int i = 0; i < h; ++i)
            pos[static_cast<std::size_t>((*cyc)[static_cast<std::size_t>(i)])] = i;
        std::vector<std::pair<int, int>> intervals;
        for (const auto& e : ledges) {
            int p = pos[static_cast<std::size_t>(e.u)];
            int q = pos[static_cast<std::size_t>(e.v)];
            if (p > q)
                std::swap(p, q);
            if (q - p == 1 || (p == 0 && q == h - 1))
                continue;
            intervals.emplace_back(p, q);
        }
        std::vector<Vertex> gcycle;
        for (int x : *cyc)
            gcycle.push_back(verts[static_cast<std::size_t>(x)]);
        if (const auto bad = detail::crossing_chord_pair(intervals, gcycle)) {
            // crossing_chord_pair reports positions mapped through gcycle
            result.rejection = OuterplanarRejection{
                OuterplanarRejection::Reason::crossing_chords, static_cast<int>(b),
                "chords " + std::to_string(bad->first.u) + "-" + std::to_string(bad->first.v) + " and " +
                    std::to_string(bad->second.u) + "-" + std::to_string(bad->second.v) + " cross w.r.t. the outer cycle"};
            return result;
        }
        // Any cycle missing from the block's edges would mean the peeling
        // invented an outer edge.
        for (int i = 0; i < h; ++i) {
            const Vertex a = gcycle[static_cast<std::size_t>(i)];
            const Vertex c = gcycle[static_cast<std::size_t>((i + 1) % h)];
            if (!g.has_edge(a, c)) {
                result.rejection = OuterplanarRejection{OuterplanarRejection::Reason::no_outer_cycle, static_cast<int>(b),
                                                        "outer cycle would need the missing edge " + std::to_string(a) +
                                                            "-" + std::to_string(c)};
                return result;
            }
        }
        info.cycle = gcycle;
        for (int i = 0; i < h; ++i)
            info.position[gcycle[static_cast<std::size_t>(i)]] = i;
        for (const auto& [p, q] : intervals)
            info.chords.emplace_back(gcycle[static_cast<std::size_t>(p)], gcycle[static_cast<std::size_t>(q)]);
        std::sort(info.chords.begin(), info.chords.end());

        // Faces from the convex-position rotation: neighbors by increasing
        // cyclic offset. The outer face sits left of cycle[1] -> cycle[0].
        Graph lg(h, ledges);
        std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(h));
        for (int x = 0; x < h; ++x) {
            auto nb = lg.neighbors(x);
            const int px = pos[static_cast<std::size_t>(x)];
            std::sort(nb.begin(), nb.end(), [&](int a, int c) {
                return (pos[static_cast<std::size_t>(a)] - px + h) % h < (pos[static_cast<std::size_t>(c)] - px + h) % h;
            });
            rot[static_cast<std::size_t>(x)] = nb;
        }
        const RotationEmbedding emb(lg, rot);
        const int outer = emb.face_left_of((*cyc)[1], (*cyc)[0]);
        std::unordered_map<std::uint64_t, std::vector<int>> chord_faces;
        for (int f = 0; f < emb.face_count(); ++f) {
            if (f == outer)
                continue;
            auto w = emb.faces()[static_cast<std::size_t>(f)].walk;
            std::sort(w.begin(), w.end(), [&](int a, int c) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(c)]; });
            std::vector<Vertex> gw;
            for (int x : w)
                gw.push_back(verts[static_cast<std::size_t>(x)]);
            const int id = static_cast<int>(info.faces.size());
            for (std::size_t i = 0; i < gw.size(); ++i) {
                info.faces_at[gw[i]].push_back(id);
                chord_faces[edge_key(gw[i], gw[(i + 1) % gw.size()])].push_back(id);
            }
            info.faces.push_back(std::move(gw));
        }
        for (const auto& ch : info.chords) {
            const auto& fs = chord_faces[edge_key(ch.u, ch.v)];
            if (fs.size() != 2)
                throw VerificationError("chord not shared by exactly two inner faces");
            info.face_tree.emplace_back(std::min(fs[0], fs[1]), std::max(fs[0], fs[1]));
        }
        std::sort(info.face_tree.begin(), info.face_tree.end());
        st.block_info.push_back(std::move(info));
    }
    result.structure = std::move(st);
    return result;
}

} // namespace untangle

#endif // UNTANGLE_OUTERPLANAR_HPP
