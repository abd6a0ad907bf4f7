#ifndef UNTANGLE_CIRCUMFERENCE_HPP
#define UNTANGLE_CIRCUMFERENCE_HPP

#include <cstdint>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/graph.hpp"

namespace untangle {

struct CycleResult {
    int length = 0;             // 0 when the graph is acyclic
    std::vector<Vertex> cycle;  // starts at its smallest vertex
    bool exact = true;          // false: search hit the node budget, length is a lower bound
    std::uint64_t nodes = 0;
};

// c(G), the length of a longest cycle, by depth-first branch and bound.
//
// Cycles are enumerated from their smallest vertex s over vertices > s,
// extending paths in ascending neighbor order, so the first longest cycle
// met is the lexicographically smallest representation. A branch is cut
// when the path length plus the number of still reachable vertices cannot
// beat the incumbent.
inline CycleResult circumference(const Graph& g, std::uint64_t node_budget = 50'000'000)
{
    const int n = g.vertex_count();
    if (n < 3)
        throw InputError("circumference needs at least 3 vertices");

    CycleResult best;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path;
    std::vector<int> mark(static_cast<std::size_t>(n), 0);
    int stamp = 0;
    std::vector<Vertex> bfs;
    bool out_of_budget = false;

    for (Vertex s = 0; s + 2 < n && !out_of_budget; ++s) {
        if (best.length >= n - s)
            break;

        // Vertices reachable from the path end through unused vertices > s.
        auto reachable = [&](Vertex from) {
            ++stamp;
            bfs.clear();
            bfs.push_back(from);
            mark[static_cast<std::size_t>(from)] = stamp;
            int count = 0;
            for (std::size_t i = 0; i < bfs.size(); ++i) {
                for (Vertex w : g.neighbors(bfs[i])) {
                    if (w <= s || on_path[static_cast<std::size_t>(w)] || mark[static_cast<std::size_t>(w)] == stamp)
                        continue;
                    mark[static_cast<std::size_t>(w)] = stamp;
                    bfs.push_back(w);
                    ++count;
                }
            }
            return count;
        };

        struct Frame {
            Vertex v;
            std::size_t next;
        };
        std::vector<Frame> stack;
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = 1;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nb = g.neighbors(fr.v);
            if (fr.next >= nb.size()) {
                on_path[static_cast<std::size_t>(fr.v)] = 0;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            const Vertex w = nb[fr.next++];
            if (w == s) {
                // Close the cycle; the direction check keeps one of the two
                // orientations (second vertex below the last one).
                const int len = static_cast<int>(path.size());
                if (len >= 3 && len > best.length && path[1] < path.back()) {
                    best.length = len;
                    best.cycle = path;
                }
                continue;
            }
            if (w < s || on_path[static_cast<std::size_t>(w)])
                continue;
            if (++best.nodes > node_budget) {
                out_of_budget = true;
                break;
            }
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            // Bound: the best cycle through this path uses at most the
            // reachable vertices plus the path itself.
            if (static_cast<int>(path.size()) + reachable(w) <= best.length) {
                on_path[static_cast<std::size_t>(w)] = 0;
                path.pop_back();
                continue;
            }
            stack.push_back({w, 0});
        }
        for (Vertex v : path)
            on_path[static_cast<std::size_t>(v)] = 0;
    }
    best.exact = !out_of_budget;
    return best;
}

} // namespace untangle

#endif // UNTANGLE_CIRCUMFERENCE_HPP
