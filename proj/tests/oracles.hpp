// Slow, obviously-correct reference implementations used only by tests.
#ifndef UNTANGLE_TESTS_ORACLES_HPP
#define UNTANGLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "untangle/embedding.hpp"
#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"

namespace oracle {

using namespace untangle;

inline Graph make(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return Graph(n, edges); }

// Largest collinear subset by checking every triple against every pair.
inline int collinear_triples(const std::vector<Point>& pts)
{
    const std::size_t n = pts.size();
    if (n <= 2)
        return static_cast<int>(n);
    int best = 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int c = 2;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j && orientation(pts[i], pts[j], pts[k]) == 0)
                    ++c;
            best = std::max(best, c);
        }
    return best;
}

// Longest cycle length by DP over (subset, end) from the subset's
// smallest vertex. n <= 16.
inline int longest_cycle(const Graph& g)
{
    const int n = g.vertex_count();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        // reach[mask] bitset of end vertices of paths from s covering mask
        std::vector<std::uint32_t> reach(1u << n, 0);
        reach[1u << s] = 1u << s;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (!(mask & (1u << s)) || reach[mask] == 0)
                continue;
            if ((mask & ((1u << s) - 1)) != 0)
                continue; // s must be the smallest vertex
            for (int v = 0; v < n; ++v) {
                if (!(reach[mask] & (1u << v)))
                    continue;
                const int len = __builtin_popcount(mask);
                if (len >= 3 && g.has_edge(v, s))
                    best = std::max(best, len);
                for (Vertex w : g.neighbors(v))
                    if (w > s && !(mask & (1u << w)))
                        reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return best;
}

// Longest strictly monotone subsequence by the quadratic DP.
template <class T>
int lis_dp(const std::vector<T>& a)
{
    if (a.empty())
        return 0;
    int best = 1;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> len(a.size(), 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (dir == 0 ? a[j] < a[i] : a[i] < a[j])
                    len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, *std::max_element(len.begin(), len.end()));
    }
    return best;
}

// Brute-force isomorphism with degree pruning, n <= 12.
inline bool isomorphic(const Graph& a, const Graph& b)
{
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(w)])
                continue;
            bool okay = true;
            for (int u = 0; u < v && okay; ++u)
                okay = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
            if (!okay)
                continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (go(v + 1))
                return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return go(0);
}

// Outerplanarity of a small graph: some cyclic order of all vertices in
// which no two edges cross as chords of a convex polygon.
inline bool outerplanar_bruteforce(const Graph& g)
{
    const int n = g.vertex_count();
    if (n <= 3)
        return true;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    do {
        if (perm[0] != 0)
            break;
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        bool crossing = false;
        const auto& es = g.edges();
        for (std::size_t i = 0; i < es.size() && !crossing; ++i)
            for (std::size_t j = i + 1; j < es.size() && !crossing; ++j) {
                int a = pos[static_cast<std::size_t>(es[i].u)], b = pos[static_cast<std::size_t>(es[i].v)];
                int c = pos[static_cast<std::size_t>(es[j].u)], d = pos[static_cast<std::size_t>(es[j].v)];
                if (a > b)
                    std::swap(a, b);
                if (c > d)
                    std::swap(c, d);
                if (a == c || a == d || b == c || b == d)
                    continue;
                const bool c_in = a < c && c < b;
                const bool d_in = a < d && d < b;
                crossing = c_in != d_in;
            }
        if (!crossing)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Half-plane of q relative to p, then counterclockwise angle order.
inline bool angle_less(const Point& p, const Point& a, const Point& b)
{
    auto half = [&](const Point& q) {
        const int sy = sgn(q.y - p.y);
        return sy > 0 || (sy == 0 && sgn(q.x - p.x) > 0) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    return orientation(p, a, b) > 0;
}

// Faces traced from the rotation read off a straight-line drawing.
inline RotationEmbedding geometric_embedding(const Graph& g, const Drawing& d)
{
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return angle_less(d.at(v), d.at(a), d.at(b)); });
        rot[static_cast<std::size_t>(v)] = nb;
    }
    return RotationEmbedding(g, rot);
}

// Faces as vertex sets, sorted, for order-insensitive comparison.
inline std::vector<std::vector<Vertex>> face_sets(const RotationEmbedding& e)
{
    std::vector<std::vector<Vertex>> out;
    for (const auto& f : e.faces()) {
        auto w = f.walk;
        std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

#endif // UNTANGLE_TESTS_ORACLES_HPP
