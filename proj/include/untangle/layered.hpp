#ifndef UNTANGLE_LAYERED_HPP
#define UNTANGLE_LAYERED_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"
#include "untangle/outerplanar.hpp"

namespace untangle {

// Drawing whose vertices sit on horizontal lines y = layer.
struct LayeredDrawing {
    Drawing drawing;
    std::vector<int> layer;

    int layer_count() const
    {
        if (layer.empty())
            return 0;
        const auto [lo, hi] = std::minmax_element(layer.begin(), layer.end());
        return *hi - *lo + 1;
    }
};

// Problems with ld as an almost layered drawing of g; empty means valid.
inline std::vector<std::string> layered_problems(const Graph& g, const LayeredDrawing& ld)
{
    std::vector<std::string> out;
    const int n = g.vertex_count();
    if (static_cast<int>(ld.layer.size()) != n) {
        out.push_back("layer table has " + std::to_string(ld.layer.size()) + " entries for " + std::to_string(n) +
                      " vertices");
        return out;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!ld.drawing.has(v)) {
            out.push_back("vertex " + std::to_string(v) + " has no position");
            continue;
        }
        if (ld.layer[static_cast<std::size_t>(v)] < 1)
            out.push_back("vertex " + std::to_string(v) + " on non-positive layer");
        if (ld.drawing.at(v).y != ld.layer[static_cast<std::size_t>(v)])
            out.push_back("vertex " + std::to_string(v) + " off its layer line");
    }
    if (!out.empty())
        return out;
    for (const auto& e : g.edges()) {
        const int du = ld.layer[static_cast<std::size_t>(e.u)];
        const int dv = ld.layer[static_cast<std::size_t>(e.v)];
        if (std::abs(du - dv) > 1)
            out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " spans layers " +
                          std::to_string(du) + " and " + std::to_string(dv));
    }
    for (const auto& viol : crossing_report(g, ld.drawing))
        out.push_back(viol.describe());
    return out;
}

namespace detail {

// Recursive construction in two mutually recursive steps. Every call owns
// a triangle whose bottom corner(s) are already placed and whose top edge
// lies at least |fragment| layers above.
class LayeredBuilder {
public:
    LayeredBuilder(const OuterplanarStructure& st, Drawing& d) : st_(st), g_(st.graph), d_(d) {}

    // Claim 1: v placed at apex, all other vertices strictly inside the
    // triangle (apex, left, right) on layers apex.y + 1 .. apex.y + n - 1.
    void claim1(std::vector<Vertex> verts, Vertex v, const Point& apex, const Point& left, const Point& right)
    {
        const long n = static_cast<long>(verts.size());
        if (n == 1)
            return;
        const Rational top = apex.y + n;
        const Point tl = lerp(apex, left, Rational(top - apex.y) / (left.y - apex.y));
        const Point tr = lerp(apex, right, Rational(top - apex.y) / (right.y - apex.y));
        const Subgraph sub = induced_subgraph(g_, verts);
        const Vertex lv = sub.local(v);
        const int deg = sub.graph.degree(lv);
        if (deg == 0)
            throw VerificationError("fragment at vertex " + std::to_string(v) + " is disconnected");
        const Point l2 = lerp(apex, tl, make_rational(1, n));
        const Point r2 = lerp(apex, tr, make_rational(1, n));

        if (deg == 1) {
            const Vertex w = sub.to_global[static_cast<std::size_t>(sub.graph.neighbors(lv)[0])];
            const Point a2 = midpoint(l2, r2);
            d_.set(w, a2);
            verts.erase(std::find(verts.begin(), verts.end(), v));
            claim1(std::move(verts), w, a2, tl, tr);
            return;
        }

        const BlockTree bt = biconnected_components(sub.graph);
        if (bt.is_cutvertex(lv)) {
            const auto comps = components_without(sub, {lv});
            const long s = static_cast<long>(comps.size());
            for (long i = 0; i < s; ++i) {
                auto part = comps[static_cast<std::size_t>(i)];
                part.push_back(v);
                claim1(std::move(part), v, apex, lerp(tl, tr, make_rational(i, s)), lerp(tl, tr, make_rational(i + 1, s)));
            }
            return;
        }

        // Same block: the vertices of all faces at v go on the next layer,
        // in the order the faces follow each other around v.
        const Vertex w0 = sub.to_global[static_cast<std::size_t>(sub.graph.neighbors(lv)[0])];
        const auto& block = st_.block_info[static_cast<std::size_t>(st_.block_of_edge(v, w0))];
        std::vector<Vertex> fan = fan_vertices(block, sub, {v});
        std::sort(fan.begin(), fan.end(), [&](Vertex a, Vertex b) { return block.offset(v, a) < block.offset(v, b); });
        place_row(fan, l2, r2);
        finish_row(sub, {v}, fan, tl, tr);
    }

    // Claim 2: v at a, u at b on the same layer, uv an outer edge; the
    // rest goes strictly inside the triangle (a, b, c).
    void claim2(const std::vector<Vertex>& verts, Vertex v, Vertex u, const Point& c)
    {
        const long n = static_cast<long>(verts.size());
        if (n == 2)
            return;
        const Point a = d_.at(v);
        const Point b = d_.at(u);
        const Rational top = a.y + n;
        const Point m = midpoint(a, b);
        const Point ct = lerp(m, c, Rational(top - a.y) / (c.y - a.y));
        const Subgraph sub = induced_subgraph(g_, verts);
        const Vertex lv = sub.local(v);
        const Vertex lu = sub.local(u);
        const BlockTree bt = biconnected_components(sub.graph);

        if (bt.is_cutvertex(lv) || bt.is_cutvertex(lu)) {
            const bool at_v = bt.is_cutvertex(lv);
            const Vertex pivot = at_v ? v : u;
            const Vertex lpivot = at_v ? lv : lu;
            const Vertex other = at_v ? u : v;
            // T_s is cut off by the layer below the top, on the side of other.
            const Point dpt = lerp(d_.at(other), ct, make_rational(n - 1, n));
            auto comps = components_without(sub, {lpivot});
            std::vector<Vertex> main;
            std::vector<std::vector<Vertex>> rest;
            for (auto& comp : comps) {
                if (std::binary_search(comp.begin(), comp.end(), other))
                    main = std::move(comp);
                else
                    rest.push_back(std::move(comp));
            }
            main.push_back(pivot);
            std::sort(main.begin(), main.end());
            claim2(main, pivot, other, dpt);
            const long s = static_cast<long>(rest.size());
            const Point apex = d_.at(pivot);
            for (long i = 0; i < s; ++i) {
                auto part = std::move(rest[static_cast<std::size_t>(i)]);
                part.push_back(pivot);
                claim1(std::move(part), pivot, apex, lerp(dpt, ct, make_rational(i, s)), lerp(dpt, ct, make_rational(i + 1, s)));
            }
            return;
        }

        const auto& block = st_.block_info[static_cast<std::size_t>(st_.block_of_edge(v, u))];
        std::vector<Vertex> fan = fan_vertices(block, sub, {v, u});
        if (fan.empty())
            throw VerificationError("no face on edge " + std::to_string(v) + "-" + std::to_string(u));
        // v's side first.
        const bool u_follows_v = block.offset(v, fan.front()) > block.offset(v, u);
        std::sort(fan.begin(), fan.end(), [&](Vertex x, Vertex y) {
            return u_follows_v ? block.offset(v, x) > block.offset(v, y) : block.offset(v, x) < block.offset(v, y);
        });
        const Point a2 = lerp(a, ct, make_rational(1, n));
        const Point b2 = lerp(b, ct, make_rational(1, n));
        place_row(fan, a2, b2);
        finish_row(sub, {v, u}, fan, lerp(a, ct, make_rational(n - 1, n)), lerp(b, ct, make_rational(n - 1, n)));
    }

private:
    // Vertices (other than anchors) of the block's inner faces that touch
    // an anchor and lie entirely inside the fragment.
    static std::vector<Vertex> fan_vertices(const OuterplanarBlock& block, const Subgraph& sub,
                                            const std::vector<Vertex>& anchors)
    {
        std::vector<Vertex> out;
        for (Vertex x : anchors) {
            const auto it = block.faces_at.find(x);
            if (it == block.faces_at.end())
                continue;
            for (int f : it->second) {
                const auto& face = block.faces[static_cast<std::size_t>(f)];
                if (!std::all_of(face.begin(), face.end(), [&](Vertex y) { return sub.local(y) >= 0; }))
                    continue;
                for (Vertex y : face)
                    if (std::find(anchors.begin(), anchors.end(), y) == anchors.end())
                        out.push_back(y);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Components of sub minus the given local vertices, as sorted global
    // vertex lists ordered by smallest member.
    static std::vector<std::vector<Vertex>> components_without(const Subgraph& sub, const std::vector<Vertex>& removed)
    {
        const int n = sub.graph.vertex_count();
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        for (Vertex r : removed)
            comp[static_cast<std::size_t>(r)] = -2;
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
                const Vertex x = stack.back();
                stack.pop_back();
                out.back().push_back(sub.to_global[static_cast<std::size_t>(x)]);
                for (Vertex y : sub.graph.neighbors(x)) {
                    if (comp[static_cast<std::size_t>(y)] == -1) {
                        comp[static_cast<std::size_t>(y)] = id;
                        stack.push_back(y);
                    }
                }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }

    // Equally spaced in the open segment (from, to).
    void place_row(const std::vector<Vertex>& row, const Point& from, const Point& to)
    {
        const long k = static_cast<long>(row.size());
        for (long i = 0; i < k; ++i)
            d_.set(row[static_cast<std::size_t>(i)], lerp(from, to, make_rational(i + 1, k + 1)));
    }

    // Hang the leftover fragments of sub off the freshly placed row. Each
    // fragment attaches to one row vertex or to two consecutive ones; the
    // top edge (top_a, top_b) is divided into a comb of 3|row| parts so
    // the fragments' triangles are pairwise interior-disjoint.
    void finish_row(const Subgraph& sub, const std::vector<Vertex>& anchors, std::vector<Vertex> row,
                    Point top_a, Point top_b)
    {
        std::vector<Vertex> placed_local;
        for (Vertex x : anchors)
            placed_local.push_back(sub.local(x));
        for (Vertex x : row)
            placed_local.push_back(sub.local(x));
        // Physical left-to-right order for the comb.
        std::sort(row.begin(), row.end(), [&](Vertex x, Vertex y) { return d_.at(x).x < d_.at(y).x; });
        if (top_b.x < top_a.x)
            std::swap(top_a, top_b);
        std::map<Vertex, int> slot;
        for (std::size_t i = 0; i < row.size(); ++i)
            slot[row[i]] = static_cast<int>(i);

        for (const auto& e : sub.graph.edges()) {
            const Vertex x = sub.to_global[static_cast<std::size_t>(e.u)];
            const Vertex y = sub.to_global[static_cast<std::size_t>(e.v)];
            const bool rx = slot.count(x) > 0;
            const bool ry = slot.count(y) > 0;
            if (rx && ry && std::abs(slot[x] - slot[y]) != 1)
                throw VerificationError("row edge " + std::to_string(x) + "-" + std::to_string(y) +
                                        " joins non-consecutive vertices");
        }

        std::map<Vertex, std::vector<Vertex>> single;
        std::map<std::pair<int, int>, std::vector<Vertex>> pair;
        for (auto& comp : components_without(sub, placed_local)) {
            std::vector<Vertex> att;
            for (Vertex x : comp)
                for (Vertex y : g_.neighbors(x))
                    if (sub.local(y) >= 0 && !std::binary_search(comp.begin(), comp.end(), y))
                        att.push_back(y);
            std::sort(att.begin(), att.end());
            att.erase(std::unique(att.begin(), att.end()), att.end());
            for (Vertex x : att)
                if (slot.count(x) == 0)
                    throw VerificationError("fragment attached to anchor " + std::to_string(x));
            if (att.size() == 1) {
                auto& bucket = single[att[0]];
                bucket.insert(bucket.end(), comp.begin(), comp.end());
            } else if (att.size() == 2) {
                int i = slot[att[0]];
                int j = slot[att[1]];
                if (i > j)
                    std::swap(i, j);
                if (j != i + 1)
                    throw VerificationError("fragment spans non-consecutive row vertices");
                auto& bucket = pair[{i, j}];
                bucket.insert(bucket.end(), comp.begin(), comp.end());
            } else {
                throw VerificationError("fragment with " + std::to_string(att.size()) + " attachments");
            }
        }

        const long parts = 3 * static_cast<long>(row.size());
        auto q = [&](long j) { return lerp(top_a, top_b, make_rational(j, parts)); };
        for (auto& [x, verts] : single) {
            const long i = slot[x] + 1;
            verts.push_back(x);
            claim1(std::move(verts), x, d_.at(x), q(3 * i - 2), q(3 * i - 1));
        }
        for (auto& [ij, verts] : pair) {
            const Vertex x = row[static_cast<std::size_t>(ij.first)];
            const Vertex y = row[static_cast<std::size_t>(ij.second)];
            verts.push_back(x);
            verts.push_back(y);
            std::sort(verts.begin(), verts.end());
            claim2(verts, x, y, q(3 * (ij.first + 1)));
        }
    }

    const OuterplanarStructure& st_;
    const Graph& g_;
    Drawing& d_;
};

} // namespace detail

// Almost layered drawing of a connected outerplanar graph: root on layer
// 1, every other vertex on a higher layer, every edge within one layer or
// between consecutive layers.
inline LayeredDrawing almost_layered_draw(const OuterplanarStructure& st, Vertex root = 0)
{
    const Graph& g = st.graph;
    const int n = g.vertex_count();
    if (n == 0)
        throw InputError("empty graph");
    g.check_vertex(root);
    if (!is_connected(g))
        throw InputError("almost_layered_draw needs a connected graph");
    LayeredDrawing ld;
    ld.drawing = Drawing(n);
    const Point apex(0, 1);
    ld.drawing.set(root, apex);
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        all[static_cast<std::size_t>(v)] = v;
    detail::LayeredBuilder builder(st, ld.drawing);
    builder.claim1(std::move(all), root, apex, Point(-n, n + 1), Point(n, n + 1));
    ld.layer.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const Rational& y = ld.drawing.at(v).y;
        if (y.get_den() != 1)
            throw VerificationError("vertex " + std::to_string(v) + " off the integer layers");
        ld.layer[static_cast<std::size_t>(v)] = static_cast<int>(y.get_num().get_si());
    }
    return ld;
}

inline LayeredDrawing almost_layered_draw(const Graph& g, Vertex root = 0)
{
    const Recognition rec = recognize(g);
    if (!rec.accepted())
        throw ScopeError(rec.rejection->describe());
    return almost_layered_draw(*rec.structure, root);
}

} // namespace untangle

#endif // UNTANGLE_LAYERED_HPP
