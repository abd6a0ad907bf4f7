#ifndef UNTANGLE_GEOMETRY_HPP
#define UNTANGLE_GEOMETRY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/graph.hpp"
#include "untangle/rational.hpp"

namespace untangle {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(long x_, long y_) : x(x_), y(y_) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic (x, then y). Along any line this is a total order.
    friend bool operator<(const Point& a, const Point& b)
    {
        const int c = cmp(a.x, b.x);
        return c < 0 || (c == 0 && a.y < b.y);
    }
};

inline Point midpoint(const Point& a, const Point& b)
{
    return {Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2)};
}

// a + (b - a) * t
inline Point lerp(const Point& a, const Point& b, const Rational& t)
{
    return {Rational(a.x + (b.x - a.x) * t), Rational(a.y + (b.y - a.y) * t)};
}

// Sign of the signed area of pqr: +1 counterclockwise, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r)
{
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

// Twice the signed area of a closed polygon.
inline Rational signed_area2(const std::vector<Point>& poly)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        acc += a.x * b.y - a.y * b.x;
    }
    return acc;
}

// {(x, y) : a x + b y = c}, scaled so the first nonzero of (a, b) is 1.
struct Line {
    Rational a;
    Rational b;
    Rational c;

    Line() : a(0), b(1), c(0) {}

    Line(Rational a_, Rational b_, Rational c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_))
    {
        if (sgn(a) == 0 && sgn(b) == 0)
            throw InputError("degenerate line: a = b = 0");
        const Rational s = sgn(a) != 0 ? a : b;
        a /= s;
        b /= s;
        c /= s;
    }

    static Line through(const Point& p, const Point& q)
    {
        if (p == q)
            throw InputError("line through coincident points");
        Rational a = q.y - p.y;
        Rational b = p.x - q.x;
        Rational c = a * p.x + b * p.y;
        return {std::move(a), std::move(b), std::move(c)};
    }

    static Line horizontal(const Rational& y) { return {Rational(0), Rational(1), y}; }

    // a x + b y - c
    Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }
    int side(const Point& p) const { return sgn(eval(p)); }
    bool contains(const Point& p) const { return side(p) == 0; }

    // Coordinate along the line direction (-b, a), up to an affine shift.
    Rational along(const Point& p) const { return -b * p.x + a * p.y; }

    friend bool operator==(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b && l.c == m.c; }
};

struct Segment {
    Point a;
    Point b;
};

enum class SegmentRelation { disjoint, proper_cross, endpoint_touch, interior_touch, overlap };

inline const char* to_string(SegmentRelation r)
{
    switch (r) {
    case SegmentRelation::disjoint: return "disjoint";
    case SegmentRelation::proper_cross: return "proper-cross";
    case SegmentRelation::endpoint_touch: return "endpoint-touch";
    case SegmentRelation::interior_touch: return "interior-touch";
    case SegmentRelation::overlap: return "overlap";
    }
    return "?";
}

// q on the closed segment pr, given that p, q, r are collinear.
inline bool on_collinear_segment(const Point& p, const Point& q, const Point& r)
{
    return cmp(q.x, std::min(p.x, r.x)) >= 0 && cmp(q.x, std::max(p.x, r.x)) <= 0 &&
           cmp(q.y, std::min(p.y, r.y)) >= 0 && cmp(q.y, std::max(p.y, r.y)) <= 0;
}

inline SegmentRelation segment_relation(const Segment& s1, const Segment& s2)
{
    if (s1.a == s1.b || s2.a == s2.b)
        throw InputError("segment with coincident endpoints");
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: compare the two closed intervals along the line.
        const auto [lo1, hi1] = std::minmax(s1.a, s1.b);
        const auto [lo2, hi2] = std::minmax(s2.a, s2.b);
        const Point& lo = lo1 < lo2 ? lo2 : lo1;
        const Point& hi = hi1 < hi2 ? hi1 : hi2;
        if (hi < lo)
            return SegmentRelation::disjoint;
        if (lo == hi)
            return SegmentRelation::endpoint_touch;
        return SegmentRelation::overlap;
    }
    if (o1 * o2 > 0 || o3 * o4 > 0)
        return SegmentRelation::disjoint;
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
        return SegmentRelation::proper_cross;
    // Exactly one intersection point, an endpoint of at least one segment.
    if (s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b)
        return SegmentRelation::endpoint_touch;
    return SegmentRelation::interior_touch;
}

// Injective map vertex id -> point. Positions may be missing while a
// drawing is under construction; consumers call at() which rejects gaps.
class Drawing {
public:
    Drawing() = default;
    explicit Drawing(int n) : pos_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(pos_.size()); }
    void resize(int n) { pos_.resize(static_cast<std::size_t>(n)); }

    bool has(Vertex v) const
    {
        return v >= 0 && v < size() && pos_[static_cast<std::size_t>(v)].has_value();
    }

    const Point& at(Vertex v) const
    {
        if (!has(v))
            throw InputError("no position for vertex " + std::to_string(v));
        return *pos_[static_cast<std::size_t>(v)];
    }

    void set(Vertex v, Point p)
    {
        if (v < 0)
            throw InputError("negative vertex id");
        if (v >= size())
            resize(v + 1);
        pos_[static_cast<std::size_t>(v)] = std::move(p);
    }

    bool complete() const
    {
        return std::all_of(pos_.begin(), pos_.end(), [](const auto& p) { return p.has_value(); });
    }

    friend bool operator==(const Drawing& a, const Drawing& b) { return a.pos_ == b.pos_; }

private:
    std::vector<std::optional<Point>> pos_;
};

struct Violation {
    enum class Kind { crossing, overlap, vertex_on_edge, coincident_vertices };
    Kind kind;
    Edge first;       // edge (or, for coincident_vertices, the vertex pair)
    Edge second;      // second edge; unused for vertex_on_edge
    Vertex vertex;    // offending vertex for vertex_on_edge, else -1

    std::string describe() const
    {
        auto e = [](const Edge& x) { return std::to_string(x.u) + "-" + std::to_string(x.v); };
        switch (kind) {
        case Kind::crossing: return "crossing " + e(first) + " x " + e(second);
        case Kind::overlap: return "overlap " + e(first) + " / " + e(second);
        case Kind::vertex_on_edge: return "vertex " + std::to_string(vertex) + " on edge " + e(first);
        case Kind::coincident_vertices: return "coincident vertices " + e(first);
        }
        return "?";
    }
};

namespace detail {

struct Box {
    Rational xmin, xmax, ymin, ymax;
};

inline Box box_of(const Point& a, const Point& b)
{
    Box bx;
    if (a.x < b.x) { bx.xmin = a.x; bx.xmax = b.x; } else { bx.xmin = b.x; bx.xmax = a.x; }
    if (a.y < b.y) { bx.ymin = a.y; bx.ymax = b.y; } else { bx.ymin = b.y; bx.ymax = a.y; }
    return bx;
}

} // namespace detail

// Every way the straight-line drawing d of g fails to be crossing-free.
// Edges sharing an endpoint may only meet there; everything else must be
// disjoint. Pairs are pruned with an x-sorted bounding box sweep.
inline std::vector<Violation> crossing_report(const Graph& g, const Drawing& d)
{
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        (void)d.at(v);

    std::vector<Violation> out;

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return d.at(a) < d.at(b); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (d.at(order[i - 1]) == d.at(order[i]))
            out.push_back({Violation::Kind::coincident_vertices, Edge(order[i - 1], order[i]), {}, -1});

    const auto& edges = g.edges();
    std::vector<detail::Box> boxes;
    boxes.reserve(edges.size());
    for (const auto& e : edges)
        boxes.push_back(detail::box_of(d.at(e.u), d.at(e.v)));
    std::vector<std::size_t> by_x(edges.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        const int c = cmp(boxes[a].xmin, boxes[b].xmin);
        return c < 0 || (c == 0 && a < b);
    });

    for (std::size_t ii = 0; ii < by_x.size(); ++ii) {
        const std::size_t i = by_x[ii];
        const Edge& ei = edges[i];
        const Segment si{d.at(ei.u), d.at(ei.v)};
        if (si.a == si.b)
            continue; // reported as coincident vertices
        for (std::size_t jj = ii + 1; jj < by_x.size(); ++jj) {
            const std::size_t j = by_x[jj];
            if (boxes[j].xmin > boxes[i].xmax)
                break;
            if (boxes[j].ymin > boxes[i].ymax || boxes[i].ymin > boxes[j].ymax)
                continue;
            const Edge& ej = edges[j];
            const Segment sj{d.at(ej.u), d.at(ej.v)};
            if (sj.a == sj.b)
                continue;
            const SegmentRelation rel = segment_relation(si, sj);
            const Edge first = std::min(ei, ej);
            const Edge second = std::max(ei, ej);
            const bool adjacent = ei.has(ej.u) || ei.has(ej.v);
            if (adjacent) {
                if (rel == SegmentRelation::overlap)
                    out.push_back({Violation::Kind::overlap, first, second, -1});
                continue;
            }
            switch (rel) {
            case SegmentRelation::disjoint:
                break;
            case SegmentRelation::proper_cross:
                out.push_back({Violation::Kind::crossing, first, second, -1});
                break;
            case SegmentRelation::overlap:
                out.push_back({Violation::Kind::overlap, first, second, -1});
                break;
            case SegmentRelation::interior_touch: {
                // One endpoint sits in the relative interior of the other edge.
                for (Vertex w : {ej.u, ej.v})
                    if (orientation(si.a, si.b, d.at(w)) == 0 && on_collinear_segment(si.a, d.at(w), si.b))
                        out.push_back({Violation::Kind::vertex_on_edge, ei, {}, w});
                for (Vertex w : {ei.u, ei.v})
                    if (orientation(sj.a, sj.b, d.at(w)) == 0 && on_collinear_segment(sj.a, d.at(w), sj.b))
                        out.push_back({Violation::Kind::vertex_on_edge, ej, {}, w});
                break;
            }
            case SegmentRelation::endpoint_touch:
                // Distinct endpoints at one point: only possible for a
                // non-injective drawing, already reported above.
                break;
            }
        }
    }

    // Isolated vertices are not covered by the edge pairs.
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 0)
            continue;
        const Point& p = d.at(v);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& bx = boxes[i];
            if (p.x < bx.xmin || p.x > bx.xmax || p.y < bx.ymin || p.y > bx.ymax)
                continue;
            const Point& a = d.at(edges[i].u);
            const Point& b = d.at(edges[i].v);
            if (p != a && p != b && orientation(a, b, p) == 0)
                out.push_back({Violation::Kind::vertex_on_edge, edges[i], {}, v});
        }
    }
    return out;
}

inline bool is_crossing_free(const Graph& g, const Drawing& d)
{
    return crossing_report(g, d).empty();
}

struct CollinearSet {
    int count = 0;
    Line line;
    std::vector<Vertex> vertices; // ascending ids
};

// lin(G, pi) for a concrete drawing: the largest number of positioned
// vertices on one line. Lines are keyed by their canonical form, so the
// search is O(n^2 log n).
inline CollinearSet max_collinear(const Drawing& d)
{
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < d.size(); ++v)
        if (d.has(v))
            ids.push_back(v);
    if (ids.empty())
        throw InputError("max_collinear on an empty drawing");

    CollinearSet best;
    best.count = 1;
    best.line = Line::horizontal(d.at(ids[0]).y);
    best.vertices = {ids[0]};

    auto less = [](const std::pair<Rational, Rational>& p, const std::pair<Rational, Rational>& q) {
        const int c = cmp(p.first, q.first);
        return c < 0 || (c == 0 && p.second < q.second);
    };
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const Point& p = d.at(ids[i]);
        // Direction from p to later points, normalized (first nonzero = 1).
        std::map<std::pair<Rational, Rational>, std::vector<Vertex>, decltype(less)> bucket(less);
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const Point& q = d.at(ids[j]);
            Rational dx = q.x - p.x;
            Rational dy = q.y - p.y;
            if (sgn(dx) == 0 && sgn(dy) == 0)
                throw InputError("drawing is not injective at vertices " + std::to_string(ids[i]) + ", " +
                                 std::to_string(ids[j]));
            if (sgn(dx) != 0) {
                dy /= dx;
                dx = 1;
            } else {
                dy = 1;
            }
            bucket[{dx, dy}].push_back(ids[j]);
        }
        for (auto& [dir, members] : bucket) {
            const int count = static_cast<int>(members.size()) + 1;
            if (count > best.count) {
                best.count = count;
                best.line = Line::through(p, d.at(members.front()));
                best.vertices = members;
                best.vertices.insert(best.vertices.begin(), ids[i]);
            }
        }
    }
    return best;
}

} // namespace untangle

#endif // UNTANGLE_GEOMETRY_HPP
