#ifndef UNTANGLE_FOLD_HPP
#define UNTANGLE_FOLD_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/geometry.hpp"
#include "untangle/layered.hpp"

namespace untangle {

enum class Parity { odd, even, automatic };

inline const char* to_string(Parity p)
{
    switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::automatic: return "auto";
    }
    return "?";
}

// One layer after folding: either a run of the free set on the x-axis,
// or a perpendicular x = const holding the layer in one half-plane.
struct FoldSegment {
    bool on_line = true;
    int layer = 0;                  // normalized layer, 1-based
    Rational x;                     // perpendicular only
    int sign = 0;                   // perpendicular only: +1 above, -1 below
    std::vector<Vertex> vertices;   // on-line: left to right; perpendicular: by increasing |y|
};

struct FoldCertificate {
    Graph graph;
    Drawing drawing;
    Parity parity = Parity::odd;    // which layers went to the line
    std::vector<Vertex> free_set;   // on y = 0, left to right
    std::vector<FoldSegment> segments; // left to right

    Line line() const { return Line::horizontal(0); }
};

// Fold an almost layered drawing so that every other layer lands on the
// x-axis. Layers alternate between line runs and perpendiculars; each
// perpendicular takes the opposite half-plane from the previous one, and
// the direction in which a layer is laid out is chosen so that the edges
// of every strip stay nested.
inline FoldCertificate fold(const Graph& g, const LayeredDrawing& ld, Parity parity = Parity::automatic)
{
    if (const auto problems = layered_problems(g, ld); !problems.empty())
        throw InputError("not an almost layered drawing: " + problems.front());
    const int n = g.vertex_count();
    FoldCertificate fc;
    fc.graph = g;
    fc.drawing = Drawing(n);
    if (n == 0)
        return fc;
    const int lo = *std::min_element(ld.layer.begin(), ld.layer.end());
    std::map<int, std::vector<Vertex>> layers;
    for (Vertex v = 0; v < n; ++v)
        layers[ld.layer[static_cast<std::size_t>(v)] - lo + 1].push_back(v);
    const int s = layers.rbegin()->first;
    int odd_count = 0;
    for (auto& [k, vs] : layers) {
        std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return ld.drawing.at(a).x < ld.drawing.at(b).x; });
        if (k % 2 == 1)
            odd_count += static_cast<int>(vs.size());
    }
    if (parity == Parity::automatic)
        parity = odd_count >= n - odd_count ? Parity::odd : Parity::even;
    fc.parity = parity;
    const int on_line_rem = parity == Parity::odd ? 1 : 0;

    long cursor = 0;
    int dir = 1;
    int half = 1;
    bool prev_on_line = false;
    for (int k = 1; k <= s; ++k) {
        const auto it = layers.find(k);
        if (it == layers.end())
            throw InputError("layer " + std::to_string(k) + " is empty");
        std::vector<Vertex> vs = it->second;
        const bool on_line = k % 2 == on_line_rem;
        if (k > 1 && prev_on_line && !on_line)
            dir = -dir;
        if (dir < 0)
            std::reverse(vs.begin(), vs.end());
        FoldSegment seg;
        seg.on_line = on_line;
        seg.layer = k;
        if (on_line) {
            for (Vertex v : vs) {
                fc.drawing.set(v, Point(cursor, 0));
                fc.free_set.push_back(v);
                ++cursor;
            }
        } else {
            seg.x = cursor;
            seg.sign = half;
            long h = 1;
            for (Vertex v : vs)
                fc.drawing.set(v, Point(cursor, half * h++));
            half = -half;
            ++cursor;
        }
        seg.vertices = std::move(vs);
        fc.segments.push_back(std::move(seg));
        prev_on_line = on_line;
    }
    if (const auto bad = crossing_report(g, fc.drawing); !bad.empty())
        throw VerificationError("fold produced " + bad.front().describe());
    return fc;
}

// Redraw the certificate with the free set moved to the given strictly
// increasing x-coordinates (one per free-set vertex, in order). Each
// perpendicular moves to the midpoint of the gap between its neighboring
// line runs; off-line heights are kept.
inline Drawing displace_free(const FoldCertificate& fc, const std::vector<Rational>& targets)
{
    if (targets.size() != fc.free_set.size())
        throw InputError("displacement has " + std::to_string(targets.size()) + " targets for a free set of " +
                         std::to_string(fc.free_set.size()));
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (!(targets[i - 1] < targets[i]))
            throw InputError("displacement targets are not strictly increasing at index " + std::to_string(i));
    Drawing out = fc.drawing;
    std::size_t next = 0;
    for (const auto& seg : fc.segments)
        if (seg.on_line)
            for (Vertex v : seg.vertices)
                out.set(v, Point(targets[next++], Rational(0)));
    const std::size_t m = fc.segments.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& seg = fc.segments[i];
        if (seg.on_line)
            continue;
        const bool has_left = i > 0 && !fc.segments[i - 1].vertices.empty();
        const bool has_right = i + 1 < m && !fc.segments[i + 1].vertices.empty();
        Rational x = seg.x;
        if (has_left && has_right)
            x = (out.at(fc.segments[i - 1].vertices.back()).x + out.at(fc.segments[i + 1].vertices.front()).x) / 2;
        else if (has_left)
            x = out.at(fc.segments[i - 1].vertices.back()).x + 1;
        else if (has_right)
            x = out.at(fc.segments[i + 1].vertices.front()).x - 1;
        for (Vertex v : seg.vertices)
            out.set(v, Point(x, fc.drawing.at(v).y));
    }
    if (const auto bad = crossing_report(fc.graph, out); !bad.empty())
        throw VerificationError("displaced drawing has " + bad.front().describe());
    return out;
}

// Reflection in the y-axis; the free set keeps its left-to-right listing.
inline FoldCertificate mirror(const FoldCertificate& fc)
{
    FoldCertificate out = fc;
    for (Vertex v = 0; v < fc.drawing.size(); ++v)
        if (fc.drawing.has(v))
            out.drawing.set(v, Point(Rational(-fc.drawing.at(v).x), fc.drawing.at(v).y));
    std::reverse(out.free_set.begin(), out.free_set.end());
    std::reverse(out.segments.begin(), out.segments.end());
    for (auto& seg : out.segments) {
        if (seg.on_line)
            std::reverse(seg.vertices.begin(), seg.vertices.end());
        else
            seg.x = -seg.x;
    }
    return out;
}

} // namespace untangle

#endif // UNTANGLE_FOLD_HPP
