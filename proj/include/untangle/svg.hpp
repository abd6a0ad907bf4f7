#ifndef UNTANGLE_SVG_HPP
#define UNTANGLE_SVG_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"
#include "untangle/io.hpp"

namespace untangle {

struct SvgOptions {
    int precision = 6;       // decimal digits after the point
    long canvas = 800;       // longer side of the viewbox, in user units
    long margin = 20;
    long radius = 4;
    std::optional<Line> overlay;  // e.g. a max_cut witness
};

// Exact decimal rendering: q rounded half away from zero to `digits` places.
inline std::string to_decimal(const Rational& q, int digits)
{
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const Rational scaled = q * scale;
    mpz_class num = abs(scaled.get_num());
    mpz_class r = (2 * num + scaled.get_den()) / (2 * scaled.get_den());
    std::string s = r.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    if (sgn(q) < 0 && s != "0")
        s.insert(0, "-");
    return s;
}

// Deterministic SVG of a drawing file, optionally with the graph's edges.
// Layer lines and perpendiculars are dashed guides; free vertices are red,
// fixed vertices blue.
inline std::string render_svg(const std::optional<Graph>& g, const DrawingFile& df, const SvgOptions& opt = {})
{
    const Drawing& d = df.drawing;
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < d.size(); ++v)
        if (d.has(v))
            ids.push_back(v);
    if (g)
        for (Vertex v = 0; v < g->vertex_count(); ++v)
            (void)d.at(v);

    Rational xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!ids.empty()) {
        xmin = xmax = d.at(ids[0]).x;
        ymin = ymax = d.at(ids[0]).y;
        for (Vertex v : ids) {
            xmin = std::min(xmin, Rational(d.at(v).x));
            xmax = std::max(xmax, Rational(d.at(v).x));
            ymin = std::min(ymin, Rational(d.at(v).y));
            ymax = std::max(ymax, Rational(d.at(v).y));
        }
    }
    Rational span = std::max(Rational(xmax - xmin), Rational(ymax - ymin));
    if (sgn(span) == 0)
        span = 1;
    const Rational scale = Rational(opt.canvas) / span;
    const Rational width = (xmax - xmin) * scale + 2 * opt.margin;
    const Rational height = (ymax - ymin) * scale + 2 * opt.margin;
    auto sx = [&](const Rational& x) { return to_decimal((x - xmin) * scale + opt.margin, opt.precision); };
    auto sy = [&](const Rational& y) { return to_decimal((ymax - y) * scale + opt.margin, opt.precision); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << to_decimal(width, opt.precision) << " "
       << to_decimal(height, opt.precision) << "\">\n";
    const std::string left = to_decimal(Rational(0), opt.precision);
    const std::string right = to_decimal(width, opt.precision);
    const std::string top = to_decimal(Rational(0), opt.precision);
    const std::string bottom = to_decimal(height, opt.precision);

    std::set<int> layers;
    for (const auto& [v, k] : df.layer)
        layers.insert(k);
    for (int k : layers)
        os << "  <line class=\"layer\" x1=\"" << left << "\" y1=\"" << sy(Rational(k)) << "\" x2=\"" << right
           << "\" y2=\"" << sy(Rational(k)) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    if (!df.free_set.empty())
        os << "  <line class=\"base\" x1=\"" << left << "\" y1=\"" << sy(Rational(0)) << "\" x2=\"" << right
           << "\" y2=\"" << sy(Rational(0)) << "\" stroke=\"#d62728\" stroke-width=\"0.5\"/>\n";
    for (const auto& seg : df.segments)
        if (!seg.on_line)
            os << "  <line class=\"perpendicular\" x1=\"" << sx(seg.x) << "\" y1=\"" << top << "\" x2=\"" << sx(seg.x)
               << "\" y2=\"" << bottom << "\" stroke=\"#888888\" stroke-dasharray=\"6 3\"/>\n";
    if (opt.overlay) {
        // Clip the overlay line to the canvas rectangle in drawing coordinates.
        const Line& l = *opt.overlay;
        const Rational pad = Rational(opt.margin) / scale;
        const Rational x0 = xmin - pad, x1 = xmax + pad, y0 = ymin - pad, y1 = ymax + pad;
        std::vector<Point> hits;
        if (sgn(l.b) != 0) {
            for (const Rational& x : {x0, x1}) {
                const Rational y = (l.c - l.a * x) / l.b;
                if (y >= y0 && y <= y1)
                    hits.emplace_back(x, y);
            }
        }
        if (sgn(l.a) != 0) {
            for (const Rational& y : {y0, y1}) {
                const Rational x = (l.c - l.b * y) / l.a;
                if (x >= x0 && x <= x1)
                    hits.emplace_back(x, y);
            }
        }
        std::sort(hits.begin(), hits.end());
        if (hits.size() >= 2)
            os << "  <line class=\"witness\" x1=\"" << sx(hits.front().x) << "\" y1=\"" << sy(hits.front().y)
               << "\" x2=\"" << sx(hits.back().x) << "\" y2=\"" << sy(hits.back().y)
               << "\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
    }
    if (g)
        for (const auto& e : g->edges())
            os << "  <line x1=\"" << sx(d.at(e.u).x) << "\" y1=\"" << sy(d.at(e.u).y) << "\" x2=\"" << sx(d.at(e.v).x)
               << "\" y2=\"" << sy(d.at(e.v).y) << "\" stroke=\"black\"/>\n";
    const std::set<Vertex> free(df.free_set.begin(), df.free_set.end());
    const std::set<Vertex> fixed(df.fixed.begin(), df.fixed.end());
    for (Vertex v : ids) {
        const char* fill = fixed.count(v) ? "#1f77b4" : free.count(v) ? "#d62728" : "black";
        os << "  <circle cx=\"" << sx(d.at(v).x) << "\" cy=\"" << sy(d.at(v).y) << "\" r=\"" << opt.radius
           << "\" fill=\"" << fill << "\"><title>" << v << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace untangle

#endif // UNTANGLE_SVG_HPP
