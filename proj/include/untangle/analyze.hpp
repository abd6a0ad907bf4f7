#ifndef UNTANGLE_ANALYZE_HPP
#define UNTANGLE_ANALYZE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/circumference.hpp"
#include "untangle/embedding.hpp"
#include "untangle/error.hpp"
#include "untangle/family.hpp"
#include "untangle/geometry.hpp"
#include "untangle/random.hpp"

namespace untangle {

// The unbounded face of drawing d of embedding e: the face with the
// largest absolute signed area (its area is minus the sum of the others).
// All other faces must share one orientation, opposite to it.
inline int outer_face_of(const RotationEmbedding& e, const Drawing& d)
{
    const int nf = e.face_count();
    if (nf == 1)
        return 0;
    std::vector<Rational> area(static_cast<std::size_t>(nf));
    int best = 0;
    for (int f = 0; f < nf; ++f) {
        std::vector<Point> poly;
        for (Vertex v : e.faces()[static_cast<std::size_t>(f)].walk)
            poly.push_back(d.at(v));
        area[static_cast<std::size_t>(f)] = signed_area2(poly);
        const Rational a = abs(area[static_cast<std::size_t>(f)]);
        const Rational b = abs(area[static_cast<std::size_t>(best)]);
        if (a > b || (a == b && sgn(area[static_cast<std::size_t>(f)]) < 0))
            best = f;
    }
    const int outer_sign = sgn(area[static_cast<std::size_t>(best)]);
    for (int f = 0; f < nf && nf > 2; ++f)
        if (f != best && sgn(area[static_cast<std::size_t>(f)]) != -outer_sign)
            throw InputError("drawing is inconsistent with the embedding at face " + std::to_string(f));
    return best;
}

// Sign of every vertex w.r.t. line l (0 on the line).
inline std::vector<int> sign_vector(const Drawing& d, const Line& l)
{
    std::vector<int> s(static_cast<std::size_t>(d.size()));
    for (Vertex v = 0; v < d.size(); ++v)
        s[static_cast<std::size_t>(v)] = l.side(d.at(v));
    return s;
}

// Faces cut under a vertex-avoiding sign vector: bounded faces with a
// sign change along the boundary, plus the outer face.
inline std::vector<int> cut_faces(const RotationEmbedding& e, const std::vector<int>& signs, int outer)
{
    std::vector<int> out{outer};
    for (int f = 0; f < e.face_count(); ++f) {
        if (f == outer)
            continue;
        const auto& w = e.faces()[static_cast<std::size_t>(f)].walk;
        const int s0 = signs[static_cast<std::size_t>(w[0])];
        for (Vertex v : w) {
            if (signs[static_cast<std::size_t>(v)] != s0) {
                out.push_back(f);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int count_cut(const RotationEmbedding& e, const std::vector<int>& signs, int outer)
{
    int count = 1;
    for (int f = 0; f < e.face_count(); ++f) {
        if (f == outer)
            continue;
        const auto& w = e.faces()[static_cast<std::size_t>(f)].walk;
        const int s0 = signs[static_cast<std::size_t>(w[0])];
        for (Vertex v : w) {
            if (signs[static_cast<std::size_t>(v)] != s0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

struct CutProfile {
    Line requested;
    Line line;                      // vertex-avoiding line actually used
    bool perturbed = false;
    int outer_face = 0;
    int faces_cut = 0;
    std::vector<int> cut_face_ids;  // ascending, includes the outer face
    std::vector<int> dual_walk;     // faces in the order the line visits them; starts and ends at the outer face
    std::vector<int> signs;         // per vertex, +1 / -1
};

namespace detail {

// Shift l off the vertices it contains, toward the side holding more
// vertices (ties: positive side), by half the smallest nonzero distance.
inline Line avoid_vertices(const Drawing& d, const Line& l, bool& moved)
{
    moved = false;
    int plus = 0, minus = 0;
    std::optional<Rational> gap;
    bool hit = false;
    for (Vertex v = 0; v < d.size(); ++v) {
        const Rational s = l.eval(d.at(v));
        const int sg = sgn(s);
        if (sg == 0) {
            hit = true;
            continue;
        }
        (sg > 0 ? plus : minus) += 1;
        const Rational a = abs(s);
        if (!gap || a < *gap)
            gap = a;
    }
    if (!hit)
        return l;
    moved = true;
    const Rational delta = gap ? Rational(*gap / 2) : Rational(1);
    // Moving toward + means on-line vertices fall on the - side.
    return plus >= minus ? Line(l.a, l.b, l.c + delta) : Line(l.a, l.b, l.c - delta);
}

} // namespace detail

// Order in which l passes through the faces of e, starting from outside.
inline std::vector<int> dual_walk(const RotationEmbedding& e, const Drawing& d, const Line& l, int outer)
{
    struct Cross {
        Rational t;
        Edge edge;
    };
    std::vector<Cross> cs;
    for (const auto& ed : e.graph().edges()) {
        const Rational su = l.eval(d.at(ed.u));
        const Rational sv = l.eval(d.at(ed.v));
        if (sgn(su) * sgn(sv) >= 0)
            continue;
        const Rational tu = l.along(d.at(ed.u));
        const Rational tv = l.along(d.at(ed.v));
        cs.push_back({tu + (tv - tu) * su / (su - sv), ed});
    }
    std::sort(cs.begin(), cs.end(), [](const Cross& a, const Cross& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i - 1].t == cs[i].t)
            throw InputError("line crosses two edges at one point; drawing is not crossing-free");
    std::vector<int> walk{outer};
    int cur = outer;
    for (const auto& c : cs) {
        const int f1 = e.face_left_of(c.edge.u, c.edge.v);
        const int f2 = e.face_left_of(c.edge.v, c.edge.u);
        if (cur == f1)
            cur = f2;
        else if (cur == f2)
            cur = f1;
        else
            throw InputError("drawing is inconsistent with the embedding near edge " + std::to_string(c.edge.u) + "-" +
                             std::to_string(c.edge.v));
        walk.push_back(cur);
    }
    if (cur != outer)
        throw InputError("line does not leave the drawing through the outer face");
    return walk;
}

// Faces of the drawing whose interior meets l. A line through vertices
// is first pushed off them; the shift is recorded.
inline CutProfile cut_count(const RotationEmbedding& e, const Drawing& d, const Line& l)
{
    CutProfile p;
    p.requested = l;
    p.line = detail::avoid_vertices(d, l, p.perturbed);
    p.outer_face = outer_face_of(e, d);
    p.signs = sign_vector(d, p.line);
    p.cut_face_ids = cut_faces(e, p.signs, p.outer_face);
    p.faces_cut = static_cast<int>(p.cut_face_ids.size());
    p.dual_walk = dual_walk(e, d, p.line, p.outer_face);
    return p;
}

struct MaxCut {
    int count = 1;
    CutProfile witness;
    long candidates = 0;
};

namespace detail {

struct Candidate {
    Vertex i = -1, j = -1;
    int kind = 0;      // 0: offset -, 1: offset +, 2: rotate +, 3: rotate -
    int mid_sign = 0;  // sign given to a vertex sitting at the rotation center
};

// Concrete line through the perturbation of the line p_i p_j described by c,
// realizing exactly the symbolic sign vector.
inline Line realize(const Drawing& d, const Candidate& c)
{
    const Point& pi = d.at(c.i);
    const Point& pj = d.at(c.j);
    const Point m = midpoint(pi, pj);
    const Rational dx = pj.x - pi.x;
    const Rational dy = pj.y - pi.y;
    // s(p) = n . (p - m), n the left normal; tau(p) = dir . (p - m).
    Rational nx = -dy;
    Rational ny = dx;
    Rational min_s, max_tau;
    bool any = false;
    for (Vertex v = 0; v < d.size(); ++v) {
        const Point& p = d.at(v);
        const Rational s = nx * (p.x - m.x) + ny * (p.y - m.y);
        const Rational tau = abs(dx * (p.x - m.x) + dy * (p.y - m.y));
        if (tau > max_tau)
            max_tau = tau;
        if (sgn(s) != 0 && (!any || abs(s) < min_s)) {
            min_s = abs(s);
            any = true;
        }
    }
    if (!any)
        min_s = 1;
    Rational shift;
    if (c.kind == 0 || c.kind == 1) {
        shift = c.kind == 0 ? Rational(-min_s / 2) : Rational(min_s / 2);
    } else {
        const Rational eps = min_s / (2 * max_tau + 1);
        const int sigma = c.kind == 2 ? 1 : -1;
        nx += sigma * eps * dx;
        ny += sigma * eps * dy;
        // A vertex at the center stays on the rotated line; shift once more.
        if (c.mid_sign != 0) {
            Rational gap;
            bool have = false;
            for (Vertex v = 0; v < d.size(); ++v) {
                const Point& p = d.at(v);
                const Rational s = nx * (p.x - m.x) + ny * (p.y - m.y);
                if (sgn(s) != 0 && (!have || abs(s) < gap)) {
                    gap = abs(s);
                    have = true;
                }
            }
            if (!have)
                gap = 1;
            shift = c.mid_sign > 0 ? Rational(-gap / 2) : Rational(gap / 2);
        }
    }
    // Points with n . (p - m) > shift... encode as n . p = n . m + shift.
    return Line(nx, ny, nx * m.x + ny * m.y + shift);
}

} // namespace detail

// Largest number of faces one line can cut in drawing d. The count only
// depends on the sign vector of the vertices, and every realizable
// vertex-avoiding sign vector comes from a line through two vertices
// perturbed by a small offset or a small rotation about their midpoint,
// so those candidates are enumerated symbolically. The first candidate
// reaching the maximum, in (i, j, kind) order, is realized and verified.
inline MaxCut max_cut(const RotationEmbedding& e, const Drawing& d)
{
    const int n = d.size();
    MaxCut best;
    const int outer = outer_face_of(e, d);
    std::optional<detail::Candidate> win;
    std::vector<int> s0(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n)), sig(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const Point& pi = d.at(i);
            const Point& pj = d.at(j);
            const Point m = midpoint(pi, pj);
            std::vector<Vertex> on;
            Vertex center = -1;
            for (Vertex v = 0; v < n; ++v) {
                s0[static_cast<std::size_t>(v)] = orientation(pi, pj, d.at(v));
                if (s0[static_cast<std::size_t>(v)] == 0) {
                    on.push_back(v);
                    const Point& p = d.at(v);
                    tau[static_cast<std::size_t>(v)] = sgn((pj.x - pi.x) * (p.x - m.x) + (pj.y - pi.y) * (p.y - m.y));
                    if (tau[static_cast<std::size_t>(v)] == 0)
                        center = v;
                }
            }
            // Ties go to the less steep base pair, then to enumeration order.
            auto flatter = [&](const detail::Candidate& a, const detail::Candidate& b) {
                const Point& a0 = d.at(a.i);
                const Point& a1 = d.at(a.j);
                const Point& b0 = d.at(b.i);
                const Point& b1 = d.at(b.j);
                return abs(a1.y - a0.y) * abs(b1.x - b0.x) < abs(b1.y - b0.y) * abs(a1.x - a0.x);
            };
            auto eval = [&](const detail::Candidate& c) {
                sig = s0;
                for (Vertex v : on) {
                    int s = 0;
                    if (c.kind == 0)
                        s = 1;
                    else if (c.kind == 1)
                        s = -1;
                    else
                        s = (c.kind == 2 ? 1 : -1) * tau[static_cast<std::size_t>(v)];
                    if (s == 0)
                        s = c.mid_sign;
                    sig[static_cast<std::size_t>(v)] = s;
                }
                ++best.candidates;
                const int cnt = count_cut(e, sig, outer);
                if (!win || cnt > best.count || (cnt == best.count && flatter(c, *win))) {
                    best.count = cnt;
                    win = c;
                }
            };
            for (int kind = 0; kind < 4; ++kind) {
                if (kind < 2 || center < 0) {
                    eval({i, j, kind, 0});
                } else {
                    eval({i, j, kind, -1});
                    eval({i, j, kind, 1});
                }
            }
        }
    }
    if (!win) {
        // Fewer than two vertices: any line avoiding them cuts the outer face only.
        best.witness = cut_count(e, d, n == 1 ? Line::horizontal(d.at(0).y + 1) : Line::horizontal(0));
        best.count = best.witness.faces_cut;
        return best;
    }
    const Line l = detail::realize(d, *win);
    best.witness = cut_count(e, d, l);
    if (best.witness.perturbed || best.witness.faces_cut != best.count)
        throw VerificationError("max_cut witness does not realize its sign vector");
    return best;
}

// Random lines through two random points of the slightly enlarged
// bounding box. Returns the largest cut count seen.
inline int sample_cut(const RotationEmbedding& e, const Drawing& d, long samples, Rng& rng)
{
    if (d.size() == 0)
        return 1;
    Rational xmin = d.at(0).x, xmax = xmin, ymin = d.at(0).y, ymax = ymin;
    for (Vertex v = 1; v < d.size(); ++v) {
        xmin = std::min(xmin, Rational(d.at(v).x));
        xmax = std::max(xmax, Rational(d.at(v).x));
        ymin = std::min(ymin, Rational(d.at(v).y));
        ymax = std::max(ymax, Rational(d.at(v).y));
    }
    const Rational w = xmax - xmin + 1;
    const Rational h = ymax - ymin + 1;
    const int outer = outer_face_of(e, d);
    constexpr long res = 1L << 20;
    auto coord = [&](const Rational& lo, const Rational& span) {
        return Rational(lo - span / 2 + span * 2 * make_rational(static_cast<long>(rng.below(res)), static_cast<long>(res)));
    };
    int best = 1;
    for (long k = 0; k < samples; ++k) {
        const Point p(coord(xmin, w), coord(ymin, h));
        Point q(coord(xmin, w), coord(ymin, h));
        if (p == q)
            continue;
        bool moved = false;
        const Line l = detail::avoid_vertices(d, Line::through(p, q), moved);
        best = std::max(best, count_cut(e, sign_vector(d, l), outer));
    }
    return best;
}

struct DualWalkCheck {
    std::vector<int> walk;
    int faces_cut = 0;
    bool closed = false;          // starts and ends at the outer face
    bool adjacent = false;        // consecutive faces share the crossed edge in G*
    bool visits_once = false;     // no face repeated apart from closing the walk
    int circumference = 0;
    bool circumference_exact = false;
    bool bound_holds = false;     // faces_cut <= c(G*), meaningful when exact

    bool ok() const { return closed && adjacent && visits_once && (!circumference_exact || bound_holds); }
};

// The faces a line cuts form a cycle of the dual, so a line cuts
// at most c(G*) faces. Checked on a concrete line.
inline DualWalkCheck dual_cut_bound_check(const RotationEmbedding& e, const Drawing& d, const Line& l,
                                          const std::optional<CycleResult>& dual_circumference = std::nullopt,
                                          std::uint64_t budget = 50'000'000)
{
    if (!is_triangulation(e))
        throw InputError("dual cut check needs a triangulation");
    const CutProfile p = cut_count(e, d, l);
    const DualGraph dual = dual_graph(e);
    DualWalkCheck out;
    out.walk = p.dual_walk;
    out.faces_cut = p.faces_cut;
    out.closed = out.walk.front() == p.outer_face && out.walk.back() == p.outer_face;
    out.adjacent = true;
    for (std::size_t i = 1; i < out.walk.size(); ++i)
        out.adjacent = out.adjacent && dual.graph.has_edge(out.walk[i - 1], out.walk[i]);
    std::vector<int> body(out.walk.begin(), out.walk.end() - (out.walk.size() > 1 ? 1 : 0));
    std::sort(body.begin(), body.end());
    out.visits_once = std::adjacent_find(body.begin(), body.end()) == body.end() &&
                      static_cast<int>(body.size()) == p.faces_cut;
    const CycleResult c = dual_circumference ? *dual_circumference : circumference(dual.graph, budget);
    out.circumference = c.length;
    out.circumference_exact = c.exact;
    out.bound_holds = p.faces_cut <= c.length;
    return out;
}

// Faces of G_i cut by the sign vector, for the drawing of G_k restricted
// to G_i (whose vertices are the ids below v(G_i)).
inline int level_cut_count(const RotationEmbedding& level, const Drawing& dk, const std::vector<int>& signs)
{
    const int vi = level.graph().vertex_count();
    Drawing di(vi);
    for (Vertex v = 0; v < vi; ++v)
        di.set(v, dk.at(v));
    return count_cut(level, signs, outer_face_of(level, di));
}

struct RecurrenceAudit {
    long lines = 0;
    long violations = 0;
    std::string first_violation;
};

// Per-level check of fbar_{i+1} <= fbar if fbar_i = 1, else
// fbar_{i+1} <= fbar_i (fbar - 1), for every candidate line of the
// max_cut enumeration on the drawing of G_k.
inline RecurrenceAudit audit_recurrence(const FamilyMember& m, const Drawing& d, long fbar)
{
    RecurrenceAudit audit;
    const int n = d.size();
    std::vector<int> outer;
    for (const auto& level : m.levels) {
        const int vi = level.graph().vertex_count();
        Drawing di(vi);
        for (Vertex v = 0; v < vi; ++v)
            di.set(v, d.at(v));
        outer.push_back(outer_face_of(level, di));
    }
    std::vector<int> sig(static_cast<std::size_t>(n));
    auto check = [&](const std::vector<int>& s) {
        ++audit.lines;
        std::vector<long> counts;
        for (std::size_t i = 0; i < m.levels.size(); ++i)
            counts.push_back(count_cut(m.levels[i], s, outer[i]));
        for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
            const long limit = counts[i] == 1 ? fbar : counts[i] * (fbar - 1);
            if (counts[i + 1] > limit) {
                if (audit.violations++ == 0) {
                    std::ostringstream os;
                    os << "level " << i + 1 << ": " << counts[i] << " -> " << counts[i + 1] << " > " << limit;
                    audit.first_violation = os.str();
                }
            }
        }
    };
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const Point& pi = d.at(i);
            const Point& pj = d.at(j);
            const Point mid = midpoint(pi, pj);
            std::vector<int> s0(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n), 0);
            bool center = false;
            for (Vertex v = 0; v < n; ++v) {
                s0[static_cast<std::size_t>(v)] = orientation(pi, pj, d.at(v));
                if (s0[static_cast<std::size_t>(v)] == 0) {
                    const Point& p = d.at(v);
                    tau[static_cast<std::size_t>(v)] = sgn((pj.x - pi.x) * (p.x - mid.x) + (pj.y - pi.y) * (p.y - mid.y));
                    center = center || tau[static_cast<std::size_t>(v)] == 0;
                }
            }
            for (int kind = 0; kind < 4; ++kind) {
                for (int ms : {-1, 1}) {
                    if (ms == 1 && (kind < 2 || !center))
                        continue;
                    for (Vertex v = 0; v < n; ++v) {
                        int s = s0[static_cast<std::size_t>(v)];
                        if (s == 0) {
                            s = kind == 0 ? 1 : kind == 1 ? -1 : (kind == 2 ? 1 : -1) * tau[static_cast<std::size_t>(v)];
                            if (s == 0)
                                s = ms;
                        }
                        sig[static_cast<std::size_t>(v)] = s;
                    }
                    check(sig);
                }
            }
        }
    }
    return audit;
}

// ((v1 - 3) fbar / (fbar - 2)) (fbar - 1)^(k-1), the bound on the number
// of collinear vertices in a drawing of G_k.
inline Rational collinear_bound(long v1, long fbar, int k)
{
    if (fbar <= 2)
        throw InputError("collinear bound needs fbar > 2");
    Rational b = Rational(v1 - 3) * fbar / (fbar - 2);
    for (int i = 1; i < k; ++i)
        b *= fbar - 1;
    return b;
}

inline Rational cut_bound(long fbar, int k)
{
    Rational b = fbar;
    for (int i = 1; i < k; ++i)
        b *= fbar - 1;
    return b;
}

struct BoundReport {
    int k = 1;
    int v_k = 0;
    int f_k = 0;
    int seed_v = 0;
    int seed_f = 0;
    int lin = 0;                  // measured max_collinear
    int cut = 0;                  // measured max_cut
    Line cut_witness;
    int dual_circumference = 0;   // c(G_1*)
    bool circumference_exact = false;
    long fbar = 0;                // value used for fbar
    std::string fbar_source;
    Rational cut_bound_value;     // fbar (fbar - 1)^(k-1)
    Rational lin_bound_value;     // collinear bound with fbar
    Rational lin_bound_f;         // collinear bound with fbar = f(G_1)
    bool cut_ok = false;
    bool lin_ok = false;
    bool lin_ok_f = false;
    std::optional<RecurrenceAudit> recurrence;
    long samples = 0;
    int sampled_max = 0;
    bool sample_ok = true;

    std::string table() const;
    std::string records() const;
};

inline constexpr double sigma_lower = 0.6942419136306174; // log2(1 + sqrt 5) - 1
inline constexpr double sigma_upper = 0.9886103022689665; // log 26 / log 27

inline std::string BoundReport::table() const
{
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
    os << "G_" << k << ": v = " << v_k << ", f = " << f_k << " (seed v = " << seed_v << ", f = " << seed_f << ")\n";
    os << "c(G_1*) = " << dual_circumference << (circumference_exact ? " (exact)" : " (budget-limited, lower bound)")
       << "\n";
    os << "fbar = " << fbar << " from " << fbar_source << "\n";
    os << "measured cut  = " << cut << "  bound fbar(fbar-1)^(k-1) = " << format_rational(cut_bound_value) << "  "
       << yes(cut_ok) << "\n";
    os << "measured lin  = " << lin << "  bound (v-3)fbar/(fbar-2)(fbar-1)^(k-1) = " << format_rational(lin_bound_value)
       << "  " << yes(lin_ok) << "\n";
    os << "              with fbar = f(G_1): " << format_rational(lin_bound_f) << "  " << yes(lin_ok_f) << "\n";
    os << "lin and cut are reported side by side; no relation between them is asserted\n";
    if (recurrence)
        os << "level recurrence: " << recurrence->lines << " lines, " << recurrence->violations << " violations"
           << (recurrence->violations ? " (" + recurrence->first_violation + ")" : std::string()) << "  "
           << yes(recurrence->violations == 0) << "\n";
    if (samples > 0)
        os << "sampling oracle: " << samples << " random lines, max " << sampled_max << " <= " << cut << "  "
           << yes(sample_ok) << "\n";
    os.precision(6);
    os << std::fixed << "shortness exponent of cubic polyhedral graphs: " << sigma_lower << " <= sigma <= "
       << sigma_upper << "\n";
    return os.str();
}

inline std::string BoundReport::records() const
{
    std::ostringstream os;
    os << "k=" << k << "\nv=" << v_k << "\nf=" << f_k << "\nseed_v=" << seed_v << "\nseed_f=" << seed_f
       << "\ndual_circumference=" << dual_circumference << "\ncircumference_exact=" << circumference_exact
       << "\nfbar=" << fbar << "\nfbar_source=" << fbar_source << "\ncut=" << cut
       << "\ncut_bound=" << format_rational(cut_bound_value) << "\ncut_ok=" << cut_ok << "\nlin=" << lin
       << "\nlin_bound=" << format_rational(lin_bound_value) << "\nlin_ok=" << lin_ok
       << "\nlin_bound_f=" << format_rational(lin_bound_f) << "\nlin_ok_f=" << lin_ok_f << "\nwitness="
       << format_rational(cut_witness.a) << "," << format_rational(cut_witness.b) << "," << format_rational(cut_witness.c)
       << "\n";
    if (recurrence)
        os << "recurrence_lines=" << recurrence->lines << "\nrecurrence_violations=" << recurrence->violations << "\n";
    if (samples > 0)
        os << "samples=" << samples << "\nsampled_max=" << sampled_max << "\nsample_ok=" << sample_ok << "\n";
    os.precision(16);
    os << "sigma_lower=" << sigma_lower << "\nsigma_upper=" << sigma_upper << "\n";
    return os.str();
}

struct BoundOptions {
    std::uint64_t budget = 50'000'000;
    long samples = 0;
    std::uint64_t seed = 0;
    bool audit = true;
};

// Measure lin and cut on a drawing of G_k and compare with the bounds.
// fbar is c(G_1*) when that is computed exactly, else f(G_1).
inline BoundReport verify_family_bounds(const SeedTriangulation& seed, const FamilyMember& m, const Drawing& d,
                                        const BoundOptions& opt = {})
{
    if (!is_crossing_free(m.graph(), d))
        throw InputError("drawing of G_k is not crossing-free");
    BoundReport r;
    r.k = m.k;
    r.v_k = m.graph().vertex_count();
    r.f_k = m.embedding().face_count();
    r.seed_v = seed.v();
    r.seed_f = seed.f();
    const CycleResult c = circumference(dual_graph(seed.embedding).graph, opt.budget);
    r.dual_circumference = c.length;
    r.circumference_exact = c.exact;
    r.fbar = c.exact ? c.length : seed.f();
    r.fbar_source = c.exact ? "c(G_1*)" : "f(G_1) (circumference budget-limited)";
    const MaxCut mc = max_cut(m.embedding(), d);
    r.cut = mc.count;
    r.cut_witness = mc.witness.line;
    r.lin = max_collinear(d).count;
    r.cut_bound_value = cut_bound(r.fbar, r.k);
    r.lin_bound_value = collinear_bound(seed.v(), r.fbar, r.k);
    r.lin_bound_f = collinear_bound(seed.v(), seed.f(), r.k);
    r.cut_ok = r.cut <= r.cut_bound_value;
    r.lin_ok = r.lin <= r.lin_bound_value;
    r.lin_ok_f = r.lin <= r.lin_bound_f;
    if (opt.audit && !m.lineage.empty())
        r.recurrence = audit_recurrence(m, d, r.fbar);
    if (opt.samples > 0) {
        Rng rng(opt.seed);
        r.samples = opt.samples;
        r.sampled_max = sample_cut(m.embedding(), d, opt.samples, rng);
        r.sample_ok = r.sampled_max <= r.cut;
    }
    return r;
}

} // namespace untangle

#endif // UNTANGLE_ANALYZE_HPP
