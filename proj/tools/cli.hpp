#ifndef UNTANGLE_TOOLS_CLI_HPP
#define UNTANGLE_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/analyze.hpp"
#include "untangle/circumference.hpp"
#include "untangle/family.hpp"
#include "untangle/fold.hpp"
#include "untangle/io.hpp"
#include "untangle/layered.hpp"
#include "untangle/outerplanar.hpp"
#include "untangle/random.hpp"
#include "untangle/svg.hpp"
#include "untangle/untangle.hpp"

namespace untangle::cli {

enum Exit { ok = 0, input_error = 1, scope_error = 2, verification_error = 3 };

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 50'000'000;
    long sample = 0;
    std::string out;
    std::string parity = "auto";
    int root = 0;
};

inline Parity parse_parity(const std::string& s)
{
    if (s == "odd")
        return Parity::odd;
    if (s == "even")
        return Parity::even;
    if (s == "auto")
        return Parity::automatic;
    throw InputError("parity must be odd, even or auto");
}

inline SeedTriangulation load_seed(const std::string& spec, int designated)
{
    if (spec == "k4")
        return SeedTriangulation(seed_k4().embedding, designated);
    if (spec == "octahedron")
        return SeedTriangulation(seed_octahedron().embedding, designated);
    if (spec == "icosahedron")
        return SeedTriangulation(seed_icosahedron().embedding, designated);
    return SeedTriangulation(parse_embedding(read_file(spec)), designated);
}

// Write to --out if given, else to the console.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
    if (cfg.out.empty())
        out << text;
    else
        write_file(cfg.out, text);
}

// SVG files carry the header as an XML comment.
inline std::string svg_with_header(std::uint64_t seed, const std::string& what, const std::string& svg)
{
    std::string head = header_line(seed, what);
    head.pop_back();
    return "<!-- " + head.substr(2) + " -->\n" + svg;
}

inline const std::vector<Point>& default_triangle()
{
    static const std::vector<Point> t{Point(0, 0), Point(4, 0), Point(2, 3)};
    return t;
}

inline int cmd_gen(const RunConfig& cfg, const std::string& seed_spec, int designated, int k, long cap,
                   const std::string& lineage_path, const std::string& draw_path, std::ostream& out)
{
    if (k < 1)
        throw InputError("--k must be at least 1");
    const SeedTriangulation seed = load_seed(seed_spec, designated);
    const FamilyMember m = generate(seed, k, cap);
    const auto& e = m.embedding();
    const std::string expected = [&] {
        mpz_class f = seed.f();
        for (int i = 1; i < k; ++i)
            f *= seed.f() - 1;
        return f.get_str();
    }();
    std::ostringstream what;
    what << "gen seed-graph=" << seed_spec << " k=" << k;
    emit(cfg, out, header_line(cfg.seed, what.str()) + "# v=" + std::to_string(e.graph().vertex_count()) +
                       " e=" + std::to_string(e.graph().edge_count()) + " f=" + std::to_string(e.face_count()) + "\n" +
                       format_embedding(e));
    if (!lineage_path.empty())
        write_file(lineage_path, header_line(cfg.seed, what.str() + " lineage") + format_lineage(m.lineage));
    if (!draw_path.empty()) {
        const Drawing d = tutte_draw(e, m.outer_chain.back(), default_triangle());
        write_file(draw_path, header_line(cfg.seed, what.str() + " tutte outer-face=" +
                                                        std::to_string(m.outer_chain.back())) +
                                  format_drawing(d));
    }
    const bool law = std::to_string(e.face_count()) == expected;
    out << "k=" << k << " v=" << e.graph().vertex_count() << " e=" << e.graph().edge_count() << " f=" << e.face_count()
        << " f(f-1)^(k-1)=" << expected << " " << (law ? "match" : "MISMATCH") << " triangulation="
        << (is_triangulation(e) ? "yes" : "no") << "\n";
    return law ? ok : verification_error;
}

inline int cmd_draw_outerplanar(const RunConfig& cfg, const std::string& graph_path, std::ostream& out)
{
    const Graph g = parse_graph(read_file(graph_path));
    const LayeredDrawing ld = almost_layered_draw(g, cfg.root);
    if (const auto p = layered_problems(g, ld); !p.empty())
        throw VerificationError("layered drawing invalid: " + p.front());
    emit(cfg, out, header_line(cfg.seed, "draw-outerplanar root=" + std::to_string(cfg.root)) + format_layered(ld));
    if (!cfg.out.empty())
        out << "n=" << g.vertex_count() << " layers=" << ld.layer_count() << " crossing-free=yes\n";
    return ok;
}

inline int cmd_fold(const RunConfig& cfg, const std::string& graph_path, const std::string& layered_path,
                    std::ostream& out)
{
    const Graph g = parse_graph(read_file(graph_path));
    LayeredDrawing ld;
    if (layered_path.empty()) {
        ld = almost_layered_draw(g, cfg.root);
    } else {
        const DrawingFile df = parse_drawing_file(read_file(layered_path));
        ld.drawing = df.drawing;
        ld.layer.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const auto it = df.layer.find(v);
            if (it == df.layer.end())
                throw InputError("no layer for vertex " + std::to_string(v));
            ld.layer[static_cast<std::size_t>(v)] = it->second;
        }
    }
    const FoldCertificate fc = fold(g, ld, parse_parity(cfg.parity));
    const int half = (g.vertex_count() + 1) / 2;
    emit(cfg, out, header_line(cfg.seed, "fold parity=" + cfg.parity + " root=" + std::to_string(cfg.root)) +
                       format_certificate(fc));
    if (!cfg.out.empty())
        out << "n=" << g.vertex_count() << " parity=" << to_string(fc.parity) << " |S|=" << fc.free_set.size()
            << " ceil(n/2)=" << half << "\n";
    return ok;
}

// Points of d on one line, as coordinates t with p = p0 + t * dir, and the
// inverse map for output.
struct LineFrame {
    Point origin;
    Rational dx, dy;

    Rational param(const Point& p) const { return ((p.x - origin.x) * dx + (p.y - origin.y) * dy) / (dx * dx + dy * dy); }

    Point place(const Point& q) const
    {
        // q.x along dir, q.y along the left normal (-dy, dx).
        return {Rational(origin.x + q.x * dx - q.y * dy), Rational(origin.y + q.x * dy + q.y * dx)};
    }
};

inline int cmd_untangle(const RunConfig& cfg, const std::string& graph_path, const std::string& drawing_path,
                        std::ostream& out)
{
    const Graph g = parse_graph(read_file(graph_path));
    const Drawing pi = parse_drawing(read_file(drawing_path));
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        (void)pi.at(v);
    if (pi.size() != n)
        throw InputError("drawing places vertices outside the graph");
    // Reduce the drawing's line to the x-axis by a similarity.
    LineFrame frame{n > 0 ? pi.at(0) : Point(0, 0), Rational(1), Rational(0)};
    for (Vertex v = 1; v < n; ++v) {
        if (pi.at(v) != pi.at(0)) {
            frame.dx = pi.at(v).x - pi.at(0).x;
            frame.dy = pi.at(v).y - pi.at(0).y;
            break;
        }
    }
    std::vector<Rational> xs;
    for (Vertex v = 0; v < n; ++v) {
        const Point& p = pi.at(v);
        if (orientation(frame.origin, frame.place(Point(1, 0)), p) != 0)
            throw ScopeError("input drawing is not collinear (vertex " + std::to_string(v) +
                             "); general drawings need the fix = fixl reduction, which is not implemented");
        xs.push_back(frame.param(p));
    }
    const UntangleResult r = untangle_collinear(g, xs, cfg.root);
    Drawing rho(n);
    for (Vertex v = 0; v < n; ++v)
        rho.set(v, frame.place(r.drawing.at(v)));
    for (Vertex v : r.fixed)
        if (rho.at(v) != pi.at(v))
            throw VerificationError("fixed vertex " + std::to_string(v) + " moved after mapping back");
    if (!is_crossing_free(g, rho))
        throw VerificationError("output drawing is not crossing-free after mapping back");
    const int bound = fixed_lower_bound(n);
    const bool pass = static_cast<int>(r.fixed.size()) >= bound;
    std::ostringstream text;
    text << header_line(cfg.seed, "untangle root=" + std::to_string(cfg.root)) << format_drawing(rho);
    for (Vertex v : r.fixed)
        text << "fixed " << v << "\n";
    text << "summary n=" << n << " S=" << r.free_size << " F=" << r.fixed.size()
         << " direction=" << to_string(r.direction) << " bound=" << bound
         << " already_crossing_free=" << (r.already_crossing_free ? 1 : 0) << "\n";
    emit(cfg, out, text.str());
    if (!cfg.out.empty())
        out << "n=" << n << " |S|=" << r.free_size << " |F|=" << r.fixed.size() << " sqrt(n/2)=" << std::sqrt(n / 2.0)
        << " ceil(sqrt(ceil(n/2)))=" << bound << " direction=" << to_string(r.direction) << " "
        << (pass ? "pass" : "FAIL") << "\n";
    return pass ? ok : verification_error;
}

inline int cmd_analyze(const RunConfig& cfg, const std::string& emb_path, const std::string& drawing_path,
                       const std::string& family, int k, const std::string& svg_path, bool records, std::ostream& out)
{
    if (!family.empty()) {
        if (k < 1)
            throw InputError("--k must be at least 1");
        const SeedTriangulation seed = load_seed(family, 0);
        const FamilyMember m = generate(seed, k);
        const Drawing d = drawing_path.empty() ? tutte_draw(m.embedding(), m.outer_chain.back(), default_triangle())
                                               : parse_drawing(read_file(drawing_path));
        BoundOptions opt;
        opt.budget = cfg.budget;
        opt.samples = cfg.sample;
        opt.seed = cfg.seed;
        const BoundReport rep = verify_family_bounds(seed, m, d, opt);
        std::string text = header_line(cfg.seed, "analyze family=" + family + " k=" + std::to_string(k)) +
                           (records ? rep.records() : rep.table());
        emit(cfg, out, text);
        if (!svg_path.empty()) {
            DrawingFile df;
            df.drawing = d;
            SvgOptions so;
            so.overlay = rep.cut_witness;
            write_file(svg_path, svg_with_header(cfg.seed, "analyze family=" + family + " k=" + std::to_string(k) + " svg",
                                                 render_svg(m.graph(), df, so)));
        }
        const bool pass = rep.cut_ok && rep.lin_ok && rep.lin_ok_f && rep.sample_ok &&
                          (!rep.recurrence || rep.recurrence->violations == 0);
        return pass ? ok : verification_error;
    }
    if (emb_path.empty() || drawing_path.empty())
        throw InputError("analyze needs an embedding and a drawing, or --family");
    const RotationEmbedding e = parse_embedding(read_file(emb_path));
    const Drawing d = parse_drawing(read_file(drawing_path));
    if (const auto bad = crossing_report(e.graph(), d); !bad.empty())
        throw InputError("drawing is not crossing-free: " + bad.front().describe());
    const MaxCut mc = max_cut(e, d);
    const CollinearSet lin = max_collinear(d);
    std::ostringstream os;
    os << header_line(cfg.seed, "analyze");
    auto line_str = [](const Line& l) {
        return format_rational(l.a) + "," + format_rational(l.b) + "," + format_rational(l.c);
    };
    bool pass = true;
    if (records) {
        os << "v=" << e.graph().vertex_count() << "\nf=" << e.face_count() << "\nmax_cut=" << mc.count
           << "\nwitness=" << line_str(mc.witness.line) << "\ncandidates=" << mc.candidates << "\nlin=" << lin.count
           << "\n";
    } else {
        os << "v = " << e.graph().vertex_count() << ", e = " << e.graph().edge_count() << ", f = " << e.face_count()
           << "\n";
        os << "max_cut = " << mc.count << " (witness " << line_str(mc.witness.line) << ", " << mc.candidates
           << " candidate sign vectors)\n";
        os << "dual walk:";
        for (int f : mc.witness.dual_walk)
            os << " " << f;
        os << "\nlin = " << lin.count << " on line " << line_str(lin.line) << "\n";
    }
    if (is_triangulation(e) && e.graph().vertex_count() >= 4) {
        const DualWalkCheck chk = dual_cut_bound_check(e, d, mc.witness.line, std::nullopt, cfg.budget);
        pass = pass && chk.ok();
        if (records)
            os << "dual_circumference=" << chk.circumference << "\ncircumference_exact=" << chk.circumference_exact
               << "\ndual_walk_ok=" << (chk.closed && chk.adjacent && chk.visits_once) << "\n";
        else
            os << "c(G*) = " << chk.circumference << (chk.circumference_exact ? "" : " (budget-limited)")
               << "; max_cut <= c(G*): " << (chk.bound_holds ? "pass" : "FAIL")
               << "; dual walk is a cycle: " << (chk.closed && chk.adjacent && chk.visits_once ? "pass" : "FAIL")
               << "\n";
    }
    if (cfg.sample > 0) {
        Rng rng(cfg.seed);
        const int sampled = sample_cut(e, d, cfg.sample, rng);
        pass = pass && sampled <= mc.count;
        if (records)
            os << "samples=" << cfg.sample << "\nsampled_max=" << sampled << "\n";
        else
            os << "sampling oracle: " << cfg.sample << " random lines, max " << sampled << " <= " << mc.count << "  "
               << (sampled <= mc.count ? "pass" : "FAIL") << "\n";
    }
    emit(cfg, out, os.str());
    if (!svg_path.empty()) {
        DrawingFile df;
        df.drawing = d;
        SvgOptions so;
        so.overlay = mc.witness.line;
        write_file(svg_path, svg_with_header(cfg.seed, "analyze svg", render_svg(e.graph(), df, so)));
    }
    return pass ? ok : verification_error;
}

inline int cmd_svg(const RunConfig& cfg, const std::string& drawing_path, const std::string& graph_path, int precision,
                   std::ostream& out)
{
    const DrawingFile df = parse_drawing_file(read_file(drawing_path));
    std::optional<Graph> g;
    if (!graph_path.empty())
        g = parse_graph(read_file(graph_path));
    SvgOptions so;
    so.precision = precision;
    emit(cfg, out, svg_with_header(cfg.seed, "svg precision=" + std::to_string(precision), render_svg(g, df, so)));
    return ok;
}

inline int cmd_corpus(const RunConfig& cfg, int count, const std::vector<int>& sizes, std::ostream& out)
{
    if (count < 1 || sizes.empty())
        throw InputError("corpus needs --count >= 1 and at least one size");
    Rng rng(cfg.seed);
    int failures = 0;
    if (!cfg.out.empty())
        std::filesystem::create_directories(cfg.out);
    out << header_line(cfg.seed, "corpus count=" + std::to_string(count)) << "# run n |S| |F| bound status\n";
    for (int i = 0; i < count; ++i) {
        const int n = sizes[static_cast<std::size_t>(i) % sizes.size()];
        const Graph g = random_outerplanar(rng, n);
        const auto xs = random_collinear(rng, n);
        std::string status = "pass";
        int s = 0, f = 0;
        try {
            const UntangleResult r = untangle_collinear(g, xs, cfg.root);
            s = r.free_size;
            f = static_cast<int>(r.fixed.size());
            if (f < fixed_lower_bound(n) || !is_crossing_free(g, r.drawing))
                status = "FAIL";
            for (Vertex v : r.fixed)
                if (r.drawing.at(v) != Point(xs[static_cast<std::size_t>(v)], Rational(0)))
                    status = "FAIL";
            if (!cfg.out.empty()) {
                const std::string stem = (std::filesystem::path(cfg.out) / ("run" + std::to_string(i))).string();
                const std::string head = header_line(cfg.seed, "corpus run=" + std::to_string(i));
                write_file(stem + ".graph", head + format_graph(g));
                write_file(stem + ".pi", head + format_drawing(collinear_drawing(xs)));
                std::ostringstream res;
                res << head << format_drawing(r.drawing);
                for (Vertex v : r.fixed)
                    res << "fixed " << v << "\n";
                res << "summary n=" << n << " S=" << s << " F=" << f << " direction=" << to_string(r.direction)
                    << "\n";
                write_file(stem + ".out", res.str());
            }
        } catch (const std::exception& ex) {
            status = std::string("FAIL ") + ex.what();
        }
        if (status != "pass")
            ++failures;
        out << i << " " << n << " " << s << " " << f << " " << fixed_lower_bound(n) << " " << status << "\n";
    }
    out << "runs=" << count << " failures=" << failures << "\n";
    return failures == 0 ? ok : verification_error;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Untangling drawings of outerplanar graphs and the triangulation family with small collinear sets"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "64-bit RNG seed, recorded in output headers");
        sub->add_option("--out", cfg.out, "output path (default: standard output)");
    };

    std::string seed_spec = "k4", lineage_path, draw_path;
    int k = 0, designated = 0;
    long cap = 1'000'000;
    auto* gen = app.add_subcommand("gen", "generate G_k of the triangulation family");
    common(gen);
    gen->add_option("--seed-graph", seed_spec, "seed embedding file, or k4 / octahedron / icosahedron");
    gen->add_option("--designated", designated, "index of the seed face used for pasting");
    gen->add_option("--k", k, "level")->required();
    gen->add_option("--cap", cap, "refuse when v(G_k) would exceed this");
    gen->add_option("--lineage", lineage_path, "write face -> copy lineage here");
    gen->add_option("--draw", draw_path, "write a Tutte drawing here");

    std::string graph_path, drawing_path, layered_path, svg_path, family, graph_opt;
    int precision = 6;
    bool records = false;
    auto* dro = app.add_subcommand("draw-outerplanar", "almost layered drawing of an outerplanar graph");
    common(dro);
    dro->add_option("graph", graph_path, "graph file")->required();
    dro->add_option("--root", cfg.root, "vertex on layer 1");

    auto* fo = app.add_subcommand("fold", "fold an almost layered drawing onto a line");
    common(fo);
    fo->add_option("graph", graph_path, "graph file")->required();
    fo->add_option("--layered", layered_path, "layered drawing (default: draw one)");
    fo->add_option("--root", cfg.root, "root for the layered drawing");
    fo->add_option("--parity", cfg.parity, "layers put on the line")->check(CLI::IsMember({"odd", "even", "auto"}));

    auto* un = app.add_subcommand("untangle", "untangle a collinear drawing of an outerplanar graph");
    common(un);
    un->add_option("graph", graph_path, "graph file")->required();
    un->add_option("drawing", drawing_path, "collinear drawing file")->required();
    un->add_option("--root", cfg.root, "root for the layered drawing");

    auto* an = app.add_subcommand("analyze", "max cut, collinear sets and family bounds of a drawing");
    common(an);
    an->add_option("embedding", graph_path, "embedding file");
    an->add_option("drawing", drawing_path, "drawing file");
    an->add_option("--family", family, "analyze G_k of this seed (k4 / octahedron / icosahedron / file)");
    an->add_option("--k", k, "level for --family");
    an->add_option("--sample", cfg.sample, "random lines for the sampling oracle");
    an->add_option("--budget", cfg.budget, "circumference search node budget");
    an->add_option("--svg", svg_path, "write an SVG with the witness line");
    an->add_flag("--records", records, "key=value output");

    auto* sv = app.add_subcommand("svg", "render a drawing file");
    common(sv);
    sv->add_option("drawing", drawing_path, "drawing file")->required();
    sv->add_option("--graph", graph_opt, "graph file for the edges");
    sv->add_option("--precision", precision, "decimal digits")->check(CLI::Range(0, 30));

    int count = 200;
    std::vector<int> sizes{10, 20, 50, 100, 200, 500};
    auto* co = app.add_subcommand("corpus", "untangle a seeded random corpus");
    common(co);
    co->add_option("--count", count, "number of runs");
    co->add_option("--sizes", sizes, "vertex counts, cycled")->delimiter(',');
    co->add_option("--root", cfg.root, "root for the layered drawings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion& e) {
        out << tool_version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (gen->parsed())
            return cmd_gen(cfg, seed_spec, designated, k, cap, lineage_path, draw_path, out);
        if (dro->parsed())
            return cmd_draw_outerplanar(cfg, graph_path, out);
        if (fo->parsed())
            return cmd_fold(cfg, graph_path, layered_path, out);
        if (un->parsed())
            return cmd_untangle(cfg, graph_path, drawing_path, out);
        if (an->parsed())
            return cmd_analyze(cfg, graph_path, drawing_path, family, k, svg_path, records, out);
        if (sv->parsed())
            return cmd_svg(cfg, drawing_path, graph_opt, precision, out);
        if (co->parsed())
            return cmd_corpus(cfg, count, sizes, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const ScopeError& e) {
        err << "out of scope: " << e.what() << "\n";
        return scope_error;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return verification_error;
    }
    return input_error;
}

} // namespace untangle::cli

#endif // UNTANGLE_TOOLS_CLI_HPP
