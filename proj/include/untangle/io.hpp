#ifndef UNTANGLE_IO_HPP
#define UNTANGLE_IO_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "untangle/embedding.hpp"
#include "untangle/error.hpp"
#include "untangle/fold.hpp"
#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"
#include "untangle/layered.hpp"

namespace untangle {

inline constexpr const char* tool_version = "0.3.0";

// First line of every file we write.
inline std::string header_line(std::uint64_t seed, const std::string& what)
{
    return "# untangle " + std::string(tool_version) + " seed=" + std::to_string(seed) + " " + what + "\n";
}

namespace detail {

struct TextLine {
    int number;
    std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
inline std::vector<TextLine> tokenize(const std::string& text)
{
    std::vector<TextLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        TextLine tl{number, {}};
        std::string tok;
        while (ls >> tok)
            tl.tokens.push_back(tok);
        if (!tl.tokens.empty())
            out.push_back(std::move(tl));
    }
    return out;
}

[[noreturn]] inline void fail_at(int line, const std::string& what)
{
    throw InputError("line " + std::to_string(line) + ": " + what);
}

inline long parse_int(const std::string& s, int line)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        fail_at(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size())
        fail_at(line, "expected an integer, got '" + s + "'");
    return v;
}

inline Rational parse_rational_at(const std::string& s, int line)
{
    try {
        return parse_rational(s);
    } catch (const InputError& e) {
        fail_at(line, e.what());
    }
}

} // namespace detail

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
    if (!out)
        throw InputError("failed writing " + path);
}

// Graph format: "n m", then m lines "u v". Lines starting with "rot" or
// "face" belong to richer formats and are skipped here.
inline Graph parse_graph(const std::string& text)
{
    const auto lines = detail::tokenize(text);
    std::size_t i = 0;
    while (i < lines.size() && (lines[i].tokens[0] == "rot" || lines[i].tokens[0] == "face"))
        ++i;
    if (i == lines.size())
        throw InputError("graph file has no 'n m' line");
    const auto& head = lines[i++];
    if (head.tokens.size() != 2)
        detail::fail_at(head.number, "expected 'n m'");
    const long n = detail::parse_int(head.tokens[0], head.number);
    const long m = detail::parse_int(head.tokens[1], head.number);
    if (n < 0 || m < 0)
        detail::fail_at(head.number, "negative count");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens[0] == "rot" || l.tokens[0] == "face")
            continue;
        if (l.tokens.size() != 2)
            detail::fail_at(l.number, "expected 'u v'");
        const long u = detail::parse_int(l.tokens[0], l.number);
        const long v = detail::parse_int(l.tokens[1], l.number);
        if (u < 0 || v < 0 || u >= n || v >= n)
            detail::fail_at(l.number, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            detail::fail_at(l.number, "self loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (static_cast<long>(edges.size()) != m)
        throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

inline std::string format_graph(const Graph& g)
{
    std::ostringstream os;
    os << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& e : g.edges())
        os << e.u << " " << e.v << "\n";
    return os.str();
}

// Embedding format: graph format plus "rot v: a b c ..." (counterclockwise).
inline RotationEmbedding parse_embedding(const std::string& text)
{
    Graph g = parse_graph(text);
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& l : detail::tokenize(text)) {
        if (l.tokens[0] != "rot")
            continue;
        if (l.tokens.size() < 2 || l.tokens[1].empty() || l.tokens[1].back() != ':')
            detail::fail_at(l.number, "expected 'rot v: neighbors'");
        const long v = detail::parse_int(l.tokens[1].substr(0, l.tokens[1].size() - 1), l.number);
        if (v < 0 || v >= g.vertex_count())
            detail::fail_at(l.number, "vertex id out of range");
        if (seen[static_cast<std::size_t>(v)])
            detail::fail_at(l.number, "second rotation for vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
        for (std::size_t k = 2; k < l.tokens.size(); ++k)
            rot[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(detail::parse_int(l.tokens[k], l.number)));
    }
    return RotationEmbedding(std::move(g), std::move(rot));
}

inline std::string format_embedding(const RotationEmbedding& e)
{
    std::ostringstream os;
    os << format_graph(e.graph());
    for (Vertex v = 0; v < e.graph().vertex_count(); ++v) {
        os << "rot " << v << ":";
        for (Vertex w : e.rotation(v))
            os << " " << w;
        os << "\n";
    }
    return os.str();
}

// Drawing plus the optional annotations the tools write: layers, fixed
// and free vertices, fold segments and a summary record.
struct DrawingFile {
    Drawing drawing;
    std::map<Vertex, int> layer;
    std::vector<Vertex> fixed;
    std::vector<Vertex> free_set;
    std::vector<FoldSegment> segments;
    std::vector<std::pair<std::string, std::string>> summary;
};

inline DrawingFile parse_drawing_file(const std::string& text)
{
    DrawingFile df;
    std::map<Vertex, int> first_line;
    for (const auto& l : detail::tokenize(text)) {
        const auto& t = l.tokens;
        auto vertex = [&](const std::string& s) {
            const long v = detail::parse_int(s, l.number);
            if (v < 0 || v > 100'000'000)
                detail::fail_at(l.number, "vertex id out of range");
            return static_cast<Vertex>(v);
        };
        if (t[0] == "layer") {
            if (t.size() != 3)
                detail::fail_at(l.number, "expected 'layer v k'");
            df.layer[vertex(t[1])] = static_cast<int>(detail::parse_int(t[2], l.number));
        } else if (t[0] == "fixed" || t[0] == "free") {
            if (t.size() != 2)
                detail::fail_at(l.number, "expected '" + t[0] + " v'");
            (t[0] == "fixed" ? df.fixed : df.free_set).push_back(vertex(t[1]));
        } else if (t[0] == "run" || t[0] == "perp") {
            // run k: v ...   |   perp k x sign: v ...
            FoldSegment seg;
            seg.on_line = t[0] == "run";
            const std::size_t head = seg.on_line ? 2 : 4;
            if (t.size() < head || t[head - 1].back() != ':')
                detail::fail_at(l.number, seg.on_line ? "expected 'run k: v ...'" : "expected 'perp k x sign: v ...'");
            auto strip = [](std::string s) {
                if (!s.empty() && s.back() == ':')
                    s.pop_back();
                return s;
            };
            seg.layer = static_cast<int>(detail::parse_int(strip(t[1]), l.number));
            if (!seg.on_line) {
                seg.x = detail::parse_rational_at(t[2], l.number);
                seg.sign = static_cast<int>(detail::parse_int(strip(t[3]), l.number));
            }
            for (std::size_t k = head; k < t.size(); ++k)
                seg.vertices.push_back(vertex(t[k]));
            df.segments.push_back(std::move(seg));
        } else if (t[0] == "summary") {
            for (std::size_t k = 1; k < t.size(); ++k) {
                const auto eq = t[k].find('=');
                if (eq == std::string::npos)
                    detail::fail_at(l.number, "expected key=value in summary");
                df.summary.emplace_back(t[k].substr(0, eq), t[k].substr(eq + 1));
            }
        } else {
            if (t.size() != 3)
                detail::fail_at(l.number, "expected 'v x y'");
            const Vertex v = vertex(t[0]);
            if (first_line.count(v))
                detail::fail_at(l.number, "vertex " + std::to_string(v) + " already placed on line " +
                                              std::to_string(first_line[v]));
            first_line[v] = l.number;
            df.drawing.set(v, Point(detail::parse_rational_at(t[1], l.number), detail::parse_rational_at(t[2], l.number)));
        }
    }
    return df;
}

inline Drawing parse_drawing(const std::string& text) { return parse_drawing_file(text).drawing; }

inline std::string format_drawing(const Drawing& d)
{
    std::ostringstream os;
    for (Vertex v = 0; v < d.size(); ++v)
        if (d.has(v))
            os << v << " " << format_rational(d.at(v).x) << " " << format_rational(d.at(v).y) << "\n";
    return os.str();
}

inline std::string format_layered(const LayeredDrawing& ld)
{
    std::ostringstream os;
    os << format_drawing(ld.drawing);
    for (std::size_t v = 0; v < ld.layer.size(); ++v)
        os << "layer " << v << " " << ld.layer[v] << "\n";
    return os.str();
}

inline std::string format_certificate(const FoldCertificate& fc)
{
    std::ostringstream os;
    os << "# parity " << to_string(fc.parity) << "\n";
    os << format_drawing(fc.drawing);
    for (Vertex v : fc.free_set)
        os << "free " << v << "\n";
    for (const auto& seg : fc.segments) {
        if (seg.on_line)
            os << "run " << seg.layer << ":";
        else
            os << "perp " << seg.layer << " " << format_rational(seg.x) << " " << seg.sign << ":";
        for (Vertex v : seg.vertices)
            os << " " << v;
        os << "\n";
    }
    return os.str();
}

// Rebuild a certificate from its file form and the graph it belongs to.
inline FoldCertificate certificate_from_file(const Graph& g, const DrawingFile& df)
{
    FoldCertificate fc;
    fc.graph = g;
    fc.drawing = df.drawing;
    fc.free_set = df.free_set;
    fc.segments = df.segments;
    if (fc.segments.empty())
        throw InputError("file has no fold segments");
    fc.parity = fc.segments.front().on_line == (fc.segments.front().layer % 2 == 1) ? Parity::odd : Parity::even;
    std::vector<Vertex> runs;
    for (const auto& s : fc.segments)
        if (s.on_line)
            runs.insert(runs.end(), s.vertices.begin(), s.vertices.end());
    if (runs != fc.free_set)
        throw InputError("free set does not match the listed runs");
    for (Vertex v : fc.free_set)
        if (sgn(fc.drawing.at(v).y) != 0)
            throw InputError("free vertex " + std::to_string(v) + " is off the line y = 0");
    return fc;
}

// "face i -> copy j" per face of the refined level, followed by the id map.
inline std::string format_lineage(const std::vector<std::vector<std::vector<Vertex>>>& lineage)
{
    std::ostringstream os;
    for (std::size_t level = 0; level < lineage.size(); ++level) {
        os << "# level " << level + 1 << " -> " << level + 2 << "\n";
        for (std::size_t i = 0; i < lineage[level].size(); ++i) {
            os << "face " << i << " -> copy " << i << " :";
            for (std::size_t s = 0; s < lineage[level][i].size(); ++s)
                os << " " << s << "=" << lineage[level][i][s];
            os << "\n";
        }
    }
    return os.str();
}

} // namespace untangle

#endif // UNTANGLE_IO_HPP
