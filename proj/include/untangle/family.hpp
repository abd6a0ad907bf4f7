#ifndef UNTANGLE_FAMILY_HPP
#define UNTANGLE_FAMILY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "untangle/embedding.hpp"
#include "untangle/error.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

// A triangulation with one face singled out. Pasting a copy into a face
// identifies that face's three vertices with the face.
struct SeedTriangulation {
    RotationEmbedding embedding;
    int outer_face = 0;

    SeedTriangulation() = default;
    explicit SeedTriangulation(RotationEmbedding e, int designated = 0) : embedding(std::move(e)), outer_face(designated)
    {
        if (embedding.graph().vertex_count() < 4)
            throw InputError("seed triangulation needs at least 4 vertices");
        if (!is_triangulation(embedding))
            throw InputError("seed is not a triangulation");
        if (designated < 0 || designated >= embedding.face_count())
            throw InputError("designated face out of range");
    }

    int v() const { return embedding.graph().vertex_count(); }
    int f() const { return embedding.face_count(); }
    const std::vector<Vertex>& outer() const { return embedding.faces()[static_cast<std::size_t>(outer_face)].walk; }
};

inline SeedTriangulation seed_k4()
{
    return SeedTriangulation(embedding_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}));
}

inline SeedTriangulation seed_octahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 1; i <= 4; ++i) {
        const int j = i % 4 + 1;
        faces.push_back({0, i, j});
        faces.push_back({5, j, i});
    }
    return SeedTriangulation(embedding_from_faces(6, faces));
}

inline SeedTriangulation seed_icosahedron()
{
    std::vector<std::vector<Vertex>> faces;
    for (int i = 1; i <= 5; ++i) {
        const int j = i % 5 + 1;
        faces.push_back({0, i, j});
        faces.push_back({i, 5 + i, 5 + j});
        faces.push_back({i, 5 + j, j});
        faces.push_back({11, 5 + j, 5 + i});
    }
    return SeedTriangulation(embedding_from_faces(12, faces));
}

namespace detail {

// Rotate a walk so it starts at its smallest vertex.
inline std::vector<Vertex> canonical_walk(std::vector<Vertex> w)
{
    std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    return w;
}

} // namespace detail

struct Refinement {
    RotationEmbedding embedding;
    // copies[i][s] is the id that seed vertex s received in the copy pasted
    // into face i of the input.
    std::vector<std::vector<Vertex>> copies;
};

// Paste a copy of the seed (minus its designated face) into every face.
// Faces are walked from their smallest vertex (a, b, c) and the designated
// face likewise (x, y, z); the copy maps x, z, y to a, b, c, which glues
// the disk with matching orientation. Copy i numbers the seed's remaining
// vertices, in ascending order, from v_in + i * (v_seed - 3).
inline Refinement refine_with_lineage(const RotationEmbedding& e, const SeedTriangulation& seed)
{
    if (!is_triangulation(e))
        throw InputError("refine needs a triangulation");
    const int vin = e.graph().vertex_count();
    const int vs = seed.v();
    const auto d = detail::canonical_walk(seed.outer());
    std::vector<Vertex> interior;
    for (Vertex s = 0; s < vs; ++s)
        if (std::find(d.begin(), d.end(), s) == d.end())
            interior.push_back(s);
    const int stride = vs - 3;
    const long vout = static_cast<long>(vin) + static_cast<long>(e.face_count()) * stride;
    if (vout > 2'000'000'000L)
        throw InputError("refinement too large");

    Refinement out;
    std::vector<std::vector<Vertex>> faces;
    faces.reserve(static_cast<std::size_t>(e.face_count()) * static_cast<std::size_t>(seed.f() - 1));
    for (int i = 0; i < e.face_count(); ++i) {
        const auto f = detail::canonical_walk(e.faces()[static_cast<std::size_t>(i)].walk);
        std::vector<Vertex> psi(static_cast<std::size_t>(vs), -1);
        psi[static_cast<std::size_t>(d[0])] = f[0];
        psi[static_cast<std::size_t>(d[2])] = f[1];
        psi[static_cast<std::size_t>(d[1])] = f[2];
        for (std::size_t j = 0; j < interior.size(); ++j)
            psi[static_cast<std::size_t>(interior[j])] = vin + i * stride + static_cast<int>(j);
        for (int sf = 0; sf < seed.f(); ++sf) {
            if (sf == seed.outer_face)
                continue;
            std::vector<Vertex> w;
            for (Vertex s : seed.embedding.faces()[static_cast<std::size_t>(sf)].walk)
                w.push_back(psi[static_cast<std::size_t>(s)]);
            faces.push_back(std::move(w));
        }
        out.copies.push_back(std::move(psi));
    }
    out.embedding = embedding_from_faces(static_cast<int>(vout), faces);
    if (!is_triangulation(out.embedding))
        throw VerificationError("refinement is not a triangulation");
    return out;
}

inline RotationEmbedding refine(const RotationEmbedding& e, const SeedTriangulation& seed)
{
    return refine_with_lineage(e, seed).embedding;
}

struct FamilyMember {
    int k = 1;
    std::vector<RotationEmbedding> levels;                    // G_1 .. G_k
    std::vector<std::vector<std::vector<Vertex>>> lineage;    // lineage[i]: copies pasted into G_{i+1}'s faces
    std::vector<int> outer_chain;                             // designated outer face per level

    const RotationEmbedding& embedding() const { return levels.back(); }
    const Graph& graph() const { return levels.back().graph(); }
};

// v(G_k) = 2 + f(f-1)^(k-1) / 2 for a seed with f faces, or -1 past cap.
inline long projected_vertices(const SeedTriangulation& seed, int k, long cap)
{
    long faces = seed.f();
    for (int i = 1; i < k; ++i) {
        faces *= seed.f() - 1;
        if (2 + faces / 2 > cap)
            return -1;
    }
    const long v = 2 + faces / 2;
    return v > cap ? -1 : v;
}

inline FamilyMember generate(const SeedTriangulation& seed, int k, long cap = 1'000'000)
{
    if (k < 1)
        throw InputError("level k must be at least 1");
    if (projected_vertices(seed, k, cap) < 0) {
        // Report the projection even when it overflows the cap by far.
        mpz_class faces = seed.f();
        for (int i = 1; i < k; ++i)
            faces *= seed.f() - 1;
        const mpz_class v = 2 + faces / 2;
        throw ScopeError("projected v(G_" + std::to_string(k) + ") = " + v.get_str() + " exceeds the cap of " +
                         std::to_string(cap));
    }
    FamilyMember m;
    m.k = k;
    m.levels.push_back(seed.embedding);
    m.outer_chain.push_back(seed.outer_face);
    for (int i = 1; i < k; ++i) {
        auto r = refine_with_lineage(m.levels.back(), seed);
        // The outer face follows the copy pasted into the previous outer
        // face: its first face in seed order.
        const auto& psi = r.copies[static_cast<std::size_t>(m.outer_chain.back())];
        const int first = seed.outer_face == 0 ? 1 : 0;
        std::vector<Vertex> w;
        for (Vertex s : seed.embedding.faces()[static_cast<std::size_t>(first)].walk)
            w.push_back(psi[static_cast<std::size_t>(s)]);
        m.outer_chain.push_back(r.embedding.find_face(w));
        m.levels.push_back(std::move(r.embedding));
        m.lineage.push_back(std::move(r.copies));
    }
    return m;
}

// Insert a vertex into face `face` joined to its three corners.
inline RotationEmbedding stack_vertex(const RotationEmbedding& e, int face)
{
    if (!is_triangulation(e))
        throw InputError("stacking needs a triangulation");
    const int n = e.graph().vertex_count();
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < e.face_count(); ++i) {
        const auto& w = e.faces()[static_cast<std::size_t>(i)].walk;
        if (i != face) {
            faces.push_back(w);
            continue;
        }
        faces.push_back({w[0], w[1], n});
        faces.push_back({w[1], w[2], n});
        faces.push_back({w[2], w[0], n});
    }
    return embedding_from_faces(n + 1, faces);
}

// Tutte's barycentric drawing of a 3-connected planar triangulation-like
// embedding, solved exactly. The outer face goes to the given triangle
// and is walked clockwise so that inner faces come out counterclockwise.
inline Drawing tutte_draw(const RotationEmbedding& e, int outer_face, const std::vector<Point>& boundary)
{
    const Graph& g = e.graph();
    const int n = g.vertex_count();
    if (outer_face < 0 || outer_face >= e.face_count())
        throw InputError("outer face out of range");
    const auto& ow = e.faces()[static_cast<std::size_t>(outer_face)].walk;
    if (ow.size() != 3 || boundary.size() != 3)
        throw InputError("outer face and boundary must be triangles");
    const int orient = orientation(boundary[0], boundary[1], boundary[2]);
    if (orient == 0)
        throw InputError("boundary points are collinear");
    Drawing d(n);
    d.set(ow[0], boundary[0]);
    d.set(ow[1], orient < 0 ? boundary[1] : boundary[2]);
    d.set(ow[2], orient < 0 ? boundary[2] : boundary[1]);

    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v) {
        if (!d.has(v)) {
            idx[static_cast<std::size_t>(v)] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    }
    const std::size_t m = inner.size();
    // Rows: deg(v) p_v - sum of inner neighbours = sum of boundary neighbours.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 2));
    for (std::size_t r = 0; r < m; ++r) {
        const Vertex v = inner[r];
        a[r][r] = g.degree(v);
        for (Vertex w : g.neighbors(v)) {
            const int c = idx[static_cast<std::size_t>(w)];
            if (c >= 0) {
                a[r][static_cast<std::size_t>(c)] -= 1;
            } else {
                a[r][m] += d.at(w).x;
                a[r][m + 1] += d.at(w).y;
            }
        }
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && sgn(a[piv][col]) == 0)
            ++piv;
        if (piv == m)
            throw VerificationError("singular barycentric system");
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t c = col; c < m + 2; ++c)
            if (sgn(a[col][c]) != 0)
                a[col][c] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || sgn(a[r][col]) == 0)
                continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < m + 2; ++c)
                if (sgn(a[col][c]) != 0)
                    a[r][c] -= factor * a[col][c];
        }
    }
    for (std::size_t r = 0; r < m; ++r)
        d.set(inner[r], Point(a[r][m], a[r][m + 1]));

    for (Vertex v : inner) {
        Rational sx, sy;
        for (Vertex w : g.neighbors(v)) {
            sx += d.at(w).x;
            sy += d.at(w).y;
        }
        if (sx != d.at(v).x * g.degree(v) || sy != d.at(v).y * g.degree(v))
            throw VerificationError("vertex " + std::to_string(v) + " is not at the barycenter of its neighbors");
    }
    if (const auto bad = crossing_report(g, d); !bad.empty())
        throw VerificationError("Tutte drawing has " + bad.front().describe());
    for (int f = 0; f < e.face_count(); ++f) {
        if (f == outer_face)
            continue;
        std::vector<Point> poly;
        for (Vertex v : e.faces()[static_cast<std::size_t>(f)].walk)
            poly.push_back(d.at(v));
        if (sgn(signed_area2(poly)) <= 0)
            throw VerificationError("inner face " + std::to_string(f) + " is not positively oriented");
    }
    return d;
}

} // namespace untangle

#endif // UNTANGLE_FAMILY_HPP
