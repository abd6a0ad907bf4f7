#ifndef UNTANGLE_RANDOM_HPP
#define UNTANGLE_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "untangle/family.hpp"
#include "untangle/graph.hpp"
#include "untangle/rational.hpp"

namespace untangle {

// All randomness: std::mt19937_64 seeded with one 64-bit value. Bounded
// draws use rejection sampling instead of std::uniform_int_distribution,
// whose output differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return x % bound;
    }

    // Uniform in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    bool coin() { return (eng_() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 eng_;
};

namespace detail {

// Random triangulation of the polygon poly[lo..hi] (chords only).
inline void triangulate_polygon(Rng& rng, const std::vector<Vertex>& poly, std::size_t lo, std::size_t hi,
                                std::vector<Edge>& chords)
{
    if (hi - lo < 2)
        return;
    const std::size_t k = lo + 1 + static_cast<std::size_t>(rng.below(hi - lo - 1));
    if (k - lo > 1)
        chords.emplace_back(poly[lo], poly[k]);
    if (hi - k > 1)
        chords.emplace_back(poly[k], poly[hi]);
    triangulate_polygon(rng, poly, lo, k, chords);
    triangulate_polygon(rng, poly, k, hi, chords);
}

} // namespace detail

// Connected outerplanar graph on n vertices: starting from one vertex,
// repeatedly hang a pendant edge or a polygon block (randomly
// triangulated, some chords dropped) off a random existing vertex, then
// shuffle the ids.
inline Graph random_outerplanar(Rng& rng, int n)
{
    if (n < 1)
        throw InputError("random_outerplanar needs n >= 1");
    std::vector<Edge> edges;
    int count = 1;
    const long max_block = std::max(3, n / 4);
    while (count < n) {
        const Vertex at = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count)));
        const int remaining = n - count;
        if (remaining < 2 || rng.below(3) == 0) {
            edges.emplace_back(at, count++);
            continue;
        }
        const long h = rng.range(3, std::min<long>(remaining + 1, max_block));
        std::vector<Vertex> poly{at};
        for (long i = 1; i < h; ++i)
            poly.push_back(count++);
        for (std::size_t i = 0; i < poly.size(); ++i)
            edges.emplace_back(poly[i], poly[(i + 1) % poly.size()]);
        std::vector<Edge> chords;
        detail::triangulate_polygon(rng, poly, 0, poly.size() - 1, chords);
        for (const auto& c : chords)
            if (rng.below(4) != 0)
                edges.push_back(c);
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    for (auto& e : edges)
        e = Edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(n, edges);
}

// n distinct integer x-coordinates in random order.
inline std::vector<Rational> random_collinear(Rng& rng, int n)
{
    std::vector<long> slots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        slots[static_cast<std::size_t>(i)] = i;
    rng.shuffle(slots);
    std::vector<Rational> xs;
    for (long s : slots)
        xs.emplace_back(3 * s + static_cast<long>(rng.below(3)));
    return xs;
}

// K4 with `stacks` random vertex insertions (f = 4 + 2 * stacks).
inline RotationEmbedding random_apollonian(Rng& rng, int stacks)
{
    RotationEmbedding e = seed_k4().embedding;
    for (int i = 0; i < stacks; ++i)
        e = stack_vertex(e, static_cast<int>(rng.below(static_cast<std::uint64_t>(e.face_count()))));
    return e;
}

} // namespace untangle

#endif // UNTANGLE_RANDOM_HPP
