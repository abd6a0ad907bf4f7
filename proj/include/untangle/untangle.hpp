#ifndef UNTANGLE_UNTANGLE_HPP
#define UNTANGLE_UNTANGLE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "untangle/error.hpp"
#include "untangle/fold.hpp"
#include "untangle/layered.hpp"
#include "untangle/monotone.hpp"
#include "untangle/outerplanar.hpp"

namespace untangle {

struct UntangleResult {
    Drawing drawing;                     // rho', crossing-free
    std::vector<Vertex> fixed;           // ascending ids; rho'(v) = pi(v)
    int n = 0;
    int free_size = 0;                   // |S| of the fold used, or n if pi was already crossing-free
    Direction direction = Direction::increasing;
    bool already_crossing_free = false;
    std::optional<FoldCertificate> certificate; // as used, after any mirroring
    std::vector<Vertex> monotone;        // F in free-set order
};

// ceil(sqrt(ceil(n / 2))), the guaranteed size of the fixed set.
inline int fixed_lower_bound(int n)
{
    const int half = (n + 1) / 2;
    int r = static_cast<int>(std::sqrt(static_cast<double>(half)));
    while (r * r < half)
        ++r;
    while (r > 0 && (r - 1) * (r - 1) >= half)
        --r;
    return r;
}

// Drawing with vertex v at (xs[v], 0).
inline Drawing collinear_drawing(const std::vector<Rational>& xs)
{
    Drawing d(static_cast<int>(xs.size()));
    for (std::size_t v = 0; v < xs.size(); ++v)
        d.set(static_cast<Vertex>(v), Point(xs[v], Rational(0)));
    return d;
}

// Untangle a drawing of an outerplanar graph whose vertices all lie on
// the x-axis (vertex v at xs[v]), keeping at least ceil(sqrt(n/2))
// vertices fixed. The result is verified before it is returned.
inline UntangleResult untangle_collinear(const Graph& g, const std::vector<Rational>& xs, Vertex root = 0)
{
    const int n = g.vertex_count();
    if (static_cast<int>(xs.size()) != n)
        throw InputError("drawing has " + std::to_string(xs.size()) + " positions for " + std::to_string(n) + " vertices");
    if (n == 0)
        throw InputError("empty graph");
    {
        std::vector<Rational> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("input drawing is not injective");
    }
    const Recognition rec = recognize(g);
    if (!rec.accepted())
        throw ScopeError(rec.rejection->describe());
    if (!is_connected(g))
        throw InputError("graph is not connected");

    UntangleResult res;
    res.n = n;
    const Drawing pi = collinear_drawing(xs);
    if (is_crossing_free(g, pi)) {
        res.drawing = pi;
        res.already_crossing_free = true;
        res.free_size = n;
        for (Vertex v = 0; v < n; ++v) {
            res.fixed.push_back(v);
            res.monotone.push_back(v);
        }
        return res;
    }

    const LayeredDrawing ld = almost_layered_draw(*rec.structure, root);
    FoldCertificate fc = fold(g, ld, Parity::automatic);
    std::vector<Rational> seq;
    for (Vertex v : fc.free_set)
        seq.push_back(xs[static_cast<std::size_t>(v)]);
    const MonotoneResult mono = longest_monotone(seq);
    res.direction = mono.direction;
    std::vector<Vertex> chosen;
    for (std::size_t i : mono.indices)
        chosen.push_back(fc.free_set[i]);
    if (mono.direction == Direction::decreasing) {
        fc = mirror(fc);
        std::reverse(chosen.begin(), chosen.end());
    }
    const std::size_t m = fc.free_set.size();
    std::vector<int> where(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < m; ++i)
        where[static_cast<std::size_t>(fc.free_set[i])] = static_cast<int>(i);
    std::vector<std::size_t> pos;
    for (Vertex v : chosen)
        pos.push_back(static_cast<std::size_t>(where[static_cast<std::size_t>(v)]));

    // Chosen vertices go to their pi positions, the rest of the free set
    // is spread evenly in between and stepped by 1 beyond the ends.
    std::vector<Rational> targets(m);
    for (std::size_t k = 0; k < pos.size(); ++k)
        targets[pos[k]] = xs[static_cast<std::size_t>(chosen[k])];
    for (std::size_t i = 0; i < pos.front(); ++i)
        targets[i] = targets[pos.front()] - static_cast<long>(pos.front() - i);
    for (std::size_t i = pos.back() + 1; i < m; ++i)
        targets[i] = targets[pos.back()] + static_cast<long>(i - pos.back());
    for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
        const Rational lo = targets[pos[k]];
        const Rational hi = targets[pos[k + 1]];
        const long span = static_cast<long>(pos[k + 1] - pos[k]);
        for (std::size_t i = pos[k] + 1; i < pos[k + 1]; ++i)
            targets[i] = lo + (hi - lo) * make_rational(static_cast<long>(i - pos[k]), static_cast<long>(span));
    }

    res.drawing = displace_free(fc, targets);
    for (Vertex v : chosen)
        if (res.drawing.at(v) != pi.at(v))
            throw VerificationError("vertex " + std::to_string(v) + " moved");
    res.free_size = static_cast<int>(m);
    res.monotone = chosen;
    res.fixed = chosen;
    std::sort(res.fixed.begin(), res.fixed.end());
    if (static_cast<int>(res.fixed.size()) < fixed_lower_bound(n))
        throw VerificationError("only " + std::to_string(res.fixed.size()) + " fixed vertices, expected at least " +
                                std::to_string(fixed_lower_bound(n)));
    res.certificate = std::move(fc);
    return res;
}

} // namespace untangle

#endif // UNTANGLE_UNTANGLE_HPP
