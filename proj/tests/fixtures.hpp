// Hand-built outerplanar graphs shared by the unit tests and the
// acceptance runner.
#ifndef UNTANGLE_TESTS_FIXTURES_HPP
#define UNTANGLE_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/random.hpp"

namespace fixture {

using namespace untangle;

struct Named {
    std::string name;
    Graph graph;
};

inline Graph star(int leaves)
{
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i)
        es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

// Hub 0 joined to every vertex of the path 1..n.
inline Graph fan(int n)
{
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i) {
        es.emplace_back(0, i);
        if (i > 1)
            es.emplace_back(i - 1, i);
    }
    return Graph(n + 1, es);
}

inline Graph path(int n)
{
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i)
        es.emplace_back(i - 1, i);
    return Graph(n, es);
}

inline Graph cycle(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

// Polygon 0..h-1 with a random full triangulation: 2h - 3 edges.
inline Graph maximal_outerplanar(Rng& rng, int h)
{
    std::vector<Vertex> poly;
    std::vector<Edge> es;
    for (int i = 0; i < h; ++i) {
        poly.push_back(i);
        es.emplace_back(i, (i + 1) % h);
    }
    untangle::detail::triangulate_polygon(rng, poly, 0, poly.size() - 1, es);
    return Graph(h, es);
}

// Several blocks glued at cutvertices, bridges and pendant trees:
//   hexagon 0..5 fanned from 0; quadrilateral 3,6,7,8 with chord 6-8;
//   triangle 5,9,10; pentagon 10,15,16,17,18 with chords 10-16, 16-18;
//   pendant tree 7-11-12-{13,14}; bridge path 1-19-20 ending in the
//   triangle 20,21,22.
inline Graph glued()
{
    const std::vector<std::pair<Vertex, Vertex>> es{
        {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 0},   {0, 2},   {0, 3},   {0, 4},
        {3, 6},   {6, 7},   {7, 8},   {8, 3},   {6, 8},   {5, 9},   {9, 10},  {10, 5},  {10, 15},
        {15, 16}, {16, 17}, {17, 18}, {18, 10}, {10, 16}, {16, 18}, {7, 11},  {11, 12}, {12, 13},
        {12, 14}, {1, 19},  {19, 20}, {20, 21}, {21, 22}, {22, 20}};
    return Graph(23, es);
}

inline std::vector<Named> hand_fixtures()
{
    std::vector<Named> out;
    out.push_back({"single vertex", Graph(1)});
    out.push_back({"edge", path(2)});
    out.push_back({"path 7", path(7)});
    for (int k : {1, 2, 3, 5, 12})
        out.push_back({"star " + std::to_string(k), star(k)});
    for (int k : {2, 3, 4, 8, 15})
        out.push_back({"fan " + std::to_string(k), fan(k)});
    for (int k : {3, 4, 9})
        out.push_back({"cycle " + std::to_string(k), cycle(k)});
    Rng rng(2024);
    for (int h : {3, 4, 5, 8, 13, 30})
        out.push_back({"maximal outerplanar " + std::to_string(h), maximal_outerplanar(rng, h)});
    out.push_back({"glued", glued()});
    return out;
}

// Wheel W_10: hub 0, rim 1..9 in cyclic order.
inline Graph wheel10()
{
    std::vector<Edge> es;
    for (int i = 1; i <= 9; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(i, i % 9 + 1);
    }
    return Graph(10, es);
}

} // namespace fixture

#endif // UNTANGLE_TESTS_FIXTURES_HPP
