#ifndef UNTANGLE_MONOTONE_HPP
#define UNTANGLE_MONOTONE_HPP

#include <algorithm>
#include <vector>

namespace untangle {

enum class Direction { increasing, decreasing };

inline const char* to_string(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

struct MonotoneResult {
    std::vector<std::size_t> indices; // ascending positions in the input
    Direction direction = Direction::increasing;

    std::size_t length() const { return indices.size(); }
};

namespace detail {

// Patience sorting: longest strictly increasing subsequence under less.
template <class T, class Less>
std::vector<std::size_t> longest_increasing(const std::vector<T>& seq, Less less)
{
    std::vector<std::size_t> tails;              // index of smallest tail per length
    std::vector<T> tail_vals;                    // seq[tails[k]], kept inline for the search
    std::vector<std::size_t> parent(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const std::size_t lo = static_cast<std::size_t>(
            std::lower_bound(tail_vals.begin(), tail_vals.end(), seq[i], less) - tail_vals.begin());
        parent[i] = lo > 0 ? tails[lo - 1] : i;
        if (lo == tail_vals.size()) {
            tails.push_back(i);
            tail_vals.push_back(seq[i]);
        } else {
            tails[lo] = i;
            tail_vals[lo] = seq[i];
        }
    }
    std::vector<std::size_t> out;
    if (tails.empty())
        return out;
    std::size_t cur = tails.back();
    for (std::size_t k = tails.size(); k > 0; --k) {
        out.push_back(cur);
        cur = parent[cur];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace detail

// Longest monotone subsequence of distinct values; increasing wins ties.
// By Erdos-Szekeres its length is at least ceil(sqrt(m)).
template <class T>
MonotoneResult longest_monotone(const std::vector<T>& seq)
{
    auto inc = detail::longest_increasing(seq, [](const T& a, const T& b) { return a < b; });
    auto dec = detail::longest_increasing(seq, [](const T& a, const T& b) { return b < a; });
    if (dec.size() > inc.size())
        return {std::move(dec), Direction::decreasing};
    return {std::move(inc), Direction::increasing};
}

} // namespace untangle

#endif // UNTANGLE_MONOTONE_HPP
