#pragma once

// Exhaustive generation of one representative per isomorphism class of trees
// (rooted level sequences with canonical-code dedup) and uniform random
// labeled trees from Prüfer words.

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pdom/canonical.hpp"
#include "pdom/graph.hpp"

namespace pdom {

namespace detail {

inline Graph tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (levels[static_cast<std::size_t>(j)] == levels[static_cast<std::size_t>(i)] - 1) {
                edges.emplace_back(j, i);
                break;
            }
        }
    }
    return from_edge_list(n, edges);
}

// Beyer-Hedetniemi: every canonical level sequence of a rooted tree on n
// vertices, in decreasing lexicographic order (path first, star last).
inline void for_each_rooted_level_sequence(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be at least 1");
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(levels);
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (levels[static_cast<std::size_t>(i)] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = p - 1;
        while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
        for (int i = p; i < n; ++i)
            levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
    }
}

}  // namespace detail

// Calls fn exactly once per isomorphism class of trees on n vertices, in a
// fixed deterministic order.
inline void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
    std::unordered_set<std::string> seen;
    detail::for_each_rooted_level_sequence(n, [&](const std::vector<int>& levels) {
        Graph t = detail::tree_from_level_sequence(levels);
        if (seen.insert(canonical_code(t)).second) fn(t);
    });
}

inline std::vector<Graph> enumerate_trees(int n) {
    std::vector<Graph> out;
    for_each_tree(n, [&](const Graph& t) { out.push_back(t); });
    return out;
}

namespace detail {

// Bounded uniform draw with rejection; stable across platforms, unlike
// std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    while (true) {
        std::uint64_t x = rng();
        if (x <= limit) return x % bound;
    }
}

inline Graph tree_from_prufer(int n, const std::vector<int>& word) {
    if (n == 1) return Graph(1);
    if (n == 2) return from_edge_list(2, {{0, 1}});
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : word) ++deg[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : word) {
        edges.emplace_back(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return from_edge_list(n, edges);
}

}  // namespace detail

// Uniform random labeled tree on n vertices; identical output for identical
// (n, seed).
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be at least 1");
    if (n <= 2) return detail::tree_from_prufer(n, {});
    std::mt19937_64 rng(seed);
    std::vector<int> word(static_cast<std::size_t>(n - 2));
    for (auto& x : word)
        x = static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(n)));
    return detail::tree_from_prufer(n, word);
}

}  // namespace pdom
