#pragma once

// Test-only brute-force oracles. These deliberately avoid every optimization
// the library uses (no forced-vertex seeding, no gamma-1 restriction, no tree
// dynamic program) so that frozen expected values come from an independent
// route.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pdom/enumerate.hpp"
#include "pdom/graph.hpp"

namespace oracle {

inline bool dominates(const pdom::Graph& g, int p, std::uint64_t d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if ((d >> v) & 1) continue;
        int c = 0;
        for (int u : g.neighbors(v))
            if ((d >> u) & 1) ++c;
        if (c < p) return false;
    }
    return true;
}

inline int gamma(const pdom::Graph& g, int p) {
    int n = g.vertex_count();
    int best = n + 1;
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
        if (std::popcount(d) >= best) continue;
        if (dominates(g, p, d)) best = std::popcount(d);
    }
    return best;
}

inline std::vector<std::uint64_t> all_minimum_sets(const pdom::Graph& g, int p) {
    int n = g.vertex_count();
    int best = gamma(g, p);
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d)
        if (std::popcount(d) == best && dominates(g, p, d)) out.push_back(d);
    return out;
}

inline int eta_of_set(const pdom::Graph& g, int p, std::uint64_t x) {
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if ((x >> v) & 1) continue;
        int c = 0;
        for (int u : g.neighbors(v))
            if ((x >> u) & 1) ++c;
        if (c < p) total += p - c;
    }
    return total;
}

// min over every X with |X| < gamma_p(G), straight from the definition.
inline int eta(const pdom::Graph& g, int p) {
    int n = g.vertex_count();
    int gam = gamma(g, p);
    int best = 1 << 20;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (std::popcount(x) >= gam) continue;
        best = std::min(best, eta_of_set(g, p, x));
    }
    return best;
}

// Reinforcement straight from the definition, recomputing full gamma for
// every candidate edge set. Exponential; n <= 8 territory.
inline int r_by_definition(const pdom::Graph& g, int p, int budget) {
    int gam = gamma(g, p);
    if (gam <= p) return 0;
    auto non_edges = pdom::complement_edges(g);
    int m = static_cast<int>(non_edges.size());
    for (int k = 1; k <= budget && k <= m; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<pdom::Edge> b;
            for (int i : pick) b.push_back(non_edges[static_cast<std::size_t>(i)]);
            if (gamma(pdom::add_edges(g, b), p) < gam) return k;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return -1;  // beyond budget
}

// Permutation-scan isomorphism test; n <= 8.
inline bool isomorphic(const pdom::Graph& a, const pdom::Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v : a.neighbors(u))
                if (u < v && !b.has_edge(perm[static_cast<std::size_t>(u)],
                                         perm[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline pdom::Graph relabel(const pdom::Graph& g, const std::vector<int>& perm) {
    std::vector<pdom::Edge> es;
    for (const auto& [u, v] : g.edges())
        es.push_back(pdom::normalized(perm[static_cast<std::size_t>(u)],
                                      perm[static_cast<std::size_t>(v)]));
    return pdom::from_edge_list(g.vertex_count(), es);
}

// Connected graph on n vertices that is not a tree: a random spanning tree
// plus at least one random extra edge. Deterministic per seed.
inline pdom::Graph random_connected_nontree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    pdom::Graph t = pdom::random_tree(n, rng());
    auto pool = pdom::complement_edges(t);
    std::size_t extra =
        1 + pdom::detail::uniform_below(rng, std::min<std::uint64_t>(3, pool.size()));
    auto es = t.edges();
    for (std::size_t i = 0; i < extra && !pool.empty(); ++i) {
        std::size_t k = pdom::detail::uniform_below(rng, pool.size());
        es.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return pdom::from_edge_list(n, es);
}

}  // namespace oracle
