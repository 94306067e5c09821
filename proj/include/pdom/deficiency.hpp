#pragma once

// The eta_p deficiency functional (total shortfall of a candidate set X) and
// the mu_p private-neighbor functional over minimum dominating sets. All
// quantities are small exact integers.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/domination.hpp"
#include "pdom/graph.hpp"

namespace pdom {

// Shortfall of x under X: 0 when x is in X or has >= p neighbors there.
inline int eta_point(const Graph& g, int p, const VertexSet& x_set, int x) {
    require_order(p);
    if (x_set.contains(x)) return 0;
    int c = 0;
    for (int u : g.neighbors(x))
        if (x_set.contains(u)) ++c;
    return c >= p ? 0 : p - c;
}

inline int eta_local(const Graph& g, int p, const VertexSet& x_set, const VertexSet& s) {
    if (x_set.universe() != g.vertex_count() || s.universe() != g.vertex_count())
        throw std::invalid_argument("eta_local: set universe mismatch");
    int total = 0;
    for (int x : s.members()) total += eta_point(g, p, x_set, x);
    return total;
}

struct EtaWitness {
    int p = 0;
    VertexSet x_set;
    std::vector<int> deficiencies;  // per vertex
    int total = 0;
};

namespace detail {

inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    return a & (d & (~d + 1));
}

// Minimum total deficiency over all X of the given size, lexicographically
// smallest minimizer.
inline std::pair<std::uint64_t, int> eta_min_over_size(const std::vector<std::uint64_t>& adj,
                                                       int n, int p, int k) {
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_mask = 0;
    auto consider = [&](std::uint64_t x) {
        int total = 0;
        for (int u = 0; u < n; ++u) {
            if ((x >> u) & 1) continue;
            int c = std::popcount(adj[static_cast<std::size_t>(u)] & x);
            if (c < p) {
                total += p - c;
                if (total > best) return;
            }
        }
        if (total < best || (total == best && mask_lex_less(x, best_mask))) {
            best = total;
            best_mask = x;
        }
    };
    if (k == 0) {
        consider(0);
        return {best_mask, best};
    }
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    std::uint64_t last = v << (n - k);
    while (true) {
        consider(v);
        if (v == last) break;
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | ((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1);
    }
    return {best_mask, best};
}

inline EtaWitness eta_witness_from_mask(const Graph& g, int p, std::uint64_t mask, int total) {
    EtaWitness w;
    w.p = p;
    w.x_set = detail::from_mask(g.vertex_count(), mask);
    w.deficiencies.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    int check = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = eta_point(g, p, w.x_set, v);
        w.deficiencies[static_cast<std::size_t>(v)] = d;
        check += d;
    }
    if (check != total) throw std::logic_error("eta_graph: deficiency total mismatch");
    w.total = total;
    return w;
}

}  // namespace detail

// eta_p(G): minimum total deficiency over X with |X| < gamma_p(G). The search
// runs at |X| = gamma_p(G) - 1; monotonicity (enlarging X never increases any
// deficiency term) makes that restriction exact.
inline EtaWitness eta_graph(const Graph& g, int p, const SearchLimits& lim = {}) {
    require_order(p);
    int n = g.vertex_count();
    if (n > lim.eta_max_n)
        throw SizeGuardError("eta_graph: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(lim.eta_max_n));
    int gamma = gamma_p(g, p, lim).value;
    auto adj = detail::adjacency_masks(g);
    auto [mask, best] = detail::eta_min_over_size(adj, n, p, gamma - 1);
    return detail::eta_witness_from_mask(g, p, mask, best);
}

// Reference search over every X with |X| < gamma_p(G); exponential, kept as
// the testing oracle for the size-restricted search.
inline EtaWitness eta_graph_unrestricted(const Graph& g, int p, const SearchLimits& lim = {}) {
    require_order(p);
    int n = g.vertex_count();
    if (n > 20)
        throw SizeGuardError("eta_graph_unrestricted: n=" + std::to_string(n) + " exceeds cap 20");
    int gamma = gamma_p(g, p, lim).value;
    auto adj = detail::adjacency_masks(g);
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_mask = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (std::popcount(x) >= gamma) continue;
        int total = 0;
        for (int u = 0; u < n && total <= best; ++u) {
            if ((x >> u) & 1) continue;
            int c = std::popcount(adj[static_cast<std::size_t>(u)] & x);
            if (c < p) total += p - c;
        }
        if (total < best || (total == best && detail::mask_lex_less(x, best_mask))) {
            best = total;
            best_mask = x;
        }
    }
    return detail::eta_witness_from_mask(g, p, best_mask, best);
}

// mu_p(x, D, G) = |PN_p(x, D, G)| + max(0, p - |N(x) cap D|).
inline int mu_point(const Graph& g, int p, const VertexSet& d, int x) {
    require_order(p);
    if (!d.contains(x)) throw std::invalid_argument("mu_point: x is not in D");
    int in_d = 0;
    for (int u : g.neighbors(x))
        if (d.contains(u)) ++in_d;
    int deficit = in_d >= p ? 0 : p - in_d;
    return private_neighbors(g, p, d, x).size() + deficit;
}

struct MuEntry {
    int x = 0;
    int private_count = 0;
    int deficit = 0;
    int mu = 0;
};

struct MuReport {
    int p = 0;
    VertexSet best_set;            // minimum set achieving graph_min (lex-smallest)
    std::vector<MuEntry> entries;  // per x in best_set, ascending
    int set_min = 0;               // mu_p(best_set, G)
    int best_vertex = -1;          // smallest x attaining set_min in best_set
    int graph_min = 0;             // mu_p(G), minimized over all minimum sets
};

inline int mu_of_set(const Graph& g, int p, const VertexSet& d) {
    int best = std::numeric_limits<int>::max();
    for (int x : d.members()) best = std::min(best, mu_point(g, p, d, x));
    return best;
}

inline MuReport mu_graph(const Graph& g, int p, const SearchLimits& lim = {}) {
    require_order(p);
    auto sets = all_minimum_p_dominating_sets(g, p, lim);
    MuReport report;
    report.p = p;
    report.graph_min = std::numeric_limits<int>::max();
    for (const auto& d : sets) report.graph_min = std::min(report.graph_min, mu_of_set(g, p, d));
    for (const auto& d : sets) {
        if (mu_of_set(g, p, d) != report.graph_min) continue;
        report.best_set = d;
        report.set_min = report.graph_min;
        for (int x : d.members()) {
            MuEntry e;
            e.x = x;
            e.private_count = private_neighbors(g, p, d, x).size();
            int in_d = 0;
            for (int u : g.neighbors(x))
                if (d.contains(u)) ++in_d;
            e.deficit = in_d >= p ? 0 : p - in_d;
            e.mu = e.private_count + e.deficit;
            if (e.mu == report.set_min && report.best_vertex < 0) report.best_vertex = x;
            report.entries.push_back(e);
        }
        break;  // enumeration order is lexicographic, so this is the lex-smallest achiever
    }
    return report;
}

}  // namespace pdom
