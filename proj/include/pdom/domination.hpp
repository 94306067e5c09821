#pragma once

// p-dominating sets: exact gamma_p with certificates, enumeration of all
// minimum sets, the uniqueness criterion for trees, p-private neighborhoods,
// and the private-neighbor count ell_p.
//
// gamma_p on trees runs a rooted dynamic program (value, number of optima,
// witness extraction); on general graphs it falls back to exhaustive subset
// search seeded with the forced vertices of degree <= p-1. The exhaustive
// search stays available separately as the cross-validation oracle.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

// Caps for the exact subset searches; exceeding one raises SizeGuardError
// rather than returning an approximate answer.
struct SearchLimits {
    int gamma_max_n = 24;              // exhaustive gamma_p on general graphs
    int all_sets_max_n = 20;           // enumeration of all minimum sets
    int eta_max_n = 32;                // eta_p subset search
    int definition_max_n = 10;         // r_p by definition
    int recognize_exhaustive_max_n = 20;
};

struct GammaCertificate {
    int p = 0;
    int value = 0;
    VertexSet witness;
    bool unique = false;
    std::optional<std::vector<VertexSet>> all_min_sets;
};

inline void require_order(int p) {
    if (p < 1) throw std::invalid_argument("order p must be at least 1");
}

inline bool is_p_dominating(const Graph& g, int p, const VertexSet& d) {
    require_order(p);
    if (d.universe() != g.vertex_count())
        throw std::invalid_argument("is_p_dominating: set universe mismatch");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d.contains(v)) continue;
        int c = 0;
        for (int u : g.neighbors(v))
            if (d.contains(u)) ++c;
        if (c < p) return false;
    }
    return true;
}

// Every p-dominating set must contain all vertices of degree at most p-1.
inline VertexSet forced_vertices(const Graph& g, int p) {
    require_order(p);
    VertexSet f(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= p - 1) f.insert(v);
    return f;
}

// PN_p(x, X, G): neighbors of x outside X with exactly p neighbors inside X.
inline VertexSet private_neighbors(const Graph& g, int p, const VertexSet& x_set, int x) {
    require_order(p);
    if (!x_set.contains(x)) throw std::invalid_argument("private_neighbors: x is not in X");
    VertexSet pn(g.vertex_count());
    for (int y : g.neighbors(x)) {
        if (x_set.contains(y)) continue;
        int c = 0;
        for (int u : g.neighbors(y))
            if (x_set.contains(u)) ++c;
        if (c == p) pn.insert(y);
    }
    return pn;
}

// --- 64-bit mask plumbing for the subset searches ---------------------------

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.vertex_count() > 64)
        throw SizeGuardError("mask search limited to 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    return adj;
}

inline std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s.members()) m |= std::uint64_t{1} << v;
    return m;
}

inline VertexSet from_mask(int universe, std::uint64_t m) {
    VertexSet s(universe);
    while (m) {
        s.insert(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

inline bool mask_is_p_dominating(const std::vector<std::uint64_t>& adj, int n, int p,
                                 std::uint64_t d) {
    for (int v = 0; v < n; ++v) {
        if ((d >> v) & 1) continue;
        if (std::popcount(adj[static_cast<std::size_t>(v)] & d) < p) return false;
    }
    return true;
}

// Lexicographic enumeration of k-subsets of items; stops early when fn
// returns false.
template <typename Fn>
inline void for_each_combination(const std::vector<int>& items, int k, Fn&& fn) {
    int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// Exhaustive gamma_p: subset search over the non-forced residue, sizes
// ascending, combinations in lexicographic order (so the first witness found
// is the lexicographically smallest minimum set).
inline GammaCertificate gamma_p_exhaustive(const Graph& g, int p,
                                           const SearchLimits& lim = {}) {
    require_order(p);
    int n = g.vertex_count();
    if (n > lim.gamma_max_n)
        throw SizeGuardError("gamma_p_exhaustive: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(lim.gamma_max_n));
    auto adj = detail::adjacency_masks(g);
    std::uint64_t forced = detail::to_mask(forced_vertices(g, p));
    std::vector<int> residue;
    for (int v = 0; v < n; ++v)
        if (!((forced >> v) & 1)) residue.push_back(v);

    for (int s = 0; s <= static_cast<int>(residue.size()); ++s) {
        std::optional<std::uint64_t> first;
        bool second = false;
        detail::for_each_combination(residue, s, [&](const std::vector<int>& idx) {
            std::uint64_t d = forced;
            for (int i : idx) d |= std::uint64_t{1} << residue[static_cast<std::size_t>(i)];
            if (detail::mask_is_p_dominating(adj, n, p, d)) {
                if (!first) {
                    first = d;
                } else {
                    second = true;
                    return false;
                }
            }
            return true;
        });
        if (first) {
            GammaCertificate cert;
            cert.p = p;
            cert.value = std::popcount(*first);
            cert.witness = detail::from_mask(n, *first);
            cert.unique = !second;
            return cert;
        }
    }
    throw std::logic_error("gamma_p_exhaustive: no dominating set found");  // unreachable: V works
}

// --- rooted dynamic program for trees ---------------------------------------

namespace detail {

constexpr int kInfCost = 1 << 28;

enum TreeDpState : int { kIn = 0, kOutSat = 1, kOutNeed = 2 };

// Per-vertex constraint for the constrained runs.
enum class VertexConstraint : std::int8_t { kFree = 0, kForcedIn = 1, kForcedOut = 2 };

struct DpCell {
    int cost = kInfCost;
    std::uint8_t cnt = 0;  // number of optima, saturated at 2
};

inline void cell_merge(DpCell& into, int cost, std::uint8_t cnt) {
    if (cost >= kInfCost || cnt == 0) return;
    if (cost < into.cost) {
        into.cost = cost;
        into.cnt = cnt;
    } else if (cost == into.cost) {
        into.cnt = static_cast<std::uint8_t>(std::min<int>(2, into.cnt + cnt));
    }
}

struct TreeDpTables {
    RootedView rv;
    std::vector<std::array<DpCell, 3>> cell;  // indexed [vertex][state]
    int p = 0;
};

// Knapsack over v's children choosing kIn / kOutSat per child; K[j] covers
// "j children in D", j saturated at p.
inline std::vector<DpCell> out_knapsack(const TreeDpTables& dp, int v) {
    int p = dp.p;
    std::vector<DpCell> k(static_cast<std::size_t>(p) + 1);
    k[0] = DpCell{0, 1};
    for (int c : dp.rv.children[static_cast<std::size_t>(v)]) {
        const auto& in = dp.cell[static_cast<std::size_t>(c)][kIn];
        const auto& out = dp.cell[static_cast<std::size_t>(c)][kOutSat];
        std::vector<DpCell> next(static_cast<std::size_t>(p) + 1);
        for (int j = 0; j <= p; ++j) {
            const DpCell& cur = k[static_cast<std::size_t>(j)];
            if (cur.cnt == 0) continue;
            if (out.cnt)
                cell_merge(next[static_cast<std::size_t>(j)], cur.cost + out.cost,
                           static_cast<std::uint8_t>(std::min<int>(2, cur.cnt * out.cnt)));
            if (in.cnt) {
                int jn = std::min(j + 1, p);
                cell_merge(next[static_cast<std::size_t>(jn)], cur.cost + in.cost,
                           static_cast<std::uint8_t>(std::min<int>(2, cur.cnt * in.cnt)));
            }
        }
        k = std::move(next);
    }
    return k;
}

inline TreeDpTables tree_dp_run(const Graph& t, int p,
                                const std::vector<VertexConstraint>& constraint) {
    TreeDpTables dp;
    dp.rv = RootedView::at(t, 0);
    dp.p = p;
    dp.cell.assign(static_cast<std::size_t>(t.vertex_count()), {});
    for (auto it = dp.rv.bfs_order.rbegin(); it != dp.rv.bfs_order.rend(); ++it) {
        int v = *it;
        auto& cv = dp.cell[static_cast<std::size_t>(v)];

        // v in D: children are unrestricted among their feasible states.
        int cost = 1;
        std::uint8_t cnt = 1;
        for (int c : dp.rv.children[static_cast<std::size_t>(v)]) {
            DpCell best;
            for (int s = 0; s < 3; ++s) {
                const auto& cc = dp.cell[static_cast<std::size_t>(c)][s];
                cell_merge(best, cc.cost, cc.cnt);
            }
            if (best.cnt == 0) {
                cost = kInfCost;
                cnt = 0;
                break;
            }
            cost += best.cost;
            cnt = static_cast<std::uint8_t>(std::min<int>(2, cnt * best.cnt));
        }
        if (cost < kInfCost) cv[kIn] = DpCell{cost, cnt};

        // v out of D: children split into in / out-satisfied.
        auto k = out_knapsack(dp, v);
        cv[kOutSat] = k[static_cast<std::size_t>(p)];
        if (p >= 1) cv[kOutNeed] = k[static_cast<std::size_t>(p - 1)];

        switch (constraint[static_cast<std::size_t>(v)]) {
            case VertexConstraint::kForcedIn:
                cv[kOutSat] = DpCell{};
                cv[kOutNeed] = DpCell{};
                break;
            case VertexConstraint::kForcedOut:
                cv[kIn] = DpCell{};
                break;
            case VertexConstraint::kFree:
                break;
        }
    }
    return dp;
}

inline DpCell tree_dp_root_answer(const TreeDpTables& dp) {
    DpCell ans;
    const auto& rootc = dp.cell[static_cast<std::size_t>(dp.rv.root)];
    cell_merge(ans, rootc[kIn].cost, rootc[kIn].cnt);
    cell_merge(ans, rootc[kOutSat].cost, rootc[kOutSat].cnt);  // root has no parent
    return ans;
}

// Size of a minimum p-dominating set honoring the constraints, or kInfCost.
inline int tree_gamma_value(const Graph& t, int p,
                            const std::vector<VertexConstraint>& constraint) {
    return tree_dp_root_answer(tree_dp_run(t, p, constraint)).cost;
}

// Walks the unique optimum out of the tables; valid only when the number of
// optima is exactly 1.
inline VertexSet tree_dp_extract_unique(const TreeDpTables& dp) {
    int n = static_cast<int>(dp.cell.size());
    VertexSet witness(n);
    const auto& rootc = dp.cell[static_cast<std::size_t>(dp.rv.root)];
    DpCell ans = tree_dp_root_answer(dp);
    int root_state = (rootc[kIn].cnt && rootc[kIn].cost == ans.cost) ? kIn : kOutSat;

    std::vector<std::pair<int, int>> stack{{dp.rv.root, root_state}};
    while (!stack.empty()) {
        auto [v, state] = stack.back();
        stack.pop_back();
        if (state == kIn) {
            witness.insert(v);
            for (int c : dp.rv.children[static_cast<std::size_t>(v)]) {
                DpCell best;
                for (int s = 0; s < 3; ++s) {
                    const auto& cc = dp.cell[static_cast<std::size_t>(c)][s];
                    cell_merge(best, cc.cost, cc.cnt);
                }
                int chosen = -1;
                for (int s = 0; s < 3; ++s) {
                    const auto& cc = dp.cell[static_cast<std::size_t>(c)][s];
                    if (cc.cnt && cc.cost == best.cost) {
                        if (chosen >= 0) throw std::logic_error("tree dp: optimum not unique");
                        chosen = s;
                    }
                }
                stack.emplace_back(c, chosen);
            }
        } else {
            int target = (state == kOutSat) ? dp.p : dp.p - 1;
            // Rebuild the knapsack with per-child snapshots, then walk back.
            const auto& kids = dp.rv.children[static_cast<std::size_t>(v)];
            std::vector<std::vector<DpCell>> snap;
            snap.reserve(kids.size() + 1);
            std::vector<DpCell> k(static_cast<std::size_t>(dp.p) + 1);
            k[0] = DpCell{0, 1};
            snap.push_back(k);
            for (int c : kids) {
                const auto& in = dp.cell[static_cast<std::size_t>(c)][kIn];
                const auto& out = dp.cell[static_cast<std::size_t>(c)][kOutSat];
                std::vector<DpCell> next(static_cast<std::size_t>(dp.p) + 1);
                for (int j = 0; j <= dp.p; ++j) {
                    const DpCell& cur = k[static_cast<std::size_t>(j)];
                    if (cur.cnt == 0) continue;
                    if (out.cnt)
                        cell_merge(next[static_cast<std::size_t>(j)], cur.cost + out.cost,
                                   static_cast<std::uint8_t>(std::min<int>(2, cur.cnt * out.cnt)));
                    if (in.cnt)
                        cell_merge(next[static_cast<std::size_t>(std::min(j + 1, dp.p))],
                                   cur.cost + in.cost,
                                   static_cast<std::uint8_t>(std::min<int>(2, cur.cnt * in.cnt)));
                }
                k = std::move(next);
                snap.push_back(k);
            }
            int j = target;
            int cost = snap.back()[static_cast<std::size_t>(j)].cost;
            for (int i = static_cast<int>(kids.size()) - 1; i >= 0; --i) {
                int c = kids[static_cast<std::size_t>(i)];
                const auto& in = dp.cell[static_cast<std::size_t>(c)][kIn];
                const auto& out = dp.cell[static_cast<std::size_t>(c)][kOutSat];
                const auto& prev = snap[static_cast<std::size_t>(i)];
                int chosen = -1, prev_j = -1;
                if (out.cnt && prev[static_cast<std::size_t>(j)].cnt &&
                    prev[static_cast<std::size_t>(j)].cost + out.cost == cost) {
                    chosen = kOutSat;
                    prev_j = j;
                }
                for (int pj : {j - 1, dp.p}) {
                    if (pj < 0 || std::min(pj + 1, dp.p) != j) continue;
                    if (pj == prev_j && chosen == kIn) continue;
                    if (in.cnt && prev[static_cast<std::size_t>(pj)].cnt &&
                        prev[static_cast<std::size_t>(pj)].cost + in.cost == cost) {
                        if (chosen >= 0) throw std::logic_error("tree dp: optimum not unique");
                        chosen = kIn;
                        prev_j = pj;
                    }
                }
                if (chosen < 0) throw std::logic_error("tree dp: backtrack failed");
                stack.emplace_back(c, chosen);
                cost -= (chosen == kIn ? in.cost : out.cost);
                j = prev_j;
            }
        }
    }
    return witness;
}

// Lexicographically smallest minimum set via greedy inclusion with
// constrained value runs.
inline VertexSet tree_gamma_lex_witness(const Graph& t, int p, int gamma) {
    int n = t.vertex_count();
    std::vector<VertexConstraint> constraint(static_cast<std::size_t>(n),
                                             VertexConstraint::kFree);
    for (int v = 0; v < n; ++v) {
        constraint[static_cast<std::size_t>(v)] = VertexConstraint::kForcedIn;
        if (tree_gamma_value(t, p, constraint) != gamma)
            constraint[static_cast<std::size_t>(v)] = VertexConstraint::kForcedOut;
    }
    VertexSet witness(n);
    for (int v = 0; v < n; ++v)
        if (constraint[static_cast<std::size_t>(v)] == VertexConstraint::kForcedIn)
            witness.insert(v);
    return witness;
}

}  // namespace detail

// Exact gamma_p with witness and uniqueness verdict. Trees of any size go
// through the dynamic program; other graphs through the guarded exhaustive
// search. With with_all_sets, every minimum set is attached (guarded).
inline GammaCertificate gamma_p(const Graph& g, int p, const SearchLimits& lim = {},
                                bool with_all_sets = false);

inline std::vector<VertexSet> all_minimum_p_dominating_sets(const Graph& g, int p,
                                                            const SearchLimits& lim = {}) {
    require_order(p);
    int n = g.vertex_count();
    if (n > lim.all_sets_max_n)
        throw SizeGuardError("all_minimum_p_dominating_sets: n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(lim.all_sets_max_n));
    int gamma = gamma_p(g, p, lim).value;
    auto adj = detail::adjacency_masks(g);
    std::uint64_t forced = detail::to_mask(forced_vertices(g, p));
    std::vector<int> residue;
    for (int v = 0; v < n; ++v)
        if (!((forced >> v) & 1)) residue.push_back(v);
    int s = gamma - std::popcount(forced);
    std::vector<VertexSet> out;
    if (s < 0) return out;  // cannot happen: forced is in every set
    detail::for_each_combination(residue, s, [&](const std::vector<int>& idx) {
        std::uint64_t d = forced;
        for (int i : idx) d |= std::uint64_t{1} << residue[static_cast<std::size_t>(i)];
        if (detail::mask_is_p_dominating(adj, n, p, d)) out.push_back(detail::from_mask(n, d));
        return true;
    });
    return out;
}

inline GammaCertificate gamma_p(const Graph& g, int p, const SearchLimits& lim,
                                bool with_all_sets) {
    require_order(p);
    GammaCertificate cert;
    if (is_tree(g)) {
        auto dp = detail::tree_dp_run(
            g, p,
            std::vector<detail::VertexConstraint>(static_cast<std::size_t>(g.vertex_count()),
                                                  detail::VertexConstraint::kFree));
        auto ans = detail::tree_dp_root_answer(dp);
        cert.p = p;
        cert.value = ans.cost;
        cert.unique = ans.cnt == 1;
        cert.witness = cert.unique ? detail::tree_dp_extract_unique(dp)
                                   : detail::tree_gamma_lex_witness(g, p, ans.cost);
    } else {
        cert = gamma_p_exhaustive(g, p, lim);
    }
    if (!is_p_dominating(g, p, cert.witness) || cert.witness.size() != cert.value)
        throw std::logic_error("gamma_p: computed witness failed verification");
    if (with_all_sets) {
        cert.all_min_sets = all_minimum_p_dominating_sets(g, p, lim);
        if ((cert.all_min_sets->size() == 1) != cert.unique)
            throw std::logic_error("gamma_p: uniqueness verdict disagrees with enumeration");
    }
    return cert;
}

// Unique gamma_p-set of a tree, if there is one.
inline std::optional<VertexSet> unique_gamma_set(const Graph& t, int p) {
    auto cert = gamma_p(t, p);
    if (!cert.unique) return std::nullopt;
    return cert.witness;
}

struct UniquenessReport {
    bool unique = false;
    std::optional<int> offending;  // a vertex violating the criterion, when not unique
};

// Criterion for a p-dominating set D of a tree being the unique minimum set:
// every x in D with degree >= p has |N(x) cap D| <= p-2 or at least two
// p-private neighbors.
inline UniquenessReport uniqueness_report(const Graph& t, int p, const VertexSet& d) {
    if (p < 2) throw std::invalid_argument("uniqueness_report: requires p >= 2");
    if (!is_tree(t)) throw std::invalid_argument("uniqueness_report: input is not a tree");
    if (!is_p_dominating(t, p, d))
        throw std::invalid_argument("uniqueness_report: D is not p-dominating");
    for (int x : d.members()) {
        if (t.degree(x) < p) continue;
        int in_d = 0;
        for (int u : t.neighbors(x))
            if (d.contains(u)) ++in_d;
        if (in_d <= p - 2) continue;
        if (private_neighbors(t, p, d, x).size() >= 2) continue;
        return UniquenessReport{false, x};
    }
    return UniquenessReport{true, std::nullopt};
}

// Number of p-private neighbors with respect to the unique gamma_p-set.
inline int ell_p(const Graph& t, int p) {
    auto unique = unique_gamma_set(t, p);
    if (!unique) throw std::invalid_argument("ell_p: gamma_p-set is not unique");
    const VertexSet& d = *unique;
    int count = 0;
    for (int y = 0; y < t.vertex_count(); ++y) {
        if (d.contains(y)) continue;
        int c = 0;
        for (int u : t.neighbors(y))
            if (d.contains(u)) ++c;
        if (c == p) ++count;
    }
    int sum = 0;
    for (int x : d.members()) sum += private_neighbors(t, p, d, x).size();
    if (sum != p * count) throw std::logic_error("ell_p: private-neighbor sum is not p * count");
    return count;
}

}  // namespace pdom
