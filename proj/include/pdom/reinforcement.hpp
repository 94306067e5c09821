#pragma once

// The p-reinforcement number: fewest complement edges whose addition lowers
// gamma_p, computed either straight from the definition (guarded search) or
// as eta_p(G) when gamma_p(G) >= p+1.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/deficiency.hpp"
#include "pdom/domination.hpp"
#include "pdom/graph.hpp"

namespace pdom {

enum class RMethod { kConvention, kDefinition, kEta };

inline const char* to_string(RMethod m) {
    switch (m) {
        case RMethod::kConvention: return "convention";
        case RMethod::kDefinition: return "definition";
        case RMethod::kEta: return "eta";
    }
    return "?";
}

struct ReinforcementResult {
    int p = 0;
    std::optional<int> value;          // empty iff the definition search exhausted its budget
    std::vector<Edge> witness_edges;   // B with gamma_p(G+B) < gamma_p(G); empty when value == 0
    RMethod method = RMethod::kConvention;
    bool witness_verified = false;
};

namespace detail {

// Is there a p-dominating set of exactly k vertices? Seeded with the forced
// low-degree vertices, so only the residue is enumerated.
inline bool exists_p_dominating_of_size(const Graph& g, int p, int k) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::uint64_t forced = to_mask(forced_vertices(g, p));
    int base = std::popcount(forced);
    if (base > k) return false;
    std::vector<int> residue;
    for (int v = 0; v < n; ++v)
        if (!((forced >> v) & 1)) residue.push_back(v);
    if (k - base > static_cast<int>(residue.size())) return false;
    bool found = false;
    for_each_combination(residue, k - base, [&](const std::vector<int>& idx) {
        std::uint64_t d = forced;
        for (int i : idx) d |= std::uint64_t{1} << residue[static_cast<std::size_t>(i)];
        if (mask_is_p_dominating(adj, n, p, d)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace detail

// Straight from the definition: smallest k <= budget such that some k-subset
// of complement edges lowers gamma_p. Candidate B passes iff G+B has a
// p-dominating set of gamma_p(G)-1 vertices. An empty value means every k up
// to the budget failed; that is a distinct outcome, not a reinforcement number.
inline ReinforcementResult r_p_by_definition(const Graph& g, int p, int budget,
                                             const SearchLimits& lim = {}) {
    require_order(p);
    if (budget < 1) throw std::invalid_argument("r_p_by_definition: budget must be at least 1");
    if (g.vertex_count() > lim.definition_max_n)
        throw SizeGuardError("r_p_by_definition: n=" + std::to_string(g.vertex_count()) +
                             " exceeds cap " + std::to_string(lim.definition_max_n));
    ReinforcementResult result;
    result.p = p;
    int gamma = gamma_p(g, p, lim).value;
    if (gamma <= p) {
        result.value = 0;
        result.method = RMethod::kConvention;
        result.witness_verified = true;
        return result;
    }
    result.method = RMethod::kDefinition;
    auto non_edges = complement_edges(g);
    std::vector<int> idx_pool(non_edges.size());
    for (std::size_t i = 0; i < non_edges.size(); ++i) idx_pool[i] = static_cast<int>(i);
    for (int k = 1; k <= budget && k <= static_cast<int>(non_edges.size()); ++k) {
        std::optional<std::vector<Edge>> hit;
        detail::for_each_combination(idx_pool, k, [&](const std::vector<int>& idx) {
            std::vector<Edge> b;
            b.reserve(static_cast<std::size_t>(k));
            for (int i : idx) b.push_back(non_edges[static_cast<std::size_t>(idx_pool[static_cast<std::size_t>(i)])]);
            if (detail::exists_p_dominating_of_size(add_edges(g, b), p, gamma - 1)) {
                hit = std::move(b);
                return false;
            }
            return true;
        });
        if (hit) {
            result.value = k;
            result.witness_edges = std::move(*hit);
            result.witness_verified = true;
            return result;
        }
    }
    return result;  // budget exhausted: value stays empty
}

// Via the deficiency identity: when gamma_p(G) >= p+1, r_p(G) equals
// eta_p(G). The witness edges join each deficient vertex to enough
// eta-witness vertices outside its neighborhood; the value is authoritative
// either way, the edge set is best effort and re-verified at guarded sizes.
inline ReinforcementResult r_p_by_eta(const Graph& g, int p, const SearchLimits& lim = {}) {
    require_order(p);
    int gamma = gamma_p(g, p, lim).value;
    if (gamma <= p)
        throw std::domain_error("r_p_by_eta: gamma_p(G) <= p, use the convention path");
    EtaWitness w = eta_graph(g, p, lim);
    ReinforcementResult result;
    result.p = p;
    result.method = RMethod::kEta;
    result.value = w.total;

    for (int v = 0; v < g.vertex_count(); ++v) {
        int need = w.deficiencies[static_cast<std::size_t>(v)];
        if (need == 0) continue;
        for (int u : w.x_set.members()) {
            if (need == 0) break;
            if (u == v || g.has_edge(u, v)) continue;
            result.witness_edges.push_back(normalized(u, v));
            --need;
        }
        if (need != 0) throw std::logic_error("r_p_by_eta: witness construction ran dry");
    }
    if (static_cast<int>(result.witness_edges.size()) != w.total)
        throw std::logic_error("r_p_by_eta: witness size differs from eta total");

    if (!result.witness_edges.empty() && g.vertex_count() <= lim.gamma_max_n) {
        result.witness_verified =
            detail::exists_p_dominating_of_size(add_edges(g, result.witness_edges), p, gamma - 1);
    }
    return result;
}

// Dispatcher: the convention when gamma_p(G) <= p, otherwise the eta path.
inline ReinforcementResult r_p(const Graph& g, int p, const SearchLimits& lim = {}) {
    require_order(p);
    int gamma = gamma_p(g, p, lim).value;
    if (gamma <= p) {
        ReinforcementResult result;
        result.p = p;
        result.value = 0;
        result.method = RMethod::kConvention;
        result.witness_verified = true;
        return result;
    }
    return r_p_by_eta(g, p, lim);
}

}  // namespace pdom
