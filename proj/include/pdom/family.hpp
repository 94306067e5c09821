#pragma once

// The recursive tree family characterizing r_p(T) = p+1 for p >= 3: block
// builders (stars, spiders, the two leaf-decorated gadgets), the four growth
// operations with their tracked A-sets, random generation, trace replay, and
// two independent recognizers (a linear peeling procedure and an exhaustive
// reverse search used to validate it).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pdom/canonical.hpp"
#include "pdom/deficiency.hpp"
#include "pdom/domination.hpp"
#include "pdom/enumerate.hpp"
#include "pdom/graph.hpp"

namespace pdom {

enum class BlockKind { kStar, kSpider, kF, kFt, kDoubleStar };
enum class OpKind { kO1, kO2, kO3, kO4 };

inline const char* to_string(OpKind op) {
    switch (op) {
        case OpKind::kO1: return "O1";
        case OpKind::kO2: return "O2";
        case OpKind::kO3: return "O3";
        case OpKind::kO4: return "O4";
    }
    return "?";
}

inline OpKind op_from_string(const std::string& s) {
    if (s == "O1") return OpKind::kO1;
    if (s == "O2") return OpKind::kO2;
    if (s == "O3") return OpKind::kO3;
    if (s == "O4") return OpKind::kO4;
    throw std::invalid_argument("unknown operation id: " + s);
}

// A block together with its canonical tracked set. Vertex 0 is the center.
struct Block {
    Graph graph;
    VertexSet aset;
};

// Layouts (center always 0):
//   star     K_{1,t}:    leaves 1..t;                          A = leaves
//   spider   S_t:        middles 1..t, tips t+1..2t;           A = V - {center}  (t >= p)
//   F        F_{p-1}:    arms 1,2; p-1 leaves per arm;         A = {center} + leaves
//   Ft       F_{t,p-1}:  middles 1..t, tips t+1..2t,
//                        p-1 leaves per tip;                   A = middles + leaves
//   double_star:         centers 0,1 adjacent, p leaves each;  A = leaves
inline Block build_block(BlockKind kind, int p, std::optional<int> t = std::nullopt) {
    require_order(p);
    switch (kind) {
        case BlockKind::kStar: {
            int tt = t.value_or(p);
            if (tt < 2) throw std::invalid_argument("build_block: star requires t >= 2");
            std::vector<Edge> es;
            for (int i = 1; i <= tt; ++i) es.emplace_back(0, i);
            Block b{from_edge_list(tt + 1, es), VertexSet(tt + 1)};
            for (int i = 1; i <= tt; ++i) b.aset.insert(i);
            return b;
        }
        case BlockKind::kSpider: {
            if (p < 3) throw std::invalid_argument("build_block: spider requires p >= 3");
            int tt = t.value_or(p);
            if (tt < 2) throw std::invalid_argument("build_block: spider requires t >= 2");
            std::vector<Edge> es;
            for (int i = 1; i <= tt; ++i) {
                es.emplace_back(0, i);
                es.emplace_back(i, tt + i);
            }
            Block b{from_edge_list(2 * tt + 1, es), VertexSet(2 * tt + 1)};
            for (int v = 1; v <= 2 * tt; ++v) b.aset.insert(v);
            if (tt < p) b.aset.insert(0);  // center of degree < p is forced as well
            return b;
        }
        case BlockKind::kF: {
            if (p < 3) throw std::invalid_argument("build_block: F requires p >= 3");
            int n = 2 * p + 1;
            std::vector<Edge> es{{0, 1}, {0, 2}};
            for (int i = 0; i < p - 1; ++i) {
                es.emplace_back(1, 3 + i);
                es.emplace_back(2, p + 2 + i);
            }
            Block b{from_edge_list(n, es), VertexSet(n)};
            b.aset.insert(0);
            for (int v = 3; v < n; ++v) b.aset.insert(v);
            return b;
        }
        case BlockKind::kFt: {
            if (p < 3) throw std::invalid_argument("build_block: Ft requires p >= 3");
            if (!t) throw std::invalid_argument("build_block: Ft requires t");
            int tt = *t;
            if (tt < p) throw std::invalid_argument("build_block: Ft requires t >= p");
            int n = 1 + tt * (p + 1);
            std::vector<Edge> es;
            for (int i = 1; i <= tt; ++i) {
                es.emplace_back(0, i);
                es.emplace_back(i, tt + i);
                for (int j = 0; j < p - 1; ++j)
                    es.emplace_back(tt + i, 2 * tt + 1 + (i - 1) * (p - 1) + j);
            }
            Block b{from_edge_list(n, es), VertexSet(n)};
            for (int i = 1; i <= tt; ++i) b.aset.insert(i);
            for (int v = 2 * tt + 1; v < n; ++v) b.aset.insert(v);
            return b;
        }
        case BlockKind::kDoubleStar: {
            if (p < 3) throw std::invalid_argument("build_block: double_star requires p >= 3");
            int n = 2 * p + 2;
            std::vector<Edge> es{{0, 1}};
            for (int i = 0; i < p; ++i) {
                es.emplace_back(0, 2 + i);
                es.emplace_back(1, p + 2 + i);
            }
            Block b{from_edge_list(n, es), VertexSet(n)};
            for (int v = 2; v < n; ++v) b.aset.insert(v);
            return b;
        }
    }
    throw std::invalid_argument("build_block: unknown kind");
}

// Disjoint union of g and h (h shifted by |V(g)|) plus the edge x--y.
inline Graph join_with_edge(const Graph& g, int x, const Graph& h, int y) {
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= h.vertex_count())
        throw std::invalid_argument("join_with_edge: vertex id out of range");
    int shift = g.vertex_count();
    auto es = g.edges();
    for (const auto& [u, v] : h.edges()) es.emplace_back(u + shift, v + shift);
    es.emplace_back(x, y + shift);
    return from_edge_list(g.vertex_count() + h.vertex_count(), es);
}

struct TraceStep {
    OpKind op;
    int y = 0;                 // attachment vertex in the pre-step tree
    std::optional<int> t;      // spider parameter, O4 only
};

struct ConstructionTrace {
    int p = 0;
    std::vector<TraceStep> steps;
};

struct FamilyState {
    Graph tree;
    VertexSet aset;
};

// T_0 = K_{1,p} with A = its leaves.
inline FamilyState initial_star(int p) {
    if (p < 3) throw std::invalid_argument("initial_star: family requires p >= 3");
    Block b = build_block(BlockKind::kStar, p);
    return FamilyState{std::move(b.graph), std::move(b.aset)};
}

// One growth step. New block vertices get ids n, n+1, ... with the center
// first and the rest in builder order; the A-set grows by the block's
// canonical contribution.
inline FamilyState apply_operation(const Graph& t, const VertexSet& a, int p, OpKind op, int y,
                                   std::optional<int> t_param = std::nullopt) {
    if (p < 3) throw std::invalid_argument("apply_operation: family requires p >= 3");
    if (y < 0 || y >= t.vertex_count())
        throw std::invalid_argument("apply_operation: y out of range");
    if (a.universe() != t.vertex_count())
        throw std::invalid_argument("apply_operation: A-set universe mismatch");

    Block block;
    switch (op) {
        case OpKind::kO1:
            if (!a.contains(y))
                throw std::invalid_argument("apply_operation: O1 requires y in A(T)");
            block = build_block(BlockKind::kStar, p, p - 1);
            break;
        case OpKind::kO2:
            if (a.contains(y))
                throw std::invalid_argument("apply_operation: O2 requires y not in A(T)");
            block = build_block(BlockKind::kStar, p, p);
            break;
        case OpKind::kO3: {
            if (!a.contains(y))
                throw std::invalid_argument("apply_operation: O3 requires y in A(T)");
            int pn = private_neighbors(t, p, a, y).size();
            int in_a = 0;
            for (int u : t.neighbors(y))
                if (a.contains(u)) ++in_a;
            if (pn < std::min(p + 1, in_a + 2))
                throw std::invalid_argument(
                    "apply_operation: O3 requires |PN_p(y,A,T)| >= min(p+1, |N(y) cap A|+2)");
            block = build_block(BlockKind::kF, p);
            break;
        }
        case OpKind::kO4:
            if (!t_param) throw std::invalid_argument("apply_operation: O4 requires t");
            block = build_block(BlockKind::kFt, p, *t_param);
            break;
    }

    int shift = t.vertex_count();
    FamilyState next;
    next.tree = join_with_edge(t, y, block.graph, 0);
    next.aset = VertexSet(next.tree.vertex_count());
    for (int v : a.members()) next.aset.insert(v);
    for (int v : block.aset.members()) next.aset.insert(v + shift);
    return next;
}

// Rebuilds the tree from its trace, enforcing every step's precondition.
inline FamilyState replay_trace(const ConstructionTrace& trace) {
    if (trace.steps.empty())
        throw std::invalid_argument("replay_trace: a construction needs at least one step");
    FamilyState state = initial_star(trace.p);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        try {
            state = apply_operation(state.tree, state.aset, trace.p, s.op, s.y, s.t);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("replay_trace: step " + std::to_string(i) + ": " +
                                        e.what());
        }
    }
    return state;
}

// --- trace serialization -----------------------------------------------------

inline nlohmann::json trace_to_json(const ConstructionTrace& trace) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json o;
        o["op"] = to_string(s.op);
        o["y"] = s.y;
        o["t"] = s.t ? nlohmann::json(*s.t) : nlohmann::json(nullptr);
        ops.push_back(std::move(o));
    }
    return nlohmann::json{{"p", trace.p}, {"ops", std::move(ops)}};
}

inline ConstructionTrace trace_from_json(const nlohmann::json& j) {
    ConstructionTrace trace;
    trace.p = j.at("p").get<int>();
    for (const auto& o : j.at("ops")) {
        TraceStep s;
        s.op = op_from_string(o.at("op").get<std::string>());
        s.y = o.at("y").get<int>();
        if (o.contains("t") && !o.at("t").is_null()) s.t = o.at("t").get<int>();
        trace.steps.push_back(s);
    }
    return trace;
}

// --- random generation -------------------------------------------------------

// Uniform choice among all currently applicable (op, y, t <= t_max) steps;
// O2 and O4 are always applicable, so every step succeeds.
inline std::pair<FamilyState, ConstructionTrace> generate_member(int p, int ops,
                                                                 std::uint64_t seed,
                                                                 int t_max = -1) {
    if (p < 3) throw std::invalid_argument("generate_member: family requires p >= 3");
    if (ops < 1) throw std::invalid_argument("generate_member: need at least one operation");
    if (t_max < 0) t_max = p + 2;
    if (t_max < p) throw std::invalid_argument("generate_member: t_max must be at least p");

    std::mt19937_64 rng(seed);
    FamilyState state = initial_star(p);
    ConstructionTrace trace;
    trace.p = p;
    for (int step = 0; step < ops; ++step) {
        std::vector<TraceStep> choices;
        for (int y : state.aset.members()) choices.push_back({OpKind::kO1, y, std::nullopt});
        for (int y = 0; y < state.tree.vertex_count(); ++y)
            if (!state.aset.contains(y)) choices.push_back({OpKind::kO2, y, std::nullopt});
        for (int y : state.aset.members()) {
            int pn = private_neighbors(state.tree, p, state.aset, y).size();
            int in_a = 0;
            for (int u : state.tree.neighbors(y))
                if (state.aset.contains(u)) ++in_a;
            if (pn >= std::min(p + 1, in_a + 2)) choices.push_back({OpKind::kO3, y, std::nullopt});
        }
        for (int y = 0; y < state.tree.vertex_count(); ++y)
            for (int t = p; t <= t_max; ++t) choices.push_back({OpKind::kO4, y, t});

        const TraceStep& pick = choices[static_cast<std::size_t>(
            detail::uniform_below(rng, choices.size()))];
        state = apply_operation(state.tree, state.aset, p, pick.op, pick.y, pick.t);
        trace.steps.push_back(pick);
    }
    return {std::move(state), std::move(trace)};
}

// --- recognition -------------------------------------------------------------

namespace detail {

// One reverse step: `block` (with its center) removed from `pre`, which was
// attached at `attach`. kept_old_of_new maps post-peel ids back to pre ids.
struct PeelStep {
    OpKind op;
    Graph pre;
    std::vector<int> block;
    int center = -1;
    int attach = -1;
    int t = 0;
    std::vector<int> kept_old_of_new;
};

inline bool is_star_with_center_degree(const Graph& g, int deg, int* center_out = nullptr) {
    if (g.vertex_count() != deg + 1) return false;
    int center = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == deg) {
            center = v;
        } else if (g.degree(v) != 1) {
            return false;
        }
    }
    if (center < 0) return false;
    if (center_out) *center_out = center;
    return true;
}

inline PeelStep make_peel(OpKind op, const Graph& pre, std::vector<int> block, int center,
                          int attach, int t) {
    PeelStep ps;
    ps.op = op;
    ps.pre = pre;
    std::sort(block.begin(), block.end());
    ps.block = std::move(block);
    ps.center = center;
    ps.attach = attach;
    ps.t = t;
    VertexSet keep = VertexSet::full(pre.vertex_count());
    for (int v : ps.block) keep.erase(v);
    ps.kept_old_of_new = keep.members();
    return ps;
}

inline Graph peel_result(const PeelStep& ps) {
    VertexSet keep = VertexSet::full(ps.pre.vertex_count());
    for (int v : ps.block) keep.erase(v);
    return induced_subgraph(ps.pre, keep).first;
}

// Replays a peel list (last element = first applied operation) into a trace,
// validating every operation precondition. Returns the trace and the rebuilt
// tree; throws invalid_argument if some replayed precondition fails.
inline std::pair<ConstructionTrace, FamilyState> peels_to_trace(const Graph& base, int p,
                                                                const std::vector<PeelStep>& peels) {
    int base_center = -1;
    if (!is_star_with_center_degree(base, p, &base_center))
        throw std::logic_error("peels_to_trace: base is not K_{1,p}");

    FamilyState rep = initial_star(p);
    std::vector<int> phi(static_cast<std::size_t>(base.vertex_count()), -1);
    phi[static_cast<std::size_t>(base_center)] = 0;
    int next_leaf = 1;
    for (int v = 0; v < base.vertex_count(); ++v)
        if (v != base_center) phi[static_cast<std::size_t>(v)] = next_leaf++;

    ConstructionTrace trace;
    trace.p = p;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        const PeelStep& ps = *it;
        std::vector<int> post_of_pre(static_cast<std::size_t>(ps.pre.vertex_count()), -1);
        for (std::size_t i = 0; i < ps.kept_old_of_new.size(); ++i)
            post_of_pre[static_cast<std::size_t>(ps.kept_old_of_new[i])] = static_cast<int>(i);

        int y_rep = phi[static_cast<std::size_t>(post_of_pre[static_cast<std::size_t>(ps.attach)])];
        int n_rep = rep.tree.vertex_count();
        std::optional<int> t_param;
        if (ps.op == OpKind::kO4) t_param = ps.t;
        rep = apply_operation(rep.tree, rep.aset, p, ps.op, y_rep, t_param);
        trace.steps.push_back({ps.op, y_rep, t_param});

        // Extend phi over the pre-peel labels; kept vertices keep their image,
        // block vertices map onto the builder layout starting at n_rep.
        std::vector<int> phi_pre(static_cast<std::size_t>(ps.pre.vertex_count()), -1);
        for (int old : ps.kept_old_of_new)
            phi_pre[static_cast<std::size_t>(old)] =
                phi[static_cast<std::size_t>(post_of_pre[static_cast<std::size_t>(old)])];

        VertexSet in_block(ps.pre.vertex_count());
        for (int v : ps.block) in_block.insert(v);
        auto block_neighbors = [&](int v) {
            std::vector<int> out;
            for (int u : ps.pre.neighbors(v))
                if (in_block.contains(u)) out.push_back(u);
            return out;
        };

        phi_pre[static_cast<std::size_t>(ps.center)] = n_rep;
        switch (ps.op) {
            case OpKind::kO1:
            case OpKind::kO2: {
                int next = n_rep + 1;
                for (int v : block_neighbors(ps.center))
                    phi_pre[static_cast<std::size_t>(v)] = next++;
                break;
            }
            case OpKind::kO3: {
                auto arms = block_neighbors(ps.center);
                for (int i = 0; i < 2; ++i) {
                    int arm = arms[static_cast<std::size_t>(i)];
                    phi_pre[static_cast<std::size_t>(arm)] = n_rep + 1 + i;
                    int next = n_rep + 3 + i * (p - 1);
                    for (int v : block_neighbors(arm))
                        if (v != ps.center) phi_pre[static_cast<std::size_t>(v)] = next++;
                }
                break;
            }
            case OpKind::kO4: {
                auto middles = block_neighbors(ps.center);
                int t = ps.t;
                for (int i = 0; i < t; ++i) {
                    int mid = middles[static_cast<std::size_t>(i)];
                    phi_pre[static_cast<std::size_t>(mid)] = n_rep + 1 + i;
                    int tip = -1;
                    for (int v : block_neighbors(mid))
                        if (v != ps.center) tip = v;
                    phi_pre[static_cast<std::size_t>(tip)] = n_rep + 1 + t + i;
                    int next = n_rep + 1 + 2 * t + i * (p - 1);
                    for (int v : block_neighbors(tip))
                        if (v != mid) phi_pre[static_cast<std::size_t>(v)] = next++;
                }
                break;
            }
        }
        phi = std::move(phi_pre);
    }
    return {std::move(trace), std::move(rep)};
}

}  // namespace detail

// Structural recognizer. Peels blocks guided by the layer structure and the
// unique minimum set, then validates the reconstructed trace by replay. A
// trace is returned iff the tree belongs to the family; the decision never
// consults eta_p or the reinforcement number.
inline std::optional<ConstructionTrace> recognize(const Graph& input, int p) {
    if (p < 3) throw std::invalid_argument("recognize: supported for p >= 3 only");
    if (!is_tree(input)) throw std::invalid_argument("recognize: input is not a tree");

    Graph work = input;
    std::vector<detail::PeelStep> peels;
    while (true) {
        int n = work.vertex_count();
        if (detail::is_star_with_center_degree(work, p)) {
            if (peels.empty()) return std::nullopt;  // T_0 alone is not a member
            break;
        }
        if (n <= p + 1) return std::nullopt;

        auto cert = gamma_p(work, p);
        if (!cert.unique) return std::nullopt;
        const VertexSet& d = cert.witness;

        int root = leaves(work).front();
        auto rv = RootedView::at(work, root);
        auto h = rv.heights();

        // A height-1 vertex of degree p+1 carries a pendant K_{1,p}: reverse O2.
        {
            int found = -1;
            for (int v = 0; v < n && found < 0; ++v)
                if (h[static_cast<std::size_t>(v)] == 1 && work.degree(v) == p + 1) found = v;
            if (found >= 0) {
                if (d.contains(found)) return std::nullopt;
                std::vector<int> block{found};
                for (int c : rv.children[static_cast<std::size_t>(found)]) block.push_back(c);
                peels.push_back(detail::make_peel(
                    OpKind::kO2, work, std::move(block), found,
                    rv.parent[static_cast<std::size_t>(found)], 0));
                work = detail::peel_result(peels.back());
                continue;
            }
        }

        // Otherwise every height-1 vertex must be a p-private neighbor of its
        // leaf children: degree exactly p and outside the minimum set.
        for (int v = 0; v < n; ++v) {
            if (h[static_cast<std::size_t>(v)] != 1) continue;
            if (work.degree(v) != p || d.contains(v)) return std::nullopt;
        }
        if (h[static_cast<std::size_t>(root)] < 3) return std::nullopt;

        // Descending path x-w-v-u from a height-3 vertex, deg(w) maximal,
        // ties by lexicographically smallest tuple.
        int bx = -1, bw = -1, bv = -1, bu = -1;
        for (int x = 0; x < n; ++x) {
            if (h[static_cast<std::size_t>(x)] != 3) continue;
            for (int w : rv.children[static_cast<std::size_t>(x)]) {
                if (h[static_cast<std::size_t>(w)] != 2) continue;
                for (int v : rv.children[static_cast<std::size_t>(w)]) {
                    if (h[static_cast<std::size_t>(v)] != 1) continue;
                    int u = rv.children[static_cast<std::size_t>(v)].front();
                    if (bw < 0 || work.degree(w) > work.degree(bw)) {
                        bx = x; bw = w; bv = v; bu = u;
                    }
                }
            }
        }
        if (bw < 0) return std::nullopt;
        if (!d.contains(bw)) return std::nullopt;

        int mu_w = mu_point(work, p, d, bw);
        if (mu_w >= p + 2) {
            // reverse O1: remove the pendant K_{1,p-1} centered at v.
            std::vector<int> block{bv};
            for (int c : rv.children[static_cast<std::size_t>(bv)]) block.push_back(c);
            peels.push_back(detail::make_peel(OpKind::kO1, work, std::move(block), bv, bw, 0));
        } else if (mu_w == p + 1) {
            const auto& cw = rv.children[static_cast<std::size_t>(bw)];
            for (int c : cw)
                if (h[static_cast<std::size_t>(c)] != 1) return std::nullopt;
            if (static_cast<int>(cw.size()) == 2 && d.contains(bx)) {
                // reverse O3: the subtree at w is F_{p-1}.
                peels.push_back(detail::make_peel(OpKind::kO3, work,
                                                  rv.subtree(bw).members(), bw, bx, 0));
            } else if (static_cast<int>(cw.size()) == 1 && !d.contains(bx) &&
                       !private_neighbors(work, p, d, bw).contains(bx)) {
                // reverse O4: the subtree at x must be F_{t,p-1}.
                const auto& cx = rv.children[static_cast<std::size_t>(bx)];
                for (int c : cx)
                    if (h[static_cast<std::size_t>(c)] != 2 || work.degree(c) != 2)
                        return std::nullopt;
                int t = static_cast<int>(cx.size());
                if (t < p) return std::nullopt;
                if (bx == root) return std::nullopt;
                peels.push_back(detail::make_peel(OpKind::kO4, work,
                                                  rv.subtree(bx).members(), bx,
                                                  rv.parent[static_cast<std::size_t>(bx)], t));
            } else {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
        work = detail::peel_result(peels.back());
    }

    try {
        auto [trace, rebuilt] = detail::peels_to_trace(work, p, peels);
        if (canonical_code(rebuilt.tree) != canonical_code(input))
            throw std::logic_error("recognize: replayed tree is not isomorphic to the input");
        return trace;
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // some replayed precondition failed: not a member
    }
}

namespace detail {

struct ExhaustiveSearch {
    int p;
    SearchLimits lim;
    std::unordered_map<std::string, bool> memo;  // canonical code -> is a member (or base)

    // Candidate last blocks: every pendant occurrence of one of the four
    // shapes, paired with the operation condition on the peeled remainder.
    std::optional<std::vector<PeelStep>> solve(const Graph& t) {
        if (is_star_with_center_degree(t, p)) return std::vector<PeelStep>{};
        std::string code = canonical_code(t);
        if (auto it = memo.find(code); it != memo.end() && !it->second) return std::nullopt;

        auto result = try_candidates(t);
        memo[code] = result.has_value();
        return result;
    }

    std::optional<std::vector<PeelStep>> try_candidates(const Graph& t) {
        int n = t.vertex_count();
        auto leaf_split = [&](int v) {
            std::pair<std::vector<int>, std::vector<int>> out;  // (leaf nbrs, other nbrs)
            for (int u : t.neighbors(v))
                (t.degree(u) == 1 ? out.first : out.second).push_back(u);
            return out;
        };

        for (int c = 0; c < n; ++c) {
            auto [leaf_nb, other_nb] = leaf_split(c);

            // O1: pendant K_{1,p-1}.
            if (t.degree(c) == p && static_cast<int>(leaf_nb.size()) == p - 1 &&
                other_nb.size() == 1) {
                std::vector<int> block{c};
                block.insert(block.end(), leaf_nb.begin(), leaf_nb.end());
                if (auto r = descend(t, OpKind::kO1, block, c, other_nb[0], 0)) return r;
            }
            // O2: pendant K_{1,p}.
            if (t.degree(c) == p + 1 && static_cast<int>(leaf_nb.size()) == p &&
                other_nb.size() == 1) {
                std::vector<int> block{c};
                block.insert(block.end(), leaf_nb.begin(), leaf_nb.end());
                if (auto r = descend(t, OpKind::kO2, block, c, other_nb[0], 0)) return r;
            }
            // O3: pendant F_{p-1} centered at c.
            if (t.degree(c) == 3) {
                auto is_arm = [&](int a) {
                    if (t.degree(a) != p) return false;
                    for (int u : t.neighbors(a))
                        if (u != c && t.degree(u) != 1) return false;
                    return true;
                };
                const auto& nbs = t.neighbors(c);
                for (int skip = 0; skip < 3; ++skip) {
                    int a1 = nbs[static_cast<std::size_t>((skip + 1) % 3)];
                    int a2 = nbs[static_cast<std::size_t>((skip + 2) % 3)];
                    if (!is_arm(a1) || !is_arm(a2)) continue;
                    std::vector<int> block{c, a1, a2};
                    for (int arm : {a1, a2})
                        for (int u : t.neighbors(arm))
                            if (u != c) block.push_back(u);
                    if (auto r = descend(t, OpKind::kO3, block, c,
                                         nbs[static_cast<std::size_t>(skip)], 0))
                        return r;
                }
            }
            // O4: pendant F_{t,p-1} centered at c; any neighbor may be the attachment.
            if (t.degree(c) >= p + 1) {
                for (int y : t.neighbors(c)) {
                    std::vector<int> block{c};
                    bool ok = true;
                    for (int s : t.neighbors(c)) {
                        if (s == y) continue;
                        if (t.degree(s) != 2) { ok = false; break; }
                        int tip = -1;
                        for (int u : t.neighbors(s))
                            if (u != c) tip = u;
                        if (t.degree(tip) != p) { ok = false; break; }
                        for (int u : t.neighbors(tip))
                            if (u != s && t.degree(u) != 1) { ok = false; break; }
                        if (!ok) break;
                        block.push_back(s);
                        block.push_back(tip);
                        for (int u : t.neighbors(tip))
                            if (u != s) block.push_back(u);
                    }
                    if (!ok) continue;
                    if (auto r = descend(t, OpKind::kO4, block, c, y, t.degree(c) - 1)) return r;
                }
            }
        }
        return std::nullopt;
    }

    std::optional<std::vector<PeelStep>> descend(const Graph& t, OpKind op,
                                                 std::vector<int> block, int center, int attach,
                                                 int t_param) {
        PeelStep ps = make_peel(op, t, std::move(block), center, attach, t_param);
        Graph rest = peel_result(ps);
        if (rest.vertex_count() == 0) return std::nullopt;

        // Operation conditions are stated against A of the remainder, which
        // for members equals its unique minimum set.
        int attach_post = -1;
        for (std::size_t i = 0; i < ps.kept_old_of_new.size(); ++i)
            if (ps.kept_old_of_new[i] == attach) attach_post = static_cast<int>(i);
        if (op != OpKind::kO4) {
            auto cert = gamma_p(rest, p, lim);
            if (!cert.unique) return std::nullopt;
            const VertexSet& a = cert.witness;
            if (op == OpKind::kO1 && !a.contains(attach_post)) return std::nullopt;
            if (op == OpKind::kO2 && a.contains(attach_post)) return std::nullopt;
            if (op == OpKind::kO3) {
                if (!a.contains(attach_post)) return std::nullopt;
                int pn = private_neighbors(rest, p, a, attach_post).size();
                int in_a = 0;
                for (int u : rest.neighbors(attach_post))
                    if (a.contains(u)) ++in_a;
                if (pn < std::min(p + 1, in_a + 2)) return std::nullopt;
            }
        }

        auto sub = solve(rest);
        if (!sub) return std::nullopt;
        std::vector<PeelStep> out;
        out.reserve(sub->size() + 1);
        out.push_back(std::move(ps));
        out.insert(out.end(), sub->begin(), sub->end());
        return out;
    }
};

}  // namespace detail

// Reverse search over every peelable pendant block, memoized on canonical
// codes. Finds some valid trace iff one exists; used to validate recognize.
inline std::optional<ConstructionTrace> recognize_exhaustive(const Graph& input, int p,
                                                             const SearchLimits& lim = {}) {
    if (p < 3) throw std::invalid_argument("recognize_exhaustive: supported for p >= 3 only");
    if (!is_tree(input)) throw std::invalid_argument("recognize_exhaustive: input is not a tree");
    if (input.vertex_count() > lim.recognize_exhaustive_max_n)
        throw SizeGuardError("recognize_exhaustive: n=" + std::to_string(input.vertex_count()) +
                             " exceeds cap " + std::to_string(lim.recognize_exhaustive_max_n));
    if (detail::is_star_with_center_degree(input, p)) return std::nullopt;  // k >= 1 required

    detail::ExhaustiveSearch search{p, lim, {}};
    auto peels = search.solve(input);
    if (!peels) return std::nullopt;

    // Locate the base: peel everything off the input in order.
    Graph base = input;
    for (const auto& ps : *peels) base = detail::peel_result(ps);
    auto [trace, rebuilt] = detail::peels_to_trace(base, p, *peels);
    if (canonical_code(rebuilt.tree) != canonical_code(input))
        throw std::logic_error("recognize_exhaustive: replay mismatch");
    return trace;
}

}  // namespace pdom
