#pragma once

// Isomorphism-invariant codes for trees: root at the center (for bicentral
// trees, take the smaller of the two center-rooted codes) and encode each
// vertex as "(" + sorted child codes + ")".

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

// One or two central vertices of a tree, ascending.
inline std::vector<int> tree_centers(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_centers: input is not a tree");
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            for (int u : t.neighbors(v)) {
                if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
            }
            deg[static_cast<std::size_t>(v)] = 0;
        }
        remaining -= static_cast<int>(layer.size());
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

inline std::string ahu_code(const Graph& t, int root) {
    auto rv = RootedView::at(t, root);
    std::vector<std::string> code(static_cast<std::size_t>(t.vertex_count()));
    for (auto it = rv.bfs_order.rbegin(); it != rv.bfs_order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        kids.reserve(rv.children[static_cast<std::size_t>(v)].size());
        for (int c : rv.children[static_cast<std::size_t>(v)])
            kids.push_back(std::move(code[static_cast<std::size_t>(c)]));
        std::sort(kids.begin(), kids.end());
        std::string s;
        std::size_t len = 2;
        for (const auto& k : kids) len += k.size();
        s.reserve(len);
        s += '(';
        for (const auto& k : kids) s += k;
        s += ')';
        code[static_cast<std::size_t>(v)] = std::move(s);
    }
    return code[static_cast<std::size_t>(root)];
}

}  // namespace detail

// Equal codes iff the trees are isomorphic.
inline std::string canonical_code(const Graph& t) {
    auto centers = tree_centers(t);
    std::string best = detail::ahu_code(t, centers[0]);
    if (centers.size() == 2) {
        std::string other = detail::ahu_code(t, centers[1]);
        if (other < best) best = std::move(other);
    }
    return best;
}

}  // namespace pdom
