#pragma once

// Simple undirected graphs over dense vertex ids 0..n-1, fixed-universe
// vertex sets, rooted tree views, and the edge-list / DOT text formats.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdom {

using Edge = std::pair<int, int>;

// Thrown when an exact search would exceed its configured instance-size cap.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

inline Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Subset of 0..universe-1 with constant-time membership, packed into 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    bool is_subset_of(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Order on equal-universe sets matching lexicographic order of the sorted
    // member tuples: the smaller set is the one containing the lowest id on
    // which the two differ.
    bool lex_less(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return words_[i] & low;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : members()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::invalid_argument("VertexSet: id out of range");
    }
    void require_same(const VertexSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph: no loops, no parallel edges, sorted adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        std::size_t d = 0;
        for (const auto& a : adj_) d += a.size();
        return static_cast<int>(d / 2);
    }

    const std::vector<int>& neighbors(int v) const {
        check(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
    }

    friend Graph from_edge_list(int n, const std::vector<Edge>& edges);
    friend Graph add_edges(const Graph& g, const std::vector<Edge>& extra);

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

inline Graph from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("from_edge_list: id out of range in edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("from_edge_list: self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[static_cast<std::size_t>(v)];
        std::sort(a.begin(), a.end());
        auto dup = std::adjacent_find(a.begin(), a.end());
        if (dup != a.end())
            throw std::invalid_argument("from_edge_list: duplicate edge (" + std::to_string(v) +
                                        "," + std::to_string(*dup) + ")");
    }
    return g;
}

inline Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    auto all = g.edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return from_edge_list(g.vertex_count(), all);
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// Component of g - x containing y; requires xy to be an edge.
inline VertexSet component_of(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("component_of: xy is not an edge");
    VertexSet comp(g.vertex_count());
    comp.insert(y);
    std::vector<int> stack{y};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (v == x || comp.contains(v)) continue;
            comp.insert(v);
            stack.push_back(v);
        }
    }
    return comp;
}

// All non-edges, each once, in lexicographic order.
inline std::vector<Edge> complement_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& a = g.neighbors(u);
        std::size_t i = 0;
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            while (i < a.size() && a[i] < v) ++i;
            if (i < a.size() && a[i] == v) continue;
            out.emplace_back(u, v);
        }
    }
    return out;
}

inline std::vector<int> leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

inline std::vector<int> stems(const Graph& g) {
    std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : leaves(g)) mark[static_cast<std::size_t>(g.neighbors(v)[0])] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// Rooted orientation of a tree: parent pointers, child lists, BFS order.
struct RootedView {
    int root = 0;
    std::vector<int> parent;        // -1 at the root
    std::vector<std::vector<int>> children;
    std::vector<int> bfs_order;     // root first

    static RootedView at(const Graph& t, int root) {
        if (!is_tree(t)) throw std::invalid_argument("RootedView: input is not a tree");
        int n = t.vertex_count();
        RootedView rv;
        rv.root = root;
        rv.parent.assign(static_cast<std::size_t>(n), -1);
        rv.children.assign(static_cast<std::size_t>(n), {});
        rv.bfs_order.reserve(static_cast<std::size_t>(n));
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{root};
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            rv.bfs_order.push_back(u);
            for (int v : t.neighbors(u)) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = 1;
                rv.parent[static_cast<std::size_t>(v)] = u;
                rv.children[static_cast<std::size_t>(u)].push_back(v);
                queue.push_back(v);
            }
        }
        return rv;
    }

    // Height of each vertex: max distance to a vertex of its own subtree.
    std::vector<int> heights() const {
        std::vector<int> h(parent.size(), 0);
        for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
            for (int c : children[static_cast<std::size_t>(*it)])
                h[static_cast<std::size_t>(*it)] =
                    std::max(h[static_cast<std::size_t>(*it)], h[static_cast<std::size_t>(c)] + 1);
        }
        return h;
    }

    // D[x]: x together with all of its descendants.
    VertexSet subtree(int x) const {
        VertexSet s(static_cast<int>(parent.size()));
        std::vector<int> stack{x};
        s.insert(x);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int c : children[static_cast<std::size_t>(u)]) {
                s.insert(c);
                stack.push_back(c);
            }
        }
        return s;
    }
};

// Induced subgraph on `keep`; new ids follow the old order. Returns the graph
// and the old id of each new vertex.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> old_of_new = keep.members();
    std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < old_of_new.size(); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges()) {
        int nu = new_of_old[static_cast<std::size_t>(u)];
        int nv = new_of_old[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) es.emplace_back(nu, nv);
    }
    return {from_edge_list(static_cast<int>(old_of_new.size()), es), std::move(old_of_new)};
}

// --- edge-list text format -------------------------------------------------
//
//   # optional comments
//   n m
//   u v        (m lines, 0-based)

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
            } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
                throw std::invalid_argument("edge list: bad header line: " + line);
            }
            continue;
        }
        int u, v;
        if (ls >> u >> v) {
            edges.emplace_back(u, v);
        } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw std::invalid_argument("edge list: bad edge line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                    std::to_string(edges.size()));
    return from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << v << "\"];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pdom
