#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pathseq/errors.hpp"

namespace pathseq {

// Undirected simple graph stored as one neighbor bitset per vertex.
// Rows are chains of 64-bit words so the type itself does not cap n, even
// though every consumer in this library guards at desk scale (n <= 62 for
// graph6, n <= 24 for the counting oracles).
//
// Invariants kept by construction: adjacency is symmetric, there are no
// loops, and no bit at index >= n is ever set. Values are immutable once
// built (all algorithms take const references), so they can be shared
// freely across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0)
            throw SpecError("vertex count must be nonnegative");
        words_ = static_cast<std::size_t>((n + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const noexcept { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw SpecError("self-loop rejected: vertex " + std::to_string(u));
        set_bit(u, v);
        set_bit(v, u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const std::uint64_t* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        const std::uint64_t* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

    // Low word of vertex v's neighbor set; enough for the n <= 24 oracles.
    std::uint64_t adjacency_word(int v) const {
        check_vertex(v);
        return words_ ? row(v)[0] : 0;
    }

    std::vector<int> sorted_degrees() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw SpecError("vertex index " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
    }

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t(1) << (v % 64);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// True iff g has a single connected component. The empty graph and all
// 1-vertex graphs count as connected (documented convention).
inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v)
        for (int u : a.neighbors(v))
            if (u > v) g.add_edge(v, u);
    const int off = a.vertex_count();
    for (int v = 0; v < b.vertex_count(); ++v)
        for (int u : b.neighbors(v))
            if (u > v) g.add_edge(v + off, u + off);
    return g;
}

namespace detail {

inline bool extend_isomorphism(const Graph& g1, const Graph& g2, std::vector<int>& map,
                               std::vector<bool>& used, int next) {
    const int n = g1.vertex_count();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[static_cast<std::size_t>(cand)]) continue;
        if (g1.degree(next) != g2.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (g1.has_edge(prev, next) != g2.has_edge(map[static_cast<std::size_t>(prev)], cand)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (extend_isomorphism(g1, g2, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

} // namespace detail

// Exact isomorphism test by permutation search with degree pruning.
// Vertex-count mismatch is an ordinary `false`; n > 10 is out of contract.
inline bool are_isomorphic_small(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    const int n = g1.vertex_count();
    if (n > 10)
        throw UnsupportedSizeError("isomorphism search supports n <= 10, got n = " +
                                   std::to_string(n));
    if (g1.edge_count() != g2.edge_count()) return false;
    if (g1.sorted_degrees() != g2.sorted_degrees()) return false;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    return detail::extend_isomorphism(g1, g2, map, used, 0);
}

// Edge-list text: first line is n, each following line one edge "u v".
// Duplicate edges collapse; self-loops and out-of-range endpoints are
// reported with their line number (1-based).
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0)
                throw ParseError("expected vertex count on first line", lineno);
            std::string rest;
            if (fields >> rest)
                throw ParseError("unexpected token after vertex count", lineno);
            g = Graph(static_cast<int>(n));
            continue;
        }
        long long u, v;
        if (!(fields >> u)) continue; // blank line
        if (!(fields >> v))
            throw ParseError("odd token count in edge line", lineno);
        std::string rest;
        if (fields >> rest)
            throw ParseError("more than two endpoints on edge line", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex out of range on edge line", lineno);
        if (u == v)
            throw ParseError("self-loop rejected", lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("empty edge-list input", 0);
    return g;
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) out << v << ' ' << u << '\n';
    return out.str();
}

} // namespace pathseq
