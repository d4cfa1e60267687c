#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathseq/bigint.hpp"
#include "pathseq/errors.hpp"
#include "pathseq/graph.hpp"

namespace pathseq {

inline constexpr int kDfsOracleMaxVertices = 14;
inline constexpr int kDpOracleMaxVertices = 24;

// (P_0, P_1, ..., P_rho): P_h is the number of simple paths with h edges.
// P_0 is the vertex count, P_1 the edge count, and the last stored entry is
// nonzero whenever the graph has vertices (rho is tight). Queries beyond rho
// read as zero.
struct PathSequence {
    std::vector<BigInt> counts;

    int rho() const noexcept { return static_cast<int>(counts.size()) - 1; }

    BigInt at(int h) const {
        if (h < 0 || h > rho()) return 0;
        return counts[static_cast<std::size_t>(h)];
    }

    // Drops trailing zeros but always keeps P_0.
    void trim() {
        while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) out << ',';
            out << counts[i];
        }
        return out.str();
    }

    static PathSequence parse(std::string_view text) {
        PathSequence seq;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::size_t end = comma == std::string_view::npos ? text.size() : comma;
            seq.counts.push_back(parse_bigint(text.substr(pos, end - pos), pos));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return seq;
    }

    // Checks the shape invariants a sequence handed in from outside must
    // satisfy before inversion makes sense.
    void validate() const {
        if (counts.empty())
            throw SpecError("path sequence must be nonempty");
        for (const BigInt& c : counts)
            if (c < 0) throw SpecError("path sequence entries must be nonnegative");
        if (counts.size() > 1 && counts.back() == 0)
            throw SpecError("path sequence must end with a nonzero entry (rho is tight)");
    }

    friend bool operator==(const PathSequence& a, const PathSequence& b) = default;
};

// Per-type census of the length-h paths of a starlike tree, keyed by where
// the center sits on the path and which path ends are leaves.
//   x1 / x2: center is an end-vertex; the far end is a leaf / branch-interior.
//   y1 / y2: center absent; neither end is a leaf / one end is a leaf.
//   z1(a):   center interior, exactly one end a leaf, a = dist(leaf, center) - 1.
//   z2(a):   center interior, both ends leaves, a = min distance - 1.
//   z3(a):   center interior, no leaf end, a = min distance (stored at a-1).
struct PathTypeCounts {
    int h = 0;
    BigInt x1, x2, y1, y2;
    std::vector<BigInt> z1, z2, z3;

    static int z1_size(int h) { return h >= 1 ? h - 1 : 0; }
    static int z2_size(int h) { return h % 2 == 0 ? h / 2 : (h - 1) / 2; }
    static int z3_size(int h) { return h % 2 == 0 ? h / 2 : (h - 1) / 2; }

    explicit PathTypeCounts(int h_ = 0)
        : h(h_),
          z1(static_cast<std::size_t>(z1_size(h_)), 0),
          z2(static_cast<std::size_t>(z2_size(h_)), 0),
          z3(static_cast<std::size_t>(z3_size(h_)), 0) {}

    BigInt& z3_at(int a) { return z3[static_cast<std::size_t>(a - 1)]; }
    const BigInt& z3_at(int a) const { return z3[static_cast<std::size_t>(a - 1)]; }

    BigInt total() const {
        BigInt t = x1 + x2 + y1 + y2;
        for (const BigInt& v : z1) t += v;
        for (const BigInt& v : z2) t += v;
        for (const BigInt& v : z3) t += v;
        return t;
    }

    friend bool operator==(const PathTypeCounts& a, const PathTypeCounts& b) = default;
};

namespace detail {

template <typename Visit>
void dfs_extend(const Graph& g, int start, int last, std::uint32_t mask, int len, Visit&& visit) {
    std::uint32_t cand = static_cast<std::uint32_t>(g.adjacency_word(last)) & ~mask;
    while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        visit(u, len + 1);
        dfs_extend(g, start, u, mask | (std::uint32_t(1) << u), len + 1, visit);
    }
}

} // namespace detail

// Exhaustive enumeration oracle. Every simple path is generated exactly once
// by requiring the smaller endpoint label to come first, so no divide-by-two
// is involved; a different counting discipline from the subset DP below.
inline PathSequence path_sequence_dfs(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kDfsOracleMaxVertices)
        throw UnsupportedSizeError(
            "dfs oracle supports n <= " + std::to_string(kDfsOracleMaxVertices) + ", got n = " +
            std::to_string(n) + "; use the dp oracle");
    PathSequence seq;
    seq.counts.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    seq.counts[0] = n;
    for (int s = 0; s < n; ++s) {
        detail::dfs_extend(g, s, s, std::uint32_t(1) << s, 0, [&](int u, int len) {
            if (s < u) ++seq.counts[static_cast<std::size_t>(len)];
        });
    }
    seq.trim();
    assert(seq.at(0) == n);
    assert(seq.at(1) == BigInt(g.edge_count()));
    return seq;
}

namespace detail {

// Binomials up to C(24, k) fit comfortably in 32 bits.
struct BinomialTable {
    std::array<std::array<std::uint32_t, 25>, 25> c{};
    constexpr BinomialTable() {
        for (int n = 0; n < 25; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};
inline constexpr BinomialTable kBinomial{};

inline std::uint32_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    return kBinomial.c[n][k];
}

} // namespace detail

// Subset dynamic program: f[S][v] counts directed simple paths covering
// vertex set S and ending at v. Layers are keyed by popcount so only two of
// them are alive at once; within a layer, subsets are addressed by their
// colexicographic rank and endpoints by their position inside the subset.
// P_h is the layer-(h+1) total halved (each undirected path is seen from
// both ends).
inline PathSequence path_sequence_dp(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kDpOracleMaxVertices)
        throw UnsupportedSizeError(
            "dp oracle supports n <= " + std::to_string(kDpOracleMaxVertices) +
            ", got n = " + std::to_string(n));
    PathSequence seq;
    seq.counts.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
    seq.counts[0] = n;
    if (n == 0) return seq;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.adjacency_word(v));

    // layer k = 1: singleton subsets in colex order are just {0}, {1}, ...
    std::vector<BigInt> prev(static_cast<std::size_t>(n), 1);

    std::vector<int> members(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> rank_without(static_cast<std::size_t>(n));
    const std::uint32_t full = n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;

    for (int k = 1; k < n; ++k) {
        const std::size_t layer_size =
            static_cast<std::size_t>(detail::choose(n, k + 1)) * static_cast<std::size_t>(k + 1);
        std::vector<BigInt> cur(layer_size);
        BigInt layer_total = 0;

        // Gosper's hack walks the (k+1)-subsets in increasing mask order,
        // which is exactly colex rank order.
        std::uint32_t set = (std::uint32_t(1) << (k + 1)) - 1;
        std::size_t rank = 0;
        while (set <= full) {
            {
                std::uint32_t bits = set;
                for (int j = 0; j <= k; ++j) {
                    members[static_cast<std::size_t>(j)] = std::countr_zero(bits);
                    bits &= bits - 1;
                }
            }
            // rank of set minus its j-th member, in the k-subset layer:
            // members below position j keep their binomial term, members
            // above drop one position.
            {
                std::uint32_t pre = 0;
                std::uint32_t suf = 0;
                for (int j = k; j > 0; --j)
                    suf += detail::choose(members[static_cast<std::size_t>(j)], j);
                for (int j = 0; j <= k; ++j) {
                    rank_without[static_cast<std::size_t>(j)] = pre + suf;
                    pre += detail::choose(members[static_cast<std::size_t>(j)], j + 1);
                    if (j < k)
                        suf -= detail::choose(members[static_cast<std::size_t>(j + 1)], j + 1);
                }
            }
            BigInt* out = cur.data() + rank * static_cast<std::size_t>(k + 1);
            for (int j = 0; j <= k; ++j) {
                const int u = members[static_cast<std::size_t>(j)];
                const std::uint32_t rest = set ^ (std::uint32_t(1) << u);
                std::uint32_t from = rest & adj[static_cast<std::size_t>(u)];
                if (!from) continue;
                const BigInt* in =
                    prev.data() + static_cast<std::size_t>(rank_without[static_cast<std::size_t>(j)]) *
                                      static_cast<std::size_t>(k);
                BigInt& cell = out[j];
                while (from) {
                    const int v = std::countr_zero(from);
                    from &= from - 1;
                    cell += in[std::popcount(rest & ((std::uint32_t(1) << v) - 1))];
                }
                layer_total += cell;
            }
            ++rank;
            // next subset of the same size (Gosper)
            const std::uint32_t c = set & (~set + 1);
            const std::uint32_t r = set + c;
            if (r > full || r < set) break;
            set = (((r ^ set) >> 2) / c) | r;
        }
        // k edges per path in this layer; each undirected path counted twice
        if (layer_total % 2 != 0)
            throw std::logic_error("dp oracle: directed path total must be even");
        layer_total /= 2;
        seq.counts[static_cast<std::size_t>(k)] = layer_total;
        if (layer_total == 0) break; // no path of length k, so none longer
        prev = std::move(cur);
    }
    seq.trim();
    assert(seq.at(0) == n);
    assert(seq.at(1) == BigInt(g.edge_count()));
    return seq;
}

// Index of the last nonzero path count; 0 for edgeless graphs.
inline int longest_path_length(const Graph& g) { return path_sequence_dp(g).rho(); }

// Enumeration-side census for the starlike per-type path counts: buckets
// every length-h path of a starlike tree by the center's position and the
// leaf-ness of its ends. Totals tie back to path_sequence_dfs(g)[h].
inline PathTypeCounts classify_starlike_paths(const Graph& g, int center, int h) {
    const int n = g.vertex_count();
    if (n > kDfsOracleMaxVertices)
        throw UnsupportedSizeError("starlike path census supports n <= " +
                                   std::to_string(kDfsOracleMaxVertices));
    if (h < 1)
        throw SpecError("starlike path census requires h >= 1");
    if (center < 0 || center >= n)
        throw SpecError("center vertex out of range");
    if (!is_connected(g) || g.edge_count() != static_cast<std::size_t>(n - 1))
        throw SpecError("not starlike: graph is not a tree");
    if (g.degree(center) < 3)
        throw SpecError("not starlike: center degree must be >= 3");
    for (int v = 0; v < n; ++v)
        if (v != center && g.degree(v) > 2)
            throw SpecError("not starlike: vertex " + std::to_string(v) +
                            " has degree >= 3 but is not the center");

    PathTypeCounts out(h);
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(h) + 1);

    auto classify = [&](const std::vector<int>& p) {
        int cpos = -1;
        for (int i = 0; i <= h; ++i)
            if (p[static_cast<std::size_t>(i)] == center) {
                cpos = i;
                break;
            }
        const bool front_leaf = g.degree(p.front()) == 1;
        const bool back_leaf = g.degree(p.back()) == 1;
        if (cpos < 0) {
            (front_leaf || back_leaf ? out.y2 : out.y1) += 1;
        } else if (cpos == 0 || cpos == h) {
            const int far = cpos == 0 ? p.back() : p.front();
            (g.degree(far) == 1 ? out.x1 : out.x2) += 1;
        } else {
            const int d_front = cpos, d_back = h - cpos;
            if (front_leaf && back_leaf) {
                out.z2[static_cast<std::size_t>(std::min(d_front, d_back) - 1)] += 1;
            } else if (front_leaf || back_leaf) {
                out.z1[static_cast<std::size_t>((front_leaf ? d_front : d_back) - 1)] += 1;
            } else {
                out.z3_at(std::min(d_front, d_back)) += 1;
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        detail::dfs_extend(g, s, s, std::uint32_t(1) << s, 0, [&](int u, int len) {
            path.resize(static_cast<std::size_t>(len) + 1);
            path[static_cast<std::size_t>(len)] = u;
            if (len == h && s < u) classify(path);
        });
    }
    return out;
}

} // namespace pathseq
