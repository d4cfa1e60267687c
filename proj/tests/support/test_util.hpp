#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathseq/generators.hpp"
#include "pathseq/graph.hpp"

namespace testutil {

// Deterministic across platforms and standard libraries, unlike the
// std::uniform_* distributions; frozen test values depend on it.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }
};

inline pathseq::Graph random_graph(int n, std::uint32_t p_num, std::uint32_t p_den,
                                   std::uint64_t seed) {
    SplitMix rng{seed};
    pathseq::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p_num, p_den)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    SplitMix rng{seed};
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
}

inline pathseq::Graph relabel(const pathseq::Graph& g, const std::vector<int>& perm) {
    pathseq::Graph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v)
                out.add_edge(perm[static_cast<std::size_t>(v)],
                             perm[static_cast<std::size_t>(u)]);
    return out;
}

// Independent graph6 encoder used as the round-trip oracle: collects the
// column-ordered upper-triangle bits first, pads, then packs 6 at a time.
inline std::string reference_graph6(const pathseq::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int chunk = 0;
        for (std::size_t b = 0; b < 6; ++b) chunk = chunk * 2 + bits[k + b];
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

// A pair of starlike branch multisets sharing (n, m, L_1..L_{h-3}) but
// differing in L_{h-2}: `shared` short branches plus either {h-2 (x delta), x}
// or {h-1 (x delta), x - delta}. Used by the affine-structure tests.
struct SlopePair {
    pathseq::BranchSequence a, b;
    int h = 0;
    int delta = 0;
};

inline std::vector<SlopePair> slope_pairs() {
    std::vector<SlopePair> pairs;
    for (int h = 3; h <= 6; ++h) {
        for (int ones = 1; ones <= 3; ++ones) {
            for (int x = h; x <= h + 2; ++x) {
                for (int delta = 1; delta <= 2; ++delta) {
                    // A: `ones` length-1 branches, delta branches of length h-2,
                    //    one of length x*delta... keep mass equal instead:
                    // A has delta branches of length h-2 and one of length x;
                    // B has delta branches of length h-1 and one of length
                    // x - delta. Same branch count, same mass.
                    if (x - delta < h) continue; // keep the long branch longest
                    std::vector<int> a(static_cast<std::size_t>(x), 0);
                    std::vector<int> b(static_cast<std::size_t>(x), 0);
                    a[0] += ones;
                    b[0] += ones;
                    a[static_cast<std::size_t>(h - 3)] += delta; // length h-2
                    b[static_cast<std::size_t>(h - 2)] += delta; // length h-1
                    a[static_cast<std::size_t>(x - 1)] += 1;
                    b[static_cast<std::size_t>(x - delta - 1)] += 1;
                    SlopePair p;
                    p.a = pathseq::BranchSequence::canonical(a);
                    p.b = pathseq::BranchSequence::canonical(b);
                    p.h = h;
                    p.delta = p.a.count_of(h - 2) - p.b.count_of(h - 2);
                    if (p.delta == 0) continue;
                    pairs.push_back(std::move(p));
                }
            }
        }
    }
    return pairs;
}

} // namespace testutil
