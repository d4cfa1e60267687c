#pragma once

#include <vector>

#include "pathseq/bigint.hpp"
#include "pathseq/errors.hpp"
#include "pathseq/generators.hpp"
#include "pathseq/path_oracle.hpp"

namespace pathseq {

// Number of length-h paths in the complete graph K_n: half the falling
// factorial over h+1 vertices. The product hits a zero factor once h >= n,
// so truncation past rho needs no special case.
inline BigInt complete_count(int n, int h) {
    if (n < 1) throw SpecError("complete: n >= 1 required");
    if (h < 0) throw SpecError("h >= 0 required");
    if (h == 0) return n;
    BigInt p = 1;
    for (int i = 0; i <= h && p != 0; ++i) p *= (n - i);
    return p / 2;
}

// Number of length-h paths in K_{n1,n2}, in pre-cancellation form from the
// even-h case analysis (one product per choice of the end-vertex side).
// Combining the two products over a common denominator divides by n1 - h/2,
// which is 0/0 at h = 2*n1 when n1 < n2; this form is defined everywhere
// and agrees with the combined one wherever that is finite.
inline BigInt complete_bipartite_count(int n1, int n2, int h) {
    if (n1 < 1 || n1 > n2) throw SpecError("bipartite: 1 <= n1 <= n2 required");
    if (h < 0) throw SpecError("h >= 0 required");
    if (h == 0) return n1 + n2;
    auto falling = [](int x, int top) {
        BigInt p = 1;
        for (int i = 0; i <= top && p != 0; ++i) p *= (x - i);
        return p;
    };
    if (h % 2 == 1) {
        const int half = (h - 1) / 2;
        return falling(n1, half) * falling(n2, half);
    }
    const int half = h / 2;
    return falling(n2, half) * falling(n1, half - 1) / 2 +
           falling(n1, half) * falling(n2, half - 1) / 2;
}

namespace detail {

// sum of L_i for i in [1, j]; entries beyond the stored prefix read as zero
inline long long prefix_count(const std::vector<int>& L, int j) {
    long long s = 0;
    for (int i = 1; i <= j && i <= static_cast<int>(L.size()); ++i)
        s += L[static_cast<std::size_t>(i - 1)];
    return s;
}

// sum of i * L_i for i in [1, j]
inline long long prefix_mass(const std::vector<int>& L, int j) {
    long long s = 0;
    for (int i = 1; i <= j && i <= static_cast<int>(L.size()); ++i)
        s += static_cast<long long>(i) * L[static_cast<std::size_t>(i - 1)];
    return s;
}

inline long long l_at(const std::vector<int>& L, int i) {
    return (i >= 1 && i <= static_cast<int>(L.size())) ? L[static_cast<std::size_t>(i - 1)] : 0;
}

// The per-type path census of a starlike tree with n vertices, center degree
// m and branch multiplicities L, as case tables over the center offset a
// (parity and range splits included). The bucket total depends only on
// n, m and L_1..L_{h-2}, so this is also the algebraic evaluator behind
// sequence inversion: callers may pass a bare prefix (missing entries are
// zero) and still get the correct total, even though individual buckets are
// then meaningless.
inline PathTypeCounts starlike_buckets_raw(long long n, long long m, const std::vector<int>& L,
                                           int h) {
    PathTypeCounts out(h);
    const bool even = h % 2 == 0;

    // Type 1: center is an end-vertex
    out.x1 = l_at(L, h);
    out.x2 = m - prefix_count(L, h);

    // Type 2: center absent
    out.y1 = (n - 1) - prefix_mass(L, h) -
             static_cast<long long>(h + 1) * (m - prefix_count(L, h));
    out.y2 = m - prefix_count(L, h);

    // Type 3: center interior
    for (int a = 0; a <= h - 2; ++a) {
        const bool same_branch_excluded = even ? (a >= h / 2) : (a >= (h - 1) / 2);
        out.z1[static_cast<std::size_t>(a)] =
            BigInt(l_at(L, a + 1)) *
            (m - prefix_count(L, h - (a + 1)) - (same_branch_excluded ? 1 : 0));
    }
    const int z2_top = even ? h / 2 - 1 : (h - 1) / 2 - 1;
    for (int a = 0; a <= z2_top; ++a) {
        if (even && a == h / 2 - 1)
            out.z2[static_cast<std::size_t>(a)] =
                BigInt(l_at(L, a + 1)) * (l_at(L, a + 1) - 1) / 2;
        else
            out.z2[static_cast<std::size_t>(a)] = BigInt(l_at(L, a + 1)) * l_at(L, h - a - 1);
    }
    const int z3_top = even ? h / 2 : (h - 1) / 2;
    for (int a = 1; a <= z3_top; ++a) {
        if (even && a == h / 2)
            out.z3_at(a) = BigInt(m - prefix_count(L, a)) * (m - 1 - prefix_count(L, a)) / 2;
        else
            out.z3_at(a) =
                BigInt(m - prefix_count(L, h - a)) * (m - 1 - prefix_count(L, a));
    }
    return out;
}

// P_h of a starlike tree from (n, m, branch prefix); valid for any center
// degree m >= 1 (the generalized-starlike composition needs m in {1, 2} too).
inline BigInt starlike_ph_raw(long long n, long long m, const std::vector<int>& L, int h) {
    if (h == 0) return n;
    if (h == 1) return n - 1;
    if (h == 2) return (BigInt(m) * m - 3 * m) / 2 + n - 1; // m^2 - 3m is always even
    return starlike_buckets_raw(n, m, L, h).total();
}

// Paths of length k in the clique that end at the shared vertex x; zero as
// soon as k >= n1.
inline BigInt clique_end_paths(int n1, int k) {
    BigInt p = 1;
    for (int i = 1; i <= k && p != 0; ++i) p *= (n1 - i);
    return p;
}

// Paths of length h lying inside a path graph on n vertices.
inline BigInt path_graph_count(int n, int h) {
    if (h == 0) return n;
    return h <= n - 1 ? BigInt(n - h) : BigInt(0);
}

} // namespace detail

// Per-type counts for a valid starlike tree (center degree >= 3). For
// h > rho the result is zero-filled; h <= 0 is an error.
inline PathTypeCounts starlike_type_counts(const BranchSequence& branches, int h) {
    branches.validate(3);
    if (h <= 0) throw SpecError("starlike type counts require h >= 1");
    if (h > branches.t1() + branches.t2()) return PathTypeCounts(h);
    return detail::starlike_buckets_raw(branches.vertex_count(), branches.branch_count(),
                                        branches.count_by_length, h);
}

// P_h of a starlike tree. h = 2 has a closed quadratic in (n, m); larger h
// sums the per-type census.
inline BigInt starlike_count(const BranchSequence& branches, int h) {
    branches.validate(3);
    if (h < 0) throw SpecError("h >= 0 required");
    if (h > branches.t1() + branches.t2()) return 0;
    return detail::starlike_ph_raw(branches.vertex_count(), branches.branch_count(),
                                   branches.count_by_length, h);
}

// P_h of the kite graph: clique-only paths, tail-only paths, and the paths
// glued at x from a clique piece of length k and a tail piece of length h-k.
// Both factors truncate on their own, so no piecewise ranges are needed.
inline BigInt kite_count(int n1, int n2, int h) {
    validate(FamilySpec(Kite{n1, n2}));
    if (h < 0) throw SpecError("h >= 0 required");
    if (h == 0) return n1 + n2 - 1;
    BigInt total = complete_count(n1, h) + detail::path_graph_count(n2, h);
    for (int k = 1; k <= h - 1; ++k)
        if (1 <= h - k && h - k <= n2 - 1) total += detail::clique_end_paths(n1, k);
    return total;
}

// P_h of the lollipop graph; the cycle offers exactly two length-k paths
// ending at x for every 1 <= k <= n1 - 1.
inline BigInt lollipop_count(int n1, int n2, int h) {
    validate(FamilySpec(Lollipop{n1, n2}));
    if (h < 0) throw SpecError("h >= 0 required");
    if (h == 0) return n1 + n2 - 1;
    BigInt total = (1 <= h && h <= n1 - 1) ? n1 : 0;
    total += detail::path_graph_count(n2, h);
    for (int k = 1; k <= h - 1; ++k)
        if (k <= n1 - 1 && 1 <= h - k && h - k <= n2 - 1) total += 2;
    return total;
}

namespace detail {

// Shared by the public count and the inversion search: branch data passed as
// a raw prefix, m and n2 as free values.
inline BigInt genstar_ph_raw(int n1, long long n2, long long m, const std::vector<int>& L,
                             int h) {
    if (h == 0) return n1 + n2 - 1;
    BigInt total = complete_count(n1, h) + starlike_ph_raw(n2, m, L, h);
    for (int k = 1; k <= h - 1; ++k) {
        const BigInt g = clique_end_paths(n1, k);
        if (g == 0) continue;
        // f(j): branches of length >= j; vanishes past the longest branch
        const BigInt f = m - prefix_count(L, h - k - 1);
        total += g * f;
    }
    return total;
}

} // namespace detail

// P_h of the coalescence of K_{n1} with a starlike tree at its center.
inline BigInt generalized_starlike_count(int n1, const BranchSequence& branches, int h) {
    validate(FamilySpec(GeneralizedStarlike{n1, branches}));
    if (h < 0) throw SpecError("h >= 0 required");
    return detail::genstar_ph_raw(n1, branches.vertex_count(), branches.branch_count(),
                                  branches.count_by_length, h);
}

// Whole sequences for paths, cycles and stars, which have simple closed forms.
inline PathSequence simple_family_sequence(const FamilySpec& spec) {
    validate(spec);
    PathSequence seq;
    if (const auto* p = std::get_if<Path>(&spec)) {
        for (int v = p->n; v >= 1; --v) seq.counts.emplace_back(v);
    } else if (const auto* c = std::get_if<Cycle>(&spec)) {
        seq.counts.assign(static_cast<std::size_t>(c->n), BigInt(c->n));
    } else if (const auto* s = std::get_if<Star>(&spec)) {
        seq.counts = {BigInt(s->n), BigInt(s->n - 1),
                      BigInt(s->n - 1) * (s->n - 2) / 2};
    } else {
        throw SpecError("simple_family_sequence accepts path, cycle or star specs");
    }
    return seq;
}

// Full closed-form path sequence (P_0 .. P_rho) for any family spec.
inline PathSequence sequence_of(const FamilySpec& spec) {
    validate(spec);
    const int top = rho(spec);
    PathSequence seq;
    switch (kind_of(spec)) {
        case FamilyKind::Path:
        case FamilyKind::Cycle:
        case FamilyKind::Star:
            return simple_family_sequence(spec);
        case FamilyKind::Complete: {
            const auto& s = std::get<Complete>(spec);
            for (int h = 0; h <= top; ++h) seq.counts.push_back(complete_count(s.n, h));
            break;
        }
        case FamilyKind::CompleteBipartite: {
            const auto& s = std::get<CompleteBipartite>(spec);
            for (int h = 0; h <= top; ++h)
                seq.counts.push_back(complete_bipartite_count(s.n1, s.n2, h));
            break;
        }
        case FamilyKind::Starlike: {
            const auto& s = std::get<Starlike>(spec);
            for (int h = 0; h <= top; ++h) seq.counts.push_back(starlike_count(s.branches, h));
            break;
        }
        case FamilyKind::Kite: {
            const auto& s = std::get<Kite>(spec);
            for (int h = 0; h <= top; ++h) seq.counts.push_back(kite_count(s.n1, s.n2, h));
            break;
        }
        case FamilyKind::Lollipop: {
            const auto& s = std::get<Lollipop>(spec);
            for (int h = 0; h <= top; ++h) seq.counts.push_back(lollipop_count(s.n1, s.n2, h));
            break;
        }
        case FamilyKind::GeneralizedStarlike: {
            const auto& s = std::get<GeneralizedStarlike>(spec);
            for (int h = 0; h <= top; ++h)
                seq.counts.push_back(generalized_starlike_count(s.n1, s.branches, h));
            break;
        }
    }
    return seq;
}

} // namespace pathseq
