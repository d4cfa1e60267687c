#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pathseq/errors.hpp"
#include "pathseq/graph.hpp"

namespace pathseq {

// Branch multiplicities of a starlike tree: count_by_length[i] is the number
// of branches of length i+1 (the accessor count_of(l) is
// 1-based). Canonical form has no trailing zeros.
struct BranchSequence {
    std::vector<int> count_by_length;

    int t() const noexcept { return static_cast<int>(count_by_length.size()); }

    // Multiplicity of length-l branches; 0 outside [1, t].
    int count_of(int l) const noexcept {
        if (l < 1 || l > t()) return 0;
        return count_by_length[static_cast<std::size_t>(l - 1)];
    }

    // m: number of branches = degree of the center vertex.
    int branch_count() const noexcept {
        return std::accumulate(count_by_length.begin(), count_by_length.end(), 0);
    }

    // Total edge mass sum(l * L_l); the tree it describes has 1 + mass vertices.
    int mass() const noexcept {
        int s = 0;
        for (int l = 1; l <= t(); ++l) s += l * count_of(l);
        return s;
    }

    int vertex_count() const noexcept { return 1 + mass(); }

    // Longest branch length.
    int t1() const noexcept { return t(); }

    // Second-longest branch length in the multiset sense; 0 when only one
    // branch exists (so a doubled longest branch gives t2 == t1).
    int t2() const noexcept {
        if (t() == 0) return 0;
        if (count_of(t()) >= 2) return t();
        for (int l = t() - 1; l >= 1; --l)
            if (count_of(l) > 0) return l;
        return 0;
    }

    void validate(int min_branch_count) const {
        if (count_by_length.empty())
            throw SpecError("branch sequence must be nonempty");
        for (int l = 1; l <= t(); ++l)
            if (count_of(l) < 0)
                throw SpecError("branch multiplicity L_" + std::to_string(l) +
                                " must be nonnegative");
        if (count_of(t()) < 1)
            throw SpecError("canonical branch sequence forbids trailing zeros (L_t >= 1)");
        if (branch_count() < min_branch_count)
            throw SpecError("branch count m = " + std::to_string(branch_count()) +
                            " below required minimum " + std::to_string(min_branch_count));
    }

    // Strips trailing zeros; used when assembling recovered sequences.
    static BranchSequence canonical(std::vector<int> counts) {
        while (!counts.empty() && counts.back() == 0) counts.pop_back();
        return BranchSequence{std::move(counts)};
    }

    friend bool operator==(const BranchSequence& a, const BranchSequence& b) = default;
};

struct Complete {
    int n;
    friend bool operator==(const Complete&, const Complete&) = default;
};
struct CompleteBipartite {
    int n1, n2; // n1 <= n2
    friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};
struct Path {
    int n;
    friend bool operator==(const Path&, const Path&) = default;
};
struct Cycle {
    int n;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};
struct Star {
    int n;
    friend bool operator==(const Star&, const Star&) = default;
};
struct Starlike {
    BranchSequence branches; // m >= 3
    friend bool operator==(const Starlike&, const Starlike&) = default;
};
struct Kite {
    int n1, n2; // K_{n1} plus a pendant path of n2 vertices sharing vertex x
    friend bool operator==(const Kite&, const Kite&) = default;
};
struct Lollipop {
    int n1, n2; // C_{n1} plus a pendant path of n2 vertices sharing vertex x
    friend bool operator==(const Lollipop&, const Lollipop&) = default;
};
struct GeneralizedStarlike {
    int n1; // clique size coalesced at the starlike center
    BranchSequence branches;
    friend bool operator==(const GeneralizedStarlike&, const GeneralizedStarlike&) = default;
};

using FamilySpec = std::variant<Complete, CompleteBipartite, Path, Cycle, Star, Starlike, Kite,
                                Lollipop, GeneralizedStarlike>;

enum class FamilyKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Starlike,
    Kite,
    Lollipop,
    GeneralizedStarlike,
};

inline FamilyKind kind_of(const FamilySpec& spec) {
    return static_cast<FamilyKind>(spec.index());
}

inline const char* kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Complete: return "complete";
        case FamilyKind::CompleteBipartite: return "bipartite";
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Star: return "star";
        case FamilyKind::Starlike: return "starlike";
        case FamilyKind::Kite: return "kite";
        case FamilyKind::Lollipop: return "lollipop";
        case FamilyKind::GeneralizedStarlike: return "genstar";
    }
    return "?";
}

inline void validate(const FamilySpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Complete>) {
                if (s.n < 1) throw SpecError("complete: n >= 1 required");
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                if (s.n1 < 1) throw SpecError("bipartite: n1 >= 1 required");
                if (s.n1 > s.n2) throw SpecError("bipartite: n1 <= n2 required");
            } else if constexpr (std::is_same_v<T, Path>) {
                if (s.n < 1) throw SpecError("path: n >= 1 required");
            } else if constexpr (std::is_same_v<T, Cycle>) {
                if (s.n < 3) throw SpecError("cycle: n >= 3 required");
            } else if constexpr (std::is_same_v<T, Star>) {
                if (s.n < 3) throw SpecError("star: n >= 3 required");
            } else if constexpr (std::is_same_v<T, Starlike>) {
                s.branches.validate(3); // center degree of a starlike tree
            } else if constexpr (std::is_same_v<T, Kite>) {
                if (s.n1 < 2) throw SpecError("kite: n1 >= 2 required");
                if (s.n2 < 2) throw SpecError("kite: n2 >= 2 required");
            } else if constexpr (std::is_same_v<T, Lollipop>) {
                if (s.n1 < 3) throw SpecError("lollipop: n1 >= 3 required");
                if (s.n2 < 2) throw SpecError("lollipop: n2 >= 2 required");
            } else if constexpr (std::is_same_v<T, GeneralizedStarlike>) {
                if (s.n1 < 3) throw SpecError("genstar: n1 >= 3 required");
                s.branches.validate(1);
                if (s.n1 - 1 + s.branches.branch_count() <= 2)
                    throw SpecError("genstar: coalescence degree n1 - 1 + m > 2 required");
            }
        },
        spec);
}

namespace detail {

// Branches laid out in nondecreasing length order so the labeling (and thus
// every serialized output) is deterministic. Returns the next free vertex.
inline int attach_branches(Graph& g, int center, int first_free, const BranchSequence& b) {
    int next = first_free;
    for (int l = 1; l <= b.t(); ++l) {
        for (int c = 0; c < b.count_of(l); ++c) {
            int prev = center;
            for (int step = 0; step < l; ++step) {
                g.add_edge(prev, next);
                prev = next++;
            }
        }
    }
    return next;
}

inline Graph build_clique_with_tail(int n1, int n2, bool cycle) {
    // clique or cycle on 0..n1-1, x = vertex 0, tail continues n1..n1+n2-2
    Graph g(n1 + n2 - 1);
    if (cycle) {
        for (int v = 0; v < n1; ++v) g.add_edge(v, (v + 1) % n1);
    } else {
        for (int u = 0; u < n1; ++u)
            for (int v = u + 1; v < n1; ++v) g.add_edge(u, v);
    }
    int prev = 0;
    for (int v = n1; v < n1 + n2 - 1; ++v) {
        g.add_edge(prev, v);
        prev = v;
    }
    return g;
}

} // namespace detail

inline Graph build(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Complete>) {
                Graph g(s.n);
                for (int u = 0; u < s.n; ++u)
                    for (int v = u + 1; v < s.n; ++v) g.add_edge(u, v);
                return g;
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                Graph g(s.n1 + s.n2);
                for (int u = 0; u < s.n1; ++u)
                    for (int v = s.n1; v < s.n1 + s.n2; ++v) g.add_edge(u, v);
                return g;
            } else if constexpr (std::is_same_v<T, Path>) {
                Graph g(s.n);
                for (int v = 0; v + 1 < s.n; ++v) g.add_edge(v, v + 1);
                return g;
            } else if constexpr (std::is_same_v<T, Cycle>) {
                Graph g(s.n);
                for (int v = 0; v < s.n; ++v) g.add_edge(v, (v + 1) % s.n);
                return g;
            } else if constexpr (std::is_same_v<T, Star>) {
                Graph g(s.n);
                for (int v = 1; v < s.n; ++v) g.add_edge(0, v);
                return g;
            } else if constexpr (std::is_same_v<T, Starlike>) {
                Graph g(s.branches.vertex_count());
                detail::attach_branches(g, 0, 1, s.branches);
                return g;
            } else if constexpr (std::is_same_v<T, Kite>) {
                return detail::build_clique_with_tail(s.n1, s.n2, false);
            } else if constexpr (std::is_same_v<T, Lollipop>) {
                return detail::build_clique_with_tail(s.n1, s.n2, true);
            } else {
                static_assert(std::is_same_v<T, GeneralizedStarlike>);
                Graph g(s.n1 + s.branches.vertex_count() - 1);
                for (int u = 0; u < s.n1; ++u)
                    for (int v = u + 1; v < s.n1; ++v) g.add_edge(u, v);
                detail::attach_branches(g, 0, s.n1, s.branches);
                return g;
            }
        },
        spec);
}

// Length of a longest path, family by family. Cross-checked against the
// counting oracles in the test suite.
inline int rho(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Complete>) {
                return s.n - 1;
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                return s.n1 == s.n2 ? 2 * s.n1 - 1 : 2 * s.n1;
            } else if constexpr (std::is_same_v<T, Path>) {
                return s.n - 1;
            } else if constexpr (std::is_same_v<T, Cycle>) {
                return s.n - 1;
            } else if constexpr (std::is_same_v<T, Star>) {
                return 2;
            } else if constexpr (std::is_same_v<T, Starlike>) {
                return s.branches.t1() + s.branches.t2();
            } else if constexpr (std::is_same_v<T, Kite> || std::is_same_v<T, Lollipop>) {
                return s.n1 + s.n2 - 2;
            } else {
                static_assert(std::is_same_v<T, GeneralizedStarlike>);
                const auto& b = s.branches;
                return std::max(b.t1() + s.n1 - 1, b.t1() + b.t2());
            }
        },
        spec);
}

namespace detail {

inline void partitions_into(int mass, int max_part, std::vector<int>& mult,
                            std::vector<BranchSequence>& out, int min_branches) {
    if (mass == 0) {
        BranchSequence b = BranchSequence::canonical(mult);
        if (b.t() >= 1 && b.branch_count() >= min_branches) out.push_back(std::move(b));
        return;
    }
    for (int part = std::min(mass, max_part); part >= 1; --part) {
        if (static_cast<int>(mult.size()) < part) mult.resize(static_cast<std::size_t>(part), 0);
        ++mult[static_cast<std::size_t>(part - 1)];
        partitions_into(mass - part, part, mult, out, min_branches);
        --mult[static_cast<std::size_t>(part - 1)];
        while (!mult.empty() && mult.back() == 0) mult.pop_back();
    }
}

} // namespace detail

// Every branch multiset whose tree has at most max_vertices vertices and at
// least min_branches branches, in deterministic order (by mass, then by
// partition with larger parts first).
inline std::vector<BranchSequence> branch_multisets(int max_vertices, int min_branches) {
    std::vector<BranchSequence> out;
    std::vector<int> mult;
    for (int mass = 1; mass + 1 <= max_vertices; ++mass)
        detail::partitions_into(mass, mass, mult, out, min_branches);
    return out;
}

inline std::string format_branches(const BranchSequence& b) {
    std::ostringstream out;
    out << "(";
    for (int l = 1; l <= b.t(); ++l) {
        if (l > 1) out << ",";
        out << b.count_of(l);
    }
    out << ")";
    return out.str();
}

inline std::string describe(const FamilySpec& spec) {
    std::ostringstream out;
    out << kind_name(kind_of(spec)) << ' ';
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Complete> || std::is_same_v<T, Path> ||
                          std::is_same_v<T, Cycle> || std::is_same_v<T, Star>) {
                out << "n=" << s.n;
            } else if constexpr (std::is_same_v<T, CompleteBipartite> ||
                                 std::is_same_v<T, Kite> || std::is_same_v<T, Lollipop>) {
                out << "n1=" << s.n1 << " n2=" << s.n2;
            } else if constexpr (std::is_same_v<T, Starlike>) {
                out << "L=" << format_branches(s.branches);
            } else {
                static_assert(std::is_same_v<T, GeneralizedStarlike>);
                out << "n1=" << s.n1 << " L=" << format_branches(s.branches);
            }
        },
        spec);
    return out.str();
}

} // namespace pathseq
