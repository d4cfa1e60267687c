#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathseq/bigint.hpp"
#include "pathseq/closed_forms.hpp"
#include "pathseq/errors.hpp"
#include "pathseq/generators.hpp"
#include "pathseq/path_oracle.hpp"

namespace pathseq {

// Vertex-count cap for sequence inversion, so a nonsense query cannot demand
// an astronomically long verification sequence.
inline constexpr int kIdentifyMaxVertices = 5000;

enum class IdentifyMethod { DirectInversion, ParameterSearch, PrunedBranchSearch };

// Outcome of inverting a path sequence within one family. A present match
// has been verified: sequence_of(*match) equals the query exactly, always.
// `survivors` counts the candidates that passed full verification; within
// each family the sequence should determine the graph, and the searches
// report the true number instead of assuming it.
struct IdentifyResult {
    std::optional<FamilySpec> match;
    IdentifyMethod method = IdentifyMethod::DirectInversion;
    long long candidates_examined = 0;
    int survivors = 0;
};

namespace detail {

// Integer roots of x^2 - sum*x + prod = 0 (Vieta form used by the bipartite
// inversion); returns the smaller root, or nothing.
inline std::optional<BigInt> vieta_small_root(const BigInt& sum, const BigInt& prod) {
    bool exact = false;
    const BigInt s = isqrt(sum * sum - 4 * prod, exact);
    if (!exact || (sum - s) % 2 != 0) return std::nullopt;
    return (sum - s) / 2;
}

// Integer x >= 0 with x^2/2 - 3x/2 = value; unique since the quadratic is
// increasing for x >= 3/2.
inline std::optional<BigInt> invert_half_square_minus(const BigInt& value) {
    bool exact = false;
    const BigInt s = isqrt(9 + 8 * value, exact);
    if (!exact || (3 + s) % 2 != 0) return std::nullopt;
    return (3 + s) / 2;
}

inline bool matches(const FamilySpec& spec, const PathSequence& seq) {
    return sequence_of(spec) == seq;
}

inline IdentifyResult direct(std::optional<FamilySpec> candidate, const PathSequence& seq,
                             long long examined) {
    IdentifyResult r;
    r.method = IdentifyMethod::DirectInversion;
    r.candidates_examined = examined;
    if (candidate && matches(*candidate, seq)) {
        r.match = std::move(candidate);
        r.survivors = 1;
    }
    return r;
}

inline IdentifyResult identify_starlike(int n, const PathSequence& seq) {
    IdentifyResult r;
    r.method = IdentifyMethod::DirectInversion;
    const auto m_big = invert_half_square_minus(seq.at(2) - (n - 1));
    if (!m_big || *m_big < 3 || *m_big > n - 1) return r;
    const int m = static_cast<int>(*m_big);

    // Recover L_{h-2} for h = 3, 4, ... from the affine structure: the
    // formula with L_{h-2} set to zero differs from P_h by (2 - m) * L_{h-2},
    // and every division must be exact.
    std::vector<int> L;
    long long branches = 0, mass = 0;
    for (int j = 1; branches < m; ++j) {
        if (j > n) return r;
        ++r.candidates_examined;
        L.push_back(0);
        const BigInt predicted = detail::starlike_ph_raw(n, m, L, j + 2);
        const BigInt delta = seq.at(j + 2) - predicted;
        const BigInt q = delta / (2 - m);
        if (q * (2 - m) != delta || q < 0 || branches + q > m) return r;
        const int lj = static_cast<int>(q);
        L.back() = lj;
        branches += lj;
        mass += static_cast<long long>(j) * lj;
        if (mass > n - 1) return r;
    }
    if (mass != n - 1) return r;
    FamilySpec candidate{Starlike{BranchSequence::canonical(std::move(L))}};
    if (matches(candidate, seq)) {
        r.match = std::move(candidate);
        r.survivors = 1;
    }
    return r;
}

inline IdentifyResult identify_lollipop(int n, const PathSequence& seq) {
    IdentifyResult r;
    r.method = IdentifyMethod::ParameterSearch;
    for (int n1 = 3; n1 <= n - 1; ++n1) {
        ++r.candidates_examined;
        FamilySpec candidate{Lollipop{n1, n + 1 - n1}};
        if (matches(candidate, seq)) {
            ++r.survivors;
            if (!r.match) r.match = std::move(candidate);
        }
    }
    return r;
}

struct GenstarSearch {
    int n1 = 0;
    int n2 = 0;
    int m = 0;
    const PathSequence* seq = nullptr;
    IdentifyResult* result = nullptr;

    // Depth-first over branch multiplicities. The forward count at height
    // j + 2 is fully determined by the prefix through L_j, so any value of
    // L_j whose predicted count disagrees with the query is pruned before
    // recursing. Terminal candidates are still verified in full.
    void recurse(std::vector<int>& prefix, int branches, long long used_mass) {
        const int j = static_cast<int>(prefix.size()) + 1;
        if (branches == m) {
            if (used_mass != n2 - 1) return;
            FamilySpec candidate{
                GeneralizedStarlike{n1, BranchSequence::canonical(prefix)}};
            if (matches(candidate, *seq)) {
                ++result->survivors;
                if (!result->match) result->match = std::move(candidate);
            }
            return;
        }
        // remaining branches all have length >= j
        if (j > n2 || used_mass + static_cast<long long>(m - branches) * j > n2 - 1) return;
        const BigInt& want = seq->at(j + 2);
        for (int lj = 0; lj <= m - branches; ++lj) {
            ++result->candidates_examined;
            prefix.push_back(lj);
            if (detail::genstar_ph_raw(n1, n2, m, prefix, j + 2) == want)
                recurse(prefix, branches + lj, used_mass + static_cast<long long>(j) * lj);
            prefix.pop_back();
        }
    }
};

inline IdentifyResult identify_genstar(int n, const PathSequence& seq) {
    IdentifyResult r;
    r.method = IdentifyMethod::PrunedBranchSearch;
    const auto n1_big = invert_half_square_minus(seq.at(1) - n);
    if (!n1_big || *n1_big < 3 || *n1_big > n) return r;
    const int n1 = static_cast<int>(*n1_big);
    const int n2 = n + 1 - n1;
    if (n2 < 2) return r;

    // m from the h = 2 display: P_2 = m^2/2 + (n1 - 5/2)m + n1^3/2 - 3n1^2/2 + n
    const BigInt c = (BigInt(n1) * n1 * n1 - 3 * BigInt(n1) * n1) / 2 + n - seq.at(2);
    bool exact = false;
    const BigInt disc = BigInt(2 * n1 - 5) * (2 * n1 - 5) - 8 * c;
    const BigInt s = isqrt(disc, exact);
    if (!exact || (s - (2 * n1 - 5)) % 2 != 0) return r;
    const BigInt m_big = (s - (2 * n1 - 5)) / 2;
    if (m_big < 1 || m_big > n2 - 1 || n1 - 1 + m_big <= 2) return r;
    const int m = static_cast<int>(m_big);

    GenstarSearch search{n1, n2, m, &seq, &r};
    std::vector<int> prefix;
    search.recurse(prefix, 0, 0);
    return r;
}

} // namespace detail

// Inverts a path sequence to family parameters. A missing match is an
// ordinary outcome (no consistent parameters), not an error; a malformed
// sequence throws.
inline IdentifyResult identify(FamilyKind kind, const PathSequence& seq) {
    seq.validate();
    const int n = to_int_checked(seq.at(0), kIdentifyMaxVertices, "vertex count P_0");
    switch (kind) {
        case FamilyKind::Complete:
            return detail::direct(n >= 1 ? std::optional<FamilySpec>(Complete{n}) : std::nullopt,
                                  seq, 1);
        case FamilyKind::Path:
            return detail::direct(n >= 1 ? std::optional<FamilySpec>(Path{n}) : std::nullopt, seq,
                                  1);
        case FamilyKind::Cycle:
            return detail::direct(n >= 3 ? std::optional<FamilySpec>(Cycle{n}) : std::nullopt, seq,
                                  1);
        case FamilyKind::Star:
            return detail::direct(n >= 3 ? std::optional<FamilySpec>(Star{n}) : std::nullopt, seq,
                                  1);
        case FamilyKind::CompleteBipartite: {
            // n1 + n2 = P_0 and n1 * n2 = P_1
            const auto n1 = detail::vieta_small_root(seq.at(0), seq.at(1));
            std::optional<FamilySpec> candidate;
            if (n1 && *n1 >= 1)
                candidate = CompleteBipartite{static_cast<int>(*n1),
                                              n - static_cast<int>(*n1)};
            return detail::direct(std::move(candidate), seq, 1);
        }
        case FamilyKind::Kite: {
            // P_1 - P_0 = n1^2/2 - 3 n1/2
            const auto n1 = detail::invert_half_square_minus(seq.at(1) - n);
            std::optional<FamilySpec> candidate;
            if (n1 && *n1 >= 2 && *n1 <= n - 1)
                candidate = Kite{static_cast<int>(*n1), n + 1 - static_cast<int>(*n1)};
            return detail::direct(std::move(candidate), seq, 1);
        }
        case FamilyKind::Starlike:
            return detail::identify_starlike(n, seq);
        case FamilyKind::Lollipop:
            return detail::identify_lollipop(n, seq);
        case FamilyKind::GeneralizedStarlike:
            return detail::identify_genstar(n, seq);
    }
    throw SpecError("unknown family kind");
}

// Equal path sequences within one family, which for these families is
// isomorphism. Comparing across families is a contract error (distinct
// graphs from different families can share a sequence).
inline bool same_by_sequence(const FamilySpec& a, const FamilySpec& b) {
    if (kind_of(a) != kind_of(b))
        throw SpecError("same_by_sequence requires two specs of the same family kind");
    return sequence_of(a) == sequence_of(b);
}

} // namespace pathseq
