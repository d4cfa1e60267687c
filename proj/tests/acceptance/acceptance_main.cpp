// Acceptance suite: every release criterion as an executable check, one
// pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pathseq/cli.hpp"
#include "pathseq/closed_forms.hpp"
#include "pathseq/collision.hpp"
#include "pathseq/generators.hpp"
#include "pathseq/graph6.hpp"
#include "pathseq/identify.hpp"
#include "pathseq/path_oracle.hpp"
#include "../support/test_util.hpp"

using namespace pathseq;
using Clock = std::chrono::steady_clock;

namespace {

// The family grids shared by criteria 1, 2 and 6.
std::vector<FamilySpec> acceptance_grids() {
    std::vector<FamilySpec> grid;
    for (int n = 1; n <= 10; ++n) grid.emplace_back(Complete{n});
    for (int n1 = 1; n1 <= 6; ++n1)
        for (int n2 = n1; n2 <= 6; ++n2) grid.emplace_back(CompleteBipartite{n1, n2});
    for (int n = 1; n <= 12; ++n) grid.emplace_back(Path{n});
    for (int n = 3; n <= 12; ++n) grid.emplace_back(Cycle{n});
    for (int n = 3; n <= 12; ++n) grid.emplace_back(Star{n});
    for (int n1 = 2; n1 <= 7; ++n1)
        for (int n2 = 2; n2 <= 7; ++n2) grid.emplace_back(Kite{n1, n2});
    for (int n1 = 3; n1 <= 8; ++n1)
        for (int n2 = 2; n2 <= 8; ++n2) grid.emplace_back(Lollipop{n1, n2});
    for (const auto& b : branch_multisets(12, 3)) grid.emplace_back(Starlike{b});
    for (int n1 = 3; n1 <= 5; ++n1)
        for (const auto& b : branch_multisets(8, 1))
            grid.emplace_back(GeneralizedStarlike{n1, b});
    return grid;
}

// 1. dfs and dp oracles agree exactly on the family grids (within the dfs
//    guard; the lollipop (8,8) point has 15 vertices and is covered by the
//    formula/dp check of criterion 2) and on 200 seeded random graphs per n.
bool criterion_1(std::string& note) {
    std::size_t points = 0, clipped = 0;
    for (const auto& spec : acceptance_grids()) {
        const Graph g = build(spec);
        if (g.vertex_count() > kDfsOracleMaxVertices) {
            ++clipped;
            continue;
        }
        ++points;
        if (path_sequence_dfs(g) != path_sequence_dp(g)) {
            note = "oracle mismatch at " + describe(spec);
            return false;
        }
    }
    std::size_t randoms = 0;
    for (int n = 5; n <= 12; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            const Graph g = testutil::random_graph(n, 1, 2, 1000ull * n + trial);
            ++randoms;
            if (path_sequence_dfs(g) != path_sequence_dp(g)) {
                note = "oracle mismatch on random graph n=" + std::to_string(n) + " trial=" +
                       std::to_string(trial);
                return false;
            }
        }
    note = std::to_string(points) + " grid points (" + std::to_string(clipped) +
           " beyond the dfs guard) + " + std::to_string(randoms) + " random graphs, exact";
    return true;
}

// 2. Closed-form sequence equals the dp oracle on every grid point.
bool criterion_2(std::string& note) {
    std::size_t points = 0;
    for (const auto& spec : acceptance_grids()) {
        ++points;
        const PathSequence formula = sequence_of(spec);
        const PathSequence oracle = path_sequence_dp(build(spec));
        if (formula != oracle) {
            note = "formula mismatch at " + describe(spec) + ": formula=" + formula.to_string() +
                   " oracle=" + oracle.to_string();
            return false;
        }
    }
    note = std::to_string(points) + " grid points, exact";
    return true;
}

// 3. Starlike per-type census: formula buckets equal enumerated buckets at
//    every h on the full starlike grid.
bool criterion_3(std::string& note) {
    std::size_t checks = 0;
    for (const auto& b : branch_multisets(12, 3)) {
        const Graph g = build(Starlike{b});
        for (int h = 1; h <= b.t1() + b.t2(); ++h) {
            ++checks;
            if (!(starlike_type_counts(b, h) == classify_starlike_paths(g, 0, h))) {
                note = "census mismatch at L=" + format_branches(b) + " h=" + std::to_string(h);
                return false;
            }
        }
    }
    note = std::to_string(checks) + " bucket-for-bucket census checks, exact";
    return true;
}

// 4. Canonical family sequences reproduced exactly.
bool criterion_4(std::string& note) {
    if (path_sequence_dfs(build(Star{4})).to_string() != "4,3,3") {
        note = "P(K_{1,3}) != (4,3,3)";
        return false;
    }
    for (int n = 3; n <= 12; ++n) {
        PathSequence path_display, cycle_display, star_display;
        for (int v = n; v >= 1; --v) path_display.counts.emplace_back(v);
        cycle_display.counts.assign(static_cast<std::size_t>(n), BigInt(n));
        star_display.counts = {BigInt(n), BigInt(n - 1), BigInt(n - 1) * (n - 2) / 2};
        if (sequence_of(FamilySpec(Path{n})) != path_display ||
            path_sequence_dfs(build(Path{n})) != path_display) {
            note = "path display failed at n=" + std::to_string(n);
            return false;
        }
        if (sequence_of(FamilySpec(Cycle{n})) != cycle_display ||
            path_sequence_dfs(build(Cycle{n})) != cycle_display) {
            note = "cycle display failed at n=" + std::to_string(n);
            return false;
        }
        if (sequence_of(FamilySpec(Star{n})) != star_display ||
            path_sequence_dfs(build(Star{n})) != star_display) {
            note = "star display failed at n=" + std::to_string(n);
            return false;
        }
    }
    note = "K_{1,3} fixture plus path/cycle/star displays for n in [3,12], exact";
    return true;
}

// 5. Affine structure: starlike pairs differ by (2-m) per unit of L_{h-2};
//    generalized starlike pairs by the regime-dictated slope. Every valid
//    pair keeps the clique composition open, so the dictated slope is
//    3 - m - n1 (the 2 - m regime cannot host a pair that differs in
//    L_{h-2}); membership in {3-m-n1, 2-m} is asserted as stated.
bool criterion_5(std::string& note) {
    const auto pairs = testutil::slope_pairs();
    int starlike_pairs = 0, genstar_pairs = 0;
    for (const auto& pair : pairs) {
        const int m = pair.a.branch_count();
        const BigInt diff = starlike_count(pair.a, pair.h) - starlike_count(pair.b, pair.h);
        if (diff != BigInt(2 - m) * pair.delta) {
            note = "starlike slope failed at L=" + format_branches(pair.a) + " h=" +
                   std::to_string(pair.h);
            return false;
        }
        ++starlike_pairs;
    }
    for (int n1 = 3; n1 <= 5; ++n1)
        for (const auto& pair : pairs) {
            const int m = pair.a.branch_count();
            const BigInt diff = generalized_starlike_count(n1, pair.a, pair.h) -
                                generalized_starlike_count(n1, pair.b, pair.h);
            const BigInt dictated = BigInt(3 - m - n1) * pair.delta;
            const bool in_set =
                diff == dictated || diff == BigInt(2 - m) * pair.delta;
            if (!in_set || diff != dictated) {
                note = "genstar slope failed at n1=" + std::to_string(n1) + " L=" +
                       format_branches(pair.a) + " h=" + std::to_string(pair.h);
                return false;
            }
            ++genstar_pairs;
        }
    if (starlike_pairs < 20 || genstar_pairs < 20) {
        note = "not enough constructed pairs";
        return false;
    }
    note = std::to_string(starlike_pairs) + " starlike pairs (slope 2-m), " +
           std::to_string(genstar_pairs) + " genstar pairs (slope 3-m-n1)";
    return true;
}

// 6. identify inverts sequence_of on every grid point; the lollipop and
//    genstar searches see exactly one survivor.
bool criterion_6(std::string& note) {
    std::size_t points = 0;
    for (const auto& spec : acceptance_grids()) {
        FamilyKind kind = kind_of(spec);
        FamilySpec expected = spec;
        if (kind == FamilyKind::Path || kind == FamilyKind::Cycle) continue;
        if (kind == FamilyKind::Star) {
            // star sequences invert through the starlike machinery once a
            // genuine center exists (n >= 4; K_{1,2} is a path)
            const int n = std::get<Star>(spec).n;
            if (n < 4) continue;
            kind = FamilyKind::Starlike;
            expected = Starlike{BranchSequence{{n - 1}}};
        }
        ++points;
        const IdentifyResult r = identify(kind, sequence_of(spec));
        if (!r.match || !(*r.match == expected)) {
            note = "identify failed at " + describe(spec);
            return false;
        }
        if ((r.method == IdentifyMethod::ParameterSearch ||
             r.method == IdentifyMethod::PrunedBranchSearch) &&
            r.survivors != 1) {
            note = "identify found " + std::to_string(r.survivors) + " survivors at " +
                   describe(spec);
            return false;
        }
    }
    note = std::to_string(points) + " round trips, unique survivors throughout";
    return true;
}

// 7. The collide subcommand finds the smallest collision pair.
bool criterion_7(std::string& note) {
    std::istringstream in;
    std::ostringstream out, err;
    const int status = run_cli({"collide", "--enumerate", "4"}, in, out, err);
    if (status != 1) {
        note = "expected exit status 1, got " + std::to_string(status);
        return false;
    }
    LabeledGraphEnumerator en(4);
    const auto records = find_collisions(en.as_source());
    if (records.size() != 1 || records.front().sequence.to_string() != "4,3,3" ||
        records.front().iso_class_count() != 2) {
        note = "expected exactly the (4,3,3) record with two isomorphism classes";
        return false;
    }
    const Graph a = parse_graph6(records.front().members[0]);
    const Graph b = parse_graph6(records.front().members[1]);
    const Graph star = build(Star{4});
    const Graph triangle = disjoint_union(build(Complete{3}), Graph(1));
    const bool classes_match = (are_isomorphic_small(a, star) && are_isomorphic_small(b, triangle)) ||
                               (are_isomorphic_small(a, triangle) && are_isomorphic_small(b, star));
    if (!classes_match) {
        note = "the two classes are not K_{1,3} and K_3 u K_1";
        return false;
    }
    std::istringstream in2;
    std::ostringstream out2, err2;
    const int status2 = run_cli({"collide", "--enumerate", "4", "--connected-only"}, in2, out2, err2);
    if (out2.str().find("4,3,3") != std::string::npos || status2 != 0) {
        note = "connected-only scan still reports the (4,3,3) class";
        return false;
    }
    note = "(4,3,3) = {K_{1,3}, K_3 u K_1}; gone under --connected-only";
    return true;
}

// 8. Regression guards at singular points: the combined even-h bipartite
//    form is 0/0 at (2,3,4) where the count is 6, and the affine P_3
//    shortcut gives 16 for K_{1,4} where the count is 0.
bool criterion_8(std::string& note) {
    if (complete_bipartite_count(2, 3, 4) != 6) {
        note = "complete_bipartite_count(2,3,4) != 6";
        return false;
    }
    if (2 - 4 / 2 != 0) { // n1 - h/2: the combined form divides by zero here
        note = "expected the combined form to be 0/0 at (2,3,4)";
        return false;
    }
    const BranchSequence star4{{4}};
    const long long n = star4.vertex_count(), m = star4.branch_count(), L1 = 4;
    const long long shortcut_p3 = m * m + m + n - 1 + (2 - m) * L1;
    if (shortcut_p3 != 16 || starlike_count(star4, 3) != 0 ||
        path_sequence_dfs(build(Starlike{star4})).at(3) != 0) {
        note = "starlike P_3 regression guard failed";
        return false;
    }
    note = "bipartite (2,3,4) = 6 where the combined form is 0/0; starlike L=(4) P_3 = 0, not 16";
    return true;
}

// 9. Performance: the dp oracle finishes a seeded n=20, p=0.3 connected
//    random graph within 60 s, and reproduces P_20(K_21) = 21!/2 exactly.
bool criterion_9(std::string& note) {
    Graph g = testutil::random_graph(20, 3, 10, 42);
    std::uint64_t reseed = 42;
    while (!is_connected(g)) g = testutil::random_graph(20, 3, 10, ++reseed);
    auto t0 = Clock::now();
    const PathSequence seq = path_sequence_dp(g);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (seconds >= 60.0) {
        note = "n=20 dp took " + std::to_string(seconds) + " s (limit 60)";
        return false;
    }
    if (seq.at(0) != 20 || seq.at(1) != BigInt(g.edge_count())) {
        note = "n=20 dp sequence failed the P_0/P_1 sanity check";
        return false;
    }
    auto t1 = Clock::now();
    const PathSequence k21 = path_sequence_dp(build(Complete{21}));
    const double k21_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
    BigInt expected = 1;
    for (int i = 2; i <= 21; ++i) expected *= i;
    expected /= 2;
    if (k21.at(20) != expected) {
        note = "P_20(K_21) != 21!/2";
        return false;
    }
    std::ostringstream s;
    s.precision(1);
    s << std::fixed << "n=20 dp in " << seconds << " s; P_20(K_21) = " << expected.str()
      << " exact in " << k21_seconds << " s";
    note = s.str();
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle cross-validation (dfs = dp)", criterion_1},
        {2, "formula/oracle equality on the family grids", criterion_2},
        {3, "starlike per-type census, bucket for bucket", criterion_3},
        {4, "canonical family sequences reproduced exactly", criterion_4},
        {5, "affine-structure slopes on constructed pairs", criterion_5},
        {6, "identification round trip with unique survivors", criterion_6},
        {7, "collision fixture via the collide subcommand", criterion_7},
        {8, "singular-point regression guards", criterion_8},
        {9, "dp oracle performance and exact big counts", criterion_9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", c.number, c.title,
                    note.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria pass\n", criteria.size());
    else
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    return failures;
}
