#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "pathseq/closed_forms.hpp"
#include "pathseq/collision.hpp"
#include "pathseq/errors.hpp"
#include "pathseq/generators.hpp"
#include "pathseq/graph6.hpp"
#include "pathseq/identify.hpp"
#include "pathseq/path_oracle.hpp"

// Command-line front end. Exit status convention across all subcommands:
//   0  success (match found / no collisions / all grid points pass)
//   1  negative outcome (no match / collisions found / grid mismatches)
//   2  errors: bad flags, parse failures, violated invariants, size guards
//
// run_cli is stream-parameterized so the whole surface is testable in
// process; the installed binary just forwards argv and the standard streams.

namespace pathseq {

namespace cli_detail {

struct FamilyFlags {
    std::string family;
    int n = -1;
    int n1 = -1;
    int n2 = -1;
    std::string branches;

    bool any() const { return !family.empty(); }
};

inline void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--family", f.family,
                    "family: complete|bipartite|path|cycle|star|starlike|kite|lollipop|genstar");
    cmd->add_option("--n", f.n, "vertex count (complete, path, cycle, star)");
    cmd->add_option("--n1", f.n1, "first parameter (bipartite, kite, lollipop, genstar)");
    cmd->add_option("--n2", f.n2, "second parameter (bipartite, kite, lollipop)");
    cmd->add_option("--branches", f.branches,
                    "branch multiplicities L_1,L_2,... (starlike, genstar)");
}

inline BranchSequence parse_branches(const std::string& text) {
    if (text.empty()) throw SpecError("--branches requires a comma-separated list");
    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        const BigInt v = parse_bigint(std::string_view(text).substr(pos, end - pos), pos);
        counts.push_back(to_int_checked(v, 1 << 20, "branch multiplicity"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return BranchSequence{std::move(counts)};
}

inline FamilySpec make_spec(const FamilyFlags& f) {
    const auto need_n = [&] {
        if (f.n < 0) throw SpecError("--family " + f.family + " requires --n");
        if (f.n1 >= 0 || f.n2 >= 0 || !f.branches.empty())
            throw SpecError("--family " + f.family + " takes only --n");
        return f.n;
    };
    if (f.family == "complete") return Complete{need_n()};
    if (f.family == "path") return Path{need_n()};
    if (f.family == "cycle") return Cycle{need_n()};
    if (f.family == "star") return Star{need_n()};
    if (f.family == "bipartite" || f.family == "kite" || f.family == "lollipop") {
        if (f.n1 < 0 || f.n2 < 0)
            throw SpecError("--family " + f.family + " requires --n1 and --n2");
        if (f.n >= 0 || !f.branches.empty())
            throw SpecError("--family " + f.family + " takes only --n1/--n2");
        if (f.family == "bipartite") return CompleteBipartite{f.n1, f.n2};
        if (f.family == "kite") return Kite{f.n1, f.n2};
        return Lollipop{f.n1, f.n2};
    }
    if (f.family == "starlike") {
        if (f.branches.empty()) throw SpecError("--family starlike requires --branches");
        if (f.n >= 0 || f.n1 >= 0 || f.n2 >= 0)
            throw SpecError("--family starlike takes only --branches");
        return Starlike{parse_branches(f.branches)};
    }
    if (f.family == "genstar") {
        if (f.n1 < 0 || f.branches.empty())
            throw SpecError("--family genstar requires --n1 and --branches");
        if (f.n >= 0 || f.n2 >= 0)
            throw SpecError("--family genstar takes only --n1/--branches");
        return GeneralizedStarlike{f.n1, parse_branches(f.branches)};
    }
    throw SpecError("unknown family '" + f.family + "'");
}

inline FamilyKind parse_kind(const std::string& name) {
    for (int k = 0; k <= static_cast<int>(FamilyKind::GeneralizedStarlike); ++k)
        if (name == kind_name(static_cast<FamilyKind>(k))) return static_cast<FamilyKind>(k);
    throw SpecError("unknown family '" + name + "'");
}

// First graph6 record from a stream; '#' lines and blanks are skipped.
inline Graph read_graph6_stream(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return parse_graph6(line);
    }
    throw ParseError("no graph6 record found in input", 0);
}

// Grid of specs for `verify`, bounded by --max (family parameters) and
// --max-n (vertex counts / branch mass).
inline std::vector<FamilySpec> verify_grid(FamilyKind kind, int max, int max_n) {
    std::vector<FamilySpec> grid;
    switch (kind) {
        case FamilyKind::Complete:
            for (int n = 1; n <= max; ++n) grid.emplace_back(Complete{n});
            break;
        case FamilyKind::CompleteBipartite:
            for (int n1 = 1; n1 <= max; ++n1)
                for (int n2 = n1; n2 <= max; ++n2) grid.emplace_back(CompleteBipartite{n1, n2});
            break;
        case FamilyKind::Path:
            for (int n = 1; n <= max_n; ++n) grid.emplace_back(Path{n});
            break;
        case FamilyKind::Cycle:
            for (int n = 3; n <= max_n; ++n) grid.emplace_back(Cycle{n});
            break;
        case FamilyKind::Star:
            for (int n = 3; n <= max_n; ++n) grid.emplace_back(Star{n});
            break;
        case FamilyKind::Starlike:
            for (const auto& b : branch_multisets(max_n, 3)) grid.emplace_back(Starlike{b});
            break;
        case FamilyKind::Kite:
            for (int n1 = 2; n1 <= max; ++n1)
                for (int n2 = 2; n2 <= max; ++n2) grid.emplace_back(Kite{n1, n2});
            break;
        case FamilyKind::Lollipop:
            for (int n1 = 3; n1 <= max; ++n1)
                for (int n2 = 2; n2 <= max; ++n2) grid.emplace_back(Lollipop{n1, n2});
            break;
        case FamilyKind::GeneralizedStarlike:
            for (int n1 = 3; n1 <= max; ++n1)
                for (const auto& b : branch_multisets(max_n, 1))
                    grid.emplace_back(GeneralizedStarlike{n1, b});
            break;
    }
    return grid;
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact simple-path counting for graphs and graph families"};
    app.name("pathseq");
    app.require_subcommand(1);

    // ---- gen ----
    cli_detail::FamilyFlags gen_flags;
    std::string gen_format = "graph6";
    CLI::App* gen = app.add_subcommand("gen", "construct a family graph");
    cli_detail::add_family_flags(gen, gen_flags);
    gen->add_option("--format", gen_format, "graph6 | edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));

    // ---- seq ----
    cli_detail::FamilyFlags seq_flags;
    std::string seq_method = "dp";
    std::string seq_input;
    CLI::App* seq = app.add_subcommand("seq", "print the path sequence of a graph");
    cli_detail::add_family_flags(seq, seq_flags);
    seq->add_option("-i,--input", seq_input, "graph6 input file ('-' for stdin)");
    seq->add_option("--method", seq_method, "dfs | dp | formula")
        ->check(CLI::IsMember({"dfs", "dp", "formula"}));

    // ---- verify ----
    cli_detail::FamilyFlags verify_flags;
    int verify_max = 6, verify_max_n = 12, verify_jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "check family formulas against the dp oracle");
    verify->add_option("--family", verify_flags.family, "family kind")->required();
    verify->add_option("--max", verify_max, "upper bound for family parameters (default 6)");
    verify->add_option("--max-n", verify_max_n,
                       "upper bound for vertex counts / branch mass (default 12)");
    verify->add_option("--jobs", verify_jobs, "worker threads (default 1)");

    // ---- identify ----
    std::string id_family, id_seq;
    CLI::App* ident = app.add_subcommand("identify", "invert a path sequence to family parameters");
    ident->add_option("--family", id_family, "family kind")->required();
    ident->add_option("--seq", id_seq, "path sequence, comma separated")->required();

    // ---- collide ----
    std::string collide_input;
    int collide_enumerate = -1;
    bool connected_only = false, no_dedupe = false;
    CLI::App* collide = app.add_subcommand("collide", "group graphs by path sequence");
    collide->add_option("-i,--input", collide_input, "graph6 file, one record per line");
    collide->add_option("--enumerate", collide_enumerate,
                        "scan all labeled graphs on n vertices (1 <= n <= 7)");
    collide->add_flag("--connected-only", connected_only, "drop disconnected graphs");
    collide->add_flag("--no-dedupe", no_dedupe, "keep isomorphic duplicates as members");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const FamilySpec spec = cli_detail::make_spec(gen_flags);
            const Graph g = build(spec);
            if (gen_format == "graph6")
                out << write_graph6(g) << '\n';
            else
                out << write_edge_list(g);
            return 0;
        }

        if (seq->parsed()) {
            if (!seq_input.empty() && seq_flags.any())
                throw SpecError("-i and --family are mutually exclusive");
            if (seq_method == "formula") {
                if (!seq_flags.any())
                    throw SpecError("--method formula requires family flags");
                out << sequence_of(cli_detail::make_spec(seq_flags)).to_string() << '\n';
                return 0;
            }
            Graph g;
            if (seq_flags.any()) {
                g = build(cli_detail::make_spec(seq_flags));
            } else if (!seq_input.empty() && seq_input != "-") {
                std::ifstream file(seq_input);
                if (!file) throw ParseError("cannot open input file " + seq_input, 0);
                g = cli_detail::read_graph6_stream(file);
            } else {
                g = cli_detail::read_graph6_stream(in);
            }
            const PathSequence s =
                seq_method == "dfs" ? path_sequence_dfs(g) : path_sequence_dp(g);
            out << s.to_string() << '\n';
            return 0;
        }

        if (verify->parsed()) {
            const FamilyKind kind = cli_detail::parse_kind(verify_flags.family);
            const auto grid = cli_detail::verify_grid(kind, verify_max, verify_max_n);
            const int jobs = std::max(1, verify_jobs);
            std::vector<std::string> failures(grid.size());
            auto worker = [&](int w) {
                for (std::size_t i = static_cast<std::size_t>(w); i < grid.size();
                     i += static_cast<std::size_t>(jobs)) {
                    const PathSequence formula = sequence_of(grid[i]);
                    const PathSequence oracle = path_sequence_dp(build(grid[i]));
                    if (formula != oracle)
                        failures[i] = "fail " + describe(grid[i]) + ": formula=" +
                                      formula.to_string() + " oracle=" + oracle.to_string();
                }
            };
            if (jobs == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
                for (auto& t : pool) t.join();
            }
            std::size_t bad = 0;
            for (const auto& f : failures)
                if (!f.empty()) {
                    out << f << '\n';
                    ++bad;
                }
            out << "family=" << kind_name(kind) << " points=" << grid.size()
                << " mismatches=" << bad << '\n';
            return bad == 0 ? 0 : 1;
        }

        if (ident->parsed()) {
            const FamilyKind kind = cli_detail::parse_kind(id_family);
            const PathSequence query = PathSequence::parse(id_seq);
            const IdentifyResult r = identify(kind, query);
            if (r.match) {
                out << describe(*r.match) << '\n';
                return 0;
            }
            out << "no match\n";
            return 1;
        }

        if (collide->parsed()) {
            if (!collide_input.empty() && collide_enumerate >= 0)
                throw SpecError("-i and --enumerate are mutually exclusive");
            CollisionOptions options;
            options.connected_only = connected_only;
            options.dedupe_isomorphic = !no_dedupe;
            options.log = &err;
            std::vector<CollisionRecord> records;
            if (collide_enumerate >= 0) {
                LabeledGraphEnumerator en(collide_enumerate);
                records = find_collisions(en.as_source(), options);
            } else {
                std::istream* source = &in;
                std::ifstream file;
                if (!collide_input.empty() && collide_input != "-") {
                    file.open(collide_input);
                    if (!file) throw ParseError("cannot open input file " + collide_input, 0);
                    source = &file;
                }
                std::string line;
                std::size_t lineno = 0;
                std::vector<Graph> graphs;
                while (std::getline(*source, line)) {
                    ++lineno;
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty() || line[0] == '#') continue;
                    try {
                        graphs.push_back(parse_graph6(line));
                    } catch (const ParseError& e) {
                        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
                    }
                }
                std::size_t next = 0;
                records = find_collisions(
                    [&]() -> std::optional<Graph> {
                        if (next >= graphs.size()) return std::nullopt;
                        return graphs[next++];
                    },
                    options);
            }
            write_collision_report(records, out);
            return records.empty() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace pathseq
