#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pathseq/errors.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/graph6.hpp"
#include "pathseq/path_oracle.hpp"

namespace pathseq {

inline constexpr int kEnumerateMaxVertices = 7;   // 2^21 labeled graphs at n = 7
inline constexpr int kIsoPartitionMaxVertices = 10;

// One path-sequence key shared by at least two ingested graphs. Members keep
// their input order; iso_class[i] is the isomorphism class of members[i]
// (classes numbered by first appearance), or -1 when the partition was
// skipped because the graphs are too large for the permutation search.
struct CollisionRecord {
    PathSequence sequence;
    std::vector<std::string> members; // graph6
    std::vector<int> iso_class;
    std::vector<bool> connected_flags;
    bool iso_partition_skipped = false;

    int iso_class_count() const {
        int top = -1;
        for (int c : iso_class) top = std::max(top, c);
        return top + 1;
    }
};

// Every labeled simple graph on n vertices, exactly once, in lexicographic
// edge-mask order: bit k of the mask is the k-th pair (0,1),(0,2),...,(1,2),...
// and masks run 0, 1, 2, ...
class LabeledGraphEnumerator {
public:
    explicit LabeledGraphEnumerator(int n) : n_(n) {
        if (n < 1 || n > kEnumerateMaxVertices)
            throw UnsupportedSizeError("labeled enumeration supports 1 <= n <= " +
                                       std::to_string(kEnumerateMaxVertices) + ", got n = " +
                                       std::to_string(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
        total_ = std::uint64_t(1) << pairs_.size();
    }

    std::uint64_t total() const noexcept { return total_; }

    std::optional<Graph> next() {
        if (mask_ >= total_) return std::nullopt;
        Graph g(n_);
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if ((mask_ >> k) & 1) g.add_edge(pairs_[k].first, pairs_[k].second);
        ++mask_;
        return g;
    }

    // Usable directly as a source for find_collisions.
    std::function<std::optional<Graph>()> as_source() {
        return [this] { return next(); };
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_ = 0;
};

struct CollisionOptions {
    bool connected_only = false;
    // Collapse isomorphic duplicates at ingest, keeping the first labeled
    // representative of each class. A record is then emitted only when it
    // still holds >= 2 members, i.e. >= 2 non-isomorphic graphs.
    bool dedupe_isomorphic = true;
    std::ostream* log = nullptr; // skip reasons; silent when null
};

namespace detail {

// Grouping key: length-prefixed decimal entries; equality of keys is
// exactly equality of sequences.
inline std::string sequence_key(const PathSequence& seq) {
    std::string key;
    for (const BigInt& c : seq.counts) {
        const std::string digits = c.str();
        key += std::to_string(digits.size());
        key += ':';
        key += digits;
        key += ',';
    }
    return key;
}

struct CollisionGroup {
    PathSequence sequence;
    std::vector<std::string> members;
    std::vector<bool> connected_flags;
};

} // namespace detail

// Groups every graph from `source` by its exact path sequence and returns
// the groups with at least two (non-isomorphic, when deduping) members,
// sorted by sequence. Graphs beyond the dp-oracle guard are skipped with a
// logged reason rather than aborting the scan.
inline std::vector<CollisionRecord> find_collisions(
    const std::function<std::optional<Graph>()>& source, const CollisionOptions& options = {}) {
    std::map<std::string, detail::CollisionGroup> groups;

    while (auto g = source()) {
        if (options.connected_only && !is_connected(*g)) continue;
        PathSequence seq;
        try {
            seq = path_sequence_dp(*g);
        } catch (const UnsupportedSizeError& e) {
            if (options.log)
                *options.log << "skip graph with n = " << g->vertex_count() << ": " << e.what()
                             << '\n';
            continue;
        }
        auto& group = groups[detail::sequence_key(seq)];
        if (group.members.empty()) group.sequence = std::move(seq);
        if (options.dedupe_isomorphic && g->vertex_count() <= kIsoPartitionMaxVertices) {
            bool duplicate = false;
            for (const std::string& rep : group.members) {
                if (are_isomorphic_small(*g, parse_graph6(rep))) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
        }
        group.members.push_back(write_graph6(*g));
        group.connected_flags.push_back(is_connected(*g));
    }

    std::vector<CollisionRecord> records;
    for (auto& [key, group] : groups) {
        if (group.members.size() < 2) continue;
        CollisionRecord rec;
        rec.sequence = std::move(group.sequence);
        rec.members = std::move(group.members);
        rec.connected_flags = std::move(group.connected_flags);
        const int n = parse_graph6(rec.members.front()).vertex_count();
        if (n > kIsoPartitionMaxVertices) {
            rec.iso_partition_skipped = true;
            rec.iso_class.assign(rec.members.size(), -1);
            if (options.log)
                *options.log << "iso partition skipped for key " << rec.sequence.to_string()
                             << ": n = " << n << " > " << kIsoPartitionMaxVertices << '\n';
        } else {
            std::vector<Graph> class_reps;
            for (const std::string& member : rec.members) {
                const Graph g = parse_graph6(member);
                int cls = -1;
                for (std::size_t c = 0; c < class_reps.size(); ++c) {
                    if (are_isomorphic_small(g, class_reps[c])) {
                        cls = static_cast<int>(c);
                        break;
                    }
                }
                if (cls < 0) {
                    cls = static_cast<int>(class_reps.size());
                    class_reps.push_back(g);
                }
                rec.iso_class.push_back(cls);
            }
            if (options.dedupe_isomorphic &&
                static_cast<std::size_t>(rec.iso_class_count()) < 2)
                continue;
        }
        // every emitted member re-verifies against the record key
        for (const std::string& member : rec.members)
            if (path_sequence_dp(parse_graph6(member)) != rec.sequence)
                throw std::logic_error("collision record member does not reproduce its key");
        records.push_back(std::move(rec));
    }
    // deterministic output order: by sequence, lexicographic on the entries
    std::sort(records.begin(), records.end(),
              [](const CollisionRecord& a, const CollisionRecord& b) {
                  return std::lexicographical_compare(
                      a.sequence.counts.begin(), a.sequence.counts.end(),
                      b.sequence.counts.begin(), b.sequence.counts.end());
              });
    return records;
}

// Line-delimited report: sequence CSV, then one tab-separated field per
// member "graph6:class:c|d" (class is "?" when the partition was skipped).
inline void write_collision_report(const std::vector<CollisionRecord>& records,
                                   std::ostream& sink) {
    for (const CollisionRecord& rec : records) {
        sink << rec.sequence.to_string();
        for (std::size_t i = 0; i < rec.members.size(); ++i) {
            sink << '\t' << rec.members[i] << ':';
            if (rec.iso_partition_skipped)
                sink << '?';
            else
                sink << rec.iso_class[i];
            sink << ':' << (rec.connected_flags[i] ? 'c' : 'd');
        }
        sink << '\n';
        if (!sink)
            throw std::runtime_error("collision report write failed; output is partial");
    }
    sink.flush();
}

} // namespace pathseq
