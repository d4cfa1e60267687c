#pragma once

#include <string>
#include <string_view>

#include "pathseq/errors.hpp"
#include "pathseq/graph.hpp"

namespace pathseq {

// Short-form graph6 (n <= 62): one header byte n+63, then the upper-triangle
// adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian into 6-bit chunks, zero padded, each chunk emitted as chunk+63.
//
// Long-form headers (first byte 126) are rejected rather than mis-parsed;
// this library never needs them.

inline Graph parse_graph6(std::string_view line) {
    if (line.empty())
        throw ParseError("empty graph6 record", 0);
    const auto byte_at = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte outside printable range [63,126]", i);
        return c;
    };
    int header = byte_at(0);
    if (header == 126)
        throw ParseError("long-form graph6 header unsupported (n > 62)", 0);
    const int n = header - 63;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < 1 + nbytes)
        throw ParseError("truncated graph6 bit section", line.size());
    if (line.size() > 1 + nbytes)
        throw ParseError("trailing characters after graph6 record", 1 + nbytes);

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = byte_at(1 + k / 6) - 63;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding must be zero for the record to round-trip bit-exactly
    for (; k < nbytes * 6; ++k) {
        int chunk = byte_at(1 + k / 6) - 63;
        if ((chunk >> (5 - k % 6)) & 1)
            throw ParseError("nonzero padding bit in graph6 record", 1 + k / 6);
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw UnsupportedSizeError("graph6 short form supports n <= 62, got n = " +
                                   std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

} // namespace pathseq
