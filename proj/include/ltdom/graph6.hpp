#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ltdom/errors.hpp"
#include "ltdom/graph.hpp"

namespace ltdom {

// graph6 codec. Layout: the order n encoded in 1, 4 or 8 bytes (values offset
// by 63), followed by the upper triangle of the adjacency matrix in
// column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per
// byte MSB-first, each byte offset by 63, zero-padded to a byte boundary.

inline constexpr std::size_t kGraph6MaxOrder = std::size_t{1} << 18;

namespace g6_detail {

inline uint64_t decode_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw parse_error("graph6 line truncated", line.size());
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw parse_error("graph6 character out of range 63..126: value " + std::to_string(int(c)), pos);
    return c - 63;
}

} // namespace g6_detail

// Decodes one graph6 line (no ">>graph6<<" header, no newline).
inline Graph from_graph6(std::string_view line) {
    using g6_detail::decode_byte;
    if (line.empty()) throw parse_error("empty graph6 line", 0);

    std::size_t pos = 0;
    uint64_t n = decode_byte(line, pos++);
    if (n == 63) { // multi-byte order
        uint64_t next = decode_byte(line, pos);
        int groups;
        if (next == 63) { // 8-byte form: 126 126 then 36 bits
            ++pos;
            groups = 6;
        } else { // 4-byte form: 126 then 18 bits
            groups = 3;
        }
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | decode_byte(line, pos++);
        if (n >= kGraph6MaxOrder)
            throw capability_error("graph6 order " + std::to_string(n) + " exceeds supported maximum " +
                                   std::to_string(kGraph6MaxOrder - 1));
    }

    const uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t data_bytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != data_bytes) {
        if (line.size() - pos < data_bytes)
            throw parse_error("graph6 line too short: expected " + std::to_string(data_bytes) +
                                  " data bytes, got " + std::to_string(line.size() - pos),
                              line.size());
        throw parse_error("graph6 line too long: expected " + std::to_string(data_bytes) + " data bytes",
                          pos + data_bytes);
    }

    GraphBuilder builder(static_cast<int>(n));
    uint64_t k = 0;
    uint64_t current = 0;
    std::size_t current_pos = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) {
                current_pos = pos + static_cast<std::size_t>(k / 6);
                current = decode_byte(line, current_pos);
            }
            if ((current >> (5 - k % 6)) & 1) builder.add_edge(i, j);
        }
    }
    for (uint64_t pad = nbits; pad < data_bytes * 6; ++pad) {
        if (pad % 6 == 0) {
            current_pos = pos + static_cast<std::size_t>(pad / 6);
            current = decode_byte(line, current_pos);
        }
        if ((current >> (5 - pad % 6)) & 1)
            throw parse_error("graph6 padding bits must be zero", current_pos);
    }
    return builder.build();
}

inline std::string to_graph6(const Graph& g) {
    const uint64_t n = static_cast<uint64_t>(g.order());
    if (n >= kGraph6MaxOrder)
        throw capability_error("graph order " + std::to_string(n) + " exceeds graph6 encoder maximum");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) { // largest order whose leading 6-bit group stays below 63
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    uint64_t k = 0;
    unsigned accum = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            accum = (accum << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(accum + 63));
                accum = 0;
            }
        }
    }
    if (k % 6 != 0) out.push_back(static_cast<char>((accum << (6 - k % 6)) + 63));
    return out;
}

} // namespace ltdom
