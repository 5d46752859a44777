#include "estrada/graph6.hpp"

#include <cstdint>

#include "estrada/errors.hpp"

namespace estrada {

namespace {

constexpr int kByteLo = 63;
constexpr int kByteHi = 126;
constexpr long kMaxOrder = 258047;  // largest order of the 18-bit extended header

int payload_value(std::string_view s, std::size_t offset) {
    const unsigned char b = static_cast<unsigned char>(s[offset]);
    if (b < kByteLo || b > kByteHi) {
        throw Graph6ParseError("byte " + std::to_string(int(b)) + " outside [63, 126]", offset);
    }
    return b - kByteLo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty token", 0);

    std::size_t pos = 0;
    long n = 0;
    const int head = payload_value(text, 0);
    if (head == kByteHi - kByteLo) {  // 126 prefix: extended 18-bit order
        if (text.size() < 2) throw Graph6ParseError("truncated extended header", 1);
        if (static_cast<unsigned char>(text[1]) == kByteHi) {
            throw Graph6ParseError("36-bit order header not supported", 1);
        }
        if (text.size() < 4) throw Graph6ParseError("truncated extended header", text.size());
        n = (static_cast<long>(payload_value(text, 1)) << 12) |
            (static_cast<long>(payload_value(text, 2)) << 6) | payload_value(text, 3);
        if (n > kMaxOrder) throw Graph6ParseError("order " + std::to_string(n) + " out of range", 1);
        pos = 4;
    } else {
        n = head;
        pos = 1;
    }
    if (n == 0) throw Graph6ParseError("graphs of order 0 are not supported", 0);

    const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        throw Graph6ParseError("payload of " + std::to_string(text.size() - pos) +
                                   " bytes, expected " + std::to_string(bytes),
                               text.size() > pos + bytes ? pos + bytes : text.size());
    }

    std::vector<std::pair<int, int>> edges;
    std::uint64_t k = 0;
    int value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int shift = 5 - static_cast<int>(k % 6);
            if (shift == 5) value = payload_value(text, pos + k / 6);
            if ((value >> shift) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits of the last byte must be zero
    for (; k < bytes * 6; ++k) {
        const int shift = 5 - static_cast<int>(k % 6);
        if (shift == 5) value = payload_value(text, pos + k / 6);
        if ((value >> shift) & 1) {
            throw Graph6ParseError("nonzero padding bit", pos + k / 6);
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const long n = g.n();
    if (n > kMaxOrder) {
        throw UnsupportedSize("graph6 supports at most " + std::to_string(kMaxOrder) +
                              " vertices, got " + std::to_string(n));
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kByteLo));
    } else {
        out.push_back(static_cast<char>(kByteHi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kByteLo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kByteLo));
        out.push_back(static_cast<char>((n & 0x3f) + kByteLo));
    }

    const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    std::vector<int> payload(bytes, 0);
    for (auto [i, j] : g.edges()) {
        const std::uint64_t k = static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
        payload[k / 6] |= 1 << (5 - static_cast<int>(k % 6));
    }
    for (int v : payload) out.push_back(static_cast<char>(v + kByteLo));
    return out;
}

}  // namespace estrada
