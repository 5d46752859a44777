#pragma once

#include <string>
#include <string_view>

#include "estrada/graph.hpp"

namespace estrada {

/// Decodes one graph6 token: header byte n+63 (or 126-prefixed 18-bit header
/// for 63 <= n <= 258047), then ceil(n(n-1)/2 / 6) payload bytes carrying the
/// upper-triangle bits in column order, MSB first, zero-padded. Throws
/// Graph6ParseError (with byte offset) on bad length, bytes outside [63, 126],
/// or nonzero padding.
Graph parse_graph6(std::string_view text);

/// Inverse of parse_graph6. Uses the short header for n <= 62, the extended
/// header otherwise; throws UnsupportedSize for n > 258047.
std::string encode_graph6(const Graph& g);

}  // namespace estrada
