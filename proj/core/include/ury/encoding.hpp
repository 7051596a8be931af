#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ury/store.hpp"

namespace ury {

/// One item of a flat tuple encoding: an age marker (natural number) or a
/// prescribed distance. The two summands stay distinct even when numerically
/// equal, so `0` the age and `0/2^0` the distance are different items.
using EncodingItem = std::variant<std::uint32_t, Dyadic>;
using Encoding = std::vector<EncodingItem>;

/// Flattens a node: (n, a0, enc(pred0), n, a1, enc(pred1), n, ..., n); the
/// empty tuple of age n collapses to the single item (n). Injective on
/// interned nodes.
Encoding encode(const Store& store, NodeId id);

/// Parses a flat sequence back into an interned node, validating the shape
/// recursively. Throws MalformedEncoding with the index of the first
/// violation.
NodeId decode(Store& store, const Encoding& items);

/// Text form: parenthesized, comma-separated; ages are bare integers,
/// distances always use the full "m/2^k" form, e.g. "(1, 3/2^1, 0, 1)".
std::string encoding_to_text(const Encoding& items);

/// Inverse of encoding_to_text. Throws ParseError (column = byte offset).
Encoding parse_encoding_text(std::string_view text);

}  // namespace ury
