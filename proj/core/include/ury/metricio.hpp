#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ury/dyadic.hpp"

namespace ury {

/// A finite metric space loaded from a file: an enumeration of labels (with
/// optional gaps, written `_`) and an exact dyadic distance matrix, validated
/// on construction (symmetry, zero diagonal, triangle inequality).
class MetricSpace {
public:
  static MetricSpace from_parts(std::vector<std::optional<std::string>> labels,
                                std::vector<std::vector<Dyadic>> full_matrix);

  std::size_t enumeration_size() const { return labels_.size(); }
  bool present(std::size_t i) const { return labels_[i].has_value(); }
  const std::string& label(std::size_t i) const;
  std::size_t index_of(std::string_view label) const;  // Error("unknown-label")

  /// Exact distance between two present indices.
  const Dyadic& dist(std::size_t i, std::size_t j) const;

private:
  std::vector<std::optional<std::string>> labels_;
  std::vector<std::vector<Dyadic>> matrix_;  // full, symmetric
};

/// Line-oriented text format:
///
///   labels: a b _ c
///   0
///   1/2^1 0
///   0 0 0
///   1 3/2^1 0 0
///
/// The header lists labels (`_` marks an absent slot of the enumeration);
/// each following line is a row of the distance matrix, either the lower
/// triangle including the diagonal (row i has i+1 entries) or the full row
/// (n entries; symmetry is then validated). Entries are dyadic literals;
/// rows and columns touching `_` slots are ignored.
MetricSpace parse_space_text(std::string_view text);

/// Reads and validates a metric-space file. Throws ParseError with
/// line/column, or MetricViolation naming the offending pair/triple.
MetricSpace load_space(const std::string& path);

}  // namespace ury
