#include "ury/metricio.hpp"

#include <fstream>
#include <sstream>

#include "ury/errors.hpp"

namespace ury {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

MetricSpace MetricSpace::from_parts(std::vector<std::optional<std::string>> labels,
                                    std::vector<std::vector<Dyadic>> full_matrix) {
  MetricSpace s;
  s.labels_ = std::move(labels);
  s.matrix_ = std::move(full_matrix);
  const std::size_t n = s.labels_.size();
  if (s.matrix_.size() != n)
    throw MetricViolation("matrix has " + std::to_string(s.matrix_.size()) +
                          " rows for " + std::to_string(n) + " labels");
  for (std::size_t i = 0; i < n; ++i)
    if (s.matrix_[i].size() != n)
      throw MetricViolation("row " + std::to_string(i) + " has " +
                            std::to_string(s.matrix_[i].size()) + " entries");

  auto name = [&s](std::size_t i) {
    return s.labels_[i] ? *s.labels_[i] : ("slot " + std::to_string(i));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.present(i)) continue;
    if (!s.matrix_[i][i].is_zero())
      throw MetricViolation("nonzero diagonal at (" + name(i) + ", " + name(i) + ")");
    for (std::size_t j = 0; j < i; ++j) {
      if (!s.present(j)) continue;
      if (s.matrix_[i][j] != s.matrix_[j][i])
        throw MetricViolation("asymmetric at (" + name(i) + ", " + name(j) + ")");
      // A label may repeat (the enumeration revisits a point); zero distance
      // is exactly the repeated-label case.
      bool same = *s.labels_[i] == *s.labels_[j];
      if (same != s.matrix_[i][j].is_zero()) {
        std::string head = same ? "repeated label at nonzero distance: ("
                                : "distinct labels at distance zero: (";
        throw MetricViolation(head + name(i) + ", " + name(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!s.present(i) || !s.present(j) || !s.present(k)) continue;
        if (s.matrix_[i][j] + s.matrix_[j][k] < s.matrix_[i][k])
          throw MetricViolation("triangle inequality fails on (" + name(i) + ", " +
                                name(j) + ", " + name(k) + ")");
      }
  return s;
}

const std::string& MetricSpace::label(std::size_t i) const {
  if (i >= labels_.size() || !labels_[i])
    throw Error("unknown-label", "no label at index " + std::to_string(i));
  return *labels_[i];
}

std::size_t MetricSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] && *labels_[i] == label) return i;
  throw Error("unknown-label", "no label '" + std::string(label) + "'");
}

const Dyadic& MetricSpace::dist(std::size_t i, std::size_t j) const {
  if (i >= labels_.size() || !labels_[i] || j >= labels_.size() || !labels_[j])
    throw Error("unknown-label", "distance query on an absent enumeration slot");
  return matrix_[i][j];
}

MetricSpace parse_space_text(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  std::size_t lineno = 0;
  while (lineno < lines.size() && split_ws(lines[lineno]).empty()) ++lineno;
  if (lineno >= lines.size()) throw ParseError(1, 1, "missing 'labels:' header");
  std::vector<std::string> head = split_ws(lines[lineno]);
  if (head.empty() || head[0] != "labels:")
    throw ParseError(lineno + 1, 1, "expected 'labels:' header");
  std::vector<std::optional<std::string>> labels;
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i] == "_")
      labels.emplace_back(std::nullopt);
    else
      labels.emplace_back(head[i]);
  }
  const std::size_t n = labels.size();

  std::vector<std::vector<Dyadic>> rows;
  for (std::size_t li = lineno + 1; li < lines.size(); ++li) {
    std::vector<std::string> toks = split_ws(lines[li]);
    if (toks.empty()) continue;
    if (rows.size() >= n) throw ParseError(li + 1, 1, "more matrix rows than labels");
    std::vector<Dyadic> row;
    for (const std::string& t : toks) {
      try {
        row.push_back(Dyadic::parse(t));
      } catch (const ParseError& e) {
        throw ParseError(li + 1, e.column + 1, e.what());
      }
    }
    const std::size_t want_lower = rows.size() + 1;
    if (row.size() != want_lower && row.size() != n)
      throw ParseError(li + 1, 1,
                       "row " + std::to_string(rows.size()) + " needs " +
                           std::to_string(want_lower) + " (lower triangle) or " +
                           std::to_string(n) + " (full) entries, got " +
                           std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.size() != n)
    throw ParseError(lines.size(), 1,
                     "expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(rows.size()));

  // Mirror lower-triangle rows; full rows are taken as given so that
  // asymmetry is caught by validation.
  std::vector<std::vector<Dyadic>> full(n, std::vector<Dyadic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() == n) {
      full[i] = rows[i];
    } else {
      for (std::size_t j = 0; j <= i; ++j) full[i][j] = rows[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i].size() != n) full[i][j] = full[j][i];

  return MetricSpace::from_parts(std::move(labels), std::move(full));
}

MetricSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space_text(buf.str());
}

}  // namespace ury
