#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ury {

/// Base class of all library errors. `kind()` is a stable, machine-readable
/// tag; the CLI prints it on stderr so scripts can dispatch on it.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/// A predecessor's age is not strictly below the tuple's age.
struct AgeViolation : Error {
  explicit AgeViolation(const std::string& w) : Error("age-violation", w) {}
};

/// A flat sequence is not a valid tuple encoding; `position` is the index of
/// the first offending item.
struct MalformedEncoding : Error {
  MalformedEncoding(std::size_t pos, const std::string& w)
      : Error("malformed-encoding", w), position(pos) {}
  std::size_t position;
};

/// Textual input (dyadic literal, encoding text, space file) failed to parse.
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t column, const std::string& w)
      : Error("parse-error", w), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Instance lacks a halving map and no order shortcut is available.
struct MissingHalving : Error {
  explicit MissingHalving(const std::string& w) : Error("missing-halving", w) {}
};

/// Node fails the permissibility constraints.
struct NotPermissible : Error {
  explicit NotPermissible(const std::string& w) : Error("not-permissible", w) {}
};

/// Constraint list violates the pairwise compatibility inequalities.
struct PrmsViolation : Error {
  explicit PrmsViolation(const std::string& w) : Error("prms-violation", w) {}
};

/// A claimed partial isometry does not preserve distances.
struct NotIsometry : Error {
  explicit NotIsometry(const std::string& w) : Error("not-isometry", w) {}
};

/// Distance data is not a metric; the message names the witness.
struct MetricViolation : Error {
  explicit MetricViolation(const std::string& w) : Error("metric-violation", w) {}
};

/// The enumerated prefix is not an epsilon-net for the anchor points.
struct InsufficientPrefix : Error {
  explicit InsufficientPrefix(const std::string& w) : Error("insufficient-prefix", w) {}
};

/// A real-valued constraint list was refuted at the given working precision.
struct AdmissibilityRefuted : Error {
  AdmissibilityRefuted(unsigned prec, const std::string& w)
      : Error("admissibility-refuted", w), precision(prec) {}
  unsigned precision;
};

/// The covering modulus of a totally bounded space fails on the declared prefix.
struct ModulusViolation : Error {
  explicit ModulusViolation(const std::string& w) : Error("modulus-violation", w) {}
};

/// Inputs do not satisfy the premise of the bound being checked.
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& w) : Error("hypothesis-violated", w) {}
};

}  // namespace ury
