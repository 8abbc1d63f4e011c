/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orsched {

/// Malformed input file (syntax, unknown key, bad number).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A domain invariant was violated (bad instance data, dimension mismatch).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver hit its iteration or node cap before reaching a provable answer.
/// Carries the best incumbent (if any) and the remaining bound gap so the
/// outcome is usable rather than silently wrong: callers may report the
/// incumbent schedule as a best-effort result with an explicit gap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, long count, bool has_incumbent,
                     double best_objective, double bound_gap,
                     std::vector<double> best_values = {})
      : std::runtime_error(what),
        count(count),
        has_incumbent(has_incumbent),
        best_objective(best_objective),
        bound_gap(bound_gap),
        best_values(std::move(best_values)) {}

  long count;
  bool has_incumbent;
  double best_objective;
  double bound_gap;
  /// Variable values of the best incumbent; empty when has_incumbent is false.
  std::vector<double> best_values;
};

/// The brute-force enumerator refused an instance whose search space is too
/// large to enumerate.
class SearchSpaceError : public std::runtime_error {
 public:
  explicit SearchSpaceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orsched
