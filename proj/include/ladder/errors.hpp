#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladder/point.hpp"

namespace ladder {

// One violated ladder constraint found during validation.
struct GridViolation {
  enum class Kind { empty, closure, empty_row, empty_col };
  Kind kind = Kind::empty;
  Point a{}, b{};    // witnesses for a closure violation
  Point missing{};   // the absent completion point
  int index = 0;     // offending row/column index
  std::string describe() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<GridViolation> v);
  const std::vector<GridViolation>& violations() const { return violations_; }

 private:
  std::vector<GridViolation> violations_;
};

class NotPathConnected : public std::runtime_error {
 public:
  NotPathConnected() : std::runtime_error("ladder is not path-connected") {}
};

class NotTConnected : public std::runtime_error {
 public:
  explicit NotTConnected(int t)
      : std::runtime_error("ladder is not " + std::to_string(t) + "-connected") {}
};

class RequiresLargerT : public std::runtime_error {
 public:
  explicit RequiresLargerT(int t)
      : std::runtime_error("operation requires t > 2, got t = " + std::to_string(t)) {}
};

// Stripping the thickness-1 lower border left something that is not a ladder.
class InvalidResidualLadder : public std::runtime_error {
 public:
  explicit InvalidResidualLadder(std::vector<GridViolation> v);
  const std::vector<GridViolation>& violations() const { return violations_; }

 private:
  std::vector<GridViolation> violations_;
};

class ComponentNotLadder : public std::runtime_error {
 public:
  explicit ComponentNotLadder(std::vector<GridViolation> v);
  const std::vector<GridViolation>& violations() const { return violations_; }

 private:
  std::vector<GridViolation> violations_;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t count_so_far, const std::string& what = "enumeration cap exceeded")
      : std::runtime_error(what + " (count so far: " + std::to_string(count_so_far) + ")"),
        count_so_far_(count_so_far) {}
  std::size_t count_so_far() const { return count_so_far_; }

 private:
  std::size_t count_so_far_;
};

// An inside lower corner whose rooted block leaves the ladder or touches the
// upper border; the direct canonical-class formulas do not apply.
class IrregularCorners : public std::runtime_error {
 public:
  explicit IrregularCorners(std::vector<Point> violators);
  const std::vector<Point>& violators() const { return violators_; }

 private:
  std::vector<Point> violators_;
};

class NoBandIndex : public std::runtime_error {
 public:
  explicit NoBandIndex(int j)
      : std::runtime_error("no lower-chain band passes upper corner #" + std::to_string(j)) {}
};

class DecompositionInvariantFailure : public std::runtime_error {
 public:
  explicit DecompositionInvariantFailure(const std::string& what)
      : std::runtime_error("decomposition invariant failed: " + what) {}
};

class SupportNotInLadder : public std::runtime_error {
 public:
  SupportNotInLadder() : std::runtime_error("minor support has a cell outside the ladder") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

}  // namespace ladder
