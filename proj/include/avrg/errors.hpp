// Error taxonomy shared by all avrg modules. Every failure mode named in a
// module contract maps onto exactly one of these types so callers (and the
// CLI) can branch on category without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace avrg {

// A numeric or structural input violates an operation precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lookup key lies outside the measured / calibrated domain.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A required grid cell or field is absent from the loaded data.
class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry cannot be resolved (coincident points, collinear correspondences,
// singular mappings).
class DegenerateGeometry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No positive-time intercept solution exists for the requested pursuit.
class NoIntercept : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An accuracy cell is marked undetectable (no dispersion was measurable).
class UndetectableCell : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data file failed to parse; carries the file and 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Parsed data violates a documented invariant (range, sum, consistency).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem or socket failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace avrg
