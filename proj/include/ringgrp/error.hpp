#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace ringgrp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Syntax error in a word, presentation, homomorphism, extension or motion
/// file. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

class NotEliminable : public Error {
 public:
  using Error::Error;
};

class NotPermConj : public Error {
 public:
  NotPermConj(std::size_t index, const std::string& why)
      : Error("image of generator " + std::to_string(index + 1) +
              " is not a conjugate of a generator: " + why),
        index_(index) {}
  /// 0-based index of the offending generator.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotAGraphProduct : public Error {
 public:
  using Error::Error;
};

class OutOfSpace : public Error {
 public:
  explicit OutOfSpace(std::size_t max_cosets)
      : Error("out of space at " + std::to_string(max_cosets)), max_cosets_(max_cosets) {}
  std::size_t max_cosets() const { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

class IncompleteTable : public Error {
 public:
  IncompleteTable() : Error("coset table is incomplete") {}
};

class NameClash : public Error {
 public:
  using Error::Error;
};

class MalformedAction : public Error {
 public:
  using Error::Error;
};

class DiscontinuousPath : public Error {
 public:
  explicit DiscontinuousPath(std::size_t segment)
      : Error("rotation path is discontinuous at segment " + std::to_string(segment)),
        segment_(segment) {}
  std::size_t segment() const { return segment_; }

 private:
  std::size_t segment_;
};

class NotALoop : public Error {
 public:
  NotALoop() : Error("rotation path does not return to its starting rotation") {}
};

class NonIntegralWinding : public Error {
 public:
  explicit NonIntegralWinding(double winding)
      : Error("winding " + std::to_string(winding) + " is not an integer"), winding_(winding) {}
  double winding() const { return winding_; }

 private:
  double winding_;
};

}  // namespace ringgrp
