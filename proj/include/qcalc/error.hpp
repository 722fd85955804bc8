#ifndef QCALC_ERROR_HPP
#define QCALC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcalc {

// Base of every error the library throws on bad input or a failed
// exactness contract.  Consistency failures inside `check`/`sweep` are
// reported as data instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
  NotDivisible() : Error("polynomial division is not exact") {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class MissingAssignment : public Error {
public:
  explicit MissingAssignment(const std::string& variable)
      : Error("no assignment for variable " + variable) {}
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class NotRealizable : public Error {
public:
  NotRealizable(int p, int q, long value)
      : Error("rank array is not realizable: lace entry (" + std::to_string(p) + "," +
              std::to_string(q) + ") = " + std::to_string(value) + " < 0"),
        p_(p), q_(q) {}
  int p() const { return p_; }
  int q() const { return q_; }

private:
  int p_, q_;
};

class BadRowSums : public Error {
public:
  BadRowSums(int row, long got, long want)
      : Error("lace array row " + std::to_string(row) + " covers " + std::to_string(got) +
              " vertices, expected " + std::to_string(want)),
        row_(row) {}
  int row() const { return row_; }

private:
  int row_;
};

class SizeMismatch : public Error {
public:
  SizeMismatch(std::size_t a, std::size_t b)
      : Error("permutation sizes differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NotReducedWord : public Error {
public:
  NotReducedWord() : Error("word is not reduced") {}
};

class RegionViolation : public Error {
public:
  RegionViolation(int row, int col)
      : Error("cross at (" + std::to_string(row) + "," + std::to_string(col) +
              ") lies outside the weighted region") {}
};

class DHomViolation : public Error {
public:
  DHomViolation(int row, int col)
      : Error("pipe dream misses D_Hom cell (" + std::to_string(row) + "," +
              std::to_string(col) + ")") {}
};

// CGPD validation failures.  `rect`, `row`, `col` are 0-based rectangle
// index and 1-based row/column inside the rectangle.
class InvalidCgpd : public Error {
public:
  using Error::Error;
};

class EdgeMismatch : public InvalidCgpd {
public:
  EdgeMismatch(int rect, int row, int col, const std::string& detail)
      : InvalidCgpd("edge mismatch at rectangle " + std::to_string(rect) + " cell (" +
                    std::to_string(row) + "," + std::to_string(col) + "): " + detail) {}
};

class NorthLeak : public InvalidCgpd {
public:
  NorthLeak(int rect, int col)
      : InvalidCgpd("strand leaves the top of rectangle " + std::to_string(rect) +
                    " at column " + std::to_string(col)) {}
};

class SameColorCross : public InvalidCgpd {
public:
  SameColorCross(int rect, int row, int col)
      : InvalidCgpd("two pipes of the same color cross at rectangle " + std::to_string(rect) +
                    " cell (" + std::to_string(row) + "," + std::to_string(col) + ")") {}
};

class LaceCountMismatch : public InvalidCgpd {
public:
  LaceCountMismatch(int p, int q, long got, long want)
      : InvalidCgpd("pipes spanning rectangles " + std::to_string(p) + ".." + std::to_string(q) +
                    ": found " + std::to_string(got) + ", lace array wants " +
                    std::to_string(want)) {}
};

class UnknownObject : public Error {
public:
  using Error::Error;
};

}  // namespace qcalc

#endif  // QCALC_ERROR_HPP
