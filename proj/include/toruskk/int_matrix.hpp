#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "toruskk/errors.hpp"

namespace toruskk {

// All lattice arithmetic is exact. Entries are unbounded: normal forms of
// small matrices can have large cofactors, so no fixed-width arithmetic
// appears anywhere below this type.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor division; cpp_int's operator/ truncates toward zero
Int floorDiv(const Int& a, const Int& b);

// g = gcd(a,b) >= 0 with s*a + t*b = g
struct Xgcd {
  Int g, s, t;
};
Xgcd xgcd(const Int& a, const Int& b);

// Dense row-major integer matrix. Columns of a basis matrix are lattice
// vectors; orientation is the column order. Empty matrices (0 columns)
// are legal and denote rank-0 lattices.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  // row-major initializer, e.g. {{1,0},{1,2}}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const IntMatrix& other) const = default;

  bool isZero() const;
  bool isIdentity() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  // column operations (used by the normal-form routines)
  void swapCols(std::size_t i, std::size_t j);
  void negateCol(std::size_t i);
  void addColMultiple(std::size_t dst, std::size_t src, const Int& factor); // col dst += factor * col src
  void swapRows(std::size_t i, std::size_t j);
  void negateRow(std::size_t i);
  void addRowMultiple(std::size_t dst, std::size_t src, const Int& factor);

  IntMatrix column(std::size_t c) const;
  IntMatrix columns(const std::vector<std::size_t>& which) const;
  // rows picked in the given order; `which` entries are 0-based
  IntMatrix rowsSubset(const std::vector<std::size_t>& which) const;
  // [this | rhs], row counts must agree
  IntMatrix hstack(const IntMatrix& rhs) const;
  // [this ; rhs], column counts must agree
  IntMatrix vstack(const IntMatrix& rhs) const;

  // exact determinant, fraction-free Bareiss; det of the 0x0 matrix is 1
  Int det() const;

  std::string toText() const;              // matrix text format: "1,0;1,2", empty = "r x 0"
  static IntMatrix fromText(const std::string& text);

private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

} // namespace toruskk
