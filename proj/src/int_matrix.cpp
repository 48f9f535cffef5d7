#include "toruskk/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace toruskk {

Int floorDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Xgcd xgcd(const Int& a, const Int& b) {
  // iterative extended Euclid
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r; std::swap(old_r, r);
    old_s -= q * s; std::swap(old_s, s);
    old_t -= q * t; std::swap(old_t, t);
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(ErrorKind::Dimension, "entry count does not match matrix shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      fail(ErrorKind::Dimension, "ragged initializer rows");
    for (int v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::isZero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

bool IntMatrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    fail(ErrorKind::Dimension, "matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) p.at(r, c) += a * rhs.at(k, c);
    }
  return p;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (Int& e : n.entries_) e = -e;
  return n;
}

void IntMatrix::swapCols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negateCol(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::swapRows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negateRow(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

IntMatrix IntMatrix::column(std::size_t c) const {
  IntMatrix m(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m.at(r, 0) = at(r, c);
  return m;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& which) const {
  IntMatrix m(rows_, which.size());
  for (std::size_t c = 0; c < which.size(); ++c)
    for (std::size_t r = 0; r < rows_; ++r) m.at(r, c) = at(r, which[c]);
  return m;
}

IntMatrix IntMatrix::rowsSubset(const std::vector<std::size_t>& which) const {
  IntMatrix m(which.size(), cols_);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(which[r], c);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_)
    fail(ErrorKind::Dimension, "hstack row mismatch");
  IntMatrix m(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) m.at(r, cols_ + c) = rhs.at(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_)
    fail(ErrorKind::Dimension, "vstack column mismatch");
  IntMatrix m(rows_ + rhs.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < rhs.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = rhs.at(r, c);
  return m;
}

Int IntMatrix::det() const {
  if (rows_ != cols_)
    fail(ErrorKind::Dimension, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1; // empty product convention
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1; // Bareiss: divisions below are exact
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::toText() const {
  if (cols_ == 0 || rows_ == 0)
    return std::to_string(rows_) + " x " + std::to_string(cols_);
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ',';
      out << at(r, c);
    }
  }
  return out.str();
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Int parseInt(const std::string& token) {
  std::string t = trimmed(token);
  if (t.empty()) fail(ErrorKind::Parse, "empty matrix entry");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) fail(ErrorKind::Parse, "bad integer '" + token + "'");
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') fail(ErrorKind::Parse, "bad integer '" + token + "'");
  return Int(t);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

} // namespace

IntMatrix IntMatrix::fromText(const std::string& text) {
  std::string t = trimmed(text);
  // "r x 0" / "r x c" with a zero side denotes an empty matrix
  std::size_t xpos = t.find(" x ");
  if (xpos != std::string::npos) {
    Int r = parseInt(t.substr(0, xpos));
    Int c = parseInt(t.substr(xpos + 3));
    if (r < 0 || c < 0 || (r != 0 && c != 0))
      fail(ErrorKind::Parse, "dimension form is only for empty matrices");
    return IntMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  std::vector<std::string> rows = split(t, ';');
  std::vector<std::vector<Int>> parsed;
  std::size_t cols = 0;
  for (const std::string& row : rows) {
    std::vector<Int> entries;
    for (const std::string& tok : split(row, ',')) entries.push_back(parseInt(tok));
    if (parsed.empty())
      cols = entries.size();
    else if (entries.size() != cols)
      fail(ErrorKind::Parse, "ragged matrix rows in '" + text + "'");
    parsed.push_back(std::move(entries));
  }
  IntMatrix m(parsed.size(), cols);
  for (std::size_t r = 0; r < parsed.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = std::move(parsed[r][c]);
  return m;
}

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Rank: return "rank";
    case ErrorKind::Embedding: return "embedding";
    case ErrorKind::Primitivity: return "primitivity";
    case ErrorKind::Variance: return "variance";
    case ErrorKind::SpecMismatch: return "spec";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::NotTransverse: return "not-transverse";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

} // namespace toruskk
