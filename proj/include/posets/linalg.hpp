#pragma once

// Exact rational linear algebra: normalized arbitrary-precision fractions,
// dense reduced row echelon form, and a sparse rank routine for the large
// but very sparse boundary matrices of order complexes.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posets/errors.hpp"

namespace posets {

/// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "7", "-3", "+2", or "p/q". Throws ParseError (column is relative to `text`).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why, std::size_t col) -> Rational {
    throw ParseError("invalid rational '" + std::string(text) + "': " + why, 0, col);
  };
  if (text.empty()) return fail("empty", 1);
  auto parse_int = [&](std::string_view digits, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
      negative = digits[i] == '-';
      ++i;
    }
    if (i == digits.size()) fail("missing digits", offset + i + 1);
    BigInt value = 0;
    for (; i < digits.size(); ++i) {
      char c = digits[i];
      if (c < '0' || c > '9') fail("unexpected character", offset + i + 1);
      value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0, true));
  BigInt num = parse_int(text.substr(0, slash), 0, true);
  BigInt den = parse_int(text.substr(slash + 1), slash + 1, false);
  if (den == 0) return fail("zero denominator", slash + 2);
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

struct RrefResult;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Rows must all have the same length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                  std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw ShapeMismatch("ragged matrix rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows of `below` appended under this matrix.
  RationalMatrix vstack(const RationalMatrix& below) const {
    if (rows_ != 0 && below.rows_ != 0 && cols_ != below.cols_)
      throw ShapeMismatch("vstack: column counts differ");
    RationalMatrix out(rows_ + below.rows_, rows_ != 0 ? cols_ : below.cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  /// Columns of `right` appended to the right of this matrix.
  RationalMatrix hstack(const RationalMatrix& right) const {
    if (rows_ != right.rows_) throw ShapeMismatch("hstack: row counts differ");
    RationalMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
    }
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// "[a,b;c,d]" with normalized entries; injective on (shape, entries) for nonempty rows.
  std::string fingerprint() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) out += ';';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) out += ',';
        out += to_string((*this)(r, c));
      }
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivots are taken as the first nonzero entry
/// in column order, scaled to 1, and cleared above and below.
inline RrefResult rref(RationalMatrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(lead_row, k) != 0) m(r, k) -= factor * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.matrix = std::move(m);
  return out;
}

/// A sparse vector: strictly increasing indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Rank of the span of `vectors`, by reduction on leading index.
/// Intended for very sparse input such as simplicial boundary columns.
inline std::size_t sparse_rank(std::vector<SparseVector> vectors) {
  std::map<std::size_t, SparseVector> pivots;  // leading index -> normalized vector
  SparseVector scratch;
  for (auto& v : vectors) {
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        const Rational inv = 1 / v.front().second;
        for (auto& [idx, val] : v) val *= inv;
        pivots.emplace(v.front().first, std::move(v));
        break;
      }
      // v -= v[lead] * pivot; merge of two sorted sparse vectors.
      const Rational factor = v.front().second;
      const SparseVector& p = it->second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          scratch.push_back(std::move(v[i++]));
        } else if (i == v.size() || p[j].first < v[i].first) {
          scratch.emplace_back(p[j].first, -factor * p[j].second);
          ++j;
        } else {
          Rational value = v[i].second - factor * p[j].second;
          if (value != 0) scratch.emplace_back(v[i].first, std::move(value));
          ++i;
          ++j;
        }
      }
      std::swap(v, scratch);
    }
  }
  return pivots.size();
}

/// Rank via sparse reduction of the rows.
inline std::size_t rank(const RationalMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));
  return sparse_rank(std::move(rows));
}

/// True iff A x = b has a solution.
inline bool is_consistent(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw ShapeMismatch("is_consistent: right-hand side length differs");
  RationalMatrix column(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) column(r, 0) = b[r];
  return rank(a) == rank(a.hstack(column));
}

}  // namespace posets
