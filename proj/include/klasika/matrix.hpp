#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "klasika/rational.hpp"

namespace klasika {

/// Dense row-major matrix of rationals. Shared elimination core for
/// determinants, linear systems and null spaces.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws DomainError on ragged input.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// DomainError if the matrix is not square.
Rational bareiss_determinant(const RationalMatrix& m);

/// Solves A x = b exactly. DomainError if A is singular or shapes disagree.
std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

/// Basis of {x : A x = 0}, from the reduced row echelon form; one vector per
/// free column, with a 1 in that column.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);

/// Rank via exact elimination.
std::size_t rank(const RationalMatrix& a);

}  // namespace klasika
