#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nakayama::oracle {

using Rational = boost::rational<long long>;

/// x == 0, without the mixed rational/int comparison.
inline bool is_zero(const Rational& x) { return x.numerator() == 0; }

/// Dense row-major matrix over the rationals. 0xN and Nx0 shapes are valid
/// and are used for zero vector spaces.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  /// Columns of *this followed by the columns of rhs.
  Matrix hconcat(const Matrix& rhs) const;
  Matrix vconcat(const Matrix& rhs) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one column per basis vector.
Matrix nullspace(const Matrix& m);

/// Basis of the column space, chosen among the columns of m.
Matrix column_basis(const Matrix& m);

/// Columns completing the column space of `sub` to the whole space, taken
/// from the standard basis.
Matrix complement_basis(const Matrix& sub);

/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace nakayama::oracle
