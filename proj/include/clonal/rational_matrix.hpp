#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clonal {

using Rational = mpq_class;

/// "p/q" (or "p" for integers), always reduced with positive denominator.
std::string print_rational(const Rational& q);
Rational parse_rational(std::string_view text);

/// An invertible upper-triangular n×n matrix over Q, stored densely in row
/// major order. Entries are canonical GMP rationals, so equality is exact.
class UTMatrix {
 public:
  UTMatrix() = default;

  /// Throws std::invalid_argument unless rows is square, upper triangular and
  /// has a nonzero diagonal.
  explicit UTMatrix(const std::vector<std::vector<Rational>>& rows);

  static UTMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  /// 1-based entry access.
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[(i - 1) * n_ + (j - 1)]; }

  UTMatrix inverse() const;
  Rational determinant() const;
  std::vector<std::vector<Rational>> rows() const;

  friend UTMatrix operator*(const UTMatrix& x, const UTMatrix& y);
  friend bool operator==(const UTMatrix& x, const UTMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  Rational& at(std::size_t i, std::size_t j) { return a_[(i - 1) * n_ + (j - 1)]; }

  std::size_t n_ = 0;
  std::vector<Rational> a_;

  friend UTMatrix matrix_clone(std::size_t k, const UTMatrix& a);
  friend UTMatrix extend(const UTMatrix& a, std::size_t n);
};

/// "[[1,2,3],[0,4,5],[0,0,6]]"
std::string print_matrix(const UTMatrix& a);
UTMatrix parse_matrix(std::string_view text);

/// Block cloning map: column k is duplicated above the diagonal, the
/// diagonal entry a_kk appears twice, row k keeps only a_kk and the new row
/// k+1 carries the rest of the old row k.
UTMatrix matrix_clone(std::size_t k, const UTMatrix& a);
std::optional<UTMatrix> matrix_unclone(std::size_t k, const UTMatrix& b);

/// Block-diagonal embedding diag(A, I_{n-m}) and its partial inverse.
UTMatrix extend(const UTMatrix& a, std::size_t n);
std::optional<UTMatrix> restrict_top(const UTMatrix& b);

}  // namespace clonal
