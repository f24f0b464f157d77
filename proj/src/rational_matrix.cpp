#include "clonal/rational_matrix.hpp"

#include <stdexcept>

#include "clonal/errors.hpp"
#include "text_scan.hpp"

namespace clonal {

std::string print_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  detail::Scanner s(text);
  std::string token = s.rational_token();
  s.expect_end();
  if (!token.empty() && token[0] == '+') token.erase(0, 1);
  Rational q;
  if (q.set_str(token, 10) != 0) throw ParseError("invalid rational", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

UTMatrix::UTMatrix(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i > j && rows[i][j] != 0) throw std::invalid_argument("matrix is not upper triangular");
      if (i == j && rows[i][j] == 0) throw std::invalid_argument("matrix has a zero diagonal entry");
      a_.push_back(rows[i][j]);
    }
  }
}

UTMatrix UTMatrix::identity(std::size_t n) {
  UTMatrix m;
  m.n_ = n;
  m.a_.assign(n * n, Rational(0));
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

UTMatrix operator*(const UTMatrix& x, const UTMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix sizes differ");
  const std::size_t n = x.n_;
  UTMatrix z = UTMatrix::identity(n);
  Rational acc;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      acc = 0;
      for (std::size_t l = i; l <= j; ++l) acc += x(i, l) * y(l, j);
      z.at(i, j) = acc;
    }
  }
  return z;
}

UTMatrix UTMatrix::inverse() const {
  // Back substitution column by column: solve U X = I with X upper triangular.
  UTMatrix inv = identity(n_);
  for (std::size_t j = 1; j <= n_; ++j) {
    inv.at(j, j) = 1 / (*this)(j, j);
    for (std::size_t i = j - 1; i >= 1; --i) {
      Rational acc = 0;
      for (std::size_t l = i + 1; l <= j; ++l) acc += (*this)(i, l) * inv(l, j);
      inv.at(i, j) = -acc / (*this)(i, i);
    }
  }
  return inv;
}

Rational UTMatrix::determinant() const {
  Rational d = 1;
  for (std::size_t i = 1; i <= n_; ++i) d *= (*this)(i, i);
  return d;
}

std::vector<std::vector<Rational>> UTMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
  }
  return out;
}

std::string print_matrix(const UTMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (i > 1) out += ',';
    out += '[';
    for (std::size_t j = 1; j <= a.size(); ++j) {
      if (j > 1) out += ',';
      out += print_rational(a(i, j));
    }
    out += ']';
  }
  return out + "]";
}

UTMatrix parse_matrix(std::string_view text) {
  detail::Scanner s(text);
  std::vector<std::vector<Rational>> rows;
  s.expect('[');
  do {
    s.expect('[');
    std::vector<Rational> row;
    do {
      std::size_t at = s.pos();
      std::string token = s.rational_token();
      if (token[0] == '+') token.erase(0, 1);
      Rational q;
      if (q.set_str(token, 10) != 0 || q.get_den() == 0) throw ParseError("invalid rational", at);
      q.canonicalize();
      row.push_back(q);
    } while (s.consume(','));
    s.expect(']');
    rows.push_back(std::move(row));
  } while (s.consume(','));
  s.expect(']');
  s.expect_end();
  try {
    return UTMatrix(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix: ") + e.what(), 0);
  }
}

UTMatrix matrix_clone(std::size_t k, const UTMatrix& a) {
  const std::size_t n = a.size();
  if (k < 1 || k > n) throw std::out_of_range("matrix_clone: k outside 1..n");
  // Old row/column index of each new index other than the duplicated k+1.
  auto old = [k](std::size_t i) { return i <= k ? i : i - 1; };
  UTMatrix b = UTMatrix::identity(n + 1);
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t j = i; j <= n + 1; ++j) {
      Rational v;
      if (i < k) {
        v = a(i, old(j));
      } else if (i == k) {
        v = j == k ? a(k, k) : Rational(0);
      } else if (i == k + 1) {
        v = a(k, old(j));
      } else {
        v = a(old(i), old(j));
      }
      b.at(i, j) = v;
    }
  }
  return b;
}

std::optional<UTMatrix> matrix_unclone(std::size_t k, const UTMatrix& b) {
  const std::size_t n1 = b.size();
  if (k < 1 || k + 1 > n1) return std::nullopt;
  if (b(k, k) != b(k + 1, k + 1)) return std::nullopt;
  for (std::size_t j = k + 1; j <= n1; ++j) {
    if (b(k, j) != 0) return std::nullopt;
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (b(i, k) != b(i, k + 1)) return std::nullopt;
  }
  // Read A back: drop row k (it only holds a_kk) and column k+1.
  const std::size_t n = n1 - 1;
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t src_row = i < k ? i : i + 1;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t src_col = j <= k ? j : j + 1;
      if (i == k && j == k) src_col = k + 1;
      rows[i - 1][j - 1] = b(src_row, src_col);
    }
  }
  UTMatrix a(rows);
  if (matrix_clone(k, a) != b) return std::nullopt;
  return a;
}

UTMatrix extend(const UTMatrix& a, std::size_t n) {
  if (n < a.size()) throw std::invalid_argument("extend: target size below source size");
  UTMatrix b = UTMatrix::identity(n);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i; j <= a.size(); ++j) b.at(i, j) = a(i, j);
  }
  return b;
}

std::optional<UTMatrix> restrict_top(const UTMatrix& b) {
  const std::size_t n = b.size();
  if (n < 2 || b(n, n) != 1) return std::nullopt;
  for (std::size_t i = 1; i < n; ++i) {
    if (b(i, n) != 0) return std::nullopt;
  }
  std::vector<std::vector<Rational>> rows(n - 1, std::vector<Rational>(n - 1));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) rows[i - 1][j - 1] = b(i, j);
  }
  return UTMatrix(rows);
}

}  // namespace clonal
