#include "clonal/instances.hpp"

#include <algorithm>
#include <numeric>

#include "text_scan.hpp"

namespace clonal {

namespace detail {

std::vector<std::string_view> split_tuple(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\n");
  std::size_t last = text.find_last_not_of(" \t\n");
  if (first == std::string_view::npos || text[first] != '(' || text[last] != ')') {
    throw ParseError("expected a tuple \"(x1,...,xn)\"", first == std::string_view::npos ? 0 : first);
  }
  std::vector<std::string_view> pieces;
  int depth = 0;
  std::size_t start = first + 1;
  for (std::size_t i = first + 1; i < last; ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets", i);
    if (c == ',' && depth == 0) {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets", last);
  std::string_view tail = text.substr(start, last - start);
  if (tail.find_first_not_of(" \t\n") == std::string_view::npos) {
    if (!pieces.empty()) throw ParseError("empty tuple entry", last);
    throw ParseError("empty tuple", last);
  }
  pieces.push_back(tail);
  return pieces;
}

}  // namespace detail

// ---------------------------------------------------------------------------

TrivialElement TrivialSystem::clone(const Element& g, std::size_t k) const {
  if (k < 1 || k > g.rank) throw std::out_of_range("trivial clone: k outside 1..n");
  return {g.rank + 1};
}

TrivialElement TrivialSystem::parse(std::string_view text, std::size_t n) const {
  std::size_t first = text.find_first_not_of(" \t\n");
  std::size_t last = text.find_last_not_of(" \t\n");
  std::string_view core = first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1);
  if (core != "1" && core != "id") throw ParseError("expected \"1\" in the trivial group", first == std::string_view::npos ? 0 : first);
  return {n};
}

TrivialElement TrivialSystem::from_json(const Json& j, std::size_t n) const {
  if (j.is_string()) return parse(j.get<std::string>(), n);
  if (j.is_number_integer() && j.get<long>() == 1) return {n};
  throw ParseError("trivial element must be 1", 0);
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> SymmetricSystem::order(std::size_t n) const {
  std::optional<std::uint64_t> f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = detail::checked_mul(f, i);
  return f;
}

Permutation SymmetricSystem::sample(std::size_t n, Rng& rng) const {
  std::vector<Permutation::Image> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Permutation SymmetricSystem::parse(std::string_view text, std::size_t n) const {
  Permutation g = parse_permutation(text);
  detail::require_rank(g.degree(), n, "permutation");
  return g;
}

Json SymmetricSystem::to_json(const Element& g) const {
  return Json(std::vector<Permutation::Image>(g.images().begin(), g.images().end()));
}

Permutation SymmetricSystem::from_json(const Json& j, std::size_t n) const {
  if (j.is_string()) return parse(j.get<std::string>(), n);
  if (!j.is_array()) throw ParseError("permutation must be an array or a string", 0);
  std::vector<Permutation::Image> images;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !x.is_number_integer()) throw ParseError("permutation entry must be an integer", 0);
    long v = x.get<long>();
    if (v < 1) throw ParseError("permutation entry out of range", 0);
    images.push_back(static_cast<Permutation::Image>(v));
  }
  Permutation g;
  try {
    g = Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  detail::require_rank(g.degree(), n, "permutation");
  return g;
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> SignedSystem::order(std::size_t n) const {
  std::optional<std::uint64_t> f = 1;
  for (std::size_t i = 1; i <= n; ++i) f = detail::checked_mul(f, 2 * i);
  return f;
}

SignedPermutation SignedSystem::sample(std::size_t n, Rng& rng) const {
  std::vector<SignedPermutation::Image> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  std::bernoulli_distribution flip(0.5);
  for (auto& v : images) {
    if (flip(rng)) v = -v;
  }
  return SignedPermutation(std::move(images));
}

SignedPermutation SignedSystem::parse(std::string_view text, std::size_t n) const {
  std::size_t first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == 's') return evaluate(parse_word(text, n));
  SignedPermutation g = parse_signed(text);
  detail::require_rank(g.degree(), n, "signed permutation");
  return g;
}

Json SignedSystem::to_json(const Element& g) const {
  return Json(std::vector<SignedPermutation::Image>(g.images().begin(), g.images().end()));
}

SignedPermutation SignedSystem::from_json(const Json& j, std::size_t n) const {
  if (j.is_string()) return parse(j.get<std::string>(), n);
  if (!j.is_array()) throw ParseError("signed permutation must be an array or a string", 0);
  std::vector<SignedPermutation::Image> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("signed permutation entry must be an integer", 0);
    images.push_back(x.get<SignedPermutation::Image>());
  }
  SignedPermutation g;
  try {
    g = SignedPermutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  detail::require_rank(g.degree(), n, "signed permutation");
  return g;
}

// ---------------------------------------------------------------------------

namespace {

template <class Pick>
UTMatrix build_matrix(std::size_t n, Pick&& pick) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) rows[i][j] = pick(i, j);
  }
  return UTMatrix(rows);
}

const std::vector<Rational>& sample_diagonal() {
  static const std::vector<Rational> v{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                       Rational(-1, 2)};
  return v;
}

const std::vector<Rational>& sample_upper() {
  static const std::vector<Rational> v{Rational(-2), Rational(-1), Rational(0),     Rational(1),
                                       Rational(2),  Rational(1, 2), Rational(-1, 2)};
  return v;
}

const std::vector<Rational>& slice_diagonal() {
  static const std::vector<Rational> v{Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2)};
  return v;
}

const std::vector<Rational>& slice_upper() {
  static const std::vector<Rational> v{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                       Rational(2)};
  return v;
}

}  // namespace

UTMatrix MatrixSystem::sample(std::size_t n, Rng& rng) const {
  const auto& diag = sample_diagonal();
  const auto& upper = sample_upper();
  std::uniform_int_distribution<std::size_t> pick_diag(0, diag.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_upper(0, upper.size() - 1);
  return build_matrix(n, [&](std::size_t i, std::size_t j) { return i == j ? diag[pick_diag(rng)] : upper[pick_upper(rng)]; });
}

std::vector<UTMatrix> MatrixSystem::slice(std::size_t n) const {
  const auto& diag = slice_diagonal();
  const auto& upper = slice_upper();
  // Positions (i, j), i <= j, in row-major order; digits index the value lists.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::size_t> digits(cells.size(), 0);
  auto radix = [&](std::size_t c) { return cells[c].first == cells[c].second ? diag.size() : upper.size(); };
  std::vector<UTMatrix> out;
  while (true) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      rows[i][j] = i == j ? diag[digits[c]] : upper[digits[c]];
    }
    out.emplace_back(rows);
    std::size_t pos = cells.size();
    while (pos > 0 && ++digits[pos - 1] == radix(pos - 1)) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::optional<std::uint64_t> MatrixSystem::slice_size(std::size_t n) const {
  std::optional<std::uint64_t> total = 1;
  for (std::size_t i = 0; i < n; ++i) total = detail::checked_mul(total, slice_diagonal().size());
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) total = detail::checked_mul(total, slice_upper().size());
  return total;
}

UTMatrix MatrixSystem::parse(std::string_view text, std::size_t n) const {
  UTMatrix a = parse_matrix(text);
  detail::require_rank(a.size(), n, "matrix");
  return a;
}

Json MatrixSystem::to_json(const Element& g) const {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= g.size(); ++j) row.push_back(print_rational(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

UTMatrix MatrixSystem::from_json(const Json& j, std::size_t n) const {
  if (j.is_string()) return parse(j.get<std::string>(), n);
  if (!j.is_array()) throw ParseError("matrix must be an array of rows or a string", 0);
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array", 0);
    std::vector<Rational> r;
    for (const auto& x : row) {
      if (x.is_string()) {
        r.push_back(parse_rational(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        r.emplace_back(x.get<long>());
      } else {
        throw ParseError("matrix entry must be an integer or a rational string", 0);
      }
    }
    rows.push_back(std::move(r));
  }
  UTMatrix a;
  try {
    a = UTMatrix(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix: ") + e.what(), 0);
  }
  detail::require_rank(a.size(), n, "matrix");
  return a;
}

}  // namespace clonal
