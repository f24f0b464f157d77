#pragma once

// Built-in cloning systems by selector string, and JSON forms of elements
// and vertices.
//
// Selectors: trivial | symmetric | signed | matrix | power:z<m> |
// power:z<m>:twist | power:z<m>:twist=<a>,<b> | power:s3 | power:s3:twist

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "clonal/errors.hpp"
#include "clonal/instances.hpp"
#include "clonal/stein.hpp"
#include "clonal/thompson.hpp"

namespace clonal {

using AnySystem = std::variant<std::shared_ptr<const TrivialSystem>, std::shared_ptr<const SymmetricSystem>,
                               std::shared_ptr<const SignedSystem>, std::shared_ptr<const CyclicPowerSystem>,
                               std::shared_ptr<const S3PowerSystem>, std::shared_ptr<const MatrixSystem>>;

/// Throws ParseError for an unknown or malformed selector.
AnySystem make_system(std::string_view selector);

std::string system_name(const AnySystem& sys);

template <CloningSystem S>
Json element_to_json(const ThompsonElement<S>& x) {
  return {{"instance", x.system().name()},
          {"tminus", print_tree(x.minus())},
          {"g", x.system().to_json(x.g())},
          {"tplus", print_tree(x.plus())}};
}

/// The compact form ["T-", "g", "T+"] with g in its text syntax.
template <CloningSystem S>
Json element_to_compact(const ThompsonElement<S>& x) {
  return Json::array({print_tree(x.minus()), x.system().format(x.g()), print_tree(x.plus())});
}

namespace detail {

inline std::string json_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string", 0);
  return j.get<std::string>();
}

template <CloningSystem S>
void check_instance_field(const S& sys, const Json& j) {
  if (j.contains("instance") && json_string(j["instance"], "instance") != sys.name()) {
    throw ParseError("element is for instance '" + j["instance"].get<std::string>() + "', expected '" + sys.name() + "'",
                     0);
  }
}

}  // namespace detail

/// Accepts {"instance", "tminus", "g", "tplus"} or ["T-", g, "T+"]; g may be
/// its text form or its JSON value. Returns the raw (unreduced) triple.
template <CloningSystem S>
Triple<S> triple_from_json(const S& sys, const Json& j) {
  Json tminus, g, tplus;
  if (j.is_array()) {
    if (j.size() != 3) throw ParseError("element array must have three entries", 0);
    tminus = j[0], g = j[1], tplus = j[2];
  } else if (j.is_object()) {
    detail::check_instance_field(sys, j);
    for (const char* key : {"tminus", "g", "tplus"}) {
      if (!j.contains(key)) throw ParseError(std::string("element is missing \"") + key + "\"", 0);
    }
    tminus = j["tminus"], g = j["g"], tplus = j["tplus"];
  } else {
    throw ParseError("element must be an object or a three-entry array", 0);
  }
  Tree minus = parse_tree(detail::json_string(tminus, "tminus"));
  Tree plus = parse_tree(detail::json_string(tplus, "tplus"));
  if (minus.leaf_count() != plus.leaf_count()) throw ParseError("tminus and tplus have different leaf counts", 0);
  const std::size_t n = minus.leaf_count();
  auto value = g.is_string() ? sys.parse(g.get<std::string>(), n) : sys.from_json(g, n);
  return {std::move(minus), std::move(value), std::move(plus)};
}

template <CloningSystem S>
Json vertex_to_json(const S& sys, const SteinVertex<S>& v) {
  return {{"instance", sys.name()}, {"t", print_tree(v.t)}, {"g", sys.to_json(v.g)}, {"e", print_forest(v.e)}};
}

/// Accepts {"instance", "t", "g", "e"} or ["T", g, "E"].
template <CloningSystem S>
SteinVertex<S> vertex_from_json(const S& sys, const Json& j) {
  Json t, g, e;
  if (j.is_array()) {
    if (j.size() != 3) throw ParseError("vertex array must have three entries", 0);
    t = j[0], g = j[1], e = j[2];
  } else if (j.is_object()) {
    detail::check_instance_field(sys, j);
    for (const char* key : {"t", "g", "e"}) {
      if (!j.contains(key)) throw ParseError(std::string("vertex is missing \"") + key + "\"", 0);
    }
    t = j["t"], g = j["g"], e = j["e"];
  } else {
    throw ParseError("vertex must be an object or a three-entry array", 0);
  }
  Tree tree = parse_tree(detail::json_string(t, "t"));
  Forest forest = parse_forest(detail::json_string(e, "e"));
  if (tree.leaf_count() != forest.leaf_count()) throw ParseError("t and e have different leaf counts", 0);
  const std::size_t n = tree.leaf_count();
  auto value = g.is_string() ? sys.parse(g.get<std::string>(), n) : sys.from_json(g, n);
  return {std::move(tree), std::move(value), std::move(forest)};
}

}  // namespace clonal
