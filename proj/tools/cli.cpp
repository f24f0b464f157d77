#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "clonal/errors.hpp"
#include "clonal/harness.hpp"
#include "clonal/registry.hpp"
#include "clonal/stein.hpp"
#include "clonal/thompson.hpp"

namespace clonal::cli {

namespace {

constexpr const char* kFormats = R"txt(Trees        T ::= "L" | "(" T T ")"             e.g. ((LL)L)
Forests      trees joined by '|'                  e.g. L|(LL)|L
Elements     {"instance": "<name>", "tminus": "<tree>", "g": <value>, "tplus": "<tree>"}
             or the compact array ["<tree>", "<g text>", "<tree>"]
Vertices     {"instance": "<name>", "t": "<tree>", "g": <value>, "e": "<forest>"}
             or ["<tree>", "<g text>", "<forest>"]

Middle entries by instance
  trivial      1
  symmetric    one-line permutation [3,1,2] (JSON: array of images)
  signed       signed one-line [1,-3,-2] or a generator word "s3 s2 s3"
  power:<b>    tuple (2,3,0), entries in the base syntax (JSON: array)
               bases: z<m> residues 0..m-1, s3 one-line permutations of degree 3
  matrix       rows of exact rationals [[1,1/2],[0,-2]] (JSON: rows of strings)

Instances    trivial | symmetric | signed | matrix
             power:z<m> | power:z<m>:twist | power:z<m>:twist=<a>,<b>
             power:s3 | power:s3:twist
             A cyclic twist clones g_k to (a*g_k, b*g_k); ':twist' alone uses
             a = 1 and the smallest unit b > 1. The s3 twist conjugates the
             second copy by (1 2).

Expressions (eval)
  expr ::= product [ "==" product ]
  product ::= unary { "*" unary }
  unary ::= "inv" unary | "(" product ")" | <element>
)txt";

struct Options {
  std::string instance = "symmetric";
  bool json = false;
  std::string input;
  std::string file;
};

std::string read_input(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot read '" + o.file + "'", 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (o.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (o.input.empty()) throw ParseError("no input given", 0);
  return o.input;
}

// ---------------------------------------------------------------------------
// eval expressions

struct Token {
  enum Kind { Mul, Inv, Open, Close, Equal, Literal, End } kind;
  std::size_t offset;
  Json literal;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const char c = text[i];
    if (c == '*') {
      out.push_back({Token::Mul, i++, {}});
    } else if (c == '(') {
      out.push_back({Token::Open, i++, {}});
    } else if (c == ')') {
      out.push_back({Token::Close, i++, {}});
    } else if (text.compare(i, 2, "==") == 0) {
      out.push_back({Token::Equal, i, {}});
      i += 2;
    } else if (text.compare(i, 3, "inv") == 0) {
      out.push_back({Token::Inv, i, {}});
      i += 3;
    } else if (c == '[' || c == '{') {
      // Scan to the matching bracket, skipping string contents.
      const std::size_t start = i;
      int depth = 0;
      bool in_string = false;
      for (; i < text.size(); ++i) {
        const char d = text[i];
        if (in_string) {
          if (d == '\\') {
            ++i;
          } else if (d == '"') {
            in_string = false;
          }
        } else if (d == '"') {
          in_string = true;
        } else if (d == '[' || d == '{') {
          ++depth;
        } else if (d == ']' || d == '}') {
          if (--depth == 0) break;
        }
      }
      if (i >= text.size()) throw ParseError("unterminated element literal", start);
      ++i;
      Json literal;
      try {
        literal = Json::parse(text.substr(start, i - start));
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON element: ") + e.what(), start);
      }
      out.push_back({Token::Literal, start, std::move(literal)});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::End, text.size(), {}});
  return out;
}

template <CloningSystem S>
class Evaluator {
 public:
  using Element = ThompsonElement<S>;

  Evaluator(std::shared_ptr<const S> sys, std::vector<Token> tokens) : sys_(std::move(sys)), tokens_(std::move(tokens)) {}

  // Returns the left value and, for "a == b", the right value.
  std::pair<Element, std::optional<Element>> run() {
    Element lhs = product();
    std::optional<Element> rhs;
    if (peek().kind == Token::Equal) {
      ++pos_;
      rhs = product();
    }
    if (peek().kind != Token::End) throw ParseError("unexpected token", peek().offset);
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Element product() {
    Element acc = unary();
    while (peek().kind == Token::Mul) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Element unary() {
    const Token& t = peek();
    if (t.kind == Token::Inv) {
      ++pos_;
      return unary().inverse();
    }
    if (t.kind == Token::Open) {
      ++pos_;
      Element inner = product();
      if (peek().kind != Token::Close) throw ParseError("expected ')'", peek().offset);
      ++pos_;
      return inner;
    }
    if (t.kind == Token::Literal) {
      ++pos_;
      return Element(sys_, triple_from_json(*sys_, t.literal));
    }
    throw ParseError("expected an element, 'inv' or '('", t.offset);
  }

  std::shared_ptr<const S> sys_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <CloningSystem S>
void print_element(std::ostream& out, const ThompsonElement<S>& x, bool json) {
  out << (json ? element_to_json(x) : element_to_compact(x)).dump() << "\n";
}

Json parse_json_input(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_check(const Options& o, const HarnessOptions& h, const std::vector<std::string>& axioms, std::ostream& out) {
  std::vector<Axiom> selected;
  for (const auto& name : axioms) {
    auto a = parse_axiom(name);
    if (!a) throw ParseError("unknown axiom '" + name + "'", 0);
    selected.push_back(*a);
  }
  if (selected.empty()) selected = all_axioms();

  return std::visit(
      [&](const auto& sys) {
        std::vector<AxiomReport> reports;
        for (Axiom a : selected) reports.push_back(check_axiom(*sys, a, h));
        const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass; });
        if (o.json) {
          Json j = {{"instance", sys->name()},
                    {"max_n", h.max_n},
                    {"mode", scan_mode_name(h.mode)},
                    {"seed", h.seed},
                    {"budget", h.budget},
                    {"samples", h.samples},
                    {"pass", all_pass}};
          j["reports"] = Json::array();
          for (const auto& r : reports) j["reports"].push_back(r.to_json());
          out << j.dump(2) << "\n";
        } else {
          out << "instance " << sys->name() << ", ranks up to " << h.max_n << ", mode " << scan_mode_name(h.mode)
              << ", seed " << h.seed << "\n";
          for (const auto& r : reports) out << summarize(r) << "\n";
          const auto failed = std::count_if(reports.begin(), reports.end(), [](const AxiomReport& r) { return !r.pass; });
          if (failed == 0) {
            out << "all " << reports.size() << " checks pass\n";
          } else {
            out << failed << " of " << reports.size() << " checks FAILED\n";
          }
        }
        return all_pass ? Ok : Failure;
      },
      make_system(o.instance));
}

int cmd_eval(const Options& o, std::ostream& out) {
  const std::string text = read_input(o);
  return std::visit(
      [&](const auto& sys) {
        using S = std::remove_const_t<typename std::remove_cvref_t<decltype(sys)>::element_type>;
        auto [lhs, rhs] = Evaluator<S>(sys, tokenize(text)).run();
        if (!rhs) {
          print_element(out, lhs, o.json);
          return Ok;
        }
        const bool equal = lhs == *rhs;
        if (o.json) {
          out << Json({{"equal", equal}, {"lhs", element_to_json(lhs)}, {"rhs", element_to_json(*rhs)}}).dump() << "\n";
        } else {
          out << (equal ? "true" : "false") << "\n";
        }
        return equal ? Ok : Failure;
      },
      make_system(o.instance));
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  const Json j = parse_json_input(read_input(o));
  return std::visit(
      [&](const auto& sys) {
        using S = std::remove_const_t<typename std::remove_cvref_t<decltype(sys)>::element_type>;
        print_element(out, ThompsonElement<S>(sys, triple_from_json(*sys, j)), o.json);
        return Ok;
      },
      make_system(o.instance));
}

int cmd_project(const Options& o, std::ostream& out) {
  const Json j = parse_json_input(read_input(o));
  return std::visit(
      [&](const auto& sys) {
        using S = std::remove_const_t<typename std::remove_cvref_t<decltype(sys)>::element_type>;
        print_element(out, project_to_V(ThompsonElement<S>(sys, triple_from_json(*sys, j))), o.json);
        return Ok;
      },
      make_system(o.instance));
}

int cmd_cubes(const Options& o, std::size_t dim, std::ostream& out) {
  const Json j = parse_json_input(read_input(o));
  return std::visit(
      [&](const auto& sys) {
        auto v = vertex_from_json(*sys, j);
        const Json cubes = cubes_from(v, dim);
        if (o.json) {
          out << Json({{"vertex", vertex_to_json(*sys, v)}, {"feet", feet(v)}, {"dim", dim}, {"cubes", cubes}}).dump()
              << "\n";
        } else {
          out << cubes.dump() << "\n";
        }
        return Ok;
      },
      make_system(o.instance));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thompson-like groups of cloning systems: axiom checks and element arithmetic", "clonal"};
  app.require_subcommand(1);

  Options o;
  HarnessOptions h;
  std::string mode = "auto";
  std::vector<std::string> axioms;
  bool serial = false;
  std::size_t dim = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance,-i", o.instance, "cloning system selector (see `clonal formats`)")->capture_default_str();
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what);
    sub->add_option("--file,-f", o.file, "read the input from a file");
  };

  auto* check = app.add_subcommand("check-axioms", "verify the cloning-system axioms over small ranks");
  add_common(check);
  check->add_option("--max-n", h.max_n, "largest rank checked")->capture_default_str()->check(CLI::Range(1, 64));
  check->add_option("--mode", mode, "auto | exhaustive | sampled")->capture_default_str();
  check->add_option("--seed", h.seed, "seed for sampled cases")->capture_default_str();
  check->add_option("--budget", h.budget, "largest case count enumerated exhaustively")->capture_default_str();
  check->add_option("--samples", h.samples, "cases drawn per sampled unit")->capture_default_str();
  check->add_option("--axiom", axioms, "restrict to the named checks (repeatable)");
  check->add_flag("--serial", serial, "use the serial reference scan instead of OpenMP");

  auto* eval = app.add_subcommand("eval", "evaluate a product expression of elements");
  add_common(eval);
  add_input(eval, "expression, e.g. '[\"(LL)\",\"[2,1]\",\"(LL)\"] * inv [...]' ('-' reads stdin)");

  auto* normal = app.add_subcommand("normal-form", "reduce an element triple");
  add_common(normal);
  add_input(normal, "element JSON ('-' reads stdin)");

  auto* project = app.add_subcommand("project", "image of an element in Thompson's group V");
  add_common(project);
  add_input(project, "element JSON ('-' reads stdin)");

  auto* cubes = app.add_subcommand("stein-cubes", "cubes spanned by merging adjacent feet of a vertex");
  add_common(cubes);
  add_input(cubes, "vertex JSON ('-' reads stdin)");
  cubes->add_option("--dim", dim, "cube dimension")->capture_default_str()->check(CLI::PositiveNumber);

  auto* formats = app.add_subcommand("formats", "print the text and JSON grammars");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return Ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ParseFailure;
  }

  try {
    if (formats->parsed()) {
      out << kFormats;
      return Ok;
    }
    if (check->parsed()) {
      auto m = parse_scan_mode(mode);
      if (!m) throw ParseError("unknown mode '" + mode + "' (auto, exhaustive or sampled)", 0);
      h.mode = *m;
      h.exec = serial ? Execution::Serial : Execution::Parallel;
      return cmd_check(o, h, axioms, out);
    }
    if (eval->parsed()) return cmd_eval(o, out);
    if (normal->parsed()) return cmd_normal_form(o, out);
    if (project->parsed()) return cmd_project(o, out);
    if (cubes->parsed()) return cmd_cubes(o, dim, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ParseFailure;
  } catch (const InstanceMismatch& e) {
    err << "error: " << e.what() << "\n";
    return ParseFailure;
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << "\n";
    return InvariantFailure;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return ParseFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return ParseFailure;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return ParseFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return InvariantFailure;
  }
  return Ok;
}

}  // namespace clonal::cli
