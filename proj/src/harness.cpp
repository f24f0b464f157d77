#include "clonal/harness.hpp"

#include <sstream>

namespace clonal {

namespace {

const std::vector<std::pair<Axiom, std::string>>& axiom_names() {
  static const std::vector<std::pair<Axiom, std::string>> names{
      {Axiom::GroupLaws, "group-laws"},
      {Axiom::DirectedSystem, "directed-system"},
      {Axiom::RepresentationCompat, "representation-compat"},
      {Axiom::CloningCompat, "cloning-compat"},
      {Axiom::C1, "C1"},
      {Axiom::C2, "C2"},
      {Axiom::C3, "C3"},
      {Axiom::KappaInverse, "kappa-inverse"},
      {Axiom::ProperlyGraded, "properly-graded"},
  };
  return names;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = [] {
    std::vector<Axiom> v;
    for (const auto& [a, name] : axiom_names()) v.push_back(a);
    return v;
  }();
  return all;
}

std::string axiom_name(Axiom a) {
  for (const auto& [x, name] : axiom_names()) {
    if (x == a) return name;
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(const std::string& name) {
  for (const auto& [x, n] : axiom_names()) {
    if (n == name) return x;
  }
  return std::nullopt;
}

std::string scan_mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::Auto: return "auto";
    case ScanMode::Exhaustive: return "exhaustive";
    case ScanMode::Sampled: return "sampled";
  }
  return "auto";
}

std::optional<ScanMode> parse_scan_mode(const std::string& name) {
  for (ScanMode m : {ScanMode::Auto, ScanMode::Exhaustive, ScanMode::Sampled}) {
    if (scan_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace detail {

std::uint64_t case_seed(std::uint64_t seed, const std::string& axiom, std::uint64_t unit, std::uint64_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ fnv1a(axiom));
  h = splitmix64(h ^ unit);
  return splitmix64(h ^ index);
}

std::string merge_modes(const std::vector<UnitReport>& units) {
  std::string mode;
  for (const auto& u : units) {
    if (u.mode == "skipped") continue;
    if (mode.empty()) {
      mode = u.mode;
    } else if (mode != u.mode) {
      return "mixed";
    }
  }
  return mode.empty() ? "skipped" : mode;
}

}  // namespace detail

Json AxiomReport::to_json() const {
  Json j = {{"axiom", axiom}, {"ranks", ranks}, {"mode", mode}, {"samples", samples},
            {"cases", cases}, {"pass", pass}};
  if (counterexample) j["counterexample"] = *counterexample;
  if (diagonal) j["diagonal"] = *diagonal;
  if (!notices.empty()) j["notices"] = notices;
  Json per = Json::array();
  for (const auto& u : units) {
    Json ju = {{"unit", u.label}, {"params", u.params}, {"mode", u.mode}, {"cases", u.cases}, {"failures", u.failures}};
    if (u.notes) ju["notes"] = u.notes;
    per.push_back(std::move(ju));
  }
  j["per_rank"] = std::move(per);
  return j;
}

std::string summarize(const AxiomReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.axiom << "  ranks ";
  if (r.ranks.empty()) {
    out << "-";
  } else {
    out << r.ranks.front() << ".." << r.ranks.back();
  }
  out << "  " << r.mode << "  cases " << r.cases;
  if (r.samples) out << " (" << r.samples << " sampled)";
  if (r.diagonal) {
    out << "  diagonal " << ((*r.diagonal)["holds"].get<bool>() ? "holds" : "fails at i in {k,k+1}") << " ("
        << (*r.diagonal)["mismatches"].get<std::uint64_t>() << " cases)";
  }
  if (r.counterexample) out << "\n  counterexample: " << r.counterexample->dump();
  for (const auto& n : r.notices) out << "\n  note: " << n;
  return out.str();
}

}  // namespace clonal
