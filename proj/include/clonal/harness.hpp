#pragma once

// Finite verification of the cloning-system axioms. Each axiom is split into
// units (one per rank tuple); a unit's cases are enumerated exhaustively
// when that fits the budget and sampled with per-case seeds otherwise, so
// serial and parallel runs produce identical reports.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clonal/cloning_system.hpp"
#include "clonal/parallel.hpp"
#include "clonal/permutation.hpp"

namespace clonal {

enum class Axiom {
  GroupLaws,
  DirectedSystem,
  RepresentationCompat,
  CloningCompat,
  C1,
  C2,
  C3,
  KappaInverse,
  ProperlyGraded,
};

const std::vector<Axiom>& all_axioms();
std::string axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(const std::string& name);

enum class ScanMode { Auto, Exhaustive, Sampled };

std::string scan_mode_name(ScanMode m);
std::optional<ScanMode> parse_scan_mode(const std::string& name);

struct HarnessOptions {
  std::size_t max_n = 4;
  ScanMode mode = ScanMode::Auto;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t samples = 10'000;
  Execution exec = Execution::Parallel;
};

struct UnitReport {
  std::string label;
  Json params;
  std::string mode;  // exhaustive | sampled | slice | skipped
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t notes = 0;

  friend bool operator==(const UnitReport&, const UnitReport&) = default;
};

struct AxiomReport {
  std::string axiom;
  std::vector<std::size_t> ranks;
  std::string mode;  // exhaustive | sampled | mixed | slice | skipped
  std::uint64_t samples = 0;
  std::uint64_t cases = 0;
  bool pass = true;
  std::optional<Json> counterexample;
  std::optional<Json> diagonal;  // C3: whether equality also held at i = k, k+1
  std::vector<std::string> notices;
  std::vector<UnitReport> units;

  Json to_json() const;
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Human-readable one-line summary.
std::string summarize(const AxiomReport& r);

namespace detail {

std::uint64_t case_seed(std::uint64_t seed, const std::string& axiom, std::uint64_t unit, std::uint64_t index);
std::string merge_modes(const std::vector<UnitReport>& units);

template <CloningSystem S>
struct CaseUnit {
  using Elem = typename S::Element;
  // Returns the verdict; fills `detail` (when non-null) with values worth
  // showing in a counterexample.
  using Check = std::function<CaseOutcome(std::span<const Elem>, std::span<const std::size_t>, Json*)>;

  std::string label;
  Json params;
  std::size_t top_rank = 0;
  std::vector<std::size_t> ranks;  // rank of each element slot
  std::vector<std::string> slots;
  std::vector<std::string> index_names;
  std::vector<std::vector<std::size_t>> index_tuples;
  Check check;
  bool exhaustive_only = false;  // sampling cannot certify this unit
};

inline std::vector<std::vector<std::size_t>> range_tuples(std::size_t lo, std::size_t hi) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = lo; k <= hi; ++k) out.push_back({k});
  return out;
}

template <CloningSystem S>
Json describe_elements(const S& sys, std::span<const typename S::Element> elems) {
  Json out = Json::array();
  for (const auto& e : elems) out.push_back(sys.to_json(e));
  return out;
}

template <CloningSystem S>
CaseOutcome equal_outcome(const S& sys, const typename S::Element& lhs, const typename S::Element& rhs, Json* detail) {
  const bool ok = lhs == rhs;
  if (detail) {
    (*detail)["lhs"] = sys.to_json(lhs);
    (*detail)["rhs"] = sys.to_json(rhs);
  }
  return {ok, false};
}

template <CloningSystem S>
std::vector<CaseUnit<S>> build_units(const S& sys, Axiom axiom, std::size_t max_n) {
  using Elem = typename S::Element;
  using U = CaseUnit<S>;
  std::vector<U> units;
  auto add = [&](U u) { units.push_back(std::move(u)); };
  const std::vector<std::vector<std::size_t>> none{{}};

  switch (axiom) {
    case Axiom::GroupLaws:
      for (std::size_t n = 1; n <= max_n; ++n) {
        add(U{"associativity", {{"n", n}}, n, {n, n, n}, {"g", "h", "x"}, {}, none,
              [&sys](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                return equal_outcome(sys, sys.multiply(sys.multiply(e[0], e[1]), e[2]),
                                     sys.multiply(e[0], sys.multiply(e[1], e[2])), d);
              }});
        add(U{"identity-inverse", {{"n", n}}, n, {n}, {"g"}, {}, none,
              [&sys, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                const Elem id = sys.identity(n);
                const Elem inv = sys.invert(e[0]);
                const bool ok = sys.multiply(e[0], id) == e[0] && sys.multiply(id, e[0]) == e[0] &&
                                sys.multiply(e[0], inv) == id && sys.multiply(inv, e[0]) == id;
                if (d) (*d)["inverse"] = sys.to_json(inv);
                return CaseOutcome{ok, false};
              }});
        add(U{"rho-homomorphism", {{"n", n}}, n, {n, n}, {"g", "h"}, {}, none,
              [&sys](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                Permutation lhs = sys.rho(sys.multiply(e[0], e[1]));
                Permutation rhs = sys.rho(e[0]) * sys.rho(e[1]);
                if (d) {
                  (*d)["lhs"] = print_permutation(lhs);
                  (*d)["rhs"] = print_permutation(rhs);
                }
                return CaseOutcome{lhs == rhs, false};
              }});
      }
      break;

    case Axiom::DirectedSystem:
      for (std::size_t n = 1; n <= max_n; ++n) {
        add(U{"identity", {{"n", n}}, n, {n}, {"g"}, {}, none,
              [&sys, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                return equal_outcome(sys, sys.iota(e[0], n), e[0], d);
              }});
      }
      for (std::size_t n = 3; n <= max_n; ++n) {
        for (std::size_t m = 2; m < n; ++m) {
          for (std::size_t l = 1; l < m; ++l) {
            add(U{"composition", {{"l", l}, {"m", m}, {"n", n}}, n, {l}, {"g"}, {}, none,
                  [&sys, m, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                    return equal_outcome(sys, sys.iota(sys.iota(e[0], m), n), sys.iota(e[0], n), d);
                  }});
          }
        }
      }
      for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t m = 1; m < n; ++m) {
          add(U{"injectivity", {{"m", m}, {"n", n}}, n, {m, m}, {"g", "h"}, {}, none,
                [&sys, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                  const bool same = e[0] == e[1];
                  const bool same_image = sys.iota(e[0], n) == sys.iota(e[1], n);
                  if (d) (*d)["images_equal"] = same_image;
                  return CaseOutcome{same == same_image, false};
                }});
        }
        // try_restrict must invert ι_{n-1,n} exactly on its image.
        add(U{"restrict", {{"n", n}}, n, {n - 1, n}, {"g", "h"}, {}, none,
              [&sys, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                auto back = sys.try_restrict(sys.iota(e[0], n));
                bool ok = back && *back == e[0];
                if (auto r = sys.try_restrict(e[1])) ok = ok && sys.iota(*r, n) == e[1];
                if (d && back) (*d)["restricted"] = sys.to_json(*back);
                return CaseOutcome{ok, false};
              }});
      }
      break;

    case Axiom::RepresentationCompat:
      for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
          add(U{"representation", {{"m", m}, {"n", n}}, n, {m}, {"g"}, {}, none,
                [&sys, n](std::span<const Elem> e, std::span<const std::size_t>, Json* d) {
                  Permutation lhs = sys.rho(sys.iota(e[0], n));
                  Permutation rhs = extend(sys.rho(e[0]), n);
                  if (d) {
                    (*d)["lhs"] = print_permutation(lhs);
                    (*d)["rhs"] = print_permutation(rhs);
                  }
                  return CaseOutcome{lhs == rhs, false};
                }});
        }
      }
      break;

    case Axiom::CloningCompat:
      for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
          add(U{"cloning", {{"m", m}, {"n", n}}, n, {m}, {"g"}, {"k"}, range_tuples(1, m),
                [&sys, n](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                  const std::size_t k = idx[0];
                  return equal_outcome(sys, sys.clone(sys.iota(e[0], n), k), sys.iota(sys.clone(e[0], k), n + 1), d);
                }});
        }
      }
      break;

    case Axiom::C1:
      for (std::size_t n = 1; n <= max_n; ++n) {
        add(U{"clone-product", {{"n", n}}, n, {n, n}, {"g", "h"}, {"k"}, range_tuples(1, n),
              [&sys](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                const std::size_t k = idx[0];
                return equal_outcome(sys, sys.clone(sys.multiply(e[0], e[1]), k),
                                     sys.multiply(sys.clone(e[0], sys.rho(e[1])(k)), sys.clone(e[1], k)), d);
              }});
      }
      break;

    case Axiom::C2:
      for (std::size_t n = 2; n <= max_n; ++n) {
        std::vector<std::vector<std::size_t>> pairs;
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t l = k + 1; l <= n; ++l) pairs.push_back({k, l});
        }
        add(U{"clone-twice", {{"n", n}}, n, {n}, {"g"}, {"k", "l"}, pairs,
              [&sys](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                const std::size_t k = idx[0], l = idx[1];
                return equal_outcome(sys, sys.clone(sys.clone(e[0], l), k), sys.clone(sys.clone(e[0], k), l + 1), d);
              }});
      }
      break;

    case Axiom::C3:
      for (std::size_t n = 1; n <= max_n; ++n) {
        add(U{"compatibility", {{"n", n}}, n, {n}, {"g"}, {"k"}, range_tuples(1, n),
              [&sys, n](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                const std::size_t k = idx[0];
                Permutation lhs = sys.rho(sys.clone(e[0], k));
                Permutation rhs = sigma_clone(k, sys.rho(e[0]));
                bool off = true;
                for (std::size_t i = 1; i <= n + 1; ++i) {
                  if (i != k && i != k + 1 && lhs(i) != rhs(i)) off = false;
                }
                const bool diagonal_mismatch = lhs(k) != rhs(k) || lhs(k + 1) != rhs(k + 1);
                if (d) {
                  (*d)["lhs"] = print_permutation(lhs);
                  (*d)["rhs"] = print_permutation(rhs);
                }
                return CaseOutcome{off, diagonal_mismatch};
              }});
      }
      break;

    case Axiom::KappaInverse:
      for (std::size_t n = 1; n <= max_n; ++n) {
        add(U{"unclone-after-clone", {{"n", n}}, n, {n}, {"g"}, {"k"}, range_tuples(1, n),
              [&sys](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                auto back = sys.try_unclone(sys.clone(e[0], idx[0]), idx[0]);
                if (d && back) (*d)["unclone"] = sys.to_json(*back);
                return CaseOutcome{back && *back == e[0], false};
              }});
        add(U{"unclone-sound", {{"n", n}}, n, {n + 1}, {"h"}, {"k"}, range_tuples(1, n),
              [&sys](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
                auto g0 = sys.try_unclone(e[0], idx[0]);
                if (d && g0) (*d)["unclone"] = sys.to_json(*g0);
                return CaseOutcome{!g0 || sys.clone(*g0, idx[0]) == e[0], false};
              }});
      }
      break;

    case Axiom::ProperlyGraded:
      for (std::size_t n = 2; n <= max_n; ++n) {
        // κ is injective, so the only possible witness for (g)κ_k ∈ im ι is
        // g' = restrict(g); the check is that it exists and works.
        U u{"properly-graded", {{"n", n}}, n, {n}, {"g"}, {"k"}, range_tuples(1, n),
            [&sys, n](std::span<const Elem> e, std::span<const std::size_t> idx, Json* d) {
              const std::size_t k = idx[0];
              const Elem h = sys.clone(e[0], k);
              if (!sys.try_restrict(h)) return CaseOutcome{true, false};
              auto witness = sys.try_restrict(e[0]);
              const bool ok = witness && sys.clone(sys.iota(*witness, n), k) == h;
              if (d) {
                (*d)["clone"] = sys.to_json(h);
                (*d)["witness"] = witness ? sys.to_json(*witness) : Json(nullptr);
              }
              return CaseOutcome{ok, false};
            }};
        u.exhaustive_only = true;
        add(std::move(u));
      }
      break;
  }
  return units;
}

template <class T>
std::optional<std::uint64_t> checked_product(std::optional<std::uint64_t> acc, std::optional<T> factor) {
  if (!acc || !factor) return std::nullopt;
  if (*factor != 0 && *acc > std::numeric_limits<std::uint64_t>::max() / *factor) return std::nullopt;
  return *acc * static_cast<std::uint64_t>(*factor);
}

}  // namespace detail

/// Runs one axiom over ranks up to opts.max_n.
template <CloningSystem S>
AxiomReport check_axiom(const S& sys, Axiom axiom, const HarnessOptions& opts) {
  using Elem = typename S::Element;
  AxiomReport report;
  report.axiom = axiom_name(axiom);

  auto units = detail::build_units(sys, axiom, opts.max_n);
  if (axiom == Axiom::ProperlyGraded) report.notices.push_back("rank 1 skipped: there is no lower rank to restrict to");

  std::map<std::size_t, std::vector<Elem>> lists;  // finite element lists by rank
  std::map<std::size_t, bool> list_is_slice;
  auto element_list = [&](std::size_t rank, bool allow_slice,
                          bool force = false) -> const std::vector<Elem>* {
    if (auto it = lists.find(rank); it != lists.end()) return &it->second;
    if (sys.order(rank) && (force || *sys.order(rank) <= opts.budget)) {
      list_is_slice[rank] = false;
      return &(lists[rank] = sys.enumerate(rank));
    }
    if constexpr (HasSlice<S>) {
      if (allow_slice && sys.slice_size(rank) && *sys.slice_size(rank) <= opts.budget) {
        list_is_slice[rank] = true;
        return &(lists[rank] = sys.slice(rank));
      }
    }
    return nullptr;
  };

  std::optional<Json> first_note;
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto& unit = units[u];
    UnitReport ur{unit.label, unit.params, "", 0, 0, 0};
    const std::uint64_t tuples = unit.index_tuples.size();

    // Decide between exhaustive enumeration and sampling.
    std::optional<std::uint64_t> count = tuples;
    for (std::size_t r : unit.ranks) count = detail::checked_product(count, sys.order(r));
    bool exhaustive = false;
    bool slice = false;
    if (unit.exhaustive_only) {
      std::optional<std::uint64_t> list_count = tuples;
      bool have = true;
      for (std::size_t r : unit.ranks) {
        const auto* list = element_list(r, true);
        if (!list) {
          have = false;
          break;
        }
        list_count = detail::checked_product(list_count, std::optional<std::uint64_t>(list->size()));
        slice = slice || list_is_slice[r];
      }
      if (!have || !list_count || *list_count > opts.budget) {
        ur.mode = "skipped";
        report.notices.push_back(unit.label + " " + unit.params.dump() +
                                 ": skipped, no finite enumeration or slice within the budget");
        report.units.push_back(std::move(ur));
        continue;
      }
      exhaustive = true;
      count = list_count;
    } else if (opts.mode == ScanMode::Exhaustive) {
      exhaustive = count.has_value();
      if (!exhaustive) report.notices.push_back(unit.label + " " + unit.params.dump() + ": not enumerable, sampled instead");
    } else if (opts.mode == ScanMode::Auto) {
      exhaustive = count && *count <= opts.budget;
    }

    std::vector<const std::vector<Elem>*> slot_lists;
    if (exhaustive) {
      for (std::size_t r : unit.ranks) slot_lists.push_back(element_list(r, unit.exhaustive_only, !unit.exhaustive_only));
    }
    const std::uint64_t total = exhaustive ? *count : opts.samples;
    const std::string axiom_key = report.axiom;

    // Materializes case i into element values and an index tuple.
    auto materialize = [&](std::uint64_t i, std::vector<Elem>& elems, const std::vector<std::size_t>*& tuple) {
      elems.clear();
      if (exhaustive) {
        tuple = &unit.index_tuples[i % tuples];
        std::uint64_t rest = i / tuples;
        std::vector<std::size_t> digits(unit.ranks.size());
        for (std::size_t s = unit.ranks.size(); s-- > 0;) {
          digits[s] = rest % slot_lists[s]->size();
          rest /= slot_lists[s]->size();
        }
        for (std::size_t s = 0; s < unit.ranks.size(); ++s) elems.push_back((*slot_lists[s])[digits[s]]);
      } else {
        Rng rng(detail::case_seed(opts.seed, axiom_key, u, i));
        for (std::size_t r : unit.ranks) elems.push_back(sys.sample(r, rng));
        tuple = &unit.index_tuples[std::uniform_int_distribution<std::uint64_t>(0, tuples - 1)(rng)];
      }
    };

    ScanSummary summary = scan(opts.exec, total, [&](std::uint64_t i) {
      std::vector<Elem> elems;
      const std::vector<std::size_t>* tuple = nullptr;
      materialize(i, elems, tuple);
      return unit.check(elems, *tuple, nullptr);
    });

    auto describe = [&](std::uint64_t i) {
      std::vector<Elem> elems;
      const std::vector<std::size_t>* tuple = nullptr;
      materialize(i, elems, tuple);
      Json c = {{"unit", unit.label}, {"case", i}};
      for (auto it = unit.params.begin(); it != unit.params.end(); ++it) c[it.key()] = it.value();
      for (std::size_t s = 0; s < elems.size(); ++s) c[unit.slots[s]] = sys.to_json(elems[s]);
      for (std::size_t x = 0; x < tuple->size(); ++x) c[unit.index_names[x]] = (*tuple)[x];
      Json d = Json::object();
      try {
        unit.check(elems, *tuple, &d);
      } catch (const std::exception& e) {
        d["exception"] = e.what();
      }
      for (auto it = d.begin(); it != d.end(); ++it) c[it.key()] = it.value();
      return c;
    };

    ur.mode = exhaustive ? (slice ? "slice" : "exhaustive") : "sampled";
    ur.cases = summary.cases;
    ur.failures = summary.failures;
    ur.notes = summary.notes;
    report.cases += summary.cases;
    if (!exhaustive) report.samples += summary.cases;
    if (summary.first_failure && !report.counterexample) report.counterexample = describe(*summary.first_failure);
    if (summary.first_note && !first_note) first_note = describe(*summary.first_note);
    if (report.ranks.empty() || report.ranks.back() != unit.top_rank) report.ranks.push_back(unit.top_rank);
    report.units.push_back(std::move(ur));
  }

  std::sort(report.ranks.begin(), report.ranks.end());
  report.ranks.erase(std::unique(report.ranks.begin(), report.ranks.end()), report.ranks.end());
  report.mode = detail::merge_modes(report.units);
  report.pass = !report.counterexample.has_value();
  if (axiom == Axiom::C3) {
    std::uint64_t notes = 0;
    for (const auto& ur : report.units) notes += ur.notes;
    Json diag = {{"holds", notes == 0}, {"mismatches", notes}};
    if (first_note) diag["first_mismatch"] = *first_note;
    report.diagonal = diag;
  }
  return report;
}

template <CloningSystem S>
std::vector<AxiomReport> check_all(const S& sys, const HarnessOptions& opts) {
  std::vector<AxiomReport> out;
  for (Axiom a : all_axioms()) out.push_back(check_axiom(sys, a, opts));
  return out;
}

}  // namespace clonal
