#include "latstack/verify.hpp"

#include <functional>
#include <set>

#include "latstack/bijections.hpp"
#include "latstack/chain_count.hpp"
#include "latstack/lax.hpp"

namespace latstack {

namespace {

// Saturating power for window bounds.
std::size_t bounded_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

using Probe = std::function<std::string()>;  // empty string: pass

CheckResult run_check(const std::string& name, const Probe& probe) {
  try {
    std::string failure = probe();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string mismatch(const std::string& what, const Params& p, const ChainCount& got,
                     const ChainCount& want) {
  return what + " at " + to_string(p) + ": got " + got.get_str() + ", expected " + want.get_str();
}

SuiteReport formulas_suite(std::size_t budget) {
  SuiteReport r{"formulas", {}};
  r.checks.push_back(run_check("catalan_kdim on column m=0", [&]() -> std::string {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t n = 0; n <= 5; ++n) {
        const auto got = count_cell(Axis::column, k, n, 0, budget);
        if (got != catalan_kdim(k, n)) return mismatch("column", {k, n, 0}, got, catalan_kdim(k, n));
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("m-partitions on column k=1", [&]() -> std::string {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 5; ++n) {
        const auto got = count_cell(Axis::column, 1, n, m, budget);
        const auto want = m_partition_count(m + 1, n);
        if (got != want) return mismatch("column", {1, n, m}, got, want);
        if (m == 1 && got != odd_double_factorial(n)) {
          return mismatch("column", {1, n, m}, got, odd_double_factorial(n));
        }
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("hypercube_count on k=0", [&]() -> std::string {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 5; ++n) {
        const auto got = count_cell(Axis::column, 0, n, m, budget);
        if (got != hypercube_count(m, n)) return mismatch("column", {0, n, m}, got, hypercube_count(m, n));
      }
    }
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t m = 0; m <= 5; ++m) {
        const auto got = count_cell(Axis::row, 0, n, m, budget);
        if (got != hypercube_count(m, n)) return mismatch("row", {0, n, m}, got, hypercube_count(m, n));
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("kreweras on row n=2 k=1", [&]() -> std::string {
    for (std::size_t m = 0; m <= 6; ++m) {
      const auto got = count_cell(Axis::row, 1, 2, m, budget);
      if (got != kreweras(m)) return mismatch("row", {1, 2, m}, got, kreweras(m));
    }
    return {};
  }));
  r.checks.push_back(run_check("catalan_kdim on rows n=0 and n=1", [&]() -> std::string {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t m = 0; m <= 5; ++m) {
        const auto zero = count_cell(Axis::row, k, 0, m, budget);
        if (zero != catalan_kdim(k, m)) return mismatch("row", {k, 0, m}, zero, catalan_kdim(k, m));
        const auto one = count_cell(Axis::row, k, 1, m, budget);
        if (one != catalan_kdim(k + 1, m)) return mismatch("row", {k, 1, m}, one, catalan_kdim(k + 1, m));
      }
    }
    return {};
  }));
  return r;
}

SuiteReport representation_suite(std::size_t budget) {
  SuiteReport r{"representation", {}};
  r.checks.push_back(run_check("column stacking matches (*) sublattice", [&]() -> std::string {
    for (const Params& p : column_window(2000, 4, 3, 10)) {
      const ColumnIso iso = canonical_iso(p.k, p.n, p.m, budget);
      const auto a = count_maximal_chains(*iso.stacked);
      const auto b = count_maximal_chains(*iso.sublattice.poset);
      if (a != b) return mismatch("column", p, a, b);
      if (!verify_iso(*iso.stacked, *iso.sublattice.poset, iso.witness)) {
        return "canonical isomorphism fails at " + to_string(p);
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("row stacking matches (⋆) sublattice", [&]() -> std::string {
    for (const Params& p : row_window(2000, 3, 4, 5)) {
      const RowIso iso = canonical_row_iso(p.n, p.k, p.m, budget);
      const auto a = count_maximal_chains(*iso.stacked);
      const auto b = count_maximal_chains(*iso.sublattice.poset);
      if (a != b) return mismatch("row", p, a, b);
      if (!verify_iso(*iso.stacked, *iso.sublattice.poset, iso.witness)) {
        return "canonical isomorphism fails at " + to_string(p);
      }
    }
    return {};
  }));
  return r;
}

SuiteReport structure_suite(std::size_t budget) {
  SuiteReport r{"structure", {}};
  r.checks.push_back(run_check("stacked lattices are distributive", [&]() -> std::string {
    for (const Params& p : column_window(2000, 4, 3, 10)) {
      const auto s = star_sublattice(p.k, p.n, p.m, budget);
      if (s.size() > 500) continue;
      const auto stacked = stacked_column(p.k, p.n, p.m, budget);
      if (!is_lattice(*stacked) || !is_distributive(*stacked)) return "column " + to_string(p);
    }
    for (const Params& p : row_window(2000, 3, 4, 5)) {
      const auto s = row_star_sublattice(p.n, p.k, p.m, budget);
      if (s.size() > 500) continue;
      const auto stacked = stacked_row(p.n, p.k, p.m, budget);
      if (!is_lattice(*stacked) || !is_distributive(*stacked)) return "row " + to_string(p);
    }
    return {};
  }));
  r.checks.push_back(run_check("construction squares are lax pushouts", [&]() -> std::string {
    for (std::size_t m = 0; m <= 2; ++m) {
      const StackTower tower(column_series(3, m, budget), 2);
      for (std::size_t k = 0; k < tower.depth(); ++k) {
        for (std::size_t j = 0; j < tower.length(); ++j) {
          if (!verify_lax_pushout(tower.square(k, j))) return "tower square " + to_string(Params{k, j, m});
        }
      }
    }
    for (const Params& p : column_window(500, 3, 2, 4)) {
      if (!verify_lax_pushout(column_square(p.k, p.n, p.m, budget))) return "column square " + to_string(p);
    }
    for (const Params& p : row_window(500, 3, 3, 3)) {
      if (!verify_lax_pushout(row_square(p.n, p.k, p.m, budget))) return "row square " + to_string(p);
    }
    return {};
  }));
  r.checks.push_back(run_check("sublattices are closed under ambient meets and joins", [&]() -> std::string {
    for (const Params& p : column_window(2000, 4, 3, 10)) {
      const auto s = star_sublattice(p.k, p.n, p.m, budget);
      if (!closed_under_ambient_meet_join(s) || !covers_are_unit_steps(s)) return "column " + to_string(p);
    }
    for (const Params& p : row_window(2000, 3, 4, 5)) {
      const auto s = row_star_sublattice(p.n, p.k, p.m, budget);
      if (!closed_under_ambient_meet_join(s) || !covers_are_unit_steps(s)) return "row " + to_string(p);
    }
    return {};
  }));
  return r;
}

template <class T, class Forward, class Backward>
std::string round_trip(const std::vector<T>& domain, Forward&& f, Backward&& g, const std::string& what) {
  for (const T& x : domain) {
    if (!(g(f(x)) == x)) return what + ": round trip fails";
  }
  return {};
}

SuiteReport bijections_suite(std::size_t budget) {
  SuiteReport r{"bijections", {}};
  r.checks.push_back(run_check("words", [&]() -> std::string {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto words = enumerate_stack_words(k, n);
        const auto lattice = star_sublattice(k, n, 1, budget);
        const auto dp = count_maximal_chains(*lattice.poset);
        if (dp != words.size()) return mismatch("word count", {k, n, 1}, words.size(), dp);
        if (dp > 5000) continue;
        std::set<StackWord> images;
        for (const Chain& c : enumerate_maximal_chains(*lattice.poset, 5000)) {
          const TupleChain tc = tuples_of(lattice, c);
          const StackWord w = chain_to_word(tc, k, n);
          if (word_to_chain(w, k, n) != tc) return "word round trip at " + to_string(Params{k, n, 1});
          images.insert(w);
        }
        if (images != std::set<StackWord>(words.begin(), words.end())) {
          return "word images differ from the enumeration at " + to_string(Params{k, n, 1});
        }
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("m-partitions", [&]() -> std::string {
    for (std::size_t m = 1; m <= 12; ++m) {
      for (std::size_t n = 0; m * n <= 12; ++n) {
        const auto parts = enumerate_m_partitions(m, n);
        if (m_partition_count(m, n) != parts.size()) {
          return mismatch("partition count", {1, n, m}, parts.size(), m_partition_count(m, n));
        }
        const auto lattice = star_sublattice(1, n, m - 1, budget);
        const auto dp = count_maximal_chains(*lattice.poset);
        if (dp != parts.size()) return mismatch("partition chains", {1, n, m}, dp, parts.size());
        if (dp > 5000) continue;
        auto msg = round_trip(
            parts, [&](const MPartition& p) { return partition_to_chain(p, n, m); },
            [&](const TupleChain& c) { return chain_to_partition(c, n, m); }, "partition");
        if (!msg.empty()) return msg + " at " + to_string(Params{1, n, m});
        for (const Chain& c : enumerate_maximal_chains(*lattice.poset, 5000)) {
          const TupleChain tc = tuples_of(lattice, c);
          if (partition_to_chain(chain_to_partition(tc, n, m), n, m) != tc) {
            return "chain round trip at " + to_string(Params{1, n, m});
          }
        }
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("walks", [&]() -> std::string {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t m = 0; m <= 6; ++m) {
        const auto lattice = row_star_sublattice(n, 1, m, budget);
        const auto dp = count_maximal_chains(*lattice.poset);
        if (dp > 5000) break;
        const auto walks = enumerate_walks(n, m);
        if (dp != walks.size()) return mismatch("walk count", {1, n, m}, walks.size(), dp);
        auto msg = round_trip(
            walks, [&](const LatticeWalk& w) { return walk_to_chain(w, n, m); },
            [&](const TupleChain& c) { return chain_to_walk(c, n, m); }, "walk");
        if (!msg.empty()) return msg + " at " + to_string(Params{1, n, m});
        for (const Chain& c : enumerate_maximal_chains(*lattice.poset, 5000)) {
          const TupleChain tc = tuples_of(lattice, c);
          if (walk_to_chain(chain_to_walk(tc, n, m), n, m) != tc) {
            return "chain round trip at " + to_string(Params{1, n, m});
          }
        }
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("hermite histories", [&]() -> std::string {
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto histories = enumerate_histories(n);
      const auto involutions = enumerate_m_partitions(2, n);
      if (histories.size() != involutions.size()) {
        return "history count " + std::to_string(histories.size()) + " vs " +
               std::to_string(involutions.size()) + " involutions at n=" + std::to_string(n);
      }
      std::set<MPartition> images;
      for (const auto& h : histories) {
        const MPartition p = history_to_involution(h);
        if (involution_to_history(p) != h) return "history round trip at n=" + std::to_string(n);
        images.insert(p);
      }
      if (images != std::set<MPartition>(involutions.begin(), involutions.end())) {
        return "histories miss an involution at n=" + std::to_string(n);
      }
    }
    return {};
  }));
  return r;
}

SuiteReport dyck_suite() {
  SuiteReport r{"dyck", {}};
  r.checks.push_back(run_check("weighted Dyck sum is (2n-1)!!", []() -> std::string {
    for (std::size_t n = 0; n <= 10; ++n) {
      if (weighted_dyck_sum(n) != odd_double_factorial(n)) {
        return "n=" + std::to_string(n) + ": " + weighted_dyck_sum(n).get_str();
      }
    }
    return {};
  }));
  r.checks.push_back(run_check("single path weight", []() -> std::string {
    const auto w = height_sequence_weight({{0, 0, 0, 1, 1, 4, 6, 7}});
    return w == 144 ? "" : "weight " + w.get_str();
  }));
  return r;
}

SuiteReport oracle_suite(std::size_t budget) {
  SuiteReport r{"oracle", {}};
  r.checks.push_back(run_check("DP count equals enumeration", [&]() -> std::string {
    std::size_t tried = 0;
    auto probe = [&](const Poset& p, const std::string& what) -> std::string {
      if (p.size() > 200) return {};
      const auto dp = count_maximal_chains(p);
      if (dp > 5000) return {};
      ++tried;
      const auto listed = enumerate_maximal_chains(p, 5000);
      if (dp != listed.size()) return what + ": DP " + dp.get_str() + ", DFS " + std::to_string(listed.size());
      for (const Chain& c : listed) {
        if (!is_maximal_chain(p, c)) return what + ": enumerated a non-maximal chain";
      }
      return {};
    };
    for (const Params& p : column_window(2000, 4, 3, 10)) {
      auto msg = probe(*star_sublattice(p.k, p.n, p.m, budget).poset, "column " + to_string(p));
      if (!msg.empty()) return msg;
    }
    for (const Params& p : row_window(2000, 3, 4, 5)) {
      auto msg = probe(*row_star_sublattice(p.n, p.k, p.m, budget).poset, "row " + to_string(p));
      if (!msg.empty()) return msg;
    }
    return tried == 0 ? "no instance in range" : "";
  }));
  return r;
}

}  // namespace

std::string to_string(const Params& p) {
  return "(k=" + std::to_string(p.k) + ", n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + ")";
}

std::vector<Params> column_window(std::size_t limit, std::size_t k_max, std::size_t m_max,
                                  std::size_t n_max) {
  std::vector<Params> out;
  for (std::size_t m = 0; m <= m_max; ++m) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      for (std::size_t n = 0; n <= n_max; ++n) {
        if (bounded_pow(k + m + 1, n, limit) <= limit) out.push_back({k, n, m});
      }
    }
  }
  return out;
}

std::vector<Params> row_window(std::size_t limit, std::size_t n_max, std::size_t k_max,
                               std::size_t m_max) {
  std::vector<Params> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      for (std::size_t m = 0; m <= m_max; ++m) {
        if (bounded_pow(m + 1, n + k, limit) <= limit) out.push_back({k, n, m});
      }
    }
  }
  return out;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "representation", "structure",
                                              "bijections", "dyck", "oracle"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, std::size_t budget) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, budget).front());
    return out;
  }
  if (name == "formulas") return {formulas_suite(budget)};
  if (name == "representation") return {representation_suite(budget)};
  if (name == "structure") return {structure_suite(budget)};
  if (name == "bijections") return {bijections_suite(budget)};
  if (name == "dyck") return {dyck_suite()};
  if (name == "oracle") return {oracle_suite(budget)};
  throw ParseError("suite", "unknown suite '" + name + "'");
}

}  // namespace latstack
