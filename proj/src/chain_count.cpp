#include "latstack/chain_count.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace latstack {

ChainCount count_maximal_chains(const Poset& p) {
  const auto [bottom, top] = bottom_top(p);
  const CoverDigraph c = covers(p);
  std::vector<ChainCount> ways(p.size());
  ways[bottom] = 1;
  for (Id x : p.linear_extension()) {
    if (x == bottom) continue;
    for (Id y : c.lower[x]) ways[x] += ways[y];
  }
  return ways[top];
}

std::vector<Chain> enumerate_maximal_chains(const Poset& p, std::size_t cap) {
  const ChainCount total = count_maximal_chains(p);
  if (total > cap) throw CapExceededError(total.get_str(), cap);

  const auto [bottom, top] = bottom_top(p);
  const CoverDigraph c = covers(p);
  std::vector<Chain> out;
  out.reserve(total.get_ui());

  // Explicit DFS; next[d] is the next cover to try at depth d.
  Chain path{bottom};
  std::vector<std::size_t> next{0};
  while (!path.empty()) {
    const Id x = path.back();
    if (x == top) {
      out.push_back(path);
      path.pop_back();
      next.pop_back();
      continue;
    }
    auto& i = next.back();
    if (i < c.upper[x].size()) {
      path.push_back(c.upper[x][i++]);
      next.push_back(0);
    } else {
      path.pop_back();
      next.pop_back();
    }
  }
  return out;
}

bool is_maximal_chain(const Poset& p, const Chain& chain) {
  if (p.empty() || chain.empty()) return false;
  std::pair<Id, Id> bt;
  try {
    bt = bottom_top(p);
  } catch (const NoExtremumError&) {
    return false;
  }
  if (chain.front() != bt.first || chain.back() != bt.second) return false;
  const CoverDigraph c = covers(p);
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    if (chain[s] >= p.size() || chain[s + 1] >= p.size() || !c.contains(chain[s], chain[s + 1])) {
      return false;
    }
  }
  return true;
}

ChainCount factorial(unsigned long n) {
  ChainCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ChainCount catalan_kdim(unsigned long k, unsigned long n) {
  if (k == 0) throw RangeError("k-dimensional Catalan numbers need k >= 1");
  ChainCount num = factorial(k * n);
  ChainCount den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= factorial(i);
    den *= factorial(n + i);
  }
  return num / den;
}

ChainCount odd_double_factorial(unsigned long n) {
  ChainCount pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n);
  return factorial(2 * n) / (pow2 * factorial(n));
}

ChainCount m_partition_count(unsigned long m, unsigned long n) {
  if (m == 0) throw RangeError("m-partitions need m >= 1");
  ChainCount den;
  mpz_pow_ui(den.get_mpz_t(), factorial(m).get_mpz_t(), n);
  return factorial(m * n) / (den * factorial(n));
}

ChainCount hypercube_count(unsigned long m, unsigned long n) {
  ChainCount den;
  mpz_pow_ui(den.get_mpz_t(), factorial(m).get_mpz_t(), n);
  return factorial(m * n) / den;
}

ChainCount kreweras(unsigned long m) {
  ChainCount pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, m);
  return factorial(3 * m) * pow4 / (factorial(m + 1) * factorial(2 * m + 1));
}

bool is_height_sequence(const HeightSequence& h) {
  if (h.i.empty() || h.i.front() != 0) return false;
  const int n = static_cast<int>(h.i.size()) - 1;
  if (h.i.back() != n) return false;
  for (int j = 0; j <= n; ++j) {
    if (h.i[j] > j || h.i[j] < 0) return false;
    if (j > 0 && h.i[j - 1] > h.i[j]) return false;
  }
  return true;
}

namespace {

template <class Visit>
void walk_heights(std::vector<int>& seq, int n, Visit&& visit) {
  const int j = static_cast<int>(seq.size()) - 1;
  if (j == n) {
    if (seq.back() == n) visit(seq);
    return;
  }
  for (int v = seq.back(); v <= j + 1; ++v) {
    seq.push_back(v);
    walk_heights(seq, n, visit);
    seq.pop_back();
  }
}

ChainCount falling(long a, long b) {
  ChainCount r = 1;
  for (long t = 0; t < b; ++t) {
    if (a - t <= 0) return 0;
    r *= static_cast<unsigned long>(a - t);
  }
  return r;
}

}  // namespace

std::vector<HeightSequence> height_sequences(std::size_t n) {
  std::vector<HeightSequence> out;
  std::vector<int> seq{0};
  walk_heights(seq, static_cast<int>(n), [&](const std::vector<int>& s) { out.push_back({s}); });
  return out;
}

ChainCount height_sequence_weight(const HeightSequence& h) {
  if (!is_height_sequence(h)) throw RangeError("not a height sequence");
  ChainCount w = 1;
  for (std::size_t j = 0; j + 1 < h.i.size(); ++j) {
    w *= falling(static_cast<long>(j) + 1 - h.i[j], h.i[j + 1] - h.i[j]);
  }
  return w;
}

ChainCount weighted_dyck_sum(std::size_t n) {
  ChainCount total = 0;
  std::vector<int> seq{0};
  walk_heights(seq, static_cast<int>(n),
               [&](const std::vector<int>& s) { total += height_sequence_weight({s}); });
  return total;
}

std::string to_string(Axis a) { return a == Axis::column ? "column" : "row"; }

Axis parse_axis(const std::string& s) {
  if (s == "column") return Axis::column;
  if (s == "row") return Axis::row;
  throw ParseError("axis", "expected 'column' or 'row', got '" + s + "'");
}

ChainCount count_cell(Axis axis, std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  if (axis == Axis::column) return count_maximal_chains(*star_sublattice(k, n, m, budget).poset);
  return count_maximal_chains(*row_star_sublattice(n, k, m, budget).poset);
}

SequenceGrid grid(Axis axis, Range k, Range n, Range m, std::size_t budget, unsigned threads) {
  SequenceGrid g{axis, k, n, m, {}};
  const Range& block = g.block_range();
  const Range& inner = g.inner_range();
  for (std::size_t b = block.lo; b <= block.hi; ++b) {
    for (std::size_t kk = k.lo; kk <= k.hi; ++kk) {
      g.rows.push_back({b, kk, std::vector<std::optional<ChainCount>>(inner.count())});
    }
  }

  const std::size_t cells = g.rows.size() * inner.count();
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t c; (c = cursor.fetch_add(1)) < cells;) {
      GridRow& row = g.rows[c / inner.count()];
      const std::size_t v = inner.lo + c % inner.count();
      const std::size_t nn = axis == Axis::column ? v : row.block;
      const std::size_t mm = axis == Axis::column ? row.block : v;
      try {
        row.cells[c % inner.count()] = count_cell(axis, row.k, nn, mm, budget);
      } catch (const SizeError&) {
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells, 1)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return g;
}

}  // namespace latstack
