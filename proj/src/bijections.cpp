#include "latstack/bijections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace latstack {

namespace {

// Coordinates raised by each step (0-based), bottom to top.
std::vector<std::size_t> step_coordinates(const TupleChain& chain, std::size_t dimension,
                                          std::size_t height,
                                          const std::function<bool(const Tuple&)>& member) {
  const std::size_t steps = dimension * height;
  if (chain.size() != steps + 1) {
    throw NotMaximalError("chain has " + std::to_string(chain.size()) + " elements, expected " +
                          std::to_string(steps + 1));
  }
  for (const Tuple& t : chain) {
    if (t.size() != dimension) throw NotMaximalError("tuple " + tuple_label(t) + " has wrong length");
    for (int v : t) {
      if (v < 0 || static_cast<std::size_t>(v) > height) {
        throw NotMaximalError("tuple " + tuple_label(t) + " leaves the ambient power");
      }
    }
    if (!member(t)) throw NotMaximalError("tuple " + tuple_label(t) + " is not a member");
  }
  if (std::ranges::any_of(chain.front(), [](int v) { return v != 0; })) {
    throw NotMaximalError("chain does not start at the bottom");
  }
  std::vector<std::size_t> coords;
  coords.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t moved = dimension;
    for (std::size_t i = 0; i < dimension; ++i) {
      const int d = chain[s + 1][i] - chain[s][i];
      if (d == 0) continue;
      if (d != 1 || moved != dimension) {
        throw NotMaximalError("step " + std::to_string(s + 1) + " is not a cover");
      }
      moved = i;
    }
    if (moved == dimension) throw NotMaximalError("step " + std::to_string(s + 1) + " repeats a tuple");
    coords.push_back(moved);
  }
  return coords;
}

template <class Range>
std::string join_ints(const Range& r, const char* sep) {
  std::string s;
  bool first = true;
  for (int v : r) {
    if (!first) s += sep;
    s += std::to_string(v);
    first = false;
  }
  return s;
}

}  // namespace

TupleChain tuples_of(const TupleLattice& l, const Chain& c) {
  TupleChain out;
  out.reserve(c.size());
  for (Id x : c) out.push_back(l.tuples.at(x));
  return out;
}

Chain ids_of(const TupleLattice& l, const TupleChain& c) {
  Chain out;
  out.reserve(c.size());
  for (const Tuple& t : c) out.push_back(l.id_of(t));
  return out;
}

std::string to_string(const StackWord& w) {
  std::string s;
  for (int a : w.letters) s += (s.empty() ? "a" : " a") + std::to_string(a);
  return s;
}

void validate_stack_word(const StackWord& w, std::size_t k, std::size_t n) {
  if (w.letters.size() != (k + 1) * n) {
    throw InvalidWordError("word length " + std::to_string(w.letters.size()) + " is not (k+1)n",
                           w.letters.size());
  }
  std::vector<std::size_t> seen(n + 1, 0);
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    const int a = w.letters[p];
    if (a < 1 || static_cast<std::size_t>(a) > n) {
      throw InvalidWordError("letter " + std::to_string(a) + " outside 1.." + std::to_string(n), p + 1);
    }
    if (++seen[a] > k + 1) {
      throw InvalidWordError("letter a" + std::to_string(a) + " occurs more than k+1 times", p + 1);
    }
    for (std::size_t i = 1; i < static_cast<std::size_t>(a); ++i) {
      if (seen[i] > 0 && seen[i] < seen[a]) {
        throw InvalidWordError("a" + std::to_string(i) + " occurs less often than a" +
                                   std::to_string(a),
                               p + 1);
      }
    }
    for (std::size_t j = static_cast<std::size_t>(a) + 1; j <= n; ++j) {
      if (seen[j] > seen[a]) {
        throw InvalidWordError("a" + std::to_string(a) + " occurs less often than a" +
                                   std::to_string(j),
                               p + 1);
      }
    }
  }
}

StackWord chain_to_word(const TupleChain& chain, std::size_t k, std::size_t n) {
  const auto coords =
      step_coordinates(chain, n, k + 1, [k](const Tuple& t) { return satisfies_star(t, k); });
  StackWord w;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) w.letters.push_back(static_cast<int>(*it) + 1);
  return w;
}

TupleChain word_to_chain(const StackWord& w, std::size_t k, std::size_t n) {
  validate_stack_word(w, k, n);
  TupleChain chain;
  Tuple t(n, static_cast<int>(k + 1));
  chain.push_back(t);
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    --t[w.letters[p] - 1];
    if (!satisfies_star(t, k)) {
      throw InvalidWordError("prefix reaches " + tuple_label(t) + ", which breaks the column condition",
                             p + 1);
    }
    chain.push_back(t);
  }
  std::ranges::reverse(chain);
  return chain;
}

MPartition normalized(MPartition p) {
  for (auto& b : p.blocks) std::ranges::sort(b);
  std::ranges::sort(p.blocks);
  return p;
}

std::string to_string(const MPartition& p) {
  std::string s = "{";
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) s += ", ";
    s += "{" + join_ints(p.blocks[b], ",") + "}";
  }
  return s + "}";
}

void validate_partition(const MPartition& p, std::size_t m, std::size_t n) {
  if (p.blocks.size() != n) {
    throw InvalidPartitionError("expected " + std::to_string(n) + " blocks, got " +
                                std::to_string(p.blocks.size()));
  }
  std::vector<bool> used(m * n + 1, false);
  for (const auto& b : p.blocks) {
    if (b.size() != m) throw InvalidPartitionError("block of size " + std::to_string(b.size()));
    for (int v : b) {
      if (v < 1 || static_cast<std::size_t>(v) > m * n) {
        throw InvalidPartitionError("element " + std::to_string(v) + " out of range");
      }
      if (used[v]) throw InvalidPartitionError("element " + std::to_string(v) + " repeated");
      used[v] = true;
    }
  }
}

MPartition chain_to_partition(const TupleChain& chain, std::size_t n, std::size_t m) {
  if (m == 0) throw RangeError("m-partitions need m >= 1");
  const auto coords =
      step_coordinates(chain, n, m, [](const Tuple& t) { return satisfies_star(t, 1); });
  MPartition p;
  p.blocks.resize(n);
  const int total = static_cast<int>(m * n);
  for (std::size_t s = 0; s < coords.size(); ++s) {
    p.blocks[coords[s]].push_back(total - static_cast<int>(s));
  }
  return normalized(std::move(p));
}

TupleChain partition_to_chain(const MPartition& p, std::size_t n, std::size_t m) {
  validate_partition(p, m, n);
  const std::size_t total = m * n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto top_label = [&](std::size_t b) { return *std::ranges::max_element(p.blocks[b]); };
  std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return top_label(a) > top_label(b); });

  std::vector<std::size_t> coord_of_label(total + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (int v : p.blocks[order[r]]) coord_of_label[v] = n - 1 - r;
  }
  TupleChain chain;
  Tuple t(n, 0);
  chain.push_back(t);
  for (std::size_t s = 1; s <= total; ++s) {
    ++t[coord_of_label[total + 1 - s]];
    chain.push_back(t);
  }
  return chain;
}

std::string to_string(const LatticeWalk& w) {
  std::string s;
  for (int st : w.steps) {
    if (!s.empty()) s += ' ';
    s += st == kDiag ? std::string("D") : "W" + std::to_string(st);
  }
  return s;
}

void validate_walk(const LatticeWalk& w, std::size_t n, std::size_t m) {
  if (w.steps.size() != (n + 1) * m) {
    throw InvalidWalkError("walk length " + std::to_string(w.steps.size()) + " is not (n+1)m");
  }
  std::vector<int> pos(n, 0);
  for (std::size_t s = 0; s < w.steps.size(); ++s) {
    const int st = w.steps[s];
    if (st < 0 || static_cast<std::size_t>(st) > n) {
      throw InvalidWalkError("unknown step " + std::to_string(st));
    }
    if (st == kDiag) {
      for (int& v : pos) {
        if (++v > static_cast<int>(m)) {
          throw InvalidWalkError("step " + std::to_string(s + 1) + " leaves the box");
        }
      }
    } else if (--pos[st - 1] < 0) {
      throw InvalidWalkError("step " + std::to_string(s + 1) + " leaves the orthant");
    }
  }
  if (std::ranges::any_of(pos, [](int v) { return v != 0; })) {
    throw InvalidWalkError("walk does not return to the origin");
  }
}

LatticeWalk chain_to_walk(const TupleChain& chain, std::size_t n, std::size_t m) {
  const auto coords =
      step_coordinates(chain, n + 1, m, [n](const Tuple& t) { return satisfies_row_star(t, n, 1); });
  LatticeWalk w;
  for (std::size_t c : coords) w.steps.push_back(c == n ? kDiag : static_cast<int>(c) + 1);
  return w;
}

TupleChain walk_to_chain(const LatticeWalk& w, std::size_t n, std::size_t m) {
  validate_walk(w, n, m);
  TupleChain chain;
  Tuple t(n + 1, 0);
  chain.push_back(t);
  for (int st : w.steps) {
    ++t[st == kDiag ? n : static_cast<std::size_t>(st) - 1];
    chain.push_back(t);
  }
  return chain;
}

MPartition history_to_involution(const HermiteHistory& h) {
  const std::size_t len = h.path.size();
  std::vector<int> height(len + 1, 0);
  std::vector<std::size_t> ups;
  for (std::size_t p = 0; p < len; ++p) {
    if (h.path[p] == 'U') {
      height[p + 1] = height[p] + 1;
      ups.push_back(p);
    } else if (h.path[p] == 'D') {
      height[p + 1] = height[p] - 1;
    } else {
      throw RangeError("path letters must be U or D");
    }
    if (height[p + 1] < 0) throw RangeError("path dips below zero");
  }
  if (height[len] != 0) throw RangeError("path does not return to zero");
  if (h.choices.size() != ups.size()) {
    throw ChoiceOutOfRangeError("expected " + std::to_string(ups.size()) + " choices, got " +
                                std::to_string(h.choices.size()));
  }

  std::vector<bool> taken(len, false);
  MPartition out;
  for (std::size_t u = ups.size(); u-- > 0;) {
    const std::size_t p = ups[u];
    const int c = h.choices[u];
    if (c < 1 || c > height[p + 1]) {
      throw ChoiceOutOfRangeError("choice " + std::to_string(c) + " at position " +
                                  std::to_string(p + 1) + " outside 1.." +
                                  std::to_string(height[p + 1]));
    }
    int seen = 0;
    for (std::size_t q = len; q-- > p + 1;) {
      if (h.path[q] != 'D' || taken[q]) continue;
      if (++seen == c) {
        taken[q] = true;
        out.blocks.push_back({static_cast<int>(p + 1), static_cast<int>(q + 1)});
        break;
      }
    }
  }
  return normalized(std::move(out));
}

HermiteHistory involution_to_history(const MPartition& p) {
  const std::size_t n = p.blocks.size();
  validate_partition(p, 2, n);
  const std::size_t len = 2 * n;
  std::vector<int> partner(len + 1, 0);
  HermiteHistory h;
  h.path.assign(len, 'D');
  for (const auto& b : p.blocks) {
    const int lo = std::min(b[0], b[1]);
    const int hi = std::max(b[0], b[1]);
    partner[lo] = hi;
    h.path[lo - 1] = 'U';
  }
  h.choices.assign(n, 0);
  std::vector<bool> taken(len + 1, false);
  std::size_t u = n;
  for (std::size_t pos = len; pos >= 1; --pos) {
    if (h.path[pos - 1] != 'U') continue;
    --u;
    int rank = 0;
    for (std::size_t q = len; q > pos; --q) {
      if (h.path[q - 1] == 'D' && !taken[q]) ++rank;
      if (q == static_cast<std::size_t>(partner[pos])) break;
    }
    taken[partner[pos]] = true;
    h.choices[u] = rank;
  }
  return h;
}

std::vector<StackWord> enumerate_stack_words(std::size_t k, std::size_t n) {
  std::vector<StackWord> out;
  StackWord cur;
  std::vector<std::size_t> seen(n + 1, 0);
  const std::size_t length = (k + 1) * n;
  std::function<void()> rec = [&] {
    if (cur.letters.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = 1; a <= n; ++a) {
      if (seen[a] == k + 1) continue;
      ++seen[a];
      bool ok = true;
      for (std::size_t i = 1; i < a && ok; ++i) ok = seen[i] == 0 || seen[i] >= seen[a];
      for (std::size_t j = a + 1; j <= n && ok; ++j) ok = seen[j] <= seen[a];
      if (ok) {
        cur.letters.push_back(static_cast<int>(a));
        rec();
        cur.letters.pop_back();
      }
      --seen[a];
    }
  };
  rec();
  return out;
}

std::vector<MPartition> enumerate_m_partitions(std::size_t m, std::size_t n) {
  if (m == 0) throw RangeError("m-partitions need m >= 1");
  std::vector<MPartition> out;
  const int total = static_cast<int>(m * n);
  std::vector<bool> used(total + 1, false);
  MPartition cur;
  std::function<void()> open_block;
  std::function<void(int)> fill = [&](int from) {
    const std::size_t b = cur.blocks.size() - 1;
    if (cur.blocks[b].size() == m) {
      open_block();
      return;
    }
    for (int v = from; v <= total; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.blocks[b].push_back(v);
      fill(v + 1);
      cur.blocks[b].pop_back();
      used[v] = false;
    }
  };
  open_block = [&] {
    int first = 1;
    while (first <= total && used[first]) ++first;
    if (first > total) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    cur.blocks.push_back({first});
    fill(first + 1);
    cur.blocks.pop_back();
    used[first] = false;
  };
  open_block();
  return out;
}

std::vector<LatticeWalk> enumerate_walks(std::size_t n, std::size_t m) {
  std::vector<LatticeWalk> out;
  const std::size_t length = (n + 1) * m;
  std::vector<int> pos(n, 0);
  LatticeWalk cur;
  std::function<void()> rec = [&] {
    const std::size_t left = length - cur.steps.size();
    // Every unit of displacement needs its own step back.
    const int spread = std::accumulate(pos.begin(), pos.end(), 0);
    if (static_cast<std::size_t>(spread) > left) return;
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (std::ranges::all_of(pos, [&](int v) { return v < static_cast<int>(m); })) {
      for (int& v : pos) ++v;
      cur.steps.push_back(kDiag);
      rec();
      cur.steps.pop_back();
      for (int& v : pos) --v;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pos[i] == 0) continue;
      --pos[i];
      cur.steps.push_back(static_cast<int>(i) + 1);
      rec();
      cur.steps.pop_back();
      ++pos[i];
    }
  };
  rec();
  return out;
}

std::vector<HermiteHistory> enumerate_histories(std::size_t n) {
  std::vector<HermiteHistory> out;
  HermiteHistory cur;
  std::function<void(int, std::size_t)> rec = [&](int height, std::size_t ups) {
    if (cur.path.size() == 2 * n) {
      out.push_back(cur);
      return;
    }
    if (ups < n) {
      cur.path.push_back('U');
      for (int c = 1; c <= height + 1; ++c) {
        cur.choices.push_back(c);
        rec(height + 1, ups + 1);
        cur.choices.pop_back();
      }
      cur.path.pop_back();
    }
    if (height > 0) {
      cur.path.push_back('D');
      rec(height - 1, ups);
      cur.path.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace latstack
