#include "latstack/poset.hpp"

#include <algorithm>
#include <numeric>

namespace latstack {

namespace {

// Element of `words` whose down-count (or up-count) equals the popcount of
// `words`; that element is the maximum (minimum) of a down-closed (up-closed)
// set. Returns size when there is none.
Id find_extremum(std::span<const std::uint64_t> words, const std::vector<std::uint32_t>& counts,
                 bool ids_sorted, bool want_highest, std::size_t size) {
  const std::size_t target = popcount(words);
  if (target == 0) return static_cast<Id>(size);
  if (ids_sorted) {
    // In a linear extension the extremum is the last (first) member.
    std::size_t pick = size;
    if (want_highest) {
      for (std::size_t w = words.size(); w-- > 0;) {
        if (words[w] != 0) {
          pick = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words[w]));
          break;
        }
      }
    } else {
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] != 0) {
          pick = w * 64 + static_cast<std::size_t>(std::countr_zero(words[w]));
          break;
        }
      }
    }
    return counts[pick] == target ? static_cast<Id>(pick) : static_cast<Id>(size);
  }
  Id found = static_cast<Id>(size);
  for_each_bit(words, [&](std::size_t z) {
    if (counts[z] == target) found = static_cast<Id>(z);
  });
  return found;
}

}  // namespace

void Poset::check_size(std::size_t size) {
  if (size > kMaxPosetElements) {
    throw SizeError("poset with " + std::to_string(size) + " elements exceeds the limit of " +
                    std::to_string(kMaxPosetElements));
  }
}

Poset Poset::from_relation(std::size_t size, std::span<const std::pair<Id, Id>> pairs,
                           std::vector<std::string> labels) {
  check_size(size);
  BitMatrix m(size);
  for (auto [x, y] : pairs) {
    if (x >= size || y >= size) {
      throw RangeError("relation pair (" + std::to_string(x) + "," + std::to_string(y) +
                       ") out of range for size " + std::to_string(size));
    }
    m.set(x, y);
  }
  for (std::size_t x = 0; x < size; ++x) m.set(x, x);
  // Warshall closure, one word-row at a time.
  for (std::size_t k = 0; k < size; ++k) {
    auto rk = m.row(k);
    std::vector<std::uint64_t> pivot(rk.begin(), rk.end());
    for (std::size_t i = 0; i < size; ++i) {
      if (!m.test(i, k)) continue;
      auto ri = m.row(i);
      for (std::size_t w = 0; w < ri.size(); ++w) ri[w] |= pivot[w];
    }
  }
  return from_up_sets(std::move(m), std::move(labels));
}

Poset Poset::from_up_sets(BitMatrix up, std::vector<std::string> labels) {
  const std::size_t n = up.size();
  check_size(n);
  if (!labels.empty() && labels.size() != n) {
    throw RangeError("label count " + std::to_string(labels.size()) + " does not match size " +
                     std::to_string(n));
  }
  for (std::size_t x = 0; x < n; ++x) up.set(x, x);

  Poset p;
  p.size_ = n;
  p.down_ = up.transposed();
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);

  for (std::size_t x = 0; x < n; ++x) {
    auto u = p.up_.row(x);
    auto d = p.down_.row(x);
    for (std::size_t w = 0; w < u.size(); ++w) {
      std::uint64_t both = u[w] & d[w];
      if (w == x / 64) both &= ~(std::uint64_t{1} << (x % 64));
      if (both != 0) {
        const auto y = w * 64 + static_cast<std::size_t>(std::countr_zero(both));
        throw CycleError("order is not antisymmetric: " + std::to_string(x) + " <= " +
                         std::to_string(y) + " <= " + std::to_string(x));
      }
    }
  }

  p.up_count_.resize(n);
  p.down_count_.resize(n);
  p.ids_sorted_ = true;
  for (std::size_t x = 0; x < n; ++x) {
    p.up_count_[x] = static_cast<std::uint32_t>(p.up_.row_count(x));
    p.down_count_[x] = static_cast<std::uint32_t>(p.down_.row_count(x));
    if (p.ids_sorted_) {
      // Any y < x (as ids) with x <= y breaks the identity extension.
      auto u = p.up_.row(x);
      for (std::size_t w = 0; w <= x / 64 && p.ids_sorted_; ++w) {
        std::uint64_t below = u[w];
        if (w == x / 64) below &= (std::uint64_t{1} << (x % 64)) - 1;
        if (below != 0) p.ids_sorted_ = false;
      }
    }
  }
  p.extension_.resize(n);
  std::iota(p.extension_.begin(), p.extension_.end(), Id{0});
  if (!p.ids_sorted_) {
    std::stable_sort(p.extension_.begin(), p.extension_.end(),
                     [&](Id a, Id b) { return p.down_count_[a] < p.down_count_[b]; });
  }
  return p;
}

std::string Poset::name(Id x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::size_t CoverDigraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& u : upper) c += u.size();
  return c;
}

std::vector<std::pair<Id, Id>> CoverDigraph::edges() const {
  std::vector<std::pair<Id, Id>> out;
  out.reserve(edge_count());
  for (std::size_t x = 0; x < upper.size(); ++x) {
    for (Id y : upper[x]) out.emplace_back(static_cast<Id>(x), y);
  }
  return out;
}

bool CoverDigraph::contains(Id x, Id y) const {
  const auto& u = upper.at(x);
  return std::binary_search(u.begin(), u.end(), y);
}

CoverDigraph covers(const Poset& p) {
  const std::size_t n = p.size();
  CoverDigraph g;
  g.upper.resize(n);
  g.lower.resize(n);
  std::vector<std::uint64_t> dominated(p.words_per_row());
  std::vector<std::size_t> position(n);
  const auto& ext = p.linear_extension();
  for (std::size_t i = 0; i < n; ++i) position[ext[i]] = i;

  auto consider = [&](Id x, Id y) {
    if (y == x || ((dominated[y / 64] >> (y % 64)) & 1u)) return;
    g.upper[x].push_back(y);
    auto uy = p.up_set(y);
    for (std::size_t w = 0; w < dominated.size(); ++w) dominated[w] |= uy[w];
  };

  for (std::size_t xi = 0; xi < n; ++xi) {
    const Id x = static_cast<Id>(xi);
    std::fill(dominated.begin(), dominated.end(), 0);
    if (p.ids_are_linear_extension()) {
      for_each_bit(p.up_set(x), [&](std::size_t y) { consider(x, static_cast<Id>(y)); });
    } else {
      for (std::size_t i = position[x] + 1; i < n; ++i) {
        if (p.leq(x, ext[i])) consider(x, ext[i]);
      }
      std::sort(g.upper[x].begin(), g.upper[x].end());
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (Id y : g.upper[x]) g.lower[y].push_back(static_cast<Id>(x));
  }
  return g;
}

std::pair<Id, Id> bottom_top(const Poset& p) {
  const std::size_t n = p.size();
  Id bottom = static_cast<Id>(n);
  Id top = static_cast<Id>(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.up_count(static_cast<Id>(x)) == n) bottom = static_cast<Id>(x);
    if (p.down_count(static_cast<Id>(x)) == n) top = static_cast<Id>(x);
  }
  if (bottom == n || top == n) {
    throw NoExtremumError(n == 0 ? "empty poset has no bottom or top"
                                 : bottom == n ? "poset has no unique minimum"
                                               : "poset has no unique maximum");
  }
  return {bottom, top};
}

namespace {

std::vector<std::uint32_t> counts_of(const Poset& p, bool down) {
  std::vector<std::uint32_t> c(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    c[x] = static_cast<std::uint32_t>(down ? p.down_count(static_cast<Id>(x))
                                           : p.up_count(static_cast<Id>(x)));
  }
  return c;
}

struct BoundFinder {
  explicit BoundFinder(const Poset& p)
      : p(p), down_counts(counts_of(p, true)), up_counts(counts_of(p, false)),
        scratch(p.words_per_row()) {}

  // Returns size() when the bound does not exist.
  Id meet(Id x, Id y) {
    auto a = p.down_set(x);
    auto b = p.down_set(y);
    for (std::size_t w = 0; w < scratch.size(); ++w) scratch[w] = a[w] & b[w];
    return find_extremum(scratch, down_counts, p.ids_are_linear_extension(), true, p.size());
  }
  Id join(Id x, Id y) {
    auto a = p.up_set(x);
    auto b = p.up_set(y);
    for (std::size_t w = 0; w < scratch.size(); ++w) scratch[w] = a[w] & b[w];
    return find_extremum(scratch, up_counts, p.ids_are_linear_extension(), false, p.size());
  }

  const Poset& p;
  std::vector<std::uint32_t> down_counts;
  std::vector<std::uint32_t> up_counts;
  std::vector<std::uint64_t> scratch;
};

}  // namespace

std::pair<Id, Id> meet_join(const Poset& p, Id x, Id y) {
  if (x >= p.size() || y >= p.size()) throw RangeError("element id out of range");
  BoundFinder f(p);
  const Id m = f.meet(x, y);
  const Id j = f.join(x, y);
  if (m == p.size() || j == p.size()) {
    throw NotLatticeError("elements " + p.name(x) + " and " + p.name(y) + " have no " +
                          (m == p.size() ? "meet" : "join"));
  }
  return {m, j};
}

bool is_lattice(const Poset& p) {
  BoundFinder f(p);
  const Id none = static_cast<Id>(p.size());
  for (Id x = 0; x < p.size(); ++x) {
    for (Id y = x + 1; y < p.size(); ++y) {
      if (f.meet(x, y) == none || f.join(x, y) == none) return false;
    }
  }
  return true;
}

LatticeTables::LatticeTables(const Poset& p)
    : n_(p.size()), meet_(n_ * n_), join_(n_ * n_) {
  BoundFinder f(p);
  const Id none = static_cast<Id>(n_);
  for (Id x = 0; x < n_; ++x) {
    meet_[x * n_ + x] = x;
    join_[x * n_ + x] = x;
    for (Id y = x + 1; y < n_; ++y) {
      const Id m = f.meet(x, y);
      const Id j = f.join(x, y);
      if (m == none || j == none) {
        throw NotLatticeError("elements " + p.name(x) + " and " + p.name(y) + " have no " +
                              (m == none ? "meet" : "join"));
      }
      meet_[x * n_ + y] = meet_[y * n_ + x] = m;
      join_[x * n_ + y] = join_[y * n_ + x] = j;
    }
  }
}

bool is_distributive(const Poset& p) {
  const LatticeTables t(p);
  const Id n = static_cast<Id>(p.size());
  // The identity is symmetric and holds trivially when two arguments coincide.
  for (Id x = 0; x < n; ++x) {
    for (Id y = x + 1; y < n; ++y) {
      const Id xy_m = t.meet(x, y);
      const Id xy_j = t.join(x, y);
      for (Id z = y + 1; z < n; ++z) {
        const Id lhs = t.join(t.join(xy_m, t.meet(y, z)), t.meet(z, x));
        const Id rhs = t.meet(t.meet(xy_j, t.join(y, z)), t.join(z, x));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool is_distributive_textbook(const Poset& p) {
  const LatticeTables t(p);
  const Id n = static_cast<Id>(p.size());
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      for (Id z = 0; z < n; ++z) {
        if (t.meet(x, t.join(y, z)) != t.join(t.meet(x, y), t.meet(x, z))) return false;
      }
    }
  }
  return true;
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t n = p.size() * q.size();
  Poset::check_size(n);
  BitMatrix up(n);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      const std::size_t row = a * q.size() + b;
      for_each_bit(p.up_set(static_cast<Id>(a)), [&](std::size_t a2) {
        for_each_bit(q.up_set(static_cast<Id>(b)),
                     [&](std::size_t b2) { up.set(row, a2 * q.size() + b2); });
      });
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      labels.push_back("(" + p.name(static_cast<Id>(a)) + "," + q.name(static_cast<Id>(b)) + ")");
    }
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

bool verify_iso(const Poset& a, const Poset& b, const IsoWitness& w) {
  const std::size_t n = a.size();
  if (b.size() != n || w.forward.size() != n || w.backward.size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (w.forward[x] >= n || w.backward[x] >= n) return false;
    if (w.backward[w.forward[x]] != x || w.forward[w.backward[x]] != x) return false;
  }
  for (Id x = 0; x < n; ++x) {
    for (Id y = 0; y < n; ++y) {
      if (a.leq(x, y) != b.leq(w.forward[x], w.forward[y])) return false;
    }
  }
  return true;
}

bool satisfies_order_axioms(const Poset& p) {
  const std::size_t n = p.size();
  for (Id x = 0; x < n; ++x) {
    if (!p.leq(x, x)) return false;
    bool ok = true;
    auto ux = p.up_set(x);
    for_each_bit(ux, [&](std::size_t y) {
      if (!ok) return;
      if (y != x && p.leq(static_cast<Id>(y), x)) ok = false;
      auto uy = p.up_set(static_cast<Id>(y));
      for (std::size_t w = 0; w < uy.size(); ++w) {
        if ((uy[w] & ~ux[w]) != 0) ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace latstack
