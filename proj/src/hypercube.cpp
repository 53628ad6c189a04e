#include "latstack/hypercube.hpp"

#include <algorithm>
#include <limits>

namespace latstack {

namespace {

constexpr Id kUnset = std::numeric_limits<Id>::max();

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (total > budget / base) {
      throw SizeError("ambient C^" + std::to_string(exp) + "_" + std::to_string(base - 1) +
                      " exceeds the element budget of " + std::to_string(budget));
    }
    total *= base;
  }
  if (total > budget) {
    throw SizeError("ambient of " + std::to_string(total) + " tuples exceeds the element budget of " +
                    std::to_string(budget));
  }
  return total;
}

// Members with y_i >= v, one bitset per (i, v); up(x) is the AND over i.
Poset induced_order(const std::vector<Tuple>& tuples, std::size_t dimension, std::size_t height) {
  const std::size_t n = tuples.size();
  Poset::check_size(n);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> at_least(dimension * (height + 1) * words, 0);
  auto slot = [&](std::size_t i, std::size_t v) { return at_least.data() + (i * (height + 1) + v) * words; };
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t i = 0; i < dimension; ++i) {
      for (int v = 0; v <= tuples[y][i]; ++v) slot(i, v)[y / 64] |= std::uint64_t{1} << (y % 64);
    }
  }

  BitMatrix up(n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto row = up.row(x);
    std::fill(row.begin(), row.end(), ~std::uint64_t{0});
    for (std::size_t i = 0; i < dimension; ++i) {
      const std::uint64_t* g = slot(i, static_cast<std::size_t>(tuples[x][i]));
      for (std::size_t w = 0; w < words; ++w) row[w] &= g[w];
    }
    if (n % 64 != 0) row[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    labels[x] = tuple_label(tuples[x]);
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

template <class L>
L as(TupleLattice base) {
  L out;
  static_cast<TupleLattice&>(out) = std::move(base);
  return out;
}

Tuple shifted(const Tuple& t, int by) {
  Tuple out(t);
  for (int& v : out) v += by;
  return out;
}

Tuple prepend_zero(const Tuple& t) {
  Tuple out;
  out.reserve(t.size() + 1);
  out.push_back(0);
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

Tuple appended(const Tuple& t, int v) {
  Tuple out(t);
  out.push_back(v);
  return out;
}

template <class Fn>
MonotoneMap tuple_map(const TupleLattice& from, const TupleLattice& to, Fn&& fn) {
  std::vector<Id> assign(from.size());
  for (std::size_t x = 0; x < from.size(); ++x) assign[x] = to.id_of(fn(from.tuples[x]));
  return MonotoneMap(from.poset, to.poset, std::move(assign));
}

struct ColumnBase {
  std::vector<HypercubeLattice> powers;  // C^j_m, j = 0..n
  Series series;
};

ColumnBase column_base(std::size_t n, std::size_t m, std::size_t budget) {
  ColumnBase b;
  for (std::size_t j = 0; j <= n; ++j) b.powers.push_back(power(m, j, budget));
  b.series.objects.push_back(b.powers[0].poset);
  for (std::size_t j = 0; j < n; ++j) {
    b.series.maps.push_back(tuple_map(b.powers[j], b.powers[j + 1], prepend_zero));
    b.series.objects.push_back(b.powers[j + 1].poset);
  }
  return b;
}

struct RowBase {
  std::vector<HypercubeLattice> powers;  // C^n_j, j = 0..m
  Series series;
};

RowBase row_base(std::size_t n, std::size_t m, std::size_t budget) {
  RowBase b;
  for (std::size_t j = 0; j <= m; ++j) b.powers.push_back(power(j, n, budget));
  b.series.objects.push_back(b.powers[0].poset);
  for (std::size_t j = 0; j < m; ++j) {
    b.series.maps.push_back(tuple_map(b.powers[j], b.powers[j + 1], [](const Tuple& t) { return t; }));
    b.series.objects.push_back(b.powers[j + 1].poset);
  }
  return b;
}

IsoWitness witness_into(const std::vector<Tuple>& stacked, const TupleLattice& target) {
  IsoWitness w;
  w.forward.resize(stacked.size());
  w.backward.assign(target.size(), kUnset);
  for (std::size_t x = 0; x < stacked.size(); ++x) {
    const Id y = target.id_of(stacked[x]);
    w.forward[x] = y;
    w.backward[y] = static_cast<Id>(x);
  }
  return w;
}

}  // namespace

std::string tuple_label(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::uint64_t TupleLattice::encode(const Tuple& t) const {
  std::uint64_t code = 0;
  for (int v : t) code = code * (height + 1) + static_cast<std::uint64_t>(v);
  return code;
}

std::optional<Id> TupleLattice::find(const Tuple& t) const {
  if (t.size() != dimension) return std::nullopt;
  for (int v : t) {
    if (v < 0 || static_cast<std::size_t>(v) > height) return std::nullopt;
  }
  const auto code = encode(t);
  auto it = std::lower_bound(parent_ids.begin(), parent_ids.end(), code);
  if (it == parent_ids.end() || *it != code) return std::nullopt;
  return static_cast<Id>(it - parent_ids.begin());
}

Id TupleLattice::id_of(const Tuple& t) const {
  if (auto id = find(t)) return *id;
  throw NotInImageError("tuple " + tuple_label(t) + " is not a member");
}

TupleLattice tuple_sublattice(std::size_t dimension, std::size_t height,
                              const std::function<bool(const Tuple&)>& keep, std::size_t budget) {
  const std::size_t total = checked_power(height + 1, dimension, budget);
  TupleLattice l;
  l.dimension = dimension;
  l.height = height;

  Tuple t(dimension, 0);
  for (std::size_t code = 0; code < total; ++code) {
    if (keep(t)) {
      l.tuples.push_back(t);
      l.parent_ids.push_back(code);
    }
    for (std::size_t i = dimension; i-- > 0;) {
      if (static_cast<std::size_t>(t[i]) < height) {
        ++t[i];
        break;
      }
      t[i] = 0;
    }
  }
  if (l.tuples.size() > kMaxPosetElements) {
    throw SizeError("sublattice of " + std::to_string(l.tuples.size()) +
                    " elements exceeds the dense-order limit");
  }
  l.poset = share(induced_order(l.tuples, dimension, height));
  return l;
}

HypercubeLattice chain(std::size_t m) { return power(m, 1); }

HypercubeLattice power(std::size_t m, std::size_t n, std::size_t budget) {
  return as<HypercubeLattice>(tuple_sublattice(n, m, [](const Tuple&) { return true; }, budget));
}

bool satisfies_star(const Tuple& t, std::size_t k) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (static_cast<std::size_t>(t[i + 1]) < k && t[i] > t[i + 1]) return false;
  }
  return true;
}

bool satisfies_row_star(const Tuple& t, std::size_t n, std::size_t k) {
  if (k == 0) return true;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] > t[n]) return false;
  }
  for (std::size_t i = n; i + 1 < n + k; ++i) {
    if (t[i] > t[i + 1]) return false;
  }
  return true;
}

bool check_star_prime(const Tuple& t, std::size_t k) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (static_cast<std::size_t>(t[i]) == k + 1) continue;
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] > t[j]) return false;
    }
  }
  return true;
}

StarSublattice star_sublattice(std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  auto s = as<StarSublattice>(
      tuple_sublattice(n, k + m, [k](const Tuple& t) { return satisfies_star(t, k); }, budget));
  s.k = k;
  s.n = n;
  s.m = m;
  return s;
}

RowStarSublattice row_star_sublattice(std::size_t n, std::size_t k, std::size_t m,
                                      std::size_t budget) {
  auto s = as<RowStarSublattice>(tuple_sublattice(
      n + k, m, [n, k](const Tuple& t) { return satisfies_row_star(t, n, k); }, budget));
  s.n = n;
  s.k = k;
  s.m = m;
  return s;
}

bool closed_under_ambient_meet_join(const TupleLattice& l) {
  Tuple lo(l.dimension), hi(l.dimension);
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = x + 1; y < l.size(); ++y) {
      for (std::size_t i = 0; i < l.dimension; ++i) {
        lo[i] = std::min(l.tuples[x][i], l.tuples[y][i]);
        hi[i] = std::max(l.tuples[x][i], l.tuples[y][i]);
      }
      if (!l.find(lo) || !l.find(hi)) return false;
    }
  }
  return true;
}

bool covers_are_unit_steps(const TupleLattice& l) {
  const CoverDigraph c = covers(*l.poset);
  for (auto [x, y] : c.edges()) {
    int total = 0;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < l.dimension; ++i) {
      const int d = l.tuples[y][i] - l.tuples[x][i];
      total += d;
      moved += d != 0;
    }
    if (total != 1 || moved != 1) return false;
  }
  return true;
}

ColumnEmbeddings column_embeddings(std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  const auto src = star_sublattice(k, n, m, budget);
  const auto below = star_sublattice(k + 1, n, m, budget);
  const auto right = star_sublattice(k, n + 1, m, budget);
  return {tuple_map(src, below, [](const Tuple& t) { return shifted(t, 1); }),
          tuple_map(src, right, prepend_zero)};
}

RowEmbeddings row_embeddings(std::size_t n, std::size_t k, std::size_t m, std::size_t budget) {
  const auto src = row_star_sublattice(n, k, m, budget);
  const auto wider = row_star_sublattice(n, k + 1, m, budget);
  const auto taller = row_star_sublattice(n, k, m + 1, budget);
  const int top = static_cast<int>(m);
  return {tuple_map(src, wider, [top](const Tuple& t) { return appended(t, top); }),
          tuple_map(src, taller, [](const Tuple& t) { return t; })};
}

Square column_square(std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  const auto kk = star_sublattice(k, n, m, budget);
  const auto mm = star_sublattice(k, n + 1, m, budget);
  const auto nn = star_sublattice(k + 1, n, m, budget);
  const auto ll = star_sublattice(k + 1, n + 1, m, budget);
  auto plus_one = [](const Tuple& t) { return shifted(t, 1); };
  return Square{tuple_map(kk, mm, prepend_zero), tuple_map(kk, nn, plus_one),
                tuple_map(nn, ll, prepend_zero), tuple_map(mm, ll, plus_one)};
}

Square row_square(std::size_t n, std::size_t k, std::size_t m, std::size_t budget) {
  const auto kk = row_star_sublattice(n, k, m, budget);
  const auto mm = row_star_sublattice(n, k, m + 1, budget);
  const auto nn = row_star_sublattice(n, k + 1, m, budget);
  const auto ll = row_star_sublattice(n, k + 1, m + 1, budget);
  auto same = [](const Tuple& t) { return t; };
  const int lo = static_cast<int>(m);
  return Square{tuple_map(kk, mm, same), tuple_map(kk, nn, [lo](const Tuple& t) { return appended(t, lo); }),
                tuple_map(nn, ll, same),
                tuple_map(mm, ll, [lo](const Tuple& t) { return appended(t, lo + 1); })};
}

Series column_series(std::size_t n, std::size_t m, std::size_t budget) {
  return column_base(n, m, budget).series;
}

Series row_series(std::size_t n, std::size_t m, std::size_t budget) {
  return row_base(n, m, budget).series;
}

PosetPtr stacked_column(std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  return iterate_stacking(column_series(n, m, budget), k, n);
}

PosetPtr stacked_row(std::size_t n, std::size_t k, std::size_t m, std::size_t budget) {
  return iterate_stacking(row_series(n, m, budget), k, m);
}

ColumnIso canonical_iso(std::size_t k, std::size_t n, std::size_t m, std::size_t budget) {
  ColumnBase base = column_base(n, m, budget);
  const StackTower tower(base.series, k);

  // images[j][x] = d_{level,j,m}(x), rebuilt one level at a time.
  std::vector<std::vector<Tuple>> images(n + 1);
  for (std::size_t j = 0; j <= n; ++j) images[j] = base.powers[j].tuples;
  for (std::size_t level = 1; level <= k; ++level) {
    std::vector<std::vector<Tuple>> next(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      const LaxSum& s = tower.sum(level, j);
      next[j].reserve(s.carrier().size());
      for (Id id = 0; id < s.carrier().size(); ++id) {
        const std::size_t stage = s.stage_of(id);
        Tuple t(j - stage, 0);
        for (int v : images[stage][s.inner_of(id)]) t.push_back(v + 1);
        next[j].push_back(std::move(t));
      }
    }
    images = std::move(next);
  }

  ColumnIso iso{tower.object(k, n), star_sublattice(k, n, m, budget), {}};
  iso.witness = witness_into(images[n], iso.sublattice);
  return iso;
}

RowIso canonical_row_iso(std::size_t n, std::size_t k, std::size_t m, std::size_t budget) {
  RowBase base = row_base(n, m, budget);
  const StackTower tower(base.series, k);

  std::vector<std::vector<Tuple>> images(m + 1);
  for (std::size_t j = 0; j <= m; ++j) images[j] = base.powers[j].tuples;
  for (std::size_t level = 1; level <= k; ++level) {
    std::vector<std::vector<Tuple>> next(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      const LaxSum& s = tower.sum(level, j);
      next[j].reserve(s.carrier().size());
      for (Id id = 0; id < s.carrier().size(); ++id) {
        const std::size_t stage = s.stage_of(id);
        next[j].push_back(appended(images[stage][s.inner_of(id)], static_cast<int>(stage)));
      }
    }
    images = std::move(next);
  }

  RowIso iso{tower.object(k, m), row_star_sublattice(n, k, m, budget), {}};
  iso.witness = witness_into(images[m], iso.sublattice);
  return iso;
}

}  // namespace latstack
