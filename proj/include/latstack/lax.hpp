#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "latstack/poset.hpp"

namespace latstack {

/// Order-preserving map between two shared posets. Monotonicity is verified
/// on construction (NotMonotoneError carries a violating pair).
class MonotoneMap {
 public:
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<Id> assign);

  static MonotoneMap identity(const PosetPtr& p);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const PosetPtr& source_ptr() const { return source_; }
  const PosetPtr& target_ptr() const { return target_; }

  Id operator()(Id x) const { return assign_[x]; }
  std::span<const Id> assignment() const { return assign_; }

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<Id> assign_;
};

MonotoneMap make_map(PosetPtr source, PosetPtr target, std::vector<Id> assign);

/// g ∘ f. Throws CompositionError when f's target is not g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Pointer-identical or carrying the same order relation.
bool same_poset(const PosetPtr& a, const PosetPtr& b);

/// The 2-cell relation a <= b between parallel maps.
bool pointwise_leq(const MonotoneMap& a, const MonotoneMap& b);

struct MapProperties {
  bool order_reflecting = false;
  bool down_closed_image = false;
  bool join_preserving = false;
  bool bottom_preserving = false;
};

bool is_order_reflecting(const MonotoneMap& f);
bool has_down_closed_image(const MonotoneMap& f);

/// All four flags, by exhaustive check. The join and bottom flags need both
/// ends to be lattices (NotLatticeError otherwise).
MapProperties map_properties(const MonotoneMap& f);

/// A finite sequence M_0 -> M_1 -> ... -> M_n of posets and monotone maps.
struct Series {
  std::vector<PosetPtr> objects;   // M_0 .. M_n
  std::vector<MonotoneMap> maps;   // maps[j] : M_j -> M_{j+1}

  std::size_t length() const { return maps.size(); }
  /// The first n maps (and n + 1 objects).
  Series prefix(std::size_t n) const;
};

/// Series of a single poset and no maps.
Series make_series(PosetPtr single);
/// Series from consecutive maps; CompositionError on mismatched endpoints.
Series make_series(std::vector<MonotoneMap> maps);

/// The concrete lax sum of a series: tagged elements (x, j) with
/// (x, j) <= (y, j + i) iff (f_{j+i-1} ∘ ... ∘ f_j)(x) <= y.
///
/// Tagged ids are offset(j) + x, where offset is the prefix sum of stage sizes.
class LaxSum {
 public:
  explicit LaxSum(Series series);

  const Poset& carrier() const { return *carrier_; }
  const PosetPtr& carrier_ptr() const { return carrier_; }
  const Series& series() const { return series_; }

  std::size_t stages() const { return series_.objects.size(); }
  std::size_t last_stage() const { return series_.objects.size() - 1; }
  std::size_t offset(std::size_t stage) const { return offsets_[stage]; }

  std::size_t stage_of(Id tagged) const { return stage_of_[tagged]; }
  Id inner_of(Id tagged) const { return static_cast<Id>(tagged - offsets_[stage_of_[tagged]]); }
  Id tag(Id inner, std::size_t stage) const { return static_cast<Id>(offsets_[stage] + inner); }

  /// ι_j : M_j -> carrier.
  const MonotoneMap& injection(std::size_t stage) const { return injections_[stage]; }

  /// x^to for x in M_from, from <= to.
  Id push(Id x, std::size_t from, std::size_t to) const;

 private:
  Series series_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> stage_of_;
  PosetPtr carrier_;
  std::vector<MonotoneMap> injections_;
};

LaxSum lax_sum(const Series& series);

/// f'_n : Σ_n M_n -> Σ_{n+1} M_{n+1}, (x, j) ↦ (x, j). `next` must be the lax
/// sum of prev's series extended by one map (CompositionError otherwise).
MonotoneMap induced_map(const LaxSum& prev, const LaxSum& next);

struct Extension {
  LaxSum next;
  MonotoneMap induced;
};

/// Appends f_n to prev's series, returning the new lax sum and f'_n.
Extension extend(const LaxSum& prev, const MonotoneMap& f_n);
MonotoneMap induced_map(const LaxSum& prev, const MonotoneMap& f_n);

/// A square of four maps over the span (top: K -> M, left: K -> N) with legs
/// bottom: N -> L and right: M -> L.
struct Square {
  MonotoneMap top;
  MonotoneMap left;
  MonotoneMap bottom;
  MonotoneMap right;
};

/// bottom ∘ left <= right ∘ top, pointwise.
bool lax_commutes(const Square& s);

/// True iff the square is a lax pushout: both legs order-reflecting with
/// disjoint images covering L, bottom's image down-closed, and
/// bottom(a) <= right(b) iff some c in K has a <= left(c) and top(c) <= b.
bool verify_lax_pushout(const Square& s);

struct LaxPushout {
  PosetPtr carrier;
  MonotoneMap leg_from_n;  // f' : N -> L, a ↦ (a, 1)
  MonotoneMap leg_from_m;  // g' : M -> L, b ↦ (b, 2)
  MonotoneMap f;           // K -> M
  MonotoneMap g;           // K -> N

  Square square() const { return {f, g, leg_from_n, leg_from_m}; }
};

/// Concrete lax pushout of the span (f: K -> M, g: K -> N).
LaxPushout lax_pushout(const MonotoneMap& f, const MonotoneMap& g);

/// Series of lattices whose maps preserve binary joins and the bottom, reflect
/// the order, and have down-closed images. Axioms are checked eagerly
/// (SeriesAxiomError).
class LatticeSeries {
 public:
  explicit LatticeSeries(Series series);

  const Series& series() const { return series_; }
  const LatticeTables& tables(std::size_t stage) const { return tables_[stage]; }
  std::size_t length() const { return series_.length(); }

 private:
  Series series_;
  std::vector<LatticeTables> tables_;
};

/// The transport symbols x^k (push forward along the series) and y^(-j)
/// (unique preimage under the composite, when it exists).
class TransportContext {
 public:
  explicit TransportContext(std::shared_ptr<const LatticeSeries> series);
  explicit TransportContext(Series series);

  const LatticeSeries& lattice_series() const { return *series_; }

  /// x^to for x in M_from, from <= to.
  Id up(Id x, std::size_t from, std::size_t to) const;
  /// y^(-to) for y in M_from, to <= from; NotInImageError when undefined.
  Id down(Id y, std::size_t from, std::size_t to) const;
  bool in_image(Id y, std::size_t from, std::size_t to) const;

 private:
  std::shared_ptr<const LatticeSeries> series_;
  std::vector<std::vector<Id>> inverse_;  // inverse_[j][y] : preimage under maps[j], or npos
};

/// x^to when to >= from, otherwise x^(-to).
Id transport(const TransportContext& ctx, Id x, std::size_t from, std::size_t to);

/// Meets and joins of a lax sum over a lattice series computed stage-wise:
/// (x,j) ∨ (y,k) = (x^k ∨ y, k) and (x,j) ∧ (y,k) = ((x^k ∧ y)^(-j), j), j <= k.
class LaxSumLattice {
 public:
  explicit LaxSumLattice(const LaxSum& sum);  // SeriesAxiomError

  std::pair<Id, Id> meet_join(Id a, Id b) const;
  const TransportContext& transport() const { return ctx_; }

 private:
  const LaxSum* sum_;
  TransportContext ctx_;
};

std::pair<Id, Id> lax_sum_meet_join(const LaxSum& s, Id a, Id b);

/// Iterated stacking Σ^k_j for k = 0..depth and j = 0..n of a base series.
class StackTower {
 public:
  StackTower(const Series& base, std::size_t depth);

  std::size_t depth() const { return levels_.size() - 1; }
  std::size_t length() const { return levels_.front().length(); }

  /// Row k of the tower: Σ^k_0 -> Σ^k_1 -> ... -> Σ^k_n.
  const Series& level(std::size_t k) const { return levels_[k]; }
  const PosetPtr& object(std::size_t k, std::size_t j) const { return levels_[k].objects[j]; }
  /// Σ^k_j as a lax sum over level k - 1 (k >= 1).
  const LaxSum& sum(std::size_t k, std::size_t j) const { return sums_[k - 1][j]; }

  /// The square with corners Σ^k_j, Σ^k_{j+1}, Σ^{k+1}_j, Σ^{k+1}_{j+1}.
  Square square(std::size_t k, std::size_t j) const;

 private:
  std::vector<Series> levels_;
  std::vector<std::vector<LaxSum>> sums_;
};

/// Σ^k_n L_n of a base series providing at least n maps.
PosetPtr iterate_stacking(const Series& base, std::size_t k, std::size_t n);

}  // namespace latstack
