#include "latstack/lax.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace latstack {

namespace {

constexpr Id kNone = std::numeric_limits<Id>::max();

std::vector<std::uint64_t> image_bits(const MonotoneMap& f) {
  std::vector<std::uint64_t> bits(f.target().words_per_row());
  for (Id x : f.assignment()) bits[x / 64] |= std::uint64_t{1} << (x % 64);
  return bits;
}

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) {
  return (bits[i / 64] >> (i % 64)) & 1u;
}

}  // namespace

MonotoneMap::MonotoneMap(PosetPtr source, PosetPtr target, std::vector<Id> assign)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assign)) {
  if (assign_.size() != source_->size()) {
    throw RangeError("map assigns " + std::to_string(assign_.size()) + " values for a source of " +
                     std::to_string(source_->size()) + " elements");
  }
  for (Id v : assign_) {
    if (v >= target_->size()) throw RangeError("map value " + std::to_string(v) + " out of range");
  }
  for (Id x = 0; x < source_->size(); ++x) {
    const Id fx = assign_[x];
    for_each_bit(source_->up_set(x), [&](std::size_t y) {
      if (!target_->leq(fx, assign_[y])) throw NotMonotoneError(x, static_cast<Id>(y));
    });
  }
}

MonotoneMap MonotoneMap::identity(const PosetPtr& p) {
  std::vector<Id> ids(p->size());
  std::iota(ids.begin(), ids.end(), Id{0});
  return MonotoneMap(p, p, std::move(ids));
}

MonotoneMap make_map(PosetPtr source, PosetPtr target, std::vector<Id> assign) {
  return MonotoneMap(std::move(source), std::move(target), std::move(assign));
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  return a == b || (a && b && a->same_order(*b));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!same_poset(f.target_ptr(), g.source_ptr())) {
    throw CompositionError("cannot compose: target of the first map is not the source of the second");
  }
  std::vector<Id> assign(f.source().size());
  for (Id x = 0; x < assign.size(); ++x) assign[x] = g(f(x));
  return MonotoneMap(f.source_ptr(), g.target_ptr(), std::move(assign));
}

bool pointwise_leq(const MonotoneMap& a, const MonotoneMap& b) {
  if (!same_poset(a.source_ptr(), b.source_ptr()) || !same_poset(a.target_ptr(), b.target_ptr())) {
    return false;
  }
  for (Id x = 0; x < a.source().size(); ++x) {
    if (!a.target().leq(a(x), b(x))) return false;
  }
  return true;
}

bool is_order_reflecting(const MonotoneMap& f) {
  const Poset& s = f.source();
  for (Id x = 0; x < s.size(); ++x) {
    for (Id y = 0; y < s.size(); ++y) {
      if (f.target().leq(f(x), f(y)) && !s.leq(x, y)) return false;
    }
  }
  return true;
}

bool has_down_closed_image(const MonotoneMap& f) {
  const auto image = image_bits(f);
  for (Id x : f.assignment()) {
    auto down = f.target().down_set(x);
    for (std::size_t w = 0; w < down.size(); ++w) {
      if ((down[w] & ~image[w]) != 0) return false;
    }
  }
  return true;
}

MapProperties map_properties(const MonotoneMap& f) {
  MapProperties props;
  props.order_reflecting = is_order_reflecting(f);
  props.down_closed_image = has_down_closed_image(f);

  const LatticeTables src(f.source());
  const LatticeTables dst(f.target());
  props.join_preserving = true;
  for (Id x = 0; x < f.source().size() && props.join_preserving; ++x) {
    for (Id y = x + 1; y < f.source().size(); ++y) {
      if (f(src.join(x, y)) != dst.join(f(x), f(y))) {
        props.join_preserving = false;
        break;
      }
    }
  }
  if (f.source().empty() || f.target().empty()) {
    props.bottom_preserving = f.source().empty();
  } else {
    props.bottom_preserving = f(bottom_top(f.source()).first) == bottom_top(f.target()).first;
  }
  return props;
}

Series Series::prefix(std::size_t n) const {
  if (n > length()) throw CompositionError("series prefix longer than the series");
  Series out;
  out.objects.assign(objects.begin(), objects.begin() + static_cast<std::ptrdiff_t>(n + 1));
  out.maps.assign(maps.begin(), maps.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

Series make_series(PosetPtr single) {
  if (!single) throw CompositionError("series needs at least one poset");
  Series s;
  s.objects.push_back(std::move(single));
  return s;
}

Series make_series(std::vector<MonotoneMap> maps) {
  if (maps.empty()) throw CompositionError("series needs at least one poset");
  Series s;
  s.objects.push_back(maps.front().source_ptr());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (j > 0 && !same_poset(maps[j - 1].target_ptr(), maps[j].source_ptr())) {
      throw CompositionError("map " + std::to_string(j) + " does not start where map " +
                             std::to_string(j - 1) + " ends");
    }
    s.objects.push_back(maps[j].target_ptr());
  }
  s.maps = std::move(maps);
  return s;
}

LaxSum::LaxSum(Series series) : series_(std::move(series)) {
  if (series_.objects.empty()) throw CompositionError("lax sum of an empty series");
  if (series_.objects.size() != series_.maps.size() + 1) {
    throw CompositionError("series must have one more object than maps");
  }
  for (std::size_t j = 0; j < series_.maps.size(); ++j) {
    if (!same_poset(series_.objects[j], series_.maps[j].source_ptr()) ||
        !same_poset(series_.objects[j + 1], series_.maps[j].target_ptr())) {
      throw CompositionError("series map " + std::to_string(j) + " has mismatched endpoints");
    }
  }

  const std::size_t stages = series_.objects.size();
  offsets_.resize(stages + 1, 0);
  for (std::size_t j = 0; j < stages; ++j) offsets_[j + 1] = offsets_[j] + series_.objects[j]->size();
  const std::size_t total = offsets_[stages];
  Poset::check_size(total);

  stage_of_.resize(total);
  std::vector<std::string> labels(total);
  BitMatrix up(total);
  for (std::size_t j = 0; j < stages; ++j) {
    const Poset& mj = *series_.objects[j];
    for (Id x = 0; x < mj.size(); ++x) {
      const std::size_t row = offsets_[j] + x;
      stage_of_[row] = static_cast<std::uint32_t>(j);
      labels[row] = "(" + mj.name(x) + "," + std::to_string(j) + ")";
      Id cur = x;
      for (std::size_t k = j; k < stages; ++k) {
        for_each_bit(series_.objects[k]->up_set(cur),
                     [&](std::size_t y) { up.set(row, offsets_[k] + y); });
        if (k + 1 < stages) cur = series_.maps[k](cur);
      }
    }
  }
  carrier_ = share(Poset::from_up_sets(std::move(up), std::move(labels)));

  injections_.reserve(stages);
  for (std::size_t j = 0; j < stages; ++j) {
    std::vector<Id> assign(series_.objects[j]->size());
    for (Id x = 0; x < assign.size(); ++x) assign[x] = static_cast<Id>(offsets_[j] + x);
    injections_.emplace_back(series_.objects[j], carrier_, std::move(assign));
  }
}

Id LaxSum::push(Id x, std::size_t from, std::size_t to) const {
  for (std::size_t k = from; k < to; ++k) x = series_.maps[k](x);
  return x;
}

LaxSum lax_sum(const Series& series) { return LaxSum(series); }

MonotoneMap induced_map(const LaxSum& prev, const LaxSum& next) {
  const Series& a = prev.series();
  const Series& b = next.series();
  if (b.objects.size() != a.objects.size() + 1) {
    throw CompositionError("induced map needs a series extended by exactly one map");
  }
  for (std::size_t j = 0; j < a.objects.size(); ++j) {
    if (!same_poset(a.objects[j], b.objects[j])) {
      throw CompositionError("series stage " + std::to_string(j) + " differs");
    }
  }
  for (std::size_t j = 0; j < a.maps.size(); ++j) {
    if (!std::ranges::equal(a.maps[j].assignment(), b.maps[j].assignment())) {
      throw CompositionError("series map " + std::to_string(j) + " differs");
    }
  }
  // Stage offsets coincide, so (x, j) keeps its id.
  std::vector<Id> assign(prev.carrier().size());
  std::iota(assign.begin(), assign.end(), Id{0});
  return MonotoneMap(prev.carrier_ptr(), next.carrier_ptr(), std::move(assign));
}

Extension extend(const LaxSum& prev, const MonotoneMap& f_n) {
  if (!same_poset(f_n.source_ptr(), prev.series().objects.back())) {
    throw CompositionError("appended map does not start at the last stage");
  }
  Series s = prev.series();
  s.objects.push_back(f_n.target_ptr());
  s.maps.push_back(f_n);
  LaxSum next(std::move(s));
  MonotoneMap induced = induced_map(prev, next);
  return {std::move(next), std::move(induced)};
}

MonotoneMap induced_map(const LaxSum& prev, const MonotoneMap& f_n) {
  return extend(prev, f_n).induced;
}

namespace {

bool square_shape_ok(const Square& s) {
  return same_poset(s.top.source_ptr(), s.left.source_ptr()) &&
         same_poset(s.top.target_ptr(), s.right.source_ptr()) &&
         same_poset(s.left.target_ptr(), s.bottom.source_ptr()) &&
         same_poset(s.bottom.target_ptr(), s.right.target_ptr());
}

// reach[a] = union of up_M(f(c)) over c in K with a <= g(c).
std::vector<std::vector<std::uint64_t>> span_reach(const MonotoneMap& f, const MonotoneMap& g) {
  const Poset& k = f.source();
  const Poset& m = f.target();
  const Poset& n = g.target();
  std::vector<std::vector<std::uint64_t>> reach(n.size(),
                                                std::vector<std::uint64_t>(m.words_per_row()));
  for (Id c = 0; c < k.size(); ++c) {
    auto up_fc = m.up_set(f(c));
    // Every a below g(c) reaches up(f(c)).
    for_each_bit(n.down_set(g(c)), [&](std::size_t a) {
      auto& r = reach[a];
      for (std::size_t w = 0; w < r.size(); ++w) r[w] |= up_fc[w];
    });
  }
  return reach;
}

}  // namespace

bool lax_commutes(const Square& s) {
  if (!square_shape_ok(s)) return false;
  return pointwise_leq(compose(s.bottom, s.left), compose(s.right, s.top));
}

bool verify_lax_pushout(const Square& s) {
  if (!square_shape_ok(s)) return false;
  const Poset& l = s.bottom.target();
  if (!is_order_reflecting(s.bottom) || !is_order_reflecting(s.right)) return false;

  const auto from_n = image_bits(s.bottom);
  const auto from_m = image_bits(s.right);
  for (std::size_t w = 0; w < from_n.size(); ++w) {
    if ((from_n[w] & from_m[w]) != 0) return false;
  }
  if (popcount(from_n) + popcount(from_m) != l.size()) return false;
  if (!has_down_closed_image(s.bottom)) return false;

  const auto reach = span_reach(s.top, s.left);
  const Poset& m = s.top.target();
  for (Id a = 0; a < s.bottom.source().size(); ++a) {
    for (Id b = 0; b < m.size(); ++b) {
      if (l.leq(s.bottom(a), s.right(b)) != test_bit(reach[a], b)) return false;
    }
  }
  return true;
}

LaxPushout lax_pushout(const MonotoneMap& f, const MonotoneMap& g) {
  if (!same_poset(f.source_ptr(), g.source_ptr())) {
    throw CompositionError("lax pushout needs a span with a shared source");
  }
  const Poset& m = f.target();
  const Poset& n = g.target();
  const std::size_t total = n.size() + m.size();
  Poset::check_size(total);
  const auto reach = span_reach(f, g);

  BitMatrix up(total);
  std::vector<std::string> labels(total);
  for (Id a = 0; a < n.size(); ++a) {
    labels[a] = "(" + n.name(a) + ",1)";
    for_each_bit(n.up_set(a), [&](std::size_t a2) { up.set(a, a2); });
    for_each_bit(std::span<const std::uint64_t>(reach[a]),
                 [&](std::size_t b) { up.set(a, n.size() + b); });
  }
  for (Id b = 0; b < m.size(); ++b) {
    labels[n.size() + b] = "(" + m.name(b) + ",2)";
    for_each_bit(m.up_set(b), [&](std::size_t b2) { up.set(n.size() + b, n.size() + b2); });
  }
  auto carrier = share(Poset::from_up_sets(std::move(up), std::move(labels)));

  std::vector<Id> leg_n(n.size());
  std::iota(leg_n.begin(), leg_n.end(), Id{0});
  std::vector<Id> leg_m(m.size());
  std::iota(leg_m.begin(), leg_m.end(), static_cast<Id>(n.size()));
  return LaxPushout{carrier, MonotoneMap(g.target_ptr(), carrier, std::move(leg_n)),
                    MonotoneMap(f.target_ptr(), carrier, std::move(leg_m)), f, g};
}

LatticeSeries::LatticeSeries(Series series) : series_(std::move(series)) {
  tables_.reserve(series_.objects.size());
  for (std::size_t j = 0; j < series_.objects.size(); ++j) {
    try {
      tables_.emplace_back(*series_.objects[j]);
    } catch (const NotLatticeError& e) {
      throw SeriesAxiomError("stage " + std::to_string(j) + " is not a lattice: " + e.what());
    }
    if (series_.objects[j]->empty()) {
      throw SeriesAxiomError("stage " + std::to_string(j) + " is empty");
    }
  }
  for (std::size_t j = 0; j < series_.maps.size(); ++j) {
    const auto props = map_properties(series_.maps[j]);
    const char* failed = !props.order_reflecting    ? "is not order-reflecting"
                         : !props.down_closed_image ? "does not have a down-closed image"
                         : !props.join_preserving   ? "does not preserve binary joins"
                         : !props.bottom_preserving ? "does not preserve the bottom"
                                                    : nullptr;
    if (failed) throw SeriesAxiomError("series map " + std::to_string(j) + " " + failed);
  }
}

TransportContext::TransportContext(std::shared_ptr<const LatticeSeries> series)
    : series_(std::move(series)) {
  const Series& s = series_->series();
  inverse_.resize(s.maps.size());
  for (std::size_t j = 0; j < s.maps.size(); ++j) {
    inverse_[j].assign(s.maps[j].target().size(), kNone);
    for (Id x = 0; x < s.maps[j].source().size(); ++x) inverse_[j][s.maps[j](x)] = x;
  }
}

TransportContext::TransportContext(Series series)
    : TransportContext(std::make_shared<const LatticeSeries>(std::move(series))) {}

Id TransportContext::up(Id x, std::size_t from, std::size_t to) const {
  if (to < from) throw RangeError("upward transport to an earlier stage");
  const Series& s = series_->series();
  for (std::size_t k = from; k < to; ++k) x = s.maps[k](x);
  return x;
}

bool TransportContext::in_image(Id y, std::size_t from, std::size_t to) const {
  if (to > from) return false;
  for (std::size_t k = from; k > to; --k) {
    y = inverse_[k - 1][y];
    if (y == kNone) return false;
  }
  return true;
}

Id TransportContext::down(Id y, std::size_t from, std::size_t to) const {
  if (to > from) throw RangeError("downward transport to a later stage");
  const Id original = y;
  for (std::size_t k = from; k > to; --k) {
    y = inverse_[k - 1][y];
    if (y == kNone) {
      throw NotInImageError("element " + series_->series().objects[from]->name(original) +
                            " of stage " + std::to_string(from) + " has no preimage at stage " +
                            std::to_string(to));
    }
  }
  return y;
}

Id transport(const TransportContext& ctx, Id x, std::size_t from, std::size_t to) {
  return to >= from ? ctx.up(x, from, to) : ctx.down(x, from, to);
}

LaxSumLattice::LaxSumLattice(const LaxSum& sum) : sum_(&sum), ctx_(sum.series()) {}

std::pair<Id, Id> LaxSumLattice::meet_join(Id a, Id b) const {
  std::size_t j = sum_->stage_of(a);
  std::size_t k = sum_->stage_of(b);
  Id x = sum_->inner_of(a);
  Id y = sum_->inner_of(b);
  if (j > k) {
    std::swap(j, k);
    std::swap(x, y);
  }
  const LatticeTables& tk = ctx_.lattice_series().tables(k);
  const Id xk = ctx_.up(x, j, k);
  const Id join = sum_->tag(tk.join(xk, y), k);
  Id meet_inner;
  try {
    meet_inner = ctx_.down(tk.meet(xk, y), k, j);
  } catch (const NotInImageError& e) {
    throw SeriesAxiomError(std::string("meet formula undefined: ") + e.what());
  }
  return {sum_->tag(meet_inner, j), join};
}

std::pair<Id, Id> lax_sum_meet_join(const LaxSum& s, Id a, Id b) {
  return LaxSumLattice(s).meet_join(a, b);
}

StackTower::StackTower(const Series& base, std::size_t depth) {
  levels_.push_back(base);
  for (std::size_t k = 1; k <= depth; ++k) {
    const Series& prev = levels_.back();
    std::vector<LaxSum> sums;
    sums.reserve(prev.objects.size());
    Series next;
    sums.emplace_back(prev.prefix(0));
    next.objects.push_back(sums.back().carrier_ptr());
    for (std::size_t j = 0; j < prev.length(); ++j) {
      Extension ext = extend(sums.back(), prev.maps[j]);
      next.maps.push_back(std::move(ext.induced));
      sums.push_back(std::move(ext.next));
      next.objects.push_back(sums.back().carrier_ptr());
    }
    sums_.push_back(std::move(sums));
    levels_.push_back(std::move(next));
  }
}

Square StackTower::square(std::size_t k, std::size_t j) const {
  if (k + 1 > depth() || j + 1 > length()) throw RangeError("tower square out of range");
  return Square{levels_[k].maps[j], sum(k + 1, j).injection(j), levels_[k + 1].maps[j],
                sum(k + 1, j + 1).injection(j + 1)};
}

PosetPtr iterate_stacking(const Series& base, std::size_t k, std::size_t n) {
  if (base.length() < n) {
    throw CompositionError("base series provides " + std::to_string(base.length()) +
                           " maps, need " + std::to_string(n));
  }
  StackTower tower(base.prefix(n), k);
  return tower.object(k, n);
}

}  // namespace latstack
