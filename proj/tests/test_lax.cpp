#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "latstack/chain_count.hpp"
#include "latstack/hypercube.hpp"
#include "latstack/lax.hpp"
#include "oracles.hpp"

using namespace latstack;

namespace {

PosetPtr chain_ptr(std::size_t m) { return share(fixtures::chain(m)); }

// Bottom-segment inclusion C_i -> C_{i+1}.
MonotoneMap bottom_inclusion(const PosetPtr& from, const PosetPtr& to) {
  std::vector<Id> assign(from->size());
  for (Id x = 0; x < assign.size(); ++x) assign[x] = x;
  return MonotoneMap(from, to, assign);
}

// Series used for the lattice-series properties.
std::vector<Series> lattice_series_samples() {
  std::vector<Series> out;
  out.push_back(column_series(3, 1));
  out.push_back(column_series(2, 2));
  out.push_back(row_series(2, 3));
  out.push_back(row_series(1, 4));
  auto c0 = chain_ptr(0), c1 = chain_ptr(1), c2 = chain_ptr(2), c3 = chain_ptr(3);
  out.push_back(make_series({bottom_inclusion(c0, c1), bottom_inclusion(c1, c2), bottom_inclusion(c2, c3)}));
  out.push_back(make_series({MonotoneMap::identity(c1), MonotoneMap::identity(c1)}));
  return out;
}

}  // namespace

TEST_CASE("make_map") {
  auto c1 = chain_ptr(1), c2 = chain_ptr(2);
  CHECK_NOTHROW(MonotoneMap::identity(c2));
  CHECK_NOTHROW(make_map(c1, c2, {0, 2}));
  try {
    make_map(c1, c1, {1, 0});
    FAIL("expected NotMonotoneError");
  } catch (const NotMonotoneError& e) {
    CHECK(e.violating_pair == std::pair<std::uint32_t, std::uint32_t>{0, 1});
  }
  CHECK_THROWS_AS(make_map(c1, c2, {0}), RangeError);
  CHECK_THROWS_AS(make_map(c1, c2, {0, 3}), RangeError);
}

TEST_CASE("compose and pointwise order") {
  auto c0 = chain_ptr(0), c1 = chain_ptr(1), c2 = chain_ptr(2);
  const auto f = bottom_inclusion(c0, c1);
  const auto g = bottom_inclusion(c1, c2);
  const auto gf = compose(g, f);
  CHECK(gf(0) == 0);
  CHECK(&gf.target() == c2.get());
  CHECK_THROWS_AS(compose(f, g), CompositionError);
  CHECK(pointwise_leq(g, make_map(c1, c2, {1, 2})));
  CHECK_FALSE(pointwise_leq(make_map(c1, c2, {1, 2}), g));
}

TEST_CASE("map_properties") {
  auto c1 = chain_ptr(1), c2 = chain_ptr(2), c0 = chain_ptr(0);
  const auto incl = map_properties(bottom_inclusion(c1, c2));
  CHECK(incl.order_reflecting);
  CHECK(incl.down_closed_image);
  CHECK(incl.join_preserving);
  CHECK(incl.bottom_preserving);

  const auto gap = map_properties(make_map(c1, c2, {0, 2}));
  CHECK_FALSE(gap.down_closed_image);
  CHECK(gap.order_reflecting);

  const auto constant = map_properties(make_map(c2, c0, {0, 0, 0}));
  CHECK_FALSE(constant.order_reflecting);

  auto anti = share(fixtures::antichain(2));
  CHECK_THROWS_AS(map_properties(make_map(anti, c1, {0, 1})), NotLatticeError);
}

TEST_CASE("lax_sum small cases") {
  auto c0 = chain_ptr(0);
  const LaxSum single(make_series(c0));
  CHECK(single.carrier().same_order(*c0));

  const auto id = MonotoneMap::identity(c0);
  const LaxSum three(make_series({id, id}));
  CHECK(three.carrier().same_order(fixtures::chain(2)));
  CHECK(three.carrier().name(2) == "(0,2)");

  const LaxSum cubes(column_series(2, 1));
  CHECK(cubes.carrier().size() == 7);
  CHECK(count_maximal_chains(cubes.carrier()) == 3);

  auto c1 = chain_ptr(1), c2 = chain_ptr(2);
  Series broken;
  broken.objects = {c0, c1, c2};
  broken.maps = {bottom_inclusion(c0, c1), bottom_inclusion(c0, c1)};
  CHECK_THROWS_AS(LaxSum{broken}, CompositionError);
  CHECK_THROWS_AS(make_series({bottom_inclusion(c0, c1), bottom_inclusion(c0, c1)}), CompositionError);
}

TEST_CASE("lax_sum order matches the defining rule") {
  for (const Series& s : lattice_series_samples()) {
    const LaxSum sum(s);
    const Poset& l = sum.carrier();
    for (Id a = 0; a < l.size(); ++a) {
      for (Id b = 0; b < l.size(); ++b) {
        const std::size_t j = sum.stage_of(a), k = sum.stage_of(b);
        bool want = false;
        if (j <= k) {
          Id x = sum.inner_of(a);
          for (std::size_t t = j; t < k; ++t) x = s.maps[t](x);
          want = s.objects[k]->leq(x, sum.inner_of(b));
        }
        CHECK(l.leq(a, b) == want);
      }
    }
    for (std::size_t j = 0; j + 1 < sum.stages(); ++j) {
      CHECK(pointwise_leq(sum.injection(j), compose(sum.injection(j + 1), s.maps[j])));
    }
  }
}

TEST_CASE("induced_map") {
  auto c0 = chain_ptr(0);
  const LaxSum base(make_series(c0));
  const auto f0 = induced_map(base, MonotoneMap::identity(c0));
  CHECK(f0.target().size() == 2);
  CHECK(f0(0) == 0);

  const Series cubes = column_series(3, 1);
  const LaxSum two(cubes.prefix(2));
  const auto ext = extend(two, cubes.maps[2]);
  CHECK(two.carrier().size() == 7);
  CHECK(ext.next.carrier().size() == 15);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(LaxSum(column_series(n, 1)).carrier().size() == (std::size_t{1} << (n + 1)) - 1);
  }

  for (const Series& s : lattice_series_samples()) {
    LaxSum prev(s.prefix(0));
    for (std::size_t j = 0; j < s.length(); ++j) {
      auto e = extend(prev, s.maps[j]);
      const auto props = map_properties(e.induced);
      CHECK(props.order_reflecting);
      CHECK(props.down_closed_image);
      CHECK(props.join_preserving);
      CHECK(props.bottom_preserving);
      prev = std::move(e.next);
    }
  }

  CHECK_THROWS_AS(induced_map(two, cubes.maps[0]), CompositionError);
}

TEST_CASE("iterate_stacking") {
  const Series cubes = column_series(4, 1);
  CHECK(iterate_stacking(cubes, 0, 3)->same_order(*cubes.objects[3]));
  CHECK(count_maximal_chains(*iterate_stacking(column_series(4, 0), 2, 4)) == 14);
  CHECK(count_maximal_chains(*iterate_stacking(cubes, 2, 2)) == 7);
  const auto deep = iterate_stacking(cubes, 2, 3);
  CHECK(count_maximal_chains(*deep) == oracle::chain_count(*deep));
  CHECK_THROWS_AS(iterate_stacking(cubes, 1, 5), CompositionError);
}

TEST_CASE("lax_sum_meet_join agrees with the order") {
  for (const Series& s : lattice_series_samples()) {
    const LaxSum sum(s);
    const LaxSumLattice formulas(sum);
    const Poset& l = sum.carrier();
    for (Id a = 0; a < l.size(); ++a) {
      for (Id b = 0; b < l.size(); ++b) {
        const auto got = formulas.meet_join(a, b);
        CHECK(got == meet_join(l, a, b));
        if (sum.stage_of(a) == sum.stage_of(b)) {
          const auto inner = meet_join(*s.objects[sum.stage_of(a)], sum.inner_of(a), sum.inner_of(b));
          CHECK(got.first == sum.tag(inner.first, sum.stage_of(a)));
          CHECK(got.second == sum.tag(inner.second, sum.stage_of(a)));
        }
      }
    }
    // (top of M_0, 0) joined with (y, k) is (top^k v y, k).
    const Id top0 = bottom_top(*s.objects[0]).second;
    for (Id b = 0; b < l.size(); ++b) {
      const std::size_t k = sum.stage_of(b);
      const Id pushed = sum.push(top0, 0, k);
      const Id expect = sum.tag(meet_join(*s.objects[k], pushed, sum.inner_of(b)).second, k);
      CHECK(lax_sum_meet_join(sum, sum.tag(top0, 0), b).second == expect);
    }
  }
}

TEST_CASE("lattice series axioms are checked eagerly") {
  auto c1 = chain_ptr(1), c2 = chain_ptr(2), c0 = chain_ptr(0);
  CHECK_THROWS_AS(LatticeSeries(make_series({make_map(c1, c2, {0, 2})})), SeriesAxiomError);
  CHECK_THROWS_AS(LatticeSeries(make_series({make_map(c2, c0, {0, 0, 0})})), SeriesAxiomError);
  CHECK_THROWS_AS(LatticeSeries(make_series({make_map(c1, c2, {1, 2})})), SeriesAxiomError);
  auto anti = share(fixtures::antichain(2));
  CHECK_THROWS_AS(LatticeSeries(make_series(anti)), SeriesAxiomError);
  CHECK_THROWS_AS(LaxSumLattice(LaxSum(make_series({make_map(c1, c2, {0, 2})}))), SeriesAxiomError);
}

TEST_CASE("transport") {
  const Series s = column_series(3, 1);
  const auto c1 = power(1, 1), c3 = power(1, 3);
  const TransportContext ctx(s);
  const Id one = c1.id_of({1});
  CHECK(ctx.up(one, 1, 1) == one);
  CHECK(c3.tuples[ctx.up(one, 1, 3)] == Tuple{0, 0, 1});
  CHECK(c1.tuples[transport(ctx, ctx.up(one, 1, 3), 3, 1)] == Tuple{1});
  CHECK_THROWS_AS(ctx.down(c3.id_of({1, 0, 0}), 3, 1), NotInImageError);
  CHECK_FALSE(ctx.in_image(c3.id_of({1, 0, 0}), 3, 1));
}

TEST_CASE("the seven transport rules") {
  for (const Series& s : lattice_series_samples()) {
    const auto ls = std::make_shared<const LatticeSeries>(s);
    const TransportContext ctx(ls);
    const std::size_t n = s.length();
    auto size = [&](std::size_t j) { return static_cast<Id>(s.objects[j]->size()); };
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        for (std::size_t k = j; k <= n; ++k) {
          for (Id x = 0; x < size(i); ++x) {
            CHECK(ctx.up(ctx.up(x, i, j), j, k) == ctx.up(x, i, k));
            CHECK(ctx.down(ctx.up(x, i, k), k, j) == ctx.up(x, i, j));
          }
          for (Id x = 0; x < size(k); ++x) {
            if (!ctx.in_image(x, k, i)) continue;
            CHECK(ctx.up(ctx.down(x, k, i), i, j) == ctx.down(x, k, j));
          }
          for (Id x = 0; x < size(j); ++x) {
            if (!ctx.in_image(x, j, i)) continue;
            CHECK(ctx.down(ctx.up(x, j, k), k, i) == ctx.down(x, j, i));
          }
        }
        const auto& ti = ls->tables(i);
        const auto& tj = ls->tables(j);
        for (Id x = 0; x < size(i); ++x) {
          for (Id y = 0; y < size(i); ++y) {
            CHECK(ctx.up(ti.meet(x, y), i, j) == tj.meet(ctx.up(x, i, j), ctx.up(y, i, j)));
            CHECK(ctx.up(ti.join(x, y), i, j) == tj.join(ctx.up(x, i, j), ctx.up(y, i, j)));
          }
        }
        // (x v y)^(-i) = x^(-i) v y^(-i) for x, y in M_j.
        for (Id x = 0; x < size(j); ++x) {
          for (Id y = 0; y < size(j); ++y) {
            const Id join = tj.join(x, y);
            if (!ctx.in_image(join, j, i)) continue;
            REQUIRE(ctx.in_image(x, j, i));
            REQUIRE(ctx.in_image(y, j, i));
            CHECK(ctx.down(join, j, i) == ti.join(ctx.down(x, j, i), ctx.down(y, j, i)));
          }
        }
      }
    }
  }
}

TEST_CASE("lax sums over lattice series keep the lattice structure") {
  for (const Series& s : lattice_series_samples()) {
    LaxSum prev(s.prefix(0));
    for (std::size_t n = 0; n <= s.length(); ++n) {
      const LaxSum sum(s.prefix(n));
      const Poset& l = sum.carrier();
      REQUIRE(l.size() <= 500);
      REQUIRE(is_lattice(l));
      CHECK(is_distributive(l));
      const LatticeTables tl(l);
      const auto [bottom, top] = bottom_top(l);
      CHECK(sum.injection(n)(bottom_top(*s.objects[n]).second) == top);
      CHECK(sum.injection(0)(bottom_top(*s.objects[0]).first) == bottom);
      for (std::size_t j = 0; j <= n; ++j) {
        const auto& iota = sum.injection(j);
        const LatticeTables tj(*s.objects[j]);
        for (Id x = 0; x < s.objects[j]->size(); ++x) {
          for (Id y = 0; y < s.objects[j]->size(); ++y) {
            CHECK(iota(tj.join(x, y)) == tl.join(iota(x), iota(y)));
            CHECK(iota(tj.meet(x, y)) == tl.meet(iota(x), iota(y)));
          }
        }
      }
      if (n > 0) {
        const auto f = induced_map(prev, s.maps[n - 1]);
        const auto props = map_properties(f);
        CHECK(props.bottom_preserving);
        CHECK(props.join_preserving);
      }
      prev = sum;
    }
  }
}

TEST_CASE("lax sum universal property on tiny series") {
  auto c0 = chain_ptr(0), c1 = chain_ptr(1);
  std::vector<Series> series{
      make_series({MonotoneMap::identity(c0), MonotoneMap::identity(c0)}),
      make_series({bottom_inclusion(c0, c1)}),
      make_series({MonotoneMap::identity(c1)}),
      make_series({make_map(c1, c0, {0, 0})}),
      make_series({make_map(c0, c1, {1})}),
  };
  std::vector<PosetPtr> targets{chain_ptr(1), chain_ptr(2), share(fixtures::diamond()),
                                share(fixtures::antichain(2)),
                                share(Poset::from_relation(3, std::vector<std::pair<Id, Id>>{{0, 1}, {0, 2}}))};

  // All monotone maps between two small posets.
  auto monotone_maps = [](const Poset& a, const Poset& b) {
    std::vector<std::vector<Id>> out;
    std::vector<Id> cur(a.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
      if (x == a.size()) {
        for (Id u = 0; u < a.size(); ++u)
          for (Id v = 0; v < a.size(); ++v)
            if (a.leq(u, v) && !b.leq(cur[u], cur[v])) return;
        out.push_back(cur);
        return;
      }
      for (Id y = 0; y < b.size(); ++y) {
        cur[x] = y;
        rec(x + 1);
      }
    };
    rec(0);
    return out;
  };

  std::size_t cocones = 0;
  for (const Series& s : series) {
    const LaxSum sum(s);
    const Poset& l = sum.carrier();
    REQUIRE(l.size() <= 60);
    for (const PosetPtr& target : targets) {
      // Every family (iota'_j) with iota'_j <= iota'_{j+1} o f_j.
      std::vector<std::vector<std::vector<Id>>> options;
      for (const auto& obj : s.objects) options.push_back(monotone_maps(*obj, *target));
      std::vector<std::size_t> pick(options.size(), 0);
      std::function<void(std::size_t)> choose = [&](std::size_t j) {
        if (j == options.size()) {
          for (std::size_t t = 0; t < s.length(); ++t) {
            for (Id x = 0; x < s.objects[t]->size(); ++x) {
              if (!target->leq(options[t][pick[t]][x], options[t + 1][pick[t + 1]][s.maps[t](x)])) return;
            }
          }
          ++cocones;
          std::size_t mediating = 0;
          for (const auto& u : monotone_maps(l, *target)) {
            bool ok = true;
            for (std::size_t t = 0; t < s.objects.size() && ok; ++t) {
              for (Id x = 0; x < s.objects[t]->size() && ok; ++x) {
                ok = u[sum.tag(x, t)] == options[t][pick[t]][x];
              }
            }
            mediating += ok;
          }
          CHECK(mediating == 1);
          return;
        }
        for (pick[j] = 0; pick[j] < options[j].size(); ++pick[j]) choose(j + 1);
      };
      choose(0);
    }
  }
  CHECK(cocones > 50);
}

TEST_CASE("lax_pushout") {
  auto c0 = chain_ptr(0), c1 = chain_ptr(1);
  const auto id = MonotoneMap::identity(c0);
  const auto trivial = lax_pushout(id, id);
  CHECK(trivial.carrier->same_order(fixtures::chain(1)));
  CHECK(verify_lax_pushout(trivial.square()));

  const auto incl = bottom_inclusion(c0, c1);
  const auto po = lax_pushout(incl, incl);
  const Poset& l = *po.carrier;
  CHECK(l.size() == 4);
  CHECK(verify_lax_pushout(po.square()));
  // Brute-force the cross rule.
  for (Id a = 0; a < 2; ++a) {
    for (Id b = 0; b < 2; ++b) {
      const bool exists = a <= incl(0) && incl(0) <= b;
      CHECK(l.leq(po.leg_from_n(a), po.leg_from_m(b)) == exists);
      CHECK_FALSE(l.leq(po.leg_from_m(b), po.leg_from_n(a)));
    }
  }
  const Id top_n = po.leg_from_n(1);
  CHECK_FALSE(l.comparable(top_n, po.leg_from_m(0)));
  CHECK_FALSE(l.comparable(top_n, po.leg_from_m(1)));

  CHECK_THROWS_AS(lax_pushout(incl, MonotoneMap::identity(c1)), CompositionError);
}

TEST_CASE("lax pushouts of the representation squares are the next sublattice") {
  for (auto [k, n, m] : std::vector<std::array<std::size_t, 3>>{{0, 1, 1}, {1, 2, 1}, {2, 2, 0}, {1, 1, 2}}) {
    const Square sq = column_square(k, n, m);
    const auto po = lax_pushout(sq.top, sq.left);
    IsoWitness w;
    w.forward.resize(po.carrier->size());
    w.backward.resize(po.carrier->size());
    for (Id a = 0; a < sq.left.target().size(); ++a) w.forward[po.leg_from_n(a)] = sq.bottom(a);
    for (Id b = 0; b < sq.top.target().size(); ++b) w.forward[po.leg_from_m(b)] = sq.right(b);
    for (Id x = 0; x < w.forward.size(); ++x) {
      REQUIRE(w.forward[x] < w.backward.size());
      w.backward[w.forward[x]] = x;
    }
    CHECK(verify_iso(*po.carrier, sq.bottom.target(), w));
  }
}

TEST_CASE("verify_lax_pushout") {
  const StackTower tower(column_series(2, 1), 1);
  CHECK(verify_lax_pushout(tower.square(0, 1)));
  CHECK(verify_lax_pushout(tower.square(0, 0)));
  CHECK(verify_lax_pushout(row_square(1, 1, 1)));
  CHECK(verify_lax_pushout(column_square(1, 2, 1)));

  // g' collapses two elements.
  auto c0 = chain_ptr(0), c1 = chain_ptr(1), c2 = chain_ptr(2);
  const auto incl = bottom_inclusion(c0, c1);
  const auto po = lax_pushout(incl, incl);
  Square bad = po.square();
  bad.right = make_map(c1, po.carrier, {po.leg_from_m(1), po.leg_from_m(1)});
  CHECK_FALSE(verify_lax_pushout(bad));

  // Legs that miss part of L.
  Square small{incl, incl, bottom_inclusion(c1, c2), make_map(c1, c2, {1, 2})};
  CHECK_FALSE(verify_lax_pushout(small));
  // Mismatched shape.
  Square crooked{incl, incl, incl, incl};
  CHECK_FALSE(verify_lax_pushout(crooked));
}

TEST_CASE("every square of an iterated stacking tower is a lax pushout") {
  for (std::size_t m = 0; m <= 2; ++m) {
    const StackTower tower(column_series(3, m), 2);
    for (std::size_t k = 0; k < tower.depth(); ++k) {
      for (std::size_t j = 0; j < tower.length(); ++j) {
        CHECK(verify_lax_pushout(tower.square(k, j)));
        CHECK(lax_commutes(tower.square(k, j)));
      }
    }
  }
  const StackTower rows(row_series(2, 3), 2);
  for (std::size_t k = 0; k < rows.depth(); ++k) {
    for (std::size_t j = 0; j < rows.length(); ++j) CHECK(verify_lax_pushout(rows.square(k, j)));
  }
}
