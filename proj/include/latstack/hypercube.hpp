#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latstack/lax.hpp"
#include "latstack/poset.hpp"

namespace latstack {

/// Coordinates x_1..x_n, x_1 first.
using Tuple = std::vector<int>;

/// Ambient tuples a construction may enumerate before giving up.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

std::string tuple_label(const Tuple& t);

/// A set of tuples of C^dimension_height under the componentwise order.
/// Tuples are stored in lexicographic order, which is a linear extension;
/// poset ids index into `tuples`.
struct TupleLattice {
  std::size_t dimension = 0;
  std::size_t height = 0;
  std::vector<Tuple> tuples;
  std::vector<std::uint64_t> parent_ids;  // base-(height+1) code in the full power
  PosetPtr poset;

  std::size_t size() const { return tuples.size(); }
  std::uint64_t encode(const Tuple& t) const;
  std::optional<Id> find(const Tuple& t) const;
  /// find() that throws NotInImageError.
  Id id_of(const Tuple& t) const;
};

struct HypercubeLattice : TupleLattice {};

struct StarSublattice : TupleLattice {
  std::size_t k = 0, n = 0, m = 0;
};

struct RowStarSublattice : TupleLattice {
  std::size_t n = 0, k = 0, m = 0;
};

/// Tuples of C^dimension_height accepted by `keep`. SizeError when the full
/// power exceeds `budget` or the result exceeds kMaxPosetElements.
TupleLattice tuple_sublattice(std::size_t dimension, std::size_t height,
                              const std::function<bool(const Tuple&)>& keep,
                              std::size_t budget = kDefaultBudget);

HypercubeLattice chain(std::size_t m);
HypercubeLattice power(std::size_t m, std::size_t n, std::size_t budget = kDefaultBudget);

/// x_{i+1} < k implies x_i <= x_{i+1}.
bool satisfies_star(const Tuple& t, std::size_t k);
/// x_i <= x_{n+1} <= ... <= x_{n+k} for i <= n.
bool satisfies_row_star(const Tuple& t, std::size_t n, std::size_t k);
/// Each x_i equals k + 1 or is at most every later coordinate.
bool check_star_prime(const Tuple& t, std::size_t k);

/// C^{n*}_{k+m}.
StarSublattice star_sublattice(std::size_t k, std::size_t n, std::size_t m,
                               std::size_t budget = kDefaultBudget);
/// C^{n+k⋆}_m.
RowStarSublattice row_star_sublattice(std::size_t n, std::size_t k, std::size_t m,
                                      std::size_t budget = kDefaultBudget);

/// Componentwise meets and joins of members stay members.
bool closed_under_ambient_meet_join(const TupleLattice& l);
/// Every cover raises exactly one coordinate by exactly one.
bool covers_are_unit_steps(const TupleLattice& l);

struct ColumnEmbeddings {
  MonotoneMap vertical;    // C^{n*}_{k+m} -> C^{n*}_{k+1+m}, +1 on every coordinate
  MonotoneMap horizontal;  // C^{n*}_{k+m} -> C^{n+1*}_{k+m}, prepend 0
};

struct RowEmbeddings {
  MonotoneMap append;  // C^{n+k⋆}_m -> C^{n+k+1⋆}_m, append m
  MonotoneMap lift;    // C^{n+k⋆}_m -> C^{n+k⋆}_{m+1}, same coordinates
};

ColumnEmbeddings column_embeddings(std::size_t k, std::size_t n, std::size_t m,
                                   std::size_t budget = kDefaultBudget);
RowEmbeddings row_embeddings(std::size_t n, std::size_t k, std::size_t m,
                             std::size_t budget = kDefaultBudget);

/// top: K -> M prepends 0, left: K -> N adds 1, bottom: N -> L prepends 0,
/// right: M -> L adds 1, with K = C^{n*}_{k+m} and L = C^{n+1*}_{k+1+m}.
Square column_square(std::size_t k, std::size_t n, std::size_t m,
                     std::size_t budget = kDefaultBudget);
/// top: K -> M lifts, left: K -> N appends m, bottom: N -> L lifts,
/// right: M -> L appends m + 1, with K = C^{n+k⋆}_m and L = C^{n+k+1⋆}_{m+1}.
Square row_square(std::size_t n, std::size_t k, std::size_t m,
                  std::size_t budget = kDefaultBudget);

/// C^0_m -> C^1_m -> ... -> C^n_m, each map prepending 0.
Series column_series(std::size_t n, std::size_t m, std::size_t budget = kDefaultBudget);
/// C^n_0 -> C^n_1 -> ... -> C^n_m by inclusion.
Series row_series(std::size_t n, std::size_t m, std::size_t budget = kDefaultBudget);

/// Σ^k_n C^n_m built by iterated lax sums (column axis).
PosetPtr stacked_column(std::size_t k, std::size_t n, std::size_t m,
                        std::size_t budget = kDefaultBudget);
/// Σ^k_m C^n_m built by iterated lax sums (row axis).
PosetPtr stacked_row(std::size_t n, std::size_t k, std::size_t m,
                     std::size_t budget = kDefaultBudget);

struct ColumnIso {
  PosetPtr stacked;
  StarSublattice sublattice;
  IsoWitness witness;  // forward: stacked -> sublattice
};

struct RowIso {
  PosetPtr stacked;
  RowStarSublattice sublattice;
  IsoWitness witness;
};

/// d_{k,n,m}(x, j) = (0^{n-j}, d_{k-1,j,m}(x) + 1), with d_{0,n,m} and
/// d_{k,0,m} identities.
ColumnIso canonical_iso(std::size_t k, std::size_t n, std::size_t m,
                        std::size_t budget = kDefaultBudget);
/// d(x, j) = (d_{k-1,n,j}(x), j).
RowIso canonical_row_iso(std::size_t n, std::size_t k, std::size_t m,
                         std::size_t budget = kDefaultBudget);

}  // namespace latstack
