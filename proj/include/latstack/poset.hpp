#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latstack/bit_matrix.hpp"
#include "latstack/errors.hpp"

namespace latstack {

using Id = std::uint32_t;

/// Largest poset that may be materialized as a dense order matrix.
inline constexpr std::size_t kMaxPosetElements = std::size_t{1} << 15;

/// A finite partially ordered set on the dense ids 0..size()-1.
///
/// The order is held as two bit matrices (up-sets and down-sets). Instances
/// are immutable once built and may be shared freely between threads.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the generating pairs.
  /// Throws RangeError on an out-of-range id and CycleError when the closure
  /// is not antisymmetric.
  static Poset from_relation(std::size_t size, std::span<const std::pair<Id, Id>> pairs,
                             std::vector<std::string> labels = {});

  /// Takes ownership of an up-set matrix (row x holds every y with x <= y).
  /// The matrix must already be transitive; the diagonal is added here and
  /// antisymmetry is checked (CycleError).
  static Poset from_up_sets(BitMatrix up, std::vector<std::string> labels = {});

  /// Builds the order from a predicate leq(x, y). The predicate must describe
  /// a transitive relation.
  template <class Leq>
  static Poset from_order(std::size_t size, Leq&& leq, std::vector<std::string> labels = {}) {
    check_size(size);
    BitMatrix up(size);
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        if (x == y || leq(static_cast<Id>(x), static_cast<Id>(y))) up.set(x, y);
      }
    }
    return from_up_sets(std::move(up), std::move(labels));
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool leq(Id x, Id y) const { return up_.test(x, y); }
  bool less(Id x, Id y) const { return x != y && up_.test(x, y); }
  bool comparable(Id x, Id y) const { return leq(x, y) || leq(y, x); }

  std::span<const std::uint64_t> up_set(Id x) const { return up_.row(x); }
  std::span<const std::uint64_t> down_set(Id x) const { return down_.row(x); }
  std::size_t up_count(Id x) const { return up_count_[x]; }
  std::size_t down_count(Id x) const { return down_count_[x]; }
  std::size_t words_per_row() const { return up_.words_per_row(); }

  /// Ids sorted so that x < y implies x appears before y.
  const std::vector<Id>& linear_extension() const { return extension_; }
  /// True when the identity ordering of ids is already a linear extension.
  bool ids_are_linear_extension() const { return ids_sorted_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The label of x, or its decimal id when the poset is unlabeled.
  std::string name(Id x) const;

  /// Same carrier size and identical order relation (labels are ignored).
  bool same_order(const Poset& other) const {
    return size_ == other.size_ && up_ == other.up_;
  }

  static void check_size(std::size_t size);

 private:
  std::size_t size_ = 0;
  BitMatrix up_;
  BitMatrix down_;
  std::vector<std::uint32_t> up_count_;
  std::vector<std::uint32_t> down_count_;
  std::vector<Id> extension_;
  bool ids_sorted_ = true;
  std::vector<std::string> labels_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Transitive reduction of the strict order: (x, y) is an edge when y covers x.
struct CoverDigraph {
  std::vector<std::vector<Id>> upper;  // upper[x]: elements covering x, ascending
  std::vector<std::vector<Id>> lower;  // lower[y]: elements covered by y, ascending

  std::size_t size() const { return upper.size(); }
  std::size_t edge_count() const;
  /// All cover pairs, sorted lexicographically.
  std::vector<std::pair<Id, Id>> edges() const;
  bool contains(Id x, Id y) const;
};

CoverDigraph covers(const Poset& p);

/// Unique minimum and maximum; NoExtremumError otherwise.
std::pair<Id, Id> bottom_top(const Poset& p);

/// Greatest lower bound and least upper bound of x and y; NotLatticeError when
/// either does not exist.
std::pair<Id, Id> meet_join(const Poset& p, Id x, Id y);

bool is_lattice(const Poset& p);

/// Dense meet and join tables of a lattice.
class LatticeTables {
 public:
  explicit LatticeTables(const Poset& p);  // throws NotLatticeError

  std::size_t size() const { return n_; }
  Id meet(Id x, Id y) const { return meet_[static_cast<std::size_t>(x) * n_ + y]; }
  Id join(Id x, Id y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<Id> meet_;
  std::vector<Id> join_;
};

/// Median identity (x∧y)∨(y∧z)∨(z∧x) = (x∨y)∧(y∨z)∧(z∨x) on all triples.
bool is_distributive(const Poset& p);
/// x∧(y∨z) = (x∧y)∨(x∧z) on all triples. Kept as an independent cross-check.
bool is_distributive_textbook(const Poset& p);

/// Componentwise order on pairs; (a, b) gets id a * q.size() + b.
Poset product(const Poset& p, const Poset& q);

struct IsoWitness {
  std::vector<Id> forward;   // a -> b
  std::vector<Id> backward;  // b -> a
};

bool verify_iso(const Poset& a, const Poset& b, const IsoWitness& w);

/// Exhaustive reflexivity/antisymmetry/transitivity check.
bool satisfies_order_axioms(const Poset& p);

}  // namespace latstack
