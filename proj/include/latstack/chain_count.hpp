#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "latstack/hypercube.hpp"
#include "latstack/poset.hpp"

namespace latstack {

using ChainCount = mpz_class;

/// Ids of a saturated chain, bottom first.
using Chain = std::vector<Id>;

/// Saturated bottom-to-top chains, by dynamic programming over covers.
/// NoExtremumError when the poset is not bounded.
ChainCount count_maximal_chains(const Poset& p);

/// Every maximal chain, lexicographic in the cover choices. Throws
/// CapExceededError carrying the exact count when it exceeds `cap`.
std::vector<Chain> enumerate_maximal_chains(const Poset& p, std::size_t cap);

/// True when consecutive ids are covers running from bottom to top.
bool is_maximal_chain(const Poset& p, const Chain& c);

ChainCount factorial(unsigned long n);

/// 0! 1! ... (k-1)! (kn)! / (n! (n+1)! ... (n+k-1)!), k >= 1.
ChainCount catalan_kdim(unsigned long k, unsigned long n);
/// (2n-1)!! with (-1)!! = 1.
ChainCount odd_double_factorial(unsigned long n);
/// (mn)! / ((m!)^n n!), m >= 1.
ChainCount m_partition_count(unsigned long m, unsigned long n);
/// (mn)! / (m!)^n.
ChainCount hypercube_count(unsigned long m, unsigned long n);
/// (3m)! 4^m / ((m+1)! (2m+1)!).
ChainCount kreweras(unsigned long m);

/// 0 = i_0 <= i_1 <= ... <= i_n = n with i_j <= j.
struct HeightSequence {
  std::vector<int> i;
};

bool is_height_sequence(const HeightSequence& h);
std::vector<HeightSequence> height_sequences(std::size_t n);
/// Product over j of the falling factorial (j+1-i_j) choose-ordered (i_{j+1}-i_j).
ChainCount height_sequence_weight(const HeightSequence& h);
ChainCount weighted_dyck_sum(std::size_t n);

enum class Axis { column, row };

std::string to_string(Axis a);
Axis parse_axis(const std::string& s);  // ParseError

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t count() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// One printed row: fixed block parameter and k, cells over the inner
/// parameter (n on the column axis, m on the row axis).
struct GridRow {
  std::size_t block = 0;  // m (column) or n (row)
  std::size_t k = 0;
  std::vector<std::optional<ChainCount>> cells;  // nullopt: over budget
};

struct SequenceGrid {
  Axis axis = Axis::column;
  Range k, n, m;
  std::vector<GridRow> rows;

  const Range& block_range() const { return axis == Axis::column ? m : n; }
  const Range& inner_range() const { return axis == Axis::column ? n : m; }
};

/// #Σ^k_n C^n_m on the column axis, #Σ^k_m C^n_m on the row axis, counted on
/// the tuple representation.
ChainCount count_cell(Axis axis, std::size_t k, std::size_t n, std::size_t m,
                      std::size_t budget = kDefaultBudget);

/// Cells that exceed the budget are left empty; the rest of the grid is still
/// filled. `threads` = 0 picks the hardware concurrency.
SequenceGrid grid(Axis axis, Range k, Range n, Range m, std::size_t budget = kDefaultBudget,
                  unsigned threads = 1);

}  // namespace latstack
