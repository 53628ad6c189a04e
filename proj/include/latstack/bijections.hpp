#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latstack/chain_count.hpp"
#include "latstack/hypercube.hpp"

namespace latstack {

/// A maximal chain written as its tuples, bottom first.
using TupleChain = std::vector<Tuple>;

TupleChain tuples_of(const TupleLattice& l, const Chain& c);
Chain ids_of(const TupleLattice& l, const TupleChain& c);

/// Letters are 1-based coordinate indices.
struct StackWord {
  std::vector<int> letters;

  friend bool operator==(const StackWord&, const StackWord&) = default;
  friend auto operator<=>(const StackWord&, const StackWord&) = default;
};

std::string to_string(const StackWord& w);

/// Throws InvalidWordError with the offending prefix length.
void validate_stack_word(const StackWord& w, std::size_t k, std::size_t n);

/// Chain of C^{n*}_{k+1}, read top-down: each step lowering coordinate i
/// emits i. NotMaximalError for anything but a maximal chain.
StackWord chain_to_word(const TupleChain& chain, std::size_t k, std::size_t n);
TupleChain word_to_chain(const StackWord& w, std::size_t k, std::size_t n);

/// Blocks sorted internally; blocks ordered by their least element.
struct MPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const MPartition&, const MPartition&) = default;
  friend auto operator<=>(const MPartition&, const MPartition&) = default;
};

MPartition normalized(MPartition p);
std::string to_string(const MPartition& p);
/// Throws InvalidPartitionError.
void validate_partition(const MPartition& p, std::size_t m, std::size_t n);

/// Chain of C^{n*}_m (one round of stacking over C^n_{m-1}). The step taken
/// t-th from the bottom gets label mn + 1 - t; coordinate i's labels form a block.
MPartition chain_to_partition(const TupleChain& chain, std::size_t n, std::size_t m);
/// Blocks ranked by their largest label drive coordinates n, n-1, ..., 1.
TupleChain partition_to_chain(const MPartition& p, std::size_t n, std::size_t m);

/// 0 is the diagonal step (1,...,1); i in 1..n is -e_i.
struct LatticeWalk {
  std::vector<int> steps;

  friend bool operator==(const LatticeWalk&, const LatticeWalk&) = default;
  friend auto operator<=>(const LatticeWalk&, const LatticeWalk&) = default;
};

inline constexpr int kDiag = 0;

std::string to_string(const LatticeWalk& w);
/// Throws InvalidWalkError.
void validate_walk(const LatticeWalk& w, std::size_t n, std::size_t m);

/// Chain of C^{n+1⋆}_m: raising coordinate i <= n is -e_i, raising n + 1 is
/// the diagonal step. The walk position is x_{n+1} - x_i.
LatticeWalk chain_to_walk(const TupleChain& chain, std::size_t n, std::size_t m);
TupleChain walk_to_chain(const LatticeWalk& w, std::size_t n, std::size_t m);

/// A Dyck path with one choice per up-step, 1 <= choice <= height after the step.
struct HermiteHistory {
  std::string path;          // 'U' / 'D'
  std::vector<int> choices;  // one per up-step, left to right

  friend bool operator==(const HermiteHistory&, const HermiteHistory&) = default;
  friend auto operator<=>(const HermiteHistory&, const HermiteHistory&) = default;
};

/// Up-steps are taken right to left; each is joined to its choice-th still
/// free down-step to the right, counted from the right. Positions are 1-based.
MPartition history_to_involution(const HermiteHistory& h);
HermiteHistory involution_to_history(const MPartition& p);

std::vector<StackWord> enumerate_stack_words(std::size_t k, std::size_t n);
std::vector<MPartition> enumerate_m_partitions(std::size_t m, std::size_t n);
std::vector<LatticeWalk> enumerate_walks(std::size_t n, std::size_t m);
std::vector<HermiteHistory> enumerate_histories(std::size_t n);

}  // namespace latstack
