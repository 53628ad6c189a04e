#pragma once

#include <utility>
#include <vector>

#include "latstack/poset.hpp"

namespace fixtures {

using latstack::Id;
using latstack::Poset;

inline Poset chain(std::size_t m) {
  std::vector<std::pair<Id, Id>> pairs;
  for (Id i = 0; i < m; ++i) pairs.emplace_back(i, i + 1);
  return Poset::from_relation(m + 1, pairs);
}

inline Poset antichain(std::size_t n) { return Poset::from_relation(n, {}); }

// bottom 0, middles 1..3, top 4
inline Poset m3() {
  std::vector<std::pair<Id, Id>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return Poset::from_relation(5, pairs);
}

// 0 < 1 < 2 < 4 and 0 < 3 < 4
inline Poset n5() {
  std::vector<std::pair<Id, Id>> pairs{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Poset::from_relation(5, pairs);
}

inline Poset diamond() { return latstack::product(chain(1), chain(1)); }

}  // namespace fixtures
