#pragma once

#include <map>
#include <memory>
#include <random>
#include <vector>

#include "tnncells/weyl.hpp"

namespace testutil {

inline std::shared_ptr<const tnncells::WeylGroup> group(tnncells::DiagramType t, int rank) {
  static std::map<std::pair<char, int>, std::shared_ptr<const tnncells::WeylGroup>> cache;
  auto key = std::make_pair(static_cast<char>(t), rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, tnncells::WeylGroup::make(t, rank)).first;
  return it->second;
}

inline std::shared_ptr<const tnncells::WeylGroup> A(int rank) {
  return group(tnncells::DiagramType::A, rank);
}

inline std::shared_ptr<const tnncells::WeylGroup> D4() {
  return group(tnncells::DiagramType::D, 4);
}

inline tnncells::WeylElement el(const tnncells::WeylGroup& g, std::initializer_list<int> w) {
  return g.from_word(w);
}

// All elements below w in Bruhat order by the subword route: fold every
// subword of the canonical word of w.  Independent of the precomputed order.
inline std::vector<bool> below_by_subwords(const tnncells::WeylGroup& g,
                                           tnncells::WeylElement w) {
  const auto& word = w.word();
  std::vector<bool> below(g.order(), false);
  const std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::size_t p = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (std::size_t(1) << k)) p = g.right_mul(p, word[k]);
    below[p] = true;
  }
  return below;
}

}  // namespace testutil
