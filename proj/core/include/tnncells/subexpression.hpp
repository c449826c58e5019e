#pragma once

// Positive subexpressions of reduced words (Marsh-Rietsch).
//
// Fix v <= w and a reduced word (i_1, ..., i_m) of w.  A choice sequence
// t_k in {s_{i_k}, e} with prefix products p_k = t_1 ... t_k is positive when
// p_m = v and no letter position is a right descent of the preceding prefix:
// p_{k-1} < p_{k-1} s_{i_k} for all k.  Such a sequence exists and is unique
// precisely when v <= w; positive_subexpression computes it by the greedy
// right-to-left descent walk and re-checks the defining conditions, while
// positive_masks_brute_force scans all 2^m masks against the conditions
// literally and serves as the independent oracle.

#include <cstdint>
#include <span>
#include <vector>

#include "tnncells/weyl.hpp"

namespace tnncells {

struct Subexpression {
  std::vector<int> word;             // the fixed reduced word of w
  std::vector<std::uint8_t> taken;   // taken[k] == 1 iff t_{k+1} = s_{i_{k+1}}
  std::vector<WeylElement> prefix;   // p_0 = e, ..., p_m = v
};

Subexpression positive_subexpression(WeylElement v, WeylElement w,
                                     std::span<const int> word);

std::vector<std::vector<std::uint8_t>> positive_masks_brute_force(
    WeylElement v, WeylElement w, std::span<const int> word);

// Whether t_1 = s_{i_1}, decided without computing the subexpression:
// t_1 = e iff v <= s_{i_1} w.
bool first_letter_taken(WeylElement v, WeylElement w, std::span<const int> word);

bool is_reduced_word(const WeylGroup& g, std::span<const int> word);
std::vector<std::vector<int>> all_reduced_words(WeylElement w);
// One reduced word sampled by a seeded random descent walk.
std::vector<int> random_reduced_word(WeylElement w, std::uint64_t seed);

}  // namespace tnncells
