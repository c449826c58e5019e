#include "tnncells/subexpression.hpp"

#include <random>

namespace tnncells {
namespace {

void check_inputs(WeylElement v, WeylElement w, std::span<const int> word) {
  require_same_group(v, w);
  const WeylGroup& g = v.group();
  if (!is_reduced_word(g, word))
    throw validation_error("word is not reduced");
  if (g.from_word(word) != w)
    throw validation_error("word is not a reduced word of w");
}

}  // namespace

bool is_reduced_word(const WeylGroup& g, std::span<const int> word) {
  return g.from_word(word).length() == int(word.size());
}

Subexpression positive_subexpression(WeylElement v, WeylElement w,
                                     std::span<const int> word) {
  check_inputs(v, w, word);
  const WeylGroup& g = v.group();
  if (!bruhat_leq(v, w))
    throw validation_error("no positive subexpression: v is not below w");

  const std::size_t m = word.size();
  std::vector<std::uint8_t> taken(m, 0);
  // Greedy right-to-left walk: take a letter exactly when it is a right
  // descent of the running element.
  std::size_t cur = v.index();
  for (std::size_t k = m; k-- > 0;) {
    std::size_t down = g.right_mul(cur, word[k]);
    if (g.length(down) < g.length(cur)) {
      taken[k] = 1;
      cur = down;
    }
  }
  if (cur != 0)
    throw verification_error("descent walk did not terminate at the identity");

  // Re-check the literal defining conditions on the prefix chain.
  Subexpression out;
  out.word.assign(word.begin(), word.end());
  out.taken = std::move(taken);
  out.prefix.reserve(m + 1);
  out.prefix.push_back(g.identity());
  std::size_t p = 0;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t up = g.right_mul(p, word[k]);
    if (g.length(up) < g.length(p))
      throw verification_error("positivity condition failed on a prefix");
    if (out.taken[k]) p = up;
    out.prefix.push_back(g.element(p));
  }
  if (p != v.index())
    throw verification_error("prefix products do not multiply to v");
  return out;
}

std::vector<std::vector<std::uint8_t>> positive_masks_brute_force(
    WeylElement v, WeylElement w, std::span<const int> word) {
  check_inputs(v, w, word);
  const WeylGroup& g = v.group();
  const std::size_t m = word.size();
  if (m > 24) throw resource_error("word too long for the 2^m mask scan");

  std::vector<std::vector<std::uint8_t>> hits;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::size_t p = 0;
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      std::size_t up = g.right_mul(p, word[k]);
      if (!g.leq(p, up)) ok = false;  // p < p s_{i_k} must hold at every k
      if (mask & (std::uint64_t(1) << k)) p = up;
    }
    if (ok && p == v.index()) {
      std::vector<std::uint8_t> bits(m);
      for (std::size_t k = 0; k < m; ++k) bits[k] = (mask >> k) & 1;
      hits.push_back(std::move(bits));
    }
  }
  return hits;
}

bool first_letter_taken(WeylElement v, WeylElement w, std::span<const int> word) {
  check_inputs(v, w, word);
  if (word.empty()) throw validation_error("empty word has no first letter");
  const WeylGroup& g = v.group();
  if (!bruhat_leq(v, w))
    throw validation_error("v is not below w");
  return !g.leq(v.index(), g.left_mul(word[0], w.index()));
}

std::vector<std::vector<int>> all_reduced_words(WeylElement w) {
  if (w.is_identity()) return {{}};
  const WeylGroup& g = w.group();
  std::vector<std::vector<int>> out;
  for (int i : w.left_descents().to_vector()) {
    WeylElement down = g.element(g.left_mul(i, w.index()));
    for (auto& tail : all_reduced_words(down)) {
      tail.insert(tail.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

std::vector<int> random_reduced_word(WeylElement w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const WeylGroup& g = w.group();
  std::vector<int> word;
  std::size_t cur = w.index();
  while (g.length(cur) > 0) {
    auto descents = g.left_descents(cur).to_vector();
    int i = descents[rng() % descents.size()];
    word.push_back(i);
    cur = g.left_mul(i, cur);
  }
  return word;
}

}  // namespace tnncells
