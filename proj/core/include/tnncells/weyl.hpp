#pragma once

// Finite simply laced Weyl groups, fully tabulated.
//
// A WeylGroup enumerates the whole group at construction time through the
// reflection representation (exact integer matrices) and precomputes Cayley
// tables, canonical reduced words, descent sets and the complete Bruhat
// order.  Supported diagrams keep |W| <= 720, so the tables are small and a
// context builds in well under a second.  A constructed group is immutable;
// it can be shared across threads without synchronisation.
//
// Elements are value handles (group pointer + table index).  The canonical
// word of an element is its lexicographically least reduced word; element
// indices sort by (length, canonical word), with the identity at index 0 and
// the longest element last.  All generator indices are 1-based.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tnncells/errors.hpp"
#include "tnncells/index_set.hpp"

namespace tnncells {

enum class DiagramType : char { A = 'A', D = 'D', E = 'E' };

class WeylGroup;

class WeylElement {
public:
  WeylElement() = default;

  const WeylGroup& group() const {
    if (!group_) throw validation_error("use of empty element handle");
    return *group_;
  }
  std::size_t index() const { return idx_; }
  bool valid() const { return group_ != nullptr; }

  int length() const;
  const std::vector<int>& word() const;
  IndexSet left_descents() const;
  IndexSet right_descents() const;
  IndexSet support() const;
  WeylElement inverse() const;
  bool is_identity() const { return idx_ == 0; }

  friend bool operator==(WeylElement a, WeylElement b) {
    return a.group_ == b.group_ && a.idx_ == b.idx_;
  }
  friend bool operator!=(WeylElement a, WeylElement b) { return !(a == b); }
  // Table order: by (length, canonical word).  Only meaningful within one group.
  friend bool operator<(WeylElement a, WeylElement b) { return a.idx_ < b.idx_; }

private:
  friend class WeylGroup;
  WeylElement(const WeylGroup* g, std::uint32_t idx) : group_(g), idx_(idx) {}

  const WeylGroup* group_ = nullptr;
  std::uint32_t idx_ = 0;
};

class WeylGroup {
public:
  // Supported: A_1 .. A_5 and D_4.  Anything else is rejected.
  static std::shared_ptr<const WeylGroup> make(DiagramType type, int rank);

  DiagramType type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t order() const { return size_; }
  IndexSet all_indices() const { return IndexSet::full(rank_); }

  // Cartan matrix, row-major rank x rank.
  const std::vector<int>& cartan() const { return cartan_; }
  // Positive roots in the simple-root basis, sorted by (height, coords).
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  WeylElement identity() const { return WeylElement(this, 0); }
  WeylElement longest() const { return WeylElement(this, std::uint32_t(size_ - 1)); }
  WeylElement longest(IndexSet H) const;
  WeylElement generator(int i) const;
  WeylElement element(std::size_t idx) const;
  WeylElement from_word(std::span<const int> word) const;
  WeylElement from_word(std::initializer_list<int> word) const {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  // Index-level tables.
  int length(std::size_t idx) const { return lengths_[idx]; }
  const std::vector<int>& word(std::size_t idx) const { return words_[idx]; }
  IndexSet left_descents(std::size_t idx) const { return IndexSet::from_bits(ldesc_[idx]); }
  IndexSet right_descents(std::size_t idx) const { return IndexSet::from_bits(rdesc_[idx]); }
  IndexSet support(std::size_t idx) const { return IndexSet::from_bits(supp_[idx]); }
  std::size_t inverse(std::size_t idx) const { return inv_[idx]; }
  std::size_t left_mul(int i, std::size_t idx) const { return lmul_[idx * rank_ + (i - 1)]; }
  std::size_t right_mul(std::size_t idx, int i) const { return rmul_[idx * rank_ + (i - 1)]; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const {  // Bruhat order
    return (bruhat_[b * bru_stride_ + (a >> 6)] >> (a & 63)) & 1u;
  }
  // Reflection representation matrix, row-major rank x rank.
  const std::vector<int>& matrix(std::size_t idx) const { return mats_[idx]; }

  void check_subset(IndexSet H) const {
    if (!H.subset_of(all_indices()))
      throw validation_error("index set exceeds the rank of the group");
  }

private:
  WeylGroup() = default;
  void build(DiagramType type, int rank);

  DiagramType type_ = DiagramType::A;
  int rank_ = 0;
  std::size_t size_ = 0;
  std::vector<int> cartan_;
  std::vector<std::vector<int>> pos_roots_;

  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> ldesc_, rdesc_, supp_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> lmul_, rmul_;
  std::vector<std::vector<int>> mats_;
  std::vector<std::uint64_t> bruhat_;
  std::size_t bru_stride_ = 0;
};

inline int WeylElement::length() const { return group().length(idx_); }
inline const std::vector<int>& WeylElement::word() const { return group().word(idx_); }
inline IndexSet WeylElement::left_descents() const { return group().left_descents(idx_); }
inline IndexSet WeylElement::right_descents() const { return group().right_descents(idx_); }
inline IndexSet WeylElement::support() const { return group().support(idx_); }
inline WeylElement WeylElement::inverse() const {
  return group().element(group().inverse(idx_));
}

void require_same_group(WeylElement a, WeylElement b);

inline WeylElement operator*(WeylElement a, WeylElement b) {
  require_same_group(a, b);
  return a.group().element(a.group().mul(a.index(), b.index()));
}

inline bool bruhat_leq(WeylElement v, WeylElement w) {
  require_same_group(v, w);
  return v.group().leq(v.index(), w.index());
}

// 0-Hecke monoid operations.  star picks the longer of w, s_i w; circ the
// shorter.  The element overloads apply the letters of u right-to-left, which
// is independent of the chosen reduced word.
WeylElement hecke_star(int i, WeylElement w);
WeylElement hecke_circ(int i, WeylElement v);
WeylElement hecke_star(WeylElement u, WeylElement w);
WeylElement hecke_circ(WeylElement u, WeylElement v);

// w = min_rep * tail with min_rep the shortest representative of w W_H and
// tail in W_H; lengths add.
struct CosetFactorization {
  WeylElement min_rep;
  WeylElement tail;
};
CosetFactorization coset_factorize(WeylElement w, IndexSet H);

// The involution (v, w) -> (w w_I, v w_I) on Bruhat-comparable pairs.
std::pair<WeylElement, WeylElement> w0_dual(WeylElement v, WeylElement w);

std::string diagram_name(DiagramType type, int rank);

}  // namespace tnncells
