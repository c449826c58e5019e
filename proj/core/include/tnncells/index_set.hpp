#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tnncells/errors.hpp"

namespace tnncells {

// Subset of the simple-generator index set {1, ..., rank}.  Bit i-1 holds
// index i.  Range checks against a concrete rank happen at the point of use.
class IndexSet {
public:
  constexpr IndexSet() = default;

  static IndexSet of(std::initializer_list<int> indices) {
    IndexSet s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  static IndexSet of(const std::vector<int>& indices) {
    IndexSet s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  static constexpr IndexSet from_bits(std::uint32_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr IndexSet full(int rank) {
    IndexSet s;
    s.bits_ = (rank >= 32) ? ~0u : ((1u << rank) - 1u);
    return s;
  }

  IndexSet with(int i) const {
    check_index(i);
    return from_bits(bits_ | (1u << (i - 1)));
  }

  IndexSet without(int i) const {
    check_index(i);
    return from_bits(bits_ & ~(1u << (i - 1)));
  }

  bool contains(int i) const {
    return i >= 1 && i <= 32 && (bits_ & (1u << (i - 1)));
  }

  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr IndexSet intersect(IndexSet other) const {
    return from_bits(bits_ & other.bits_);
  }
  constexpr IndexSet unite(IndexSet other) const {
    return from_bits(bits_ | other.bits_);
  }
  constexpr IndexSet minus(IndexSet other) const {
    return from_bits(bits_ & ~other.bits_);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend constexpr bool operator==(IndexSet a, IndexSet b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(IndexSet a, IndexSet b) {
    return a.bits_ != b.bits_;
  }
  friend constexpr bool operator<(IndexSet a, IndexSet b) {
    return a.bits_ < b.bits_;
  }

private:
  static void check_index(int i) {
    if (i < 1 || i > 32) throw validation_error("generator index out of range");
  }

  std::uint32_t bits_ = 0;
};

}  // namespace tnncells
