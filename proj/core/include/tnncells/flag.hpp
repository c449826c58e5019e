#pragma once

// Partial flag manifold combinatorics for a fixed subset H of the generator
// indices.
//
// Cells of the nonnegative partial flag manifold of type H carry three
// equivalent coordinate systems:
//   triple (a, b, c):  a in w_I W^H (maximal coset representatives),
//                      b in W^H (minimal representatives), c in W_H,
//                      subject to a <= bc, equivalently a c^{-1} <= b;
//   (r, t)   = (a, bc)       with r in w_I W^H, r <= t;
//   (r', t') = (a c^{-1}, b) with t' in W^H, r' <= t'.
// FlagCellLabel stores all three; the conversions are the alpha maps.

#include <map>
#include <vector>

#include "tnncells/springer.hpp"
#include "tnncells/weyl.hpp"

namespace tnncells {

struct FlagCellLabel {
  IndexSet H;
  WeylElement r, t;
  WeylElement r_prime, t_prime;
  WeylElement a, b, c;
  int dim;  // |t| - |r| = |t'| - |r'|
  friend bool operator==(const FlagCellLabel& x, const FlagCellLabel& y) {
    return x.H == y.H && x.r == y.r && x.t == y.t;
  }
};

// W^H, ordered by element index; |W| / |W_H| members.
std::vector<WeylElement> minimal_reps(const WeylGroup& g, IndexSet H);
// w_I W^H = elements whose right descents contain H.
std::vector<WeylElement> maximal_reps(const WeylGroup& g, IndexSet H);

FlagCellLabel label_from_rt(const WeylGroup& g, IndexSet H, WeylElement r, WeylElement t);
FlagCellLabel label_from_rpt(const WeylGroup& g, IndexSet H, WeylElement r_prime,
                             WeylElement t_prime);
FlagCellLabel label_from_triple(const WeylGroup& g, IndexSet H, WeylElement a,
                                WeylElement b, WeylElement c);

struct FlagAtlas {
  IndexSet H;
  PieceLabel piece;
  std::vector<FlagCellLabel> cells;  // sorted by (dim, r word, t word)
  std::map<int, std::size_t> dim_histogram;
};

std::vector<FlagCellLabel> enumerate_ZH(const WeylGroup& g, IndexSet H, IndexSet J,
                                        IndexSet J_prime);
FlagAtlas flag_atlas(const WeylGroup& g, IndexSet H, const PieceLabel& piece);

// The always-present zero-dimensional member of enumerate_ZH:
// r' = w_J w_{J and H}, r = r' w_H.
FlagCellLabel flag_zero_dim_witness(const WeylGroup& g, IndexSet H, IndexSet J,
                                    IndexSet J_prime);

struct FlagXiSets {
  IndexSet y_side;  // {i : s_i t <= t, r not<= s_i t}
  IndexSet x_side;  // {j : r' <= s_j r', s_j r' not<= t'}
};
FlagXiSets flag_xi(const FlagCellLabel& label);
bool flag_xi_contains(const FlagXiSets& xi, const PieceLabel& piece);

// (r, s) action: s stars the t-coordinate, r circs the r'-coordinate, with
// reconversion through the alpha maps after each letter; s is applied first
// (the two coordinate actions commute for disjoint supports).
FlagCellLabel act_flag_cell(WeylElement r, WeylElement s, const FlagCellLabel& label);

}  // namespace tnncells
