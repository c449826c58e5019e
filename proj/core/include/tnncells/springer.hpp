#pragma once

// Cell atlases of totally nonnegative Springer fibres.
//
// A unipotent totally nonnegative element lives in a unique piece labeled by
// a disjoint-support pair (z, z'); z carries the y-generator letters and z'
// the x-generator letters.  The Borel subgroups containing such an element
// form a union of cells of the nonnegative flag manifold whose labels (v, w)
// are cut out by descent conditions depending only on J = supp(z) and
// J' = supp(z'); enumerate_Z lists them.  The dual decomposition (which
// pieces fit inside a fixed cell) is given by xi_sets.
//
// Action convention: in an action pair (r, s), r is the x-side letter string
// acting by circ on v and s is the y-side string acting by star on w; a piece
// (z, z') therefore acts as the pair (r, s) = (z', z).

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tnncells/weyl.hpp"

namespace tnncells {

struct PieceLabel {
  WeylElement z;        // y-side
  WeylElement z_prime;  // x-side
  IndexSet J() const { return z.support(); }
  IndexSet J_prime() const { return z_prime.support(); }
  friend bool operator==(const PieceLabel& a, const PieceLabel& b) {
    return a.z == b.z && a.z_prime == b.z_prime;
  }
};

PieceLabel make_piece(WeylElement z, WeylElement z_prime);
PieceLabel piece_of(const WeylGroup& g, std::span<const int> z_word,
                    std::span<const int> zprime_word);
// Every disjoint-support pair, ordered by (z index, z' index).
std::vector<PieceLabel> all_pieces(const WeylGroup& g);

struct CellLabel {
  WeylElement v, w;
  int dim;  // |w| - |v|
  friend bool operator==(const CellLabel& a, const CellLabel& b) {
    return a.v == b.v && a.w == b.w;
  }
};

CellLabel make_cell(WeylElement v, WeylElement w);

struct CellAtlas {
  PieceLabel piece;
  std::vector<CellLabel> cells;  // sorted by (dim, v word, w word)
  std::map<int, std::size_t> dim_histogram;
};

std::vector<CellLabel> enumerate_Z(const WeylGroup& g, IndexSet J, IndexSet J_prime);
CellAtlas springer_atlas(const WeylGroup& g, const PieceLabel& piece);
// {(w, w) : J inside left descents of w inside I - J'}; the zero-dimensional
// part of every atlas with these supports.
std::vector<CellLabel> zero_dim_cells(const WeylGroup& g, IndexSet J, IndexSet J_prime);

struct XiData {
  WeylElement v, w;
  IndexSet H;        // {i : s_i w <= w, v not<= s_i w}
  IndexSet H_prime;  // {j : v <= s_j v, s_j v not<= w}
  int dim;           // |w_H| + |w_{H'}|
};
XiData xi_sets(WeylElement v, WeylElement w);
// Membership of a piece in Xi_{v,w}: supports contained in H, H'.
bool xi_contains(const XiData& xi, const PieceLabel& piece);

CellLabel act_cell(WeylElement r, WeylElement s, const CellLabel& cell);
CellLabel act_piece(const PieceLabel& piece, const CellLabel& cell);

// All (r, s) whose action maps the piece's atlas into itself; brute force
// over W x W, guarded by a size cap.
std::vector<std::pair<WeylElement, WeylElement>> stabilizer_pairs(
    const WeylGroup& g, const PieceLabel& piece);

struct TildeCell {
  WeylElement z, z_prime, v, w;
  int dim;  // |z| + |z'| + |w| - |v|
};
std::vector<TildeCell> enumerate_tilde_cells(const WeylGroup& g);

enum class CellActionClass {
  moved,
  fixed_no_fixed_points,
  fixed_with_fixed_points,
  fixed_undetermined,
};
// Classifies the action of (r, s) on a cell.  When the action comes from a
// unipotent piece, pass it to resolve the fixed case via atlas membership;
// the piece must satisfy (r, s) = (z', z).
CellActionClass classify_cell_action(WeylElement r, WeylElement s,
                                     const CellLabel& cell,
                                     const PieceLabel* unipotent = nullptr);

}  // namespace tnncells
