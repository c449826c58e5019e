#include "tnncells/springer.hpp"

#include "tnncells/subexpression.hpp"

#include <algorithm>

namespace tnncells {
namespace {

bool cell_less(const WeylGroup& g, const CellLabel& x, const CellLabel& y) {
  return std::tie(x.dim, g.word(x.v.index()), g.word(x.w.index())) <
         std::tie(y.dim, g.word(y.v.index()), g.word(y.w.index()));
}

void check_disjoint(IndexSet J, IndexSet J_prime) {
  if (!J.intersect(J_prime).empty())
    throw validation_error("index sets are not disjoint");
}

}  // namespace

PieceLabel make_piece(WeylElement z, WeylElement z_prime) {
  require_same_group(z, z_prime);
  if (!z.support().intersect(z_prime.support()).empty())
    throw validation_error("piece factors have overlapping supports");
  return PieceLabel{z, z_prime};
}

PieceLabel piece_of(const WeylGroup& g, std::span<const int> z_word,
                    std::span<const int> zprime_word) {
  WeylElement z = g.from_word(z_word);
  WeylElement zp = g.from_word(zprime_word);
  if (!is_reduced_word(g, z_word) || !is_reduced_word(g, zprime_word))
    throw validation_error("piece words must be reduced");
  return make_piece(z, zp);
}

std::vector<PieceLabel> all_pieces(const WeylGroup& g) {
  std::vector<PieceLabel> out;
  for (std::size_t zi = 0; zi < g.order(); ++zi)
    for (std::size_t zpi = 0; zpi < g.order(); ++zpi)
      if (g.support(zi).intersect(g.support(zpi)).empty())
        out.push_back(PieceLabel{g.element(zi), g.element(zpi)});
  return out;
}

CellLabel make_cell(WeylElement v, WeylElement w) {
  require_same_group(v, w);
  if (!bruhat_leq(v, w)) throw validation_error("cell label requires v <= w");
  return CellLabel{v, w, w.length() - v.length()};
}

std::vector<CellLabel> enumerate_Z(const WeylGroup& g, IndexSet J, IndexSet J_prime) {
  g.check_subset(J);
  g.check_subset(J_prime);
  check_disjoint(J, J_prime);
  auto js = J.to_vector();
  auto jps = J_prime.to_vector();

  std::vector<CellLabel> cells;
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (!J.subset_of(g.left_descents(w))) continue;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!g.leq(v, w)) continue;
      bool ok = true;
      for (int i : js)
        if (g.leq(v, g.left_mul(i, w))) { ok = false; break; }
      if (!ok) continue;
      for (int j : jps) {
        std::size_t sv = g.left_mul(j, v);
        if (g.length(sv) < g.length(v) || g.leq(sv, w)) { ok = false; break; }
      }
      if (ok) cells.push_back(make_cell(g.element(v), g.element(w)));
    }
  }
  std::sort(cells.begin(), cells.end(),
            [&](const CellLabel& x, const CellLabel& y) { return cell_less(g, x, y); });
  if (cells.empty())
    throw verification_error("Z set is empty; contradicts the nonemptiness guarantee");
  return cells;
}

std::vector<CellLabel> zero_dim_cells(const WeylGroup& g, IndexSet J, IndexSet J_prime) {
  g.check_subset(J);
  g.check_subset(J_prime);
  check_disjoint(J, J_prime);
  IndexSet bound = g.all_indices().minus(J_prime);
  std::vector<CellLabel> cells;
  for (std::size_t w = 0; w < g.order(); ++w) {
    IndexSet ld = g.left_descents(w);
    if (J.subset_of(ld) && ld.subset_of(bound))
      cells.push_back(CellLabel{g.element(w), g.element(w), 0});
  }
  std::sort(cells.begin(), cells.end(),
            [&](const CellLabel& x, const CellLabel& y) { return cell_less(g, x, y); });
  return cells;
}

CellAtlas springer_atlas(const WeylGroup& g, const PieceLabel& piece) {
  CellAtlas atlas;
  atlas.piece = piece;
  atlas.cells = enumerate_Z(g, piece.J(), piece.J_prime());
  for (const CellLabel& c : atlas.cells) ++atlas.dim_histogram[c.dim];

  // The zero-dimensional layer must match the descent characterization, and
  // w_J must appear in it.
  std::vector<CellLabel> zeros;
  for (const CellLabel& c : atlas.cells)
    if (c.dim == 0) zeros.push_back(c);
  auto expected = zero_dim_cells(g, piece.J(), piece.J_prime());
  if (zeros.size() != expected.size() ||
      !std::equal(zeros.begin(), zeros.end(), expected.begin()))
    throw verification_error("zero-dimensional cells disagree with the descent rule");
  WeylElement wj = g.longest(piece.J());
  if (std::none_of(zeros.begin(), zeros.end(),
                   [&](const CellLabel& c) { return c.w == wj; }))
    throw verification_error("w_J missing from the zero-dimensional cells");
  return atlas;
}

XiData xi_sets(WeylElement v, WeylElement w) {
  require_same_group(v, w);
  if (!bruhat_leq(v, w)) throw validation_error("xi_sets requires v <= w");
  const WeylGroup& g = v.group();
  IndexSet H, Hp;
  for (int i = 1; i <= g.rank(); ++i) {
    std::size_t sw = g.left_mul(i, w.index());
    if (g.length(sw) < g.length(w.index()) && !g.leq(v.index(), sw))
      H = H.with(i);
    std::size_t sv = g.left_mul(i, v.index());
    if (g.length(sv) > g.length(v.index()) && !g.leq(sv, w.index()))
      Hp = Hp.with(i);
  }
  if (!H.intersect(Hp).empty())
    throw verification_error("xi index sets intersect");
  XiData xi;
  xi.v = v;
  xi.w = w;
  xi.H = H;
  xi.H_prime = Hp;
  xi.dim = g.longest(H).length() + g.longest(Hp).length();
  return xi;
}

bool xi_contains(const XiData& xi, const PieceLabel& piece) {
  return piece.J().subset_of(xi.H) && piece.J_prime().subset_of(xi.H_prime);
}

CellLabel act_cell(WeylElement r, WeylElement s, const CellLabel& cell) {
  require_same_group(r, cell.v);
  require_same_group(s, cell.w);
  return make_cell(hecke_circ(r, cell.v), hecke_star(s, cell.w));
}

CellLabel act_piece(const PieceLabel& piece, const CellLabel& cell) {
  return act_cell(piece.z_prime, piece.z, cell);
}

std::vector<std::pair<WeylElement, WeylElement>> stabilizer_pairs(
    const WeylGroup& g, const PieceLabel& piece) {
  CellAtlas atlas = springer_atlas(g, piece);
  const double cost = double(g.order()) * double(g.order()) * double(atlas.cells.size());
  if (cost > 5e7)
    throw resource_error("stabilizer scan too large for this rank");

  std::vector<std::uint8_t> member(g.order() * g.order(), 0);
  for (const CellLabel& c : atlas.cells)
    member[c.v.index() * g.order() + c.w.index()] = 1;
  auto in_atlas = [&](const CellLabel& c) {
    return member[c.v.index() * g.order() + c.w.index()] != 0;
  };
  std::vector<std::pair<WeylElement, WeylElement>> out;
  for (std::size_t r = 0; r < g.order(); ++r)
    for (std::size_t s = 0; s < g.order(); ++s) {
      bool stable = true;
      for (const CellLabel& c : atlas.cells) {
        if (!in_atlas(act_cell(g.element(r), g.element(s), c))) {
          stable = false;
          break;
        }
      }
      if (stable) out.emplace_back(g.element(r), g.element(s));
    }
  return out;
}

std::vector<TildeCell> enumerate_tilde_cells(const WeylGroup& g) {
  std::vector<TildeCell> out;
  for (const PieceLabel& piece : all_pieces(g)) {
    for (const CellLabel& c : enumerate_Z(g, piece.J(), piece.J_prime()))
      out.push_back(TildeCell{piece.z, piece.z_prime, c.v, c.w,
                              piece.z.length() + piece.z_prime.length() + c.dim});
  }
  return out;
}

CellActionClass classify_cell_action(WeylElement r, WeylElement s,
                                     const CellLabel& cell,
                                     const PieceLabel* unipotent) {
  CellLabel moved = act_cell(r, s, cell);
  if (!(moved == cell)) return CellActionClass::moved;
  if (!unipotent) return CellActionClass::fixed_undetermined;
  if (!(unipotent->z_prime == r) || !(unipotent->z == s))
    throw validation_error("piece does not realize the given action pair");
  auto cells = enumerate_Z(r.group(), unipotent->J(), unipotent->J_prime());
  bool member = std::any_of(cells.begin(), cells.end(),
                            [&](const CellLabel& d) { return d == cell; });
  return member ? CellActionClass::fixed_with_fixed_points
                : CellActionClass::fixed_no_fixed_points;
}

}  // namespace tnncells
