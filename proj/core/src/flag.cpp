#include "tnncells/flag.hpp"

#include <algorithm>

namespace tnncells {
namespace {

bool label_less(const WeylGroup& g, const FlagCellLabel& x, const FlagCellLabel& y) {
  return std::tie(x.dim, g.word(x.r.index()), g.word(x.t.index())) <
         std::tie(y.dim, g.word(y.r.index()), g.word(y.t.index()));
}

bool is_minimal_rep(const WeylGroup& g, std::size_t idx, IndexSet H) {
  return g.right_descents(idx).intersect(H).empty();
}

bool is_maximal_rep(const WeylGroup& g, std::size_t idx, IndexSet H) {
  return H.subset_of(g.right_descents(idx));
}

// Shared assembly once (a, b, c) are known valid; computes both coordinate
// pairs and the dimension.
FlagCellLabel assemble(const WeylGroup& g, IndexSet H, WeylElement a, WeylElement b,
                       WeylElement c) {
  FlagCellLabel out;
  out.H = H;
  out.a = a;
  out.b = b;
  out.c = c;
  out.r = a;
  out.t = b * c;
  out.r_prime = a * c.inverse();
  out.t_prime = b;
  out.dim = out.t.length() - out.r.length();
  if (!bruhat_leq(out.r, out.t) || !bruhat_leq(out.r_prime, out.t_prime))
    throw verification_error("alpha images are not Bruhat-comparable");
  if (out.dim != out.t_prime.length() - out.r_prime.length())
    throw verification_error("dimension disagrees between coordinate systems");
  return out;
}

}  // namespace

std::vector<WeylElement> minimal_reps(const WeylGroup& g, IndexSet H) {
  g.check_subset(H);
  std::vector<WeylElement> out;
  for (std::size_t idx = 0; idx < g.order(); ++idx)
    if (is_minimal_rep(g, idx, H)) out.push_back(g.element(idx));
  return out;
}

std::vector<WeylElement> maximal_reps(const WeylGroup& g, IndexSet H) {
  g.check_subset(H);
  std::vector<WeylElement> out;
  for (std::size_t idx = 0; idx < g.order(); ++idx)
    if (is_maximal_rep(g, idx, H)) out.push_back(g.element(idx));
  return out;
}

FlagCellLabel label_from_triple(const WeylGroup& g, IndexSet H, WeylElement a,
                                WeylElement b, WeylElement c) {
  g.check_subset(H);
  if (!is_maximal_rep(g, a.index(), H))
    throw validation_error("a must lie in w_I W^H");
  if (!is_minimal_rep(g, b.index(), H))
    throw validation_error("b must lie in W^H");
  if (!c.support().subset_of(H))
    throw validation_error("c must lie in W_H");
  if (!bruhat_leq(a, b * c))
    throw validation_error("triple fails the order condition a <= bc");
  return assemble(g, H, a, b, c);
}

FlagCellLabel label_from_rt(const WeylGroup& g, IndexSet H, WeylElement r,
                            WeylElement t) {
  g.check_subset(H);
  if (!is_maximal_rep(g, r.index(), H))
    throw validation_error("r must lie in w_I W^H");
  if (!bruhat_leq(r, t)) throw validation_error("label requires r <= t");
  auto bc = coset_factorize(t, H);
  return assemble(g, H, r, bc.min_rep, bc.tail);
}

FlagCellLabel label_from_rpt(const WeylGroup& g, IndexSet H, WeylElement r_prime,
                             WeylElement t_prime) {
  g.check_subset(H);
  if (!is_minimal_rep(g, t_prime.index(), H))
    throw validation_error("t' must lie in W^H");
  if (!bruhat_leq(r_prime, t_prime))
    throw validation_error("label requires r' <= t'");
  // a = r' c where c is inverse to the W_H part of w_I r'.
  WeylElement wI = g.longest();
  auto fac = coset_factorize(wI * r_prime, H);
  WeylElement c = fac.tail.inverse();
  return assemble(g, H, r_prime * c, t_prime, c);
}

std::vector<FlagCellLabel> enumerate_ZH(const WeylGroup& g, IndexSet H, IndexSet J,
                                        IndexSet J_prime) {
  g.check_subset(H);
  g.check_subset(J);
  g.check_subset(J_prime);
  if (!J.intersect(J_prime).empty())
    throw validation_error("index sets are not disjoint");
  auto js = J.to_vector();
  auto jps = J_prime.to_vector();

  std::vector<FlagCellLabel> out;
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (!is_maximal_rep(g, r, H)) continue;
    for (std::size_t t = 0; t < g.order(); ++t) {
      if (!g.leq(r, t)) continue;
      bool ok = true;
      for (int i : js) {
        std::size_t st = g.left_mul(i, t);
        if (g.length(st) > g.length(t) || g.leq(r, st)) { ok = false; break; }
      }
      if (!ok) continue;
      FlagCellLabel label = label_from_rt(g, H, g.element(r), g.element(t));
      for (int j : jps) {
        std::size_t rp = label.r_prime.index();
        std::size_t srp = g.left_mul(j, rp);
        if (g.length(srp) < g.length(rp) || g.leq(srp, label.t_prime.index())) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(label));
    }
  }
  std::sort(out.begin(), out.end(), [&](const FlagCellLabel& x, const FlagCellLabel& y) {
    return label_less(g, x, y);
  });
  if (out.empty())
    throw verification_error("Z_H set is empty; contradicts the nonemptiness guarantee");
  return out;
}

FlagAtlas flag_atlas(const WeylGroup& g, IndexSet H, const PieceLabel& piece) {
  FlagAtlas atlas;
  atlas.H = H;
  atlas.piece = piece;
  atlas.cells = enumerate_ZH(g, H, piece.J(), piece.J_prime());
  for (const FlagCellLabel& c : atlas.cells) ++atlas.dim_histogram[c.dim];

  // Zero-dimensional labels: r' in W^H, r = r' w_H, with the descent
  // conditions on both sides.
  auto js = piece.J().to_vector();
  auto jps = piece.J_prime().to_vector();
  WeylElement wH = g.longest(H);
  std::vector<const FlagCellLabel*> zeros;
  for (const FlagCellLabel& c : atlas.cells)
    if (c.dim == 0) zeros.push_back(&c);
  for (const FlagCellLabel* c : zeros) {
    if (!(c->r == c->t) || !(c->r_prime == c->t_prime))
      throw verification_error("zero-dimensional label with unequal coordinates");
    if (!(c->r == c->r_prime * wH))
      throw verification_error("zero-dimensional label fails r = r' w_H");
    for (int i : js)
      if (c->r.left_descents().contains(i) == false)
        throw verification_error("zero-dimensional label misses a left descent");
    for (int j : jps)
      if (c->r_prime.left_descents().contains(j))
        throw verification_error("zero-dimensional label has a forbidden descent");
  }
  FlagCellLabel witness = flag_zero_dim_witness(g, H, piece.J(), piece.J_prime());
  if (std::none_of(atlas.cells.begin(), atlas.cells.end(),
                   [&](const FlagCellLabel& c) { return c == witness; }))
    throw verification_error("zero-dimensional witness missing from the atlas");
  return atlas;
}

FlagCellLabel flag_zero_dim_witness(const WeylGroup& g, IndexSet H, IndexSet J,
                                    IndexSet J_prime) {
  g.check_subset(H);
  g.check_subset(J);
  g.check_subset(J_prime);
  if (!J.intersect(J_prime).empty())
    throw validation_error("index sets are not disjoint");
  WeylElement rp = g.longest(J) * g.longest(J.intersect(H));
  WeylElement r = rp * g.longest(H);
  FlagCellLabel label = label_from_rt(g, H, r, r);
  if (!(label.r_prime == rp))
    throw verification_error("witness coordinates are inconsistent");
  return label;
}

FlagXiSets flag_xi(const FlagCellLabel& label) {
  const WeylGroup& g = label.r.group();
  FlagXiSets xi;
  for (int i = 1; i <= g.rank(); ++i) {
    std::size_t st = g.left_mul(i, label.t.index());
    if (g.length(st) < g.length(label.t.index()) && !g.leq(label.r.index(), st))
      xi.y_side = xi.y_side.with(i);
    std::size_t srp = g.left_mul(i, label.r_prime.index());
    if (g.length(srp) > g.length(label.r_prime.index()) &&
        !g.leq(srp, label.t_prime.index()))
      xi.x_side = xi.x_side.with(i);
  }
  return xi;
}

bool flag_xi_contains(const FlagXiSets& xi, const PieceLabel& piece) {
  return piece.J().subset_of(xi.y_side) && piece.J_prime().subset_of(xi.x_side);
}

FlagCellLabel act_flag_cell(WeylElement r, WeylElement s, const FlagCellLabel& label) {
  require_same_group(r, label.r);
  require_same_group(s, label.t);
  const WeylGroup& g = label.r.group();
  FlagCellLabel cur = label;
  const auto& sword = s.word();
  for (auto it = sword.rbegin(); it != sword.rend(); ++it)
    cur = label_from_rt(g, cur.H, cur.r, hecke_star(*it, cur.t));
  const auto& rword = r.word();
  for (auto it = rword.rbegin(); it != rword.rend(); ++it)
    cur = label_from_rpt(g, cur.H, hecke_circ(*it, cur.r_prime), cur.t_prime);
  return cur;
}

}  // namespace tnncells
