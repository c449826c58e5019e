#include "tnncells/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "tnncells/adjoint_sl3.hpp"
#include "tnncells/flag.hpp"
#include "tnncells/parabolic.hpp"
#include "tnncells/springer.hpp"
#include "tnncells/subexpression.hpp"
#include "tnncells/weyl.hpp"

namespace tnncells::selftest {

namespace {

bool check(const Reporter& report, const std::string& name,
           const std::function<void()>& body) {
  CheckResult result{name, true, ""};
  try {
    body();
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  if (report) report(result);
  return result.pass;
}

void expect(bool cond, const char* msg) {
  if (!cond) throw verification_error(msg);
}

const Rational kGeneric[4] = {2, 3, 5, 7};

}  // namespace

bool run_adjoint_checks(const Reporter& report, bool corrupt_support_table) {
  auto a2 = WeylGroup::make(DiagramType::A, 2);
  bool ok = true;

  ok &= check(report, "adjoint: generator matrices are nonnegative and unitriangular-like",
              [&] {
                for (GenKind kind : {GenKind::x, GenKind::y})
                  for (int i : {1, 2})
                    for (const Rational& a :
                         {Rational(1), Rational(1, 2), Rational(3)}) {
                      AdjointMatrix m = generator_matrix(kind, i, a);
                      for (int d = 0; d < kAdjointDim; ++d)
                        expect(m.at(d, d) == 1, "diagonal must be one");
                    }
              });

  ok &= check(report, "adjoint: x/y tables are exchanged by the flip symmetry", [&] {
    // flip swaps X_w and X_-w and fixes the torus directions
    const int flip[kAdjointDim] = {bX12, bX1, bX2, bT1, bT2, bXm1, bXm2, bXm12};
    for (int i : {1, 2})
      for (const Rational& a : {Rational(1), Rational(2, 3)}) {
        AdjointMatrix x = generator_matrix(GenKind::x, i, a);
        AdjointMatrix y = generator_matrix(GenKind::y, i, a);
        for (int r = 0; r < kAdjointDim; ++r)
          for (int c = 0; c < kAdjointDim; ++c)
            expect(y.at(r, c) == x.at(flip[r], flip[c]),
                   "flip symmetry violated");
      }
  });

  ok &= check(report, "adjoint: reflection representatives permute extreme vectors", [&] {
    AdjointVector e7{};
    e7[bX12] = 1;
    AdjointVector r1 = normalize_primitive(reflection_matrix(1) * e7);
    AdjointVector r2 = normalize_primitive(reflection_matrix(2) * e7);
    expect(vector_support(r1) == std::set<int>{bX2}, "s1 image of the top vector");
    expect(vector_support(r2) == std::set<int>{bX1}, "s2 image of the top vector");
  });

  ok &= check(report, "adjoint: 19 family samples satisfy the cone relations", [&] {
    int count = 0;
    for (std::size_t w = 0; w < a2->order(); ++w)
      for (std::size_t v = 0; v < a2->order(); ++v) {
        if (!a2->leq(v, w)) continue;
        CellLabel cell = make_cell(a2->element(v), a2->element(w));
        AdjointVector s = cell_family_sample(
            cell, std::span<const Rational>(kGeneric, family_arity(cell)));
        expect(check_cx_relations(s), "family sample breaks a relation");
        ++count;
      }
    expect(count == 19, "there must be exactly 19 Bruhat pairs");
  });

  ok &= check(report, "adjoint: family supports match the tabulated sets", [&] {
    const SupportTable& table = support_table();
    for (std::size_t w = 0; w < a2->order(); ++w)
      for (std::size_t v = 0; v < a2->order(); ++v) {
        if (!a2->leq(v, w)) continue;
        CellLabel cell = make_cell(a2->element(v), a2->element(w));
        AdjointVector s = cell_family_sample(
            cell, std::span<const Rational>(kGeneric, family_arity(cell)));
        std::set<int> expected = table.at(cell);
        if (corrupt_support_table && cell.v.is_identity() && cell.w.is_identity())
          expected.insert(bT1);  // deliberate fault for the negative control
        expect(vector_support(s) == expected, "support differs from the table");
      }
  });

  ok &= check(report, "adjoint: beta partitions tile the family supports", [&] {
    const SupportTable& table = support_table();
    std::set<int> everything;
    for (const auto& [zw, part] : table.beta_minus) {
      for (int idx : part) expect(everything.insert(idx).second, "beta- overlaps");
    }
    expect(int(everything.size()) == kAdjointDim, "beta- misses an index");
    everything.clear();
    for (const auto& [zw, part] : table.beta_plus)
      for (int idx : part) expect(everything.insert(idx).second, "beta+ overlaps");
    expect(int(everything.size()) == kAdjointDim, "beta+ misses an index");

    for (std::size_t w = 0; w < a2->order(); ++w) {
      // [[e, w]] is the union of beta-_z over z <= w
      std::set<int> uni;
      for (std::size_t z = 0; z < a2->order(); ++z)
        if (a2->leq(z, w))
          for (int idx : table.beta_minus.at(a2->word(z))) uni.insert(idx);
      CellLabel cell = make_cell(a2->identity(), a2->element(w));
      expect(uni == table.at(cell), "beta- union differs from [[e, w]]");
    }
    for (std::size_t v = 0; v < a2->order(); ++v) {
      // [[v, w0]] is the union of beta+_z over z >= v
      std::set<int> uni;
      for (std::size_t z = 0; z < a2->order(); ++z)
        if (a2->leq(v, z))
          for (int idx : table.beta_plus.at(a2->word(z))) uni.insert(idx);
      CellLabel cell = make_cell(a2->element(v), a2->longest());
      expect(uni == table.at(cell), "beta+ union differs from [[v, w0]]");
    }
    for (std::size_t w = 0; w < a2->order(); ++w)
      for (std::size_t v = 0; v < a2->order(); ++v) {
        if (!a2->leq(v, w)) continue;
        // the intersection law [[v, w]] = [[v, w0]] cap [[e, w]]
        const std::set<int>& top =
            table.at(make_cell(a2->element(v), a2->longest()));
        const std::set<int>& bot = table.at(make_cell(a2->identity(), a2->element(w)));
        std::set<int> inter;
        for (int idx : top)
          if (bot.count(idx)) inter.insert(idx);
        expect(inter == table.at(make_cell(a2->element(v), a2->element(w))),
               "intersection law fails");
      }
  });

  ok &= check(report, "adjoint: line representatives land in their families", [&] {
    for (std::size_t w = 0; w < a2->order(); ++w)
      for (std::size_t v = 0; v < a2->order(); ++v) {
        if (!a2->leq(v, w)) continue;
        WeylElement wv = a2->element(v), ww = a2->element(w);
        for (const auto& word : all_reduced_words(ww)) {
          std::size_t skipped = word.size() - std::size_t(wv.length());
          std::vector<Rational> params(kGeneric, kGeneric + (skipped > 4 ? 4 : skipped));
          while (params.size() < skipped) params.push_back(11);
          mr_line(wv, ww, word, params);  // self-verifying
        }
      }
  });

  ok &= check(report,
              "adjoint: 19-family cross-oracle (fixed-cell atlas vs direct enumeration) "
              "agrees on every disjoint piece",
              [&] {
                for (const PieceLabel& piece : all_pieces(*a2)) {
                  std::vector<CellLabel> fixed = fixed_cell_atlas(*a2, piece);
                  std::vector<CellLabel> direct =
                      enumerate_Z(*a2, piece.J(), piece.J_prime());
                  expect(fixed.size() == direct.size(),
                         "cross-oracle cell counts differ");
                  for (std::size_t i = 0; i < fixed.size(); ++i)
                    expect(fixed[i] == direct[i], "cross-oracle cells differ");
                }
              });

  return ok;
}

namespace {

bool run_weyl_quick(const Reporter& report) {
  bool ok = true;
  ok &= check(report, "weyl: rank-1 and rank-2 chain groups enumerate correctly", [&] {
    auto a1 = WeylGroup::make(DiagramType::A, 1);
    expect(a1->order() == 2, "rank-1 order");
    auto a2 = WeylGroup::make(DiagramType::A, 2);
    expect(a2->order() == 6, "rank-2 order");
    expect(a2->longest().length() == 3, "rank-2 longest length");
    for (std::size_t i = 0; i < a2->order(); ++i) {
      WeylElement e = a2->element(i);
      expect((e.inverse().inverse() == e), "inverse is an involution");
      expect(e.inverse().length() == e.length(), "inverse preserves length");
    }
  });
  ok &= check(report, "weyl: bruhat order is a partial order respecting length", [&] {
    auto a2 = WeylGroup::make(DiagramType::A, 2);
    for (std::size_t a = 0; a < a2->order(); ++a)
      for (std::size_t b = 0; b < a2->order(); ++b) {
        if (a2->leq(a, b) && a2->leq(b, a)) expect(a == b, "antisymmetry");
        if (a2->leq(a, b)) expect(a2->length(a) <= a2->length(b), "length monotone");
        for (std::size_t c = 0; c < a2->order(); ++c)
          if (a2->leq(a, b) && a2->leq(b, c)) expect(a2->leq(a, c), "transitivity");
      }
  });
  ok &= check(report, "hecke: projection laws hold on the rank-2 context", [&] {
    auto a2 = WeylGroup::make(DiagramType::A, 2);
    for (int i = 1; i <= 2; ++i)
      for (std::size_t w = 0; w < a2->order(); ++w) {
        WeylElement e = a2->element(w);
        WeylElement up = hecke_star(i, e), down = hecke_circ(i, e);
        expect(hecke_star(i, up) == up, "star is idempotent");
        expect(hecke_circ(i, down) == down, "circ is idempotent");
        expect(up.length() >= e.length() && down.length() <= e.length(),
               "monotone in length");
      }
  });
  return ok;
}

bool run_subexpression_quick(const Reporter& report) {
  return check(report, "subexpressions: greedy walk matches the exhaustive mask oracle",
               [&] {
                 auto a2 = WeylGroup::make(DiagramType::A, 2);
                 for (std::size_t w = 0; w < a2->order(); ++w)
                   for (std::size_t v = 0; v < a2->order(); ++v) {
                     if (!a2->leq(v, w)) continue;
                     WeylElement wv = a2->element(v), ww = a2->element(w);
                     for (const auto& word : all_reduced_words(ww)) {
                       auto masks = positive_masks_brute_force(wv, ww, word);
                       expect(masks.size() == 1, "positive subexpression not unique");
                       Subexpression sub = positive_subexpression(wv, ww, word);
                       expect(masks[0] == sub.taken, "greedy disagrees with oracle");
                     }
                   }
               });
}

bool run_springer_quick(const Reporter& report) {
  bool ok = true;
  auto a2 = WeylGroup::make(DiagramType::A, 2);
  ok &= check(report, "springer: every disjoint rank-2 piece yields a verified atlas",
              [&] {
                std::size_t pieces = 0;
                for (const PieceLabel& piece : all_pieces(*a2)) {
                  CellAtlas atlas = springer_atlas(*a2, piece);
                  std::size_t sum = 0;
                  for (const auto& [d, c] : atlas.dim_histogram) sum += c;
                  expect(sum == atlas.cells.size(), "histogram total");
                  ++pieces;
                }
                expect(pieces == 13, "disjoint piece count in the rank-2 chain group");
              });
  ok &= check(report, "springer: duality swaps the defining descent sets", [&] {
    for (const PieceLabel& piece : all_pieces(*a2)) {
      auto cells = enumerate_Z(*a2, piece.J(), piece.J_prime());
      auto dual_cells = enumerate_Z(*a2, piece.J_prime(), piece.J());
      expect(cells.size() == dual_cells.size(), "dual atlas size");
      for (const CellLabel& c : cells) {
        auto [dv, dw] = w0_dual(c.v, c.w);
        bool found = false;
        for (const CellLabel& d : dual_cells)
          if (d.v == dv && d.w == dw) found = true;
        expect(found, "dual cell not present");
      }
    }
  });
  ok &= check(report, "springer: xi pieces partition by support containment", [&] {
    for (std::size_t w = 0; w < a2->order(); ++w)
      for (std::size_t v = 0; v < a2->order(); ++v) {
        if (!a2->leq(v, w)) continue;
        XiData xi = xi_sets(a2->element(v), a2->element(w));
        expect(xi.H.intersect(xi.H_prime).empty(), "xi descent sets must be disjoint");
      }
  });
  return ok;
}

bool run_flag_quick(const Reporter& report) {
  bool ok = true;
  auto a2 = WeylGroup::make(DiagramType::A, 2);
  ok &= check(report, "flag: atlases verify for every H and disjoint piece (rank 2)",
              [&] {
                for (std::uint32_t hbits = 0; hbits < 4; ++hbits) {
                  IndexSet H = IndexSet::from_bits(hbits);
                  for (const PieceLabel& piece : all_pieces(*a2)) {
                    FlagAtlas atlas = flag_atlas(*a2, H, piece);
                    if (H.empty()) {
                      CellAtlas plain = springer_atlas(*a2, piece);
                      expect(atlas.cells.size() == plain.cells.size(),
                             "empty-H degeneration count");
                    }
                  }
                }
              });
  ok &= check(report, "flag: the three coordinate systems agree on round trips", [&] {
    for (std::uint32_t hbits = 0; hbits < 4; ++hbits) {
      IndexSet H = IndexSet::from_bits(hbits);
      for (const PieceLabel& piece : all_pieces(*a2)) {
        FlagAtlas atlas = flag_atlas(*a2, H, piece);
        for (const FlagCellLabel& cell : atlas.cells) {
          FlagCellLabel via_rt = label_from_rt(*a2, H, cell.r, cell.t);
          FlagCellLabel via_rpt = label_from_rpt(*a2, H, cell.r_prime, cell.t_prime);
          FlagCellLabel via_abc = label_from_triple(*a2, H, cell.a, cell.b, cell.c);
          expect(via_rt == cell && via_rpt == cell && via_abc == cell,
                 "coordinate round trip changed the label");
        }
      }
    }
  });
  return ok;
}

std::vector<GenToken> random_word(int n, std::mt19937_64& rng, int min_len) {
  std::uniform_int_distribution<int> kind(0, 5), idx(1, n - 1), num(1, 32);
  std::vector<GenToken> word;
  int len = min_len + int(rng() % 3);
  for (int i = 0; i < len; ++i) {
    GenToken tok;
    int k = kind(rng);
    if (k == 5) {
      tok.kind = GenToken::Kind::torus;
      mpq_class prod = 1;
      for (int j = 0; j + 1 < n; ++j) {
        mpq_class t(num(rng), 16);
        tok.torus.push_back(t);
        prod *= t;
      }
      tok.torus.push_back(1 / prod);
    } else {
      tok.kind = (k % 2 == 0) ? GenToken::Kind::x : GenToken::Kind::y;
      tok.index = idx(rng);
      tok.param = mpq_class(num(rng), 16);
    }
    word.push_back(std::move(tok));
  }
  return word;
}

bool run_parabolic_quick(const Reporter& report) {
  bool ok = true;
  ok &= check(report, "parabolic: pinned examples classify as expected", [&] {
    TNNMatrix m = assemble_tnn(2, "y1:1,t:2,1/2,x1:1");
    expect(m.mat.at(0, 0) == 2 && m.mat.at(0, 1) == 2 && m.mat.at(1, 0) == 2 &&
               m.mat.at(1, 1) == mpq_class(5, 2),
           "assembled entries");
    expect(minor_positivity(m.mat) == MinorClass::totally_positive, "classification");
    ParabolicData data = parabolic_of(to_double(m.mat));
    expect(data.is_borel, "simple spectrum gives a borel");
    BorelChartReport chart = borel_chart_check(m);
    expect(chart.pass, "chart check");
  });
  ok &= check(report, "parabolic: sl2 chart solves its quadratic with positive output",
              [&] {
                for (double z : {0.5, 1.0, 2.0})
                  for (double b : {0.25, 1.0, 3.0})
                    for (double c : {0.25, 1.0, 3.0}) {
                      Sl2SectionPoint pt = sl2_section_solve(z, b, c);
                      double q = b * z + c / z;
                      double res = pt.epsilon * pt.epsilon + pt.epsilon * q - 1.0;
                      expect(std::abs(res) < 1e-12 * (1 + q * q), "quadratic residual");
                      expect(pt.epsilon > 0, "positive root");
                    }
              });
  return ok;
}

bool run_large_contexts(const Reporter& report) {
  bool ok = true;
  ok &= check(report, "weyl: rank-3 chain and rank-4 branched groups enumerate", [&] {
    auto a3 = WeylGroup::make(DiagramType::A, 3);
    expect(a3->order() == 24, "rank-3 chain order");
    expect(a3->longest().length() == 6, "rank-3 chain longest");
    auto d4 = WeylGroup::make(DiagramType::D, 4);
    expect(d4->order() == 192, "branched order");
    expect(d4->longest().length() == 12, "branched longest");
  });
  ok &= check(report, "subexpressions: random larger-rank words match the oracle", [&] {
    std::mt19937_64 rng(20240817);
    for (auto type_rank : {std::pair{DiagramType::A, 3}, {DiagramType::D, 4}}) {
      auto g = WeylGroup::make(type_rank.first, type_rank.second);
      for (int trial = 0; trial < 40; ++trial) {
        WeylElement w = g->element(rng() % g->order());
        std::vector<int> word = random_reduced_word(w, rng());
        std::vector<std::uint32_t> below;
        for (std::size_t v = 0; v < g->order(); ++v)
          if (g->leq(v, w.index())) below.push_back(std::uint32_t(v));
        WeylElement v = g->element(below[rng() % below.size()]);
        auto masks = positive_masks_brute_force(v, w, word);
        Subexpression sub = positive_subexpression(v, w, word);
        expect(masks.size() == 1 && masks[0] == sub.taken,
               "larger-rank positive subexpression");
      }
    }
  });
  ok &= check(report, "springer: rank-3 atlases verify on sampled pieces", [&] {
    auto a3 = WeylGroup::make(DiagramType::A, 3);
    std::mt19937_64 rng(7);
    auto pieces = all_pieces(*a3);
    for (int trial = 0; trial < 12; ++trial)
      springer_atlas(*a3, pieces[rng() % pieces.size()]);
  });
  ok &= check(report, "flag: rank-3 round trips hold for random H", [&] {
    auto a3 = WeylGroup::make(DiagramType::A, 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
      IndexSet H = IndexSet::from_bits(rng() % 8);
      PieceLabel piece = make_piece(a3->identity(), a3->identity());
      FlagAtlas atlas = flag_atlas(*a3, H, piece);
      for (const FlagCellLabel& cell : atlas.cells) {
        expect(label_from_rt(*a3, H, cell.r, cell.t) == cell, "rt trip");
        expect(label_from_rpt(*a3, H, cell.r_prime, cell.t_prime) == cell, "rpt trip");
      }
    }
  });
  ok &= check(report, "parabolic: random assemblies stay nonnegative with real spectrum",
              [&] {
                std::mt19937_64 rng(99);
                for (int n = 2; n <= 4; ++n)
                  for (int trial = 0; trial < 25; ++trial) {
                    TNNMatrix m = assemble_tnn(n, random_word(n, rng, 6));
                    MinorClass cls = minor_positivity(m.mat);
                    expect(cls != MinorClass::neither, "a negative minor appeared");
                    EigenSplit split = eigen_split(to_double(m.mat));
                    for (const auto& grp : split.groups)
                      expect(grp.value > 0, "nonpositive eigenvalue");
                  }
              });
  return ok;
}

}  // namespace

bool run_quick(const Reporter& report) {
  bool ok = true;
  ok &= run_weyl_quick(report);
  ok &= run_subexpression_quick(report);
  ok &= run_springer_quick(report);
  ok &= run_flag_quick(report);
  ok &= run_adjoint_checks(report, false);
  ok &= run_parabolic_quick(report);
  return ok;
}

bool run_full(const Reporter& report) {
  bool ok = run_quick(report);
  ok &= run_large_contexts(report);
  return ok;
}

}  // namespace tnncells::selftest
