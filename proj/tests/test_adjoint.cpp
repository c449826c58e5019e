#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "tnncells/adjoint_sl3.hpp"

using namespace tnncells;
using testutil::A;
using testutil::el;

namespace {

AdjointVector unit(int idx) {
  AdjointVector v{};
  v[idx] = 1;
  return v;
}

}  // namespace

TEST_CASE("generator matrices: pinned columns") {
  // Parameter zero gives the identity.
  auto id = generator_matrix(GenKind::y, 1, 0);
  for (int r = 0; r < kAdjointDim; ++r)
    for (int c = 0; c < kAdjointDim; ++c)
      CHECK(id.at(r, c) == (r == c ? 1 : 0));

  // x_1(a) on X_-1 produces X_-1 + a t_1 + a^2 X_1.
  auto img = generator_matrix(GenKind::x, 1, 3) * unit(bXm1);
  CHECK(img[bXm1] == 1);
  CHECK(img[bT1] == 3);
  CHECK(img[bX1] == 9);
  CHECK(img[bXm12] == 0);
  CHECK(img[bX12] == 0);

  // y_2(a) on t_1 produces t_1 + a X_-2.
  img = generator_matrix(GenKind::y, 2, 5) * unit(bT1);
  CHECK(img[bT1] == 1);
  CHECK(img[bXm2] == 5);

  // y_1(a) on t_1 produces t_1 + 2a X_-1.
  img = generator_matrix(GenKind::y, 1, 5) * unit(bT1);
  CHECK(img[bT1] == 1);
  CHECK(img[bXm1] == 10);

  // The highest vector is fixed by every x, the lowest by every y.
  for (int i : {1, 2}) {
    CHECK(generator_matrix(GenKind::x, i, 7) * unit(bX12) == unit(bX12));
    CHECK(generator_matrix(GenKind::y, i, 7) * unit(bXm12) == unit(bXm12));
  }

  CHECK_THROWS_AS(generator_matrix(GenKind::x, 3, 1), validation_error);
  CHECK_THROWS_AS(generator_matrix(GenKind::x, 0, 1), validation_error);
}

TEST_CASE("x and y matrices are exchanged by the basis flip") {
  constexpr int flip[kAdjointDim] = {bX12, bX1, bX2, bT1, bT2, bXm1, bXm2, bXm12};
  for (int i : {1, 2}) {
    auto x = generator_matrix(GenKind::x, i, Rational(7, 3));
    auto y = generator_matrix(GenKind::y, i, Rational(7, 3));
    for (int r = 0; r < kAdjointDim; ++r)
      for (int c = 0; c < kAdjointDim; ++c)
        CHECK(y.at(r, c) == x.at(flip[r], flip[c]));
  }
}

TEST_CASE("reflection representatives") {
  // The reflection for s_1 carries the highest vector onto the X_2 line, and
  // the one for s_2 onto the X_1 line.
  auto v1 = normalize_primitive(reflection_matrix(1) * unit(bX12));
  CHECK(vector_support(v1) == std::set<int>{bX2});
  auto v2 = normalize_primitive(reflection_matrix(2) * unit(bX12));
  CHECK(vector_support(v2) == std::set<int>{bX1});

  // Squaring a reflection fixes the highest line.
  auto sq = reflection_matrix(1) * reflection_matrix(1);
  auto img = normalize_primitive(sq * unit(bX12));
  CHECK(vector_support(img) == std::set<int>{bX12});
}

TEST_CASE("cone relations") {
  CHECK(check_cx_relations(unit(bX12)));

  AdjointVector v{};
  v[bXm1] = 1;
  v[bX2] = 1;
  CHECK(check_cx_relations(v));

  // c_1 (c_1 + c_2) = a_1 a_-1 fails for (a_-1, a_1, c_1) = (1, 1, 2).
  AdjointVector bad{};
  bad[bXm1] = 1;
  bad[bX1] = 1;
  bad[bT1] = 2;
  CHECK(!check_cx_relations(bad));

  AdjointVector zero{};
  CHECK_THROWS_AS(check_cx_relations(zero), validation_error);
  AdjointVector neg{};
  neg[bT1] = -1;
  CHECK_THROWS_AS(check_cx_relations(neg), validation_error);
}

TEST_CASE("family arity and samples") {
  auto a2 = A(2);
  for (std::size_t vi = 0; vi < a2->order(); ++vi)
    for (std::size_t wi = 0; wi < a2->order(); ++wi) {
      if (!a2->leq(vi, wi)) continue;
      auto cell = make_cell(a2->element(vi), a2->element(wi));
      CHECK(family_arity(cell) == cell.dim + 1);
    }

  auto cell = make_cell(el(*a2, {2}), el(*a2, {1, 2}));
  std::vector<Rational> params{4, 2};
  auto sample = cell_family_sample(cell, params);
  CHECK(sample[bXm1] == 4);
  CHECK(sample[bT1] == 2);
  CHECK(sample[bX1] == 1);  // q^2 / p
  CHECK(vector_support(sample) == std::set<int>{bXm1, bT1, bX1});
  CHECK(check_cx_relations(sample));

  // Wrong parameter count and nonpositive parameters are rejected.
  std::vector<Rational> short_params{4};
  CHECK_THROWS_AS(cell_family_sample(cell, short_params), validation_error);
  std::vector<Rational> neg_params{4, -2};
  CHECK_THROWS_AS(cell_family_sample(cell, neg_params), validation_error);
  std::vector<Rational> zero_params{0, 2};
  CHECK_THROWS_AS(cell_family_sample(cell, zero_params), validation_error);
}

TEST_CASE("every family sample satisfies the cone relations with the right support") {
  auto a2 = A(2);
  std::mt19937 rng(31337);
  for (std::size_t vi = 0; vi < a2->order(); ++vi)
    for (std::size_t wi = 0; wi < a2->order(); ++wi) {
      if (!a2->leq(vi, wi)) continue;
      auto cell = make_cell(a2->element(vi), a2->element(wi));
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> params;
        for (int k = 0; k < family_arity(cell); ++k)
          params.emplace_back(1 + int(rng() % 12), 1 + int(rng() % 7));
        auto sample = cell_family_sample(cell, params);
        CHECK(check_cx_relations(sample));
        CHECK(vector_support(sample) == support_table().at(cell));
      }
    }
}

TEST_CASE("representative lines: pinned examples") {
  auto a2 = A(2);

  auto out = mr_line(a2->identity(), a2->identity(), std::vector<int>{},
                     std::vector<Rational>{});
  CHECK(vector_support(out) == std::set<int>{bX12});
  CHECK(out[bX12] == 1);

  out = mr_line(el(*a2, {1}), el(*a2, {1}), std::vector<int>{1},
                std::vector<Rational>{});
  CHECK(vector_support(out) == std::set<int>{bX2});

  out = mr_line(el(*a2, {2}), el(*a2, {1, 2}), std::vector<int>{1, 2},
                std::vector<Rational>{1});
  CHECK(vector_support(out) == std::set<int>{bXm1, bT1, bX1});

  // Full flag: all eight coordinates strictly positive.
  std::vector<Rational> ones{1, 1, 1};
  out = mr_line(a2->identity(), a2->longest(), std::vector<int>{1, 2, 1}, ones);
  for (int k = 0; k < kAdjointDim; ++k) CHECK(out[k] > 0);
  CHECK(check_cx_relations(out));

  // Parameter count must match the number of skipped letters.
  CHECK_THROWS_AS(mr_line(el(*a2, {1}), el(*a2, {1}), std::vector<int>{1},
                          std::vector<Rational>{1}),
                  validation_error);
  std::vector<Rational> neg{-1};
  CHECK_THROWS_AS(mr_line(el(*a2, {2}), el(*a2, {1, 2}), std::vector<int>{1, 2}, neg),
                  validation_error);
}

TEST_CASE("representative lines agree with the support table on all families") {
  auto a2 = A(2);
  std::mt19937 rng(90210);
  for (std::size_t vi = 0; vi < a2->order(); ++vi)
    for (std::size_t wi = 0; wi < a2->order(); ++wi) {
      if (!a2->leq(vi, wi)) continue;
      auto v = a2->element(vi), w = a2->element(wi);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> params;
        for (int k = 0; k < w.length() - v.length(); ++k)
          params.emplace_back(1 + int(rng() % 9), 1 + int(rng() % 5));
        // mr_line cross-checks support and relations internally.
        auto out = mr_line(v, w, w.word(), params);
        CHECK(vector_support(out) == support_table().at(make_cell(v, w)));
      }
    }
}

TEST_CASE("support table structure") {
  auto a2 = A(2);
  const auto& table = support_table();
  CHECK(table.families.size() == 19);
  CHECK(table.at(make_cell(a2->identity(), a2->identity())) == std::set<int>{bX12});
  CHECK(table.beta_minus.at({1, 2}) == std::set<int>{bXm1, bT1});
  CHECK(table.beta_plus.at({1}) == std::set<int>{bT2, bX2});

  // Both beta systems partition the basis.
  for (const auto* part : {&table.beta_minus, &table.beta_plus}) {
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& [word, indices] : *part) {
      total += indices.size();
      seen.insert(indices.begin(), indices.end());
    }
    CHECK(part->size() == 6);
    CHECK(total == kAdjointDim);
    CHECK(seen.size() == kAdjointDim);
  }

  // Intersection law: the family support is beta_minus(w) meet beta_plus(v),
  // where the betas accumulate downward / upward in the Bruhat order.
  for (std::size_t vi = 0; vi < a2->order(); ++vi)
    for (std::size_t wi = 0; wi < a2->order(); ++wi) {
      if (!a2->leq(vi, wi)) continue;
      std::set<int> below, above;
      for (std::size_t zi = 0; zi < a2->order(); ++zi) {
        if (a2->leq(zi, wi)) {
          const auto& b = table.beta_minus.at(a2->word(zi));
          below.insert(b.begin(), b.end());
        }
        if (a2->leq(vi, zi)) {
          const auto& b = table.beta_plus.at(a2->word(zi));
          above.insert(b.begin(), b.end());
        }
      }
      std::set<int> meet;
      for (int k : below)
        if (above.count(k)) meet.insert(k);
      CHECK(meet == table.at(make_cell(a2->element(vi), a2->element(wi))));
    }
}

TEST_CASE("fixed basis columns") {
  auto a2 = A(2);
  auto u = generator_matrix(GenKind::y, 1, 1);
  CHECK(fixed_basis_columns(u) == std::set<int>{bXm12, bXm1, bX2});

  // The fixed set does not depend on the parameter.
  for (const Rational& a : {Rational(2), Rational(1, 3), Rational(17, 5)})
    CHECK(fixed_basis_columns(generator_matrix(GenKind::y, 1, a)) ==
          std::set<int>{bXm12, bXm1, bX2});

  // Piece matrices reproduce the generator fixed sets.
  auto piece = piece_of(*a2, std::vector<int>{1}, std::vector<int>{});
  CHECK(fixed_basis_columns(piece_matrix(piece)) == std::set<int>{bXm12, bXm1, bX2});

  // Fixed columns of a product are the intersection of fixed columns.
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    auto pick = [&]() {
      return generator_matrix(rng() % 2 ? GenKind::x : GenKind::y,
                              1 + int(rng() % 2), Rational(1 + int(rng() % 6)));
    };
    auto m1 = pick(), m2 = pick();
    auto fixed1 = fixed_basis_columns(m1);
    auto fixed2 = fixed_basis_columns(m2);
    std::set<int> meet;
    for (int k : fixed1)
      if (fixed2.count(k)) meet.insert(k);
    CHECK(fixed_basis_columns(m1 * m2) == meet);
  }
}

TEST_CASE("random nonnegative monoid products dominate the identity") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 500; ++trial) {
    auto m = AdjointMatrix::identity();
    int letters = 1 + int(rng() % 6);
    for (int k = 0; k < letters; ++k)
      m = m * generator_matrix(rng() % 2 ? GenKind::x : GenKind::y,
                               1 + int(rng() % 2),
                               Rational(1 + int(rng() % 8), 1 + int(rng() % 4)));
    for (int r = 0; r < kAdjointDim; ++r)
      for (int c = 0; c < kAdjointDim; ++c)
        CHECK(m.at(r, c) >= (r == c ? 1 : 0));
    // fixed_basis_columns asserts the dominance exactly and must not throw.
    CHECK_NOTHROW(fixed_basis_columns(m));
  }
}

TEST_CASE("fixed-vector atlases of pieces") {
  auto a2 = A(2);

  auto all = fixed_cell_atlas(*a2, piece_of(*a2, std::vector<int>{}, std::vector<int>{}));
  CHECK(all.size() == 19);

  auto got = fixed_cell_atlas(*a2, piece_of(*a2, std::vector<int>{1}, std::vector<int>{}));
  std::set<std::pair<std::vector<int>, std::vector<int>>> words;
  for (const auto& c : got) words.emplace(c.v.word(), c.w.word());
  std::set<std::pair<std::vector<int>, std::vector<int>>> expect{
      {{1, 2, 1}, {1, 2, 1}}, {{1, 2}, {1, 2}}, {{1}, {1}},
      {{1, 2}, {1, 2, 1}},    {{1}, {1, 2}},
  };
  CHECK(words == expect);

  got = fixed_cell_atlas(*a2, piece_of(*a2, std::vector<int>{1, 2}, std::vector<int>{}));
  REQUIRE(got.size() == 1);
  CHECK(got[0].v == a2->longest());
  CHECK(got[0].w == a2->longest());

  // Cross-oracle: the fixed-vector computation reproduces the descent-rule
  // enumeration for every piece.
  for (const auto& piece : all_pieces(*a2)) {
    auto fixed = fixed_cell_atlas(*a2, piece);
    auto enumerated = enumerate_Z(*a2, piece.J(), piece.J_prime());
    REQUIRE(fixed.size() == enumerated.size());
    for (std::size_t k = 0; k < fixed.size(); ++k)
      CHECK(fixed[k] == enumerated[k]);
  }
}

TEST_CASE("primitive normalization and printing") {
  AdjointVector v{};
  v[bXm1] = Rational(4, 6);
  v[bT1] = Rational(2, 3);
  v[bX1] = Rational(2);
  auto n = normalize_primitive(v);
  CHECK(n[bXm1] == 1);
  CHECK(n[bT1] == 1);
  CHECK(n[bX1] == 3);

  // Scaling invariance.
  AdjointVector scaled{};
  for (int k = 0; k < kAdjointDim; ++k) scaled[k] = v[k] * Rational(7, 3);
  auto n2 = normalize_primitive(scaled);
  CHECK(n2 == n);

  // Leading-sign convention: the first nonzero coordinate comes out positive.
  AdjointVector negv{};
  negv[bT2] = -3;
  negv[bX1] = 6;
  auto n3 = normalize_primitive(negv);
  CHECK(n3[bT2] == 1);
  CHECK(n3[bX1] == -2);

  CHECK(rational_to_string(Rational(4, 3)) == "4/3");
  CHECK(rational_to_string(Rational(2)) == "2");
  auto strs = vector_strings(n);
  CHECK(strs[bXm1] == "1");
  CHECK(strs[bX12] == "0");
}
