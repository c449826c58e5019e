#include "tnncells/adjoint_sl3.hpp"

#include "tnncells/subexpression.hpp"

#include <algorithm>

namespace tnncells {

const std::array<const char*, kAdjointDim> kAdjointBasisNames = {
    "X_-12", "X_-1", "X_-2", "t_1", "t_2", "X_1", "X_2", "X_12"};

AdjointMatrix AdjointMatrix::identity() {
  AdjointMatrix m;
  for (int i = 0; i < kAdjointDim; ++i) m.at(i, i) = 1;
  return m;
}

AdjointMatrix operator*(const AdjointMatrix& x, const AdjointMatrix& y) {
  AdjointMatrix out;
  for (int r = 0; r < kAdjointDim; ++r)
    for (int k = 0; k < kAdjointDim; ++k) {
      const Rational& xrk = x.at(r, k);
      if (xrk == 0) continue;
      for (int c = 0; c < kAdjointDim; ++c)
        if (y.at(k, c) != 0) out.at(r, c) += xrk * y.at(k, c);
    }
  return out;
}

AdjointVector operator*(const AdjointMatrix& m, const AdjointVector& v) {
  AdjointVector out{};
  for (int r = 0; r < kAdjointDim; ++r)
    for (int c = 0; c < kAdjointDim; ++c)
      if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

AdjointMatrix generator_matrix(GenKind kind, int i, const Rational& a) {
  if (i != 1 && i != 2) throw validation_error("generator index must be 1 or 2");
  AdjointMatrix m = AdjointMatrix::identity();
  const Rational a2 = a * a;
  const Rational two_a = 2 * a;
  if (kind == GenKind::x) {
    if (i == 1) {
      m.at(bX12, bX2) = a;                       // X_2   -> X_2 + a X_12
      m.at(bT1, bXm1) = a;                       // X_-1  -> X_-1 + a t_1 + a^2 X_1
      m.at(bX1, bXm1) = a2;
      m.at(bXm2, bXm12) = a;                     // X_-12 -> X_-12 + a X_-2
      m.at(bX1, bT2) = a;                        // t_2   -> t_2 + a X_1
      m.at(bX1, bT1) = two_a;                    // t_1   -> t_1 + 2a X_1
    } else {
      m.at(bX12, bX1) = a;
      m.at(bT2, bXm2) = a;
      m.at(bX2, bXm2) = a2;
      m.at(bXm1, bXm12) = a;
      m.at(bX2, bT1) = a;
      m.at(bX2, bT2) = two_a;
    }
  } else {
    if (i == 1) {
      m.at(bX2, bX12) = a;                       // X_12 -> X_12 + a X_2
      m.at(bT1, bX1) = a;                        // X_1  -> X_1 + a t_1 + a^2 X_-1
      m.at(bXm1, bX1) = a2;
      m.at(bXm12, bXm2) = a;                     // X_-2 -> X_-2 + a X_-12
      m.at(bXm1, bT2) = a;                       // t_2  -> t_2 + a X_-1
      m.at(bXm1, bT1) = two_a;                   // t_1  -> t_1 + 2a X_-1
    } else {
      m.at(bX1, bX12) = a;
      m.at(bT2, bX2) = a;
      m.at(bXm2, bX2) = a2;
      m.at(bXm12, bXm1) = a;
      m.at(bXm2, bT1) = a;
      m.at(bXm2, bT2) = two_a;
    }
  }
  if (a >= 0) {
    for (const Rational& e : m.a)
      if (e < 0) throw verification_error("nonnegative parameter gave a negative entry");
  }
  return m;
}

AdjointMatrix reflection_matrix(int i) {
  return generator_matrix(GenKind::y, i, 1) * generator_matrix(GenKind::x, i, -1) *
         generator_matrix(GenKind::y, i, 1);
}

AdjointMatrix piece_matrix(const PieceLabel& piece) {
  AdjointMatrix m = AdjointMatrix::identity();
  for (int letter : piece.z.word()) m = m * generator_matrix(GenKind::y, letter, 1);
  for (int letter : piece.z_prime.word()) m = m * generator_matrix(GenKind::x, letter, 1);
  return m;
}

bool check_cx_relations(const AdjointVector& vec) {
  bool all_zero = true;
  for (const Rational& e : vec) {
    if (e < 0) throw validation_error("cone vector has a negative coordinate");
    if (e != 0) all_zero = false;
  }
  if (all_zero) throw validation_error("cone vector must be nonzero");
  const Rational &am12 = vec[bXm12], &am1 = vec[bXm1], &am2 = vec[bXm2];
  const Rational &c1 = vec[bT1], &c2 = vec[bT2];
  const Rational &a1 = vec[bX1], &a2 = vec[bX2], &a12 = vec[bX12];
  const Rational s = c1 + c2;
  return a2 * am12 == c2 * am1 && a1 * am12 == c1 * am2 && am1 * a12 == c1 * a2 &&
         am2 * a12 == c2 * a1 && a12 * s == a1 * a2 && am12 * s == am1 * am2 &&
         c1 * c2 == a12 * am12 && c1 * s == a1 * am1 && c2 * s == a2 * am2;
}

namespace {

std::string label_key(const CellLabel& cell) {
  std::string key;
  for (int x : cell.v.word()) key += char('0' + x);
  key += ':';
  for (int x : cell.w.word()) key += char('0' + x);
  return key;
}

struct FamilyDef {
  int arity;
  // coordinate slots in basis order and their values in terms of params
  void (*fill)(AdjointVector&, std::span<const Rational>);
};

const std::map<std::string, FamilyDef>& family_defs() {
  static const std::map<std::string, FamilyDef> defs = [] {
    std::map<std::string, FamilyDef> d;
    d["121:121"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bXm12] = p[0]; }};
    d["12:12"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bXm1] = p[0]; }};
    d["21:21"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bXm2] = p[0]; }};
    d["2:2"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bX1] = p[0]; }};
    d["1:1"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bX2] = p[0]; }};
    d[":"] = {1, [](AdjointVector& v, std::span<const Rational> p) { v[bX12] = p[0]; }};
    d["21:121"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                     v[bXm12] = p[0];
                     v[bXm2] = p[1];
                   }};
    d["12:121"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                     v[bXm12] = p[0];
                     v[bXm1] = p[1];
                   }};
    d["1:12"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                   v[bXm1] = p[0];
                   v[bX2] = p[1];
                 }};
    d["2:21"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                   v[bXm2] = p[0];
                   v[bX1] = p[1];
                 }};
    d[":2"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                 v[bX1] = p[0];
                 v[bX12] = p[1];
               }};
    d[":1"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                 v[bX2] = p[0];
                 v[bX12] = p[1];
               }};
    d["2:12"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                   v[bXm1] = p[0];
                   v[bT1] = p[1];
                   v[bX1] = p[1] * p[1] / p[0];
                 }};
    d["1:21"] = {2, [](AdjointVector& v, std::span<const Rational> p) {
                   v[bXm2] = p[0];
                   v[bT2] = p[1];
                   v[bX2] = p[1] * p[1] / p[0];
                 }};
    d["2:121"] = {3, [](AdjointVector& v, std::span<const Rational> p) {
                    v[bXm1] = p[0];
                    v[bT1] = p[1];
                    v[bXm2] = p[2];
                    v[bX1] = p[1] * p[1] / p[0];
                    v[bXm12] = p[0] * p[2] / p[1];
                  }};
    d["1:121"] = {3, [](AdjointVector& v, std::span<const Rational> p) {
                    v[bXm2] = p[0];
                    v[bT2] = p[1];
                    v[bXm1] = p[2];
                    v[bX2] = p[1] * p[1] / p[0];
                    v[bXm12] = p[2] * p[0] / p[1];
                  }};
    d[":12"] = {3, [](AdjointVector& v, std::span<const Rational> p) {
                  v[bXm1] = p[0];
                  v[bT1] = p[1];
                  v[bX2] = p[2];
                  v[bX1] = p[1] * p[1] / p[0];
                  v[bX12] = p[1] * p[2] / p[0];
                }};
    d[":21"] = {3, [](AdjointVector& v, std::span<const Rational> p) {
                  v[bXm2] = p[0];
                  v[bT2] = p[1];
                  v[bX1] = p[2];
                  v[bX2] = p[1] * p[1] / p[0];
                  v[bX12] = p[1] * p[2] / p[0];
                }};
    d[":121"] = {4, [](AdjointVector& v, std::span<const Rational> p) {
                   const Rational s = p[0] + p[1];
                   v[bT1] = p[0];
                   v[bT2] = p[1];
                   v[bX1] = p[2];
                   v[bX2] = p[3];
                   v[bXm1] = p[0] * s / p[2];
                   v[bXm2] = p[1] * s / p[3];
                   v[bX12] = p[2] * p[3] / s;
                   v[bXm12] = p[0] * p[1] * s / (p[2] * p[3]);
                 }};
    return d;
  }();
  return defs;
}

}  // namespace

int family_arity(const CellLabel& cell) {
  auto it = family_defs().find(label_key(cell));
  if (it == family_defs().end())
    throw validation_error("label is not one of the rank-2 cell families");
  return it->second.arity;
}

AdjointVector cell_family_sample(const CellLabel& cell, std::span<const Rational> params) {
  auto it = family_defs().find(label_key(cell));
  if (it == family_defs().end())
    throw validation_error("label is not one of the rank-2 cell families");
  if (int(params.size()) != it->second.arity)
    throw validation_error("wrong number of family parameters");
  std::vector<Rational> canon(params.begin(), params.end());
  for (Rational& p : canon) {
    p.canonicalize();
    if (p <= 0) throw validation_error("family parameters must be positive");
  }
  AdjointVector v{};
  it->second.fill(v, canon);
  return v;
}

AdjointVector mr_line(WeylElement v, WeylElement w, std::span<const int> word,
                      std::span<const Rational> params) {
  Subexpression sub = positive_subexpression(v, w, word);
  const std::size_t skipped =
      std::count(sub.taken.begin(), sub.taken.end(), std::uint8_t(0));
  if (params.size() != skipped)
    throw validation_error("one parameter per skipped letter is required");
  std::vector<Rational> canon(params.begin(), params.end());
  for (Rational& p : canon) {
    p.canonicalize();
    if (p <= 0) throw validation_error("line parameters must be positive");
  }

  AdjointMatrix g = AdjointMatrix::identity();
  std::size_t pi = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (sub.taken[k])
      g = g * reflection_matrix(word[k]);
    else
      g = g * generator_matrix(GenKind::y, word[k], canon[pi++]);
  }
  AdjointVector eta{};
  eta[bX12] = 1;
  AdjointVector out = normalize_primitive(g * eta);

  if (vector_support(out) != support_table().at(make_cell(v, w)))
    throw verification_error("line support disagrees with the tabulated family");
  if (!check_cx_relations(out))
    throw verification_error("line violates the cone relations");
  return out;
}

std::set<int> vector_support(const AdjointVector& vec) {
  std::set<int> out;
  for (int i = 0; i < kAdjointDim; ++i)
    if (vec[i] != 0) out.insert(i);
  return out;
}

AdjointVector normalize_primitive(const AdjointVector& vec) {
  mpz_class denom_lcm = 1, numer_gcd = 0;
  for (const Rational& e : vec) {
    if (e == 0) continue;
    mpz_class d = e.get_den();
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
  }
  AdjointVector out = vec;
  for (Rational& e : out) e *= denom_lcm;
  for (const Rational& e : out) {
    if (e == 0) continue;
    mpz_class n = abs(e.get_num());
    mpz_gcd(numer_gcd.get_mpz_t(), numer_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (numer_gcd == 0) return out;  // zero vector stays zero
  int sign = 0;
  for (const Rational& e : out)
    if (e != 0) { sign = sgn(e) ; break; }
  Rational scale = Rational(sign) / Rational(numer_gcd);
  for (Rational& e : out) e *= scale;
  return out;
}

const std::set<int>& SupportTable::at(const CellLabel& cell) const {
  auto it = families.find({cell.v.word(), cell.w.word()});
  if (it == families.end())
    throw validation_error("label is not one of the rank-2 cell families");
  return it->second;
}

const SupportTable& support_table() {
  static const SupportTable table = [] {
    SupportTable t;
    using W = std::vector<int>;
    auto put = [&](W v, W w, std::set<int> s) {
      t.families[{std::move(v), std::move(w)}] = std::move(s);
    };
    put({1, 2, 1}, {1, 2, 1}, {bXm12});
    put({1, 2}, {1, 2}, {bXm1});
    put({2, 1}, {2, 1}, {bXm2});
    put({2}, {2}, {bX1});
    put({1}, {1}, {bX2});
    put({}, {}, {bX12});
    put({2, 1}, {1, 2, 1}, {bXm12, bXm2});
    put({1, 2}, {1, 2, 1}, {bXm12, bXm1});
    put({1}, {1, 2}, {bXm1, bX2});
    put({2}, {2, 1}, {bXm2, bX1});
    put({}, {2}, {bX1, bX12});
    put({}, {1}, {bX2, bX12});
    put({2}, {1, 2}, {bXm1, bT1, bX1});
    put({1}, {2, 1}, {bXm2, bT2, bX2});
    put({2}, {1, 2, 1}, {bXm12, bXm1, bXm2, bT1, bX1});
    put({1}, {1, 2, 1}, {bXm12, bXm1, bXm2, bT2, bX2});
    put({}, {1, 2}, {bXm1, bT1, bX1, bX2, bX12});
    put({}, {2, 1}, {bXm2, bT2, bX2, bX1, bX12});
    put({}, {1, 2, 1}, {bXm12, bXm1, bXm2, bT1, bT2, bX1, bX2, bX12});
    t.beta_minus[{}] = {bX12};
    t.beta_minus[{1}] = {bX2};
    t.beta_minus[{2}] = {bX1};
    t.beta_minus[{1, 2}] = {bXm1, bT1};
    t.beta_minus[{2, 1}] = {bXm2, bT2};
    t.beta_minus[{1, 2, 1}] = {bXm12};
    t.beta_plus[{}] = {bX12};
    t.beta_plus[{1}] = {bT2, bX2};
    t.beta_plus[{2}] = {bT1, bX1};
    t.beta_plus[{2, 1}] = {bXm2};
    t.beta_plus[{1, 2}] = {bXm1};
    t.beta_plus[{1, 2, 1}] = {bXm12};
    return t;
  }();
  return table;
}

std::set<int> fixed_basis_columns(const AdjointMatrix& u) {
  std::set<int> fixed;
  for (int c = 0; c < kAdjointDim; ++c) {
    bool zero_col = true;
    for (int r = 0; r < kAdjointDim; ++r) {
      Rational diff = u.at(r, c) - (r == c ? 1 : 0);
      if (diff < 0)
        throw verification_error("matrix is not entrywise >= identity");
      if (diff != 0) zero_col = false;
    }
    if (zero_col) fixed.insert(c);
  }
  return fixed;
}

std::vector<CellLabel> fixed_cell_atlas(const WeylGroup& a2, const PieceLabel& piece) {
  if (a2.type() != DiagramType::A || a2.rank() != 2)
    throw validation_error("the adjoint model is rank-2 type A only");
  require_same_group(piece.z, a2.identity());

  const AdjointMatrix u = piece_matrix(piece);
  const std::set<int> fixed = fixed_basis_columns(u);
  static const Rational generic[4] = {2, 3, 5, 7};

  std::vector<CellLabel> out;
  for (std::size_t w = 0; w < a2.order(); ++w)
    for (std::size_t v = 0; v < a2.order(); ++v) {
      if (!a2.leq(v, w)) continue;
      CellLabel cell = make_cell(a2.element(v), a2.element(w));
      AdjointVector sample =
          cell_family_sample(cell, std::span<const Rational>(generic, family_arity(cell)));
      bool meets = (u * sample == sample);
      // The same answer must come from the support criterion: a family meets
      // the fixed space iff its support lies in the fixed columns.
      bool by_support = [&] {
        for (int s : vector_support(sample))
          if (!fixed.count(s)) return false;
        return true;
      }();
      if (meets != by_support)
        throw verification_error("fixed-space membership routes disagree");
      if (meets) out.push_back(cell);
    }
  std::sort(out.begin(), out.end(), [&](const CellLabel& x, const CellLabel& y) {
    return std::tie(x.dim, a2.word(x.v.index()), a2.word(x.w.index())) <
           std::tie(y.dim, a2.word(y.v.index()), a2.word(y.w.index()));
  });
  return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::vector<std::string> vector_strings(const AdjointVector& vec) {
  std::vector<std::string> out;
  out.reserve(kAdjointDim);
  for (const Rational& e : vec) out.push_back(e.get_str());
  return out;
}

}  // namespace tnncells
