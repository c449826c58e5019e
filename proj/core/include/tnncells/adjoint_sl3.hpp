#pragma once

// Exact-rational model of the adjoint representation of SL3.
//
// The canonical basis is ordered
//   X_-12, X_-1, X_-2, t_1, t_2, X_1, X_2, X_12   (indices 0..7)
// and coordinates of a vector are written
//   (a_-12, a_-1, a_-2, c_1, c_2, a_1, a_2, a_12).
// Generator matrices act by nonnegative matrices for parameters >= 0, and
// products of such matrices are entrywise >= identity; this is what makes
// the fixed-vector cone computations exact and purely combinatorial.
// Everything in this module is exact rational arithmetic; no floating point.

#include <gmpxx.h>

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tnncells/springer.hpp"
#include "tnncells/weyl.hpp"

namespace tnncells {

using Rational = mpq_class;

inline constexpr int kAdjointDim = 8;
using AdjointVector = std::array<Rational, kAdjointDim>;

struct AdjointMatrix {
  std::array<Rational, kAdjointDim * kAdjointDim> a{};
  Rational& at(int r, int c) { return a[r * kAdjointDim + c]; }
  const Rational& at(int r, int c) const { return a[r * kAdjointDim + c]; }
  static AdjointMatrix identity();
};

AdjointMatrix operator*(const AdjointMatrix& x, const AdjointMatrix& y);
AdjointVector operator*(const AdjointMatrix& m, const AdjointVector& v);

enum : int { bXm12 = 0, bXm1 = 1, bXm2 = 2, bT1 = 3, bT2 = 4, bX1 = 5, bX2 = 6, bX12 = 7 };
extern const std::array<const char*, kAdjointDim> kAdjointBasisNames;

enum class GenKind { x, y };

// The matrix of x_i(a) or y_i(a), i in {1,2}.  Entries are nonnegative for
// a >= 0 (asserted); negative parameters are permitted because the
// representative construction below needs x_i(-1).
AdjointMatrix generator_matrix(GenKind kind, int i, const Rational& a);
// Representative of the simple reflection: y_i(1) x_i(-1) y_i(1).
AdjointMatrix reflection_matrix(int i);
// rho of a piece evaluated at unit parameters: y-letters of z then x-letters
// of z'.
AdjointMatrix piece_matrix(const PieceLabel& piece);

// The nine binomial relations cutting out the nonnegative adjoint cone.
// Throws on the zero vector; requires nonnegative coordinates.
bool check_cx_relations(const AdjointVector& vec);

// Number of free parameters of the (v, w) family: |w| - |v| + 1.
int family_arity(const CellLabel& cell);
// A point of the family at the given positive parameters.
AdjointVector cell_family_sample(const CellLabel& cell, std::span<const Rational> params);

// Marsh-Rietsch line: the positive subexpression of v in the word, with taken
// letters replaced by reflection matrices and skipped letters by y_i(a_k),
// applied to the highest vector X_12.  Result is primitive-normalized; its
// support is the tabulated [[v, w]] and the cone relations hold.
AdjointVector mr_line(WeylElement v, WeylElement w, std::span<const int> word,
                      std::span<const Rational> params);

std::set<int> vector_support(const AdjointVector& vec);
// Scale to coprime integer coordinates (first nonzero positive).
AdjointVector normalize_primitive(const AdjointVector& vec);

struct SupportTable {
  // Keyed by canonical (v word, w word).
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::set<int>> families;
  // Partitions of the basis indexed by the canonical word of z.
  std::map<std::vector<int>, std::set<int>> beta_minus, beta_plus;
  const std::set<int>& at(const CellLabel& cell) const;
};
const SupportTable& support_table();

// Basis vectors fixed by u, read off the zero columns of u - identity; the
// entrywise nonnegativity of u - identity is asserted exactly.
std::set<int> fixed_basis_columns(const AdjointMatrix& u);

// Labels (v, w) whose family contains a vector fixed by the piece's matrix at
// unit parameters.  Exact; independent of enumerate_Z.
std::vector<CellLabel> fixed_cell_atlas(const WeylGroup& a2, const PieceLabel& piece);

std::string rational_to_string(const Rational& q);
std::vector<std::string> vector_strings(const AdjointVector& vec);

}  // namespace tnncells
