#pragma once

// Totally nonnegative matrices in SL_n (n <= 4) and the parabolic subgroup
// attached to one: assembly from generator words in exact rational
// arithmetic, exhaustive minor classification, eigenvalue clustering, the
// flag of generalized eigenspaces, and the SL2 chart section.
//
// Spectral computations are floating point with explicit tolerances; inputs
// whose spectrum cannot be certified positive real (or whose clusters are
// too close to separate safely) are rejected with numeric_domain_error
// rather than misclassified.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "tnncells/errors.hpp"

namespace tnncells {

struct RationalMatrix {
  int n = 0;
  std::vector<mpq_class> a;  // row-major n x n
  mpq_class& at(int r, int c) { return a[r * n + c]; }
  const mpq_class& at(int r, int c) const { return a[r * n + c]; }
  static RationalMatrix identity(int n);
};

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
mpq_class determinant(const RationalMatrix& m);
Eigen::MatrixXd to_double(const RationalMatrix& m);

struct GenToken {
  enum class Kind { x, y, torus };
  Kind kind;
  int index = 0;                // generator index for x/y
  mpq_class param;              // parameter for x/y
  std::vector<mpq_class> torus; // n diagonal entries, product 1
};

// Grammar: comma-separated "x<i>:<val>", "y<i>:<val>", or "t:<v1>,<v2>,...,<vn>"
// (the torus consumes n values).  Values are integers, fractions "p/q", or
// decimals, parsed exactly.
std::vector<GenToken> parse_generator_word(int n, std::string_view text);

struct TNNMatrix {
  int n = 0;
  RationalMatrix mat;
  std::string provenance;  // the generator word, when assembled
};

TNNMatrix assemble_tnn(int n, const std::vector<GenToken>& word);
TNNMatrix assemble_tnn(int n, std::string_view grammar);

enum class MinorClass { totally_positive, totally_nonnegative, neither };
// Exhaustive sign scan over all square minors (n <= 4).
MinorClass minor_positivity(const RationalMatrix& m);

struct EigenSplit {
  struct Group {
    double value;           // cluster representative (mean)
    int multiplicity;
    Eigen::MatrixXd basis;  // n x multiplicity, generalized eigenspace
  };
  std::vector<Group> groups;  // sorted by value, descending
  double tolerance;
};

// Eigenvalues of g, asserted real and positive, clustered at relative
// tolerance with a x1000 gap-safety margin between distinct clusters.
EigenSplit eigen_split(const Eigen::MatrixXd& g, double rel_tol = 1e-8);

struct ParabolicData {
  EigenSplit split;
  std::vector<Eigen::MatrixXd> flag;  // F_1 c F_2 c ... bases (n x d_k)
  std::vector<int> levi_block_sizes;
  bool is_full_group = false;  // single eigenvalue group
  bool is_borel = false;       // n distinct groups
  // Basis of the stabilizer algebra of the flag inside trace-zero matrices,
  // columns are flattened n x n matrices.
  Eigen::MatrixXd p_lie_basis;
  // Subspace distance between the flag-stabilizer construction and the
  // Ad-eigenspace construction of the same algebra.
  double construction_agreement = 0.0;
  // Subspace distance between the centralizer of the semisimple part and the
  // generalized 1-eigenspace of Ad.
  double levi_agreement = 0.0;
};

ParabolicData parabolic_of(const Eigen::MatrixXd& g, double rel_tol = 1e-8);

struct BorelChartReport {
  std::vector<double> eigenvalues;  // descending
  std::vector<int> blocks;
  bool is_borel = false;
  std::vector<int> flag_pluecker_signs;  // one entry per flag step
  bool pass = false;
};

// Requires a totally positive input (validation_error otherwise); throws
// verification_error if the flag fails the strict Plucker sign test.
BorelChartReport borel_chart_check(const TNNMatrix& g, double strictness = 1e-8);

struct Sl2SectionPoint {
  double epsilon;
  double a, b, c, d;  // [[a, b], [c, d]], det 1, all positive
};
// Unique positive root of eps^2 + eps(bz + c/z) - 1 = 0 and the matrix it
// generates; fixes the line through (1, z).
Sl2SectionPoint sl2_section_solve(double z, double b, double c);

// Operator norm distance between column-space projectors.
double subspace_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);
// Ad(g) on the trace-zero matrix space, (n^2-1) x (n^2-1).
Eigen::MatrixXd ad_operator(const Eigen::MatrixXd& g);

}  // namespace tnncells
