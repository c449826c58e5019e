#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "tnncells/parabolic.hpp"

using namespace tnncells;

namespace {

Eigen::MatrixXd diag3(double a, double b, double c) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Eigen::MatrixXd standard_cols(int n, int k) {
  return Eigen::MatrixXd::Identity(n, n).leftCols(k);
}

}  // namespace

TEST_CASE("generator word parsing and assembly") {
  auto g = assemble_tnn(2, "y1:1,t:2,1/2,x1:1");
  CHECK(g.mat.at(0, 0) == 2);
  CHECK(g.mat.at(0, 1) == 2);
  CHECK(g.mat.at(1, 0) == 2);
  CHECK(g.mat.at(1, 1) == mpq_class(5, 2));
  CHECK(determinant(g.mat) == 1);
  CHECK(g.provenance == "y1:1,t:2,1/2,x1:1");

  // Empty word gives the identity.
  auto id = assemble_tnn(3, "");
  CHECK(id.mat.a == RationalMatrix::identity(3).a);

  // Decimals and fractions parse exactly.
  CHECK(assemble_tnn(2, "x1:0.5").mat.at(0, 1) == mpq_class(1, 2));
  CHECK(assemble_tnn(2, "x1:2/4").mat.at(0, 1) == mpq_class(1, 2));
  CHECK(assemble_tnn(3, "x2:1.25").mat.at(1, 2) == mpq_class(5, 4));
  CHECK(assemble_tnn(3, " x1:1 , y2:3 ").mat.at(2, 1) == 3);

  // x_i(a) adds a at (i-1, i); y_i(a) at (i, i-1).
  auto x1 = assemble_tnn(3, "x1:7");
  CHECK(x1.mat.at(0, 1) == 7);
  CHECK(x1.mat.at(1, 0) == 0);
}

TEST_CASE("generator word rejection") {
  CHECK_THROWS_AS(assemble_tnn(1, ""), validation_error);
  CHECK_THROWS_AS(assemble_tnn(5, ""), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "x1:-1"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "x2:1"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "x0:1"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "z1:1"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "x1"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "x1:abc"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "t:2"), validation_error);
  CHECK_THROWS_AS(assemble_tnn(2, "t:2,3"), validation_error);     // product != 1
  CHECK_THROWS_AS(assemble_tnn(2, "t:-1,-1"), validation_error);   // nonpositive
  CHECK_THROWS_AS(assemble_tnn(2, "t:0,1"), validation_error);
}

TEST_CASE("minor classification") {
  CHECK(minor_positivity(RationalMatrix::identity(3)) ==
        MinorClass::totally_nonnegative);
  CHECK(minor_positivity(assemble_tnn(2, "y1:1,t:2,1/2,x1:1").mat) ==
        MinorClass::totally_positive);
  CHECK(minor_positivity(assemble_tnn(2, "x1:1").mat) ==
        MinorClass::totally_nonnegative);

  RationalMatrix swap = RationalMatrix::identity(2);
  swap.at(0, 0) = 0;
  swap.at(1, 1) = 0;
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(minor_positivity(swap) == MinorClass::neither);

  // A 3x3 product covering a full reduced word is totally positive.
  CHECK(minor_positivity(assemble_tnn(3, "y1:1,y2:2,y1:3,x1:1,x2:1,x1:2").mat) ==
        MinorClass::totally_positive);
}

TEST_CASE("eigen_split: pinned spectra") {
  auto g = to_double(assemble_tnn(2, "y1:1,t:2,1/2,x1:1").mat);
  auto split = eigen_split(g);
  REQUIRE(split.groups.size() == 2);
  CHECK(split.groups[0].value == doctest::Approx(4.265564437074637).epsilon(1e-9));
  CHECK(split.groups[1].value == doctest::Approx(0.2344355629253626).epsilon(1e-9));
  CHECK(split.groups[0].multiplicity == 1);
  CHECK(split.groups[1].multiplicity == 1);

  // The dominant eigenvector of a totally positive matrix has one sign.
  const auto& top = split.groups[0].basis;
  REQUIRE(top.cols() == 1);
  CHECK(top(0, 0) * top(1, 0) > 0);
  CHECK(std::abs(top(1, 0) / top(0, 0)) ==
        doctest::Approx(1.132782218537319).epsilon(1e-9));

  auto one = eigen_split(Eigen::MatrixXd::Identity(3, 3));
  REQUIRE(one.groups.size() == 1);
  CHECK(one.groups[0].multiplicity == 3);
  CHECK(one.groups[0].value == doctest::Approx(1.0));
}

TEST_CASE("eigen_split: rejected spectra") {
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -1, 1, 0;
  CHECK_THROWS_AS(eigen_split(rot), numeric_domain_error);

  Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(eigen_split(neg), numeric_domain_error);

  // A gap inside the ambiguity band (between tol and 1000 tol) is rejected
  // instead of being resolved arbitrarily.
  double mu = 1 + 5e-7;
  Eigen::MatrixXd close = Eigen::MatrixXd::Zero(2, 2);
  close(0, 0) = mu;
  close(1, 1) = 1 / mu;
  CHECK_THROWS_AS(eigen_split(close), numeric_domain_error);

  Eigen::MatrixXd rect(2, 3);
  CHECK_THROWS_AS(eigen_split(rect), validation_error);
}

TEST_CASE("parabolic_of: unipotent input spans the whole group") {
  auto data = parabolic_of(to_double(assemble_tnn(3, "x1:1").mat));
  CHECK(data.is_full_group);
  CHECK(!data.is_borel);
  CHECK(data.levi_block_sizes == std::vector<int>{3});
  CHECK(data.p_lie_basis.cols() == 8);
  CHECK(data.construction_agreement < 1e-6);
  CHECK(data.levi_agreement < 1e-6);
}

TEST_CASE("parabolic_of: regular diagonal gives the standard borel") {
  auto data = parabolic_of(diag3(4, 1, 0.25));
  CHECK(data.is_borel);
  CHECK(!data.is_full_group);
  CHECK(data.levi_block_sizes == std::vector<int>{1, 1, 1});
  REQUIRE(data.flag.size() == 3);
  CHECK(subspace_distance(data.flag[0], standard_cols(3, 1)) < 1e-8);
  CHECK(subspace_distance(data.flag[1], standard_cols(3, 2)) < 1e-8);
  CHECK(data.p_lie_basis.cols() == 5);  // upper-triangular trace-zero
  CHECK(data.construction_agreement < 1e-6);
  CHECK(data.levi_agreement < 1e-6);
}

TEST_CASE("parabolic_of: repeated eigenvalue gives a (2,1) parabolic") {
  auto data = parabolic_of(diag3(2, 2, 0.25));
  CHECK(!data.is_borel);
  CHECK(!data.is_full_group);
  CHECK(data.levi_block_sizes == std::vector<int>{2, 1});
  CHECK(subspace_distance(data.flag[0], standard_cols(3, 2)) < 1e-8);
  CHECK(data.p_lie_basis.cols() == 6);
}

TEST_CASE("parabolic_of: 4x4 block structure") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
  g(0, 0) = 2;
  g(1, 1) = 2;
  g(2, 2) = 0.5;
  g(3, 3) = 0.5;
  auto data = parabolic_of(g);
  CHECK(data.levi_block_sizes == std::vector<int>{2, 2});
  CHECK(subspace_distance(data.flag[0], standard_cols(4, 2)) < 1e-8);
  // Block upper triangular (2,2): dimension 4+4+4-1 inside trace-zero.
  CHECK(data.p_lie_basis.cols() == 11);
}

TEST_CASE("parabolic_of: conjugation equivariance") {
  std::mt19937 rng(13579);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd g0 = diag3(4, 1, 0.25);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) h(r, c) += 0.05 * unif(rng);
    Eigen::MatrixXd g = h * g0 * h.inverse();
    auto base = parabolic_of(g0);
    auto moved = parabolic_of(g);
    REQUIRE(base.flag.size() == moved.flag.size());
    for (std::size_t k = 0; k < base.flag.size(); ++k)
      CHECK(subspace_distance(moved.flag[k], h * base.flag[k]) < 1e-6);
  }
}

TEST_CASE("parabolic subalgebra is Ad-stable") {
  for (const Eigen::MatrixXd& g :
       {diag3(4, 1, 0.25), diag3(2, 2, 0.25),
        to_double(assemble_tnn(3, "y1:1,y2:2,y1:3,x1:1,x2:1,x1:2").mat)}) {
    auto data = parabolic_of(g);
    Eigen::MatrixXd ad = ad_operator(g);
    CHECK(subspace_distance(ad * data.p_lie_basis, data.p_lie_basis) < 1e-6);
  }
}

TEST_CASE("borel chart check") {
  auto g = assemble_tnn(2, "y1:1,t:2,1/2,x1:1");
  auto report = borel_chart_check(g);
  CHECK(report.pass);
  CHECK(report.is_borel);
  REQUIRE(report.eigenvalues.size() == 2);
  CHECK(report.eigenvalues[0] > report.eigenvalues[1]);
  CHECK(report.blocks == std::vector<int>{1, 1});
  CHECK(report.flag_pluecker_signs.size() == 2);

  // A 3x3 totally positive product passes as well.
  auto g3 = assemble_tnn(3, "y1:1,y2:2,y1:3,t:2,1,1/2,x1:1,x2:1,x1:2");
  CHECK(borel_chart_check(g3).pass);

  // Totally nonnegative but not totally positive inputs are rejected.
  CHECK_THROWS_AS(borel_chart_check(assemble_tnn(2, "")), validation_error);
  CHECK_THROWS_AS(borel_chart_check(assemble_tnn(2, "t:4,1/4")), validation_error);
  CHECK_THROWS_AS(borel_chart_check(assemble_tnn(2, "x1:1")), validation_error);
}

TEST_CASE("sl2 chart section") {
  auto pt = sl2_section_solve(1, 1, 1);
  CHECK(std::abs(pt.epsilon - (std::sqrt(2.0) - 1.0)) < 1e-10);
  CHECK(pt.a == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pt.d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Tiny parameters drive epsilon to 1.
  pt = sl2_section_solve(1, 1e-9, 1e-9);
  CHECK(std::abs(pt.epsilon - 1.0) < 1e-6);

  // A grid of positive inputs; the solver revalidates membership internally.
  for (double z : {0.25, 1.0, 3.5})
    for (double b : {0.125, 1.0, 2.25})
      for (double c : {0.125, 1.0, 2.25}) {
        auto p = sl2_section_solve(z, b, c);
        CHECK(p.a * p.d - p.b * p.c == doctest::Approx(1.0).epsilon(1e-10));
        // The line through (1, z) is fixed.
        double lhs = p.c + p.d * z;
        double rhs = z * (p.a + p.b * z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        CHECK(p.epsilon > 0);
      }

  CHECK_THROWS_AS(sl2_section_solve(0, 1, 1), validation_error);
  CHECK_THROWS_AS(sl2_section_solve(1, -1, 1), validation_error);
  CHECK_THROWS_AS(sl2_section_solve(1, 1, 0), validation_error);
}

TEST_CASE("subspace distance and ad operator") {
  Eigen::MatrixXd a(3, 1), b(3, 1), c(3, 1);
  a << 1, 1, 0;
  b << 2, 2, 0;
  c << 0, 0, 1;
  CHECK(subspace_distance(a, b) < 1e-12);
  CHECK(subspace_distance(a, c) == doctest::Approx(1.0));

  Eigen::MatrixXd ad = ad_operator(Eigen::MatrixXd::Identity(3, 3));
  CHECK(ad.rows() == 8);
  CHECK((ad - Eigen::MatrixXd::Identity(8, 8)).norm() < 1e-12);

  // Ad is multiplicative.
  Eigen::MatrixXd g1 = to_double(assemble_tnn(3, "x1:1,y2:2").mat);
  Eigen::MatrixXd g2 = to_double(assemble_tnn(3, "y1:3,x2:1").mat);
  CHECK((ad_operator(g1 * g2) - ad_operator(g1) * ad_operator(g2)).norm() < 1e-9);
}
