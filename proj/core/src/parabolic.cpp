#include "tnncells/parabolic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>

namespace tnncells {

namespace {

constexpr double kAgreementBound = 1e-6;
constexpr double kGapSafety = 1e3;

void check_size(int n) {
  if (n < 2 || n > 4) throw validation_error("matrix size must be between 2 and 4");
}

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m;
  m.n = n;
  m.a.assign(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n != y.n) throw validation_error("matrix size mismatch");
  RationalMatrix out;
  out.n = x.n;
  out.a.assign(std::size_t(x.n) * x.n, 0);
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(r, k) == 0) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return out;
}

namespace {

// cofactor expansion over the given row/column index subsets
mpq_class minor_det(const RationalMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  mpq_class sum = 0;
  std::vector<int> sub(rows.begin() + 1, rows.end());
  int sign = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (m.at(rows[0], cols[j]) != 0) {
      std::vector<int> rest;
      rest.reserve(k - 1);
      for (std::size_t t = 0; t < k; ++t)
        if (t != j) rest.push_back(cols[t]);
      sum += sign * m.at(rows[0], cols[j]) * minor_det(m, sub, rest);
    }
    sign = -sign;
  }
  return sum;
}

void all_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

mpq_class determinant(const RationalMatrix& m) {
  std::vector<int> all(m.n);
  std::iota(all.begin(), all.end(), 0);
  return minor_det(m, all, all);
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.n, m.n);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) out(r, c) = m.at(r, c).get_d();
  return out;
}

namespace {

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw validation_error("empty numeric value");
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      mpq_class q(s);
      q.canonicalize();
      if (q.get_den() == 0) throw validation_error("zero denominator");
      return q;
    }
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t places = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad decimal");
      mpz_class num(digits);
      mpz_class den = 1;
      for (std::size_t i = 0; i < places; ++i) den *= 10;
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw validation_error("unparsable numeric value: " + s);
  }
}

}  // namespace

std::vector<GenToken> parse_generator_word(int n, std::string_view text) {
  check_size(n);
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) fields.push_back(cur);

  std::vector<GenToken> out;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const std::string& field = fields[f];
    if (field.empty()) throw validation_error("empty generator token");
    auto colon = field.find(':');
    if (colon == std::string::npos)
      throw validation_error("generator token needs ':': " + field);
    std::string head = field.substr(0, colon);
    std::string val = field.substr(colon + 1);
    if (head == "t") {
      GenToken tok;
      tok.kind = GenToken::Kind::torus;
      tok.torus.push_back(parse_rational(val));
      for (int j = 1; j < n; ++j) {
        if (++f >= fields.size())
          throw validation_error("torus token needs all diagonal entries");
        tok.torus.push_back(parse_rational(fields[f]));
      }
      out.push_back(std::move(tok));
      continue;
    }
    if (head.size() < 2 || (head[0] != 'x' && head[0] != 'y'))
      throw validation_error("unknown generator kind: " + head);
    GenToken tok;
    tok.kind = head[0] == 'x' ? GenToken::Kind::x : GenToken::Kind::y;
    try {
      tok.index = std::stoi(head.substr(1));
    } catch (const std::exception&) {
      throw validation_error("bad generator index: " + head);
    }
    if (tok.index < 1 || tok.index >= n)
      throw validation_error("generator index out of range: " + head);
    tok.param = parse_rational(val);
    out.push_back(std::move(tok));
  }
  return out;
}

TNNMatrix assemble_tnn(int n, const std::vector<GenToken>& word) {
  check_size(n);
  RationalMatrix acc = RationalMatrix::identity(n);
  std::string prov;
  for (const GenToken& tok : word) {
    if (!prov.empty()) prov += ',';
    if (tok.kind == GenToken::Kind::torus) {
      if (int(tok.torus.size()) != n)
        throw validation_error("torus token needs exactly n entries");
      mpq_class prod = 1;
      RationalMatrix d = RationalMatrix::identity(n);
      prov += "t";
      for (int j = 0; j < n; ++j) {
        if (tok.torus[j] <= 0) throw validation_error("torus entries must be positive");
        prod *= tok.torus[j];
        d.at(j, j) = tok.torus[j];
        prov += (j == 0 ? ":" : ",") + tok.torus[j].get_str();
      }
      if (prod != 1) throw validation_error("torus entries must multiply to 1");
      acc = acc * d;
      continue;
    }
    if (tok.param < 0) throw validation_error("generator parameters must be nonnegative");
    RationalMatrix e = RationalMatrix::identity(n);
    if (tok.kind == GenToken::Kind::x)
      e.at(tok.index - 1, tok.index) = tok.param;
    else
      e.at(tok.index, tok.index - 1) = tok.param;
    prov += (tok.kind == GenToken::Kind::x ? "x" : "y") + std::to_string(tok.index) +
            ":" + tok.param.get_str();
    acc = acc * e;
  }
  if (determinant(acc) != 1)
    throw verification_error("assembled matrix is not unimodular");
  return TNNMatrix{n, std::move(acc), std::move(prov)};
}

TNNMatrix assemble_tnn(int n, std::string_view grammar) {
  return assemble_tnn(n, parse_generator_word(n, grammar));
}

MinorClass minor_positivity(const RationalMatrix& m) {
  check_size(m.n);
  bool any_zero = false;
  for (int k = 1; k <= m.n; ++k) {
    std::vector<std::vector<int>> subsets;
    all_subsets(m.n, k, [&](const std::vector<int>& s) { subsets.push_back(s); });
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        mpq_class d = minor_det(m, rows, cols);
        if (d < 0) return MinorClass::neither;
        if (d == 0) any_zero = true;
      }
  }
  return any_zero ? MinorClass::totally_nonnegative : MinorClass::totally_positive;
}

namespace {

// kernel basis of M with a required dimension; ambiguous singular-value gaps
// are rejected rather than guessed
Eigen::MatrixXd kernel_of_dim(const Eigen::MatrixXd& M, int dim, double rel_tol) {
  const int n = int(M.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  auto sigma = [&](int i) { return i < sv.size() ? sv(i) : 0.0; };
  const double scale = std::max(sigma(0), 1.0);
  const double cut = rel_tol * scale;
  if (dim > 0 && sigma(n - dim) > cut)
    throw numeric_domain_error("kernel smaller than the spectral structure requires");
  if (dim < n && sigma(n - dim - 1) < kGapSafety * cut)
    throw numeric_domain_error("singular value gap inside the ambiguity band");
  return svd.matrixV().rightCols(dim);
}

// orthonormal basis of the column space with a required dimension; the scale
// is the top singular value, so long products of small factors stay testable
Eigen::MatrixXd range_of_dim(const Eigen::MatrixXd& M, int dim, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  auto sigma = [&](int i) { return i < sv.size() ? sv(i) : 0.0; };
  const double scale = std::max(sigma(0), 1e-300);
  const double cut = rel_tol * scale;
  if (dim > 0 && sigma(dim - 1) < kGapSafety * cut)
    throw numeric_domain_error("range smaller than the spectral structure requires");
  if (sigma(dim) > cut)
    throw numeric_domain_error("singular value gap inside the ambiguity band");
  return svd.matrixU().leftCols(dim);
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& M, int e) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  for (int i = 0; i < e; ++i) out = out * M;
  return out;
}

}  // namespace

EigenSplit eigen_split(const Eigen::MatrixXd& g, double rel_tol) {
  const int n = int(g.rows());
  if (n != g.cols() || n < 1) throw validation_error("square matrix required");
  Eigen::EigenSolver<Eigen::MatrixXd> es(g);
  if (es.info() != Eigen::Success)
    throw numeric_domain_error("eigenvalue iteration failed");

  std::vector<double> vals;
  double scale = 0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(es.eigenvalues()(i)));
  scale = std::max(scale, 1e-300);
  for (int i = 0; i < n; ++i) {
    std::complex<double> lam = es.eigenvalues()(i);
    if (std::abs(lam.imag()) > kGapSafety * rel_tol * scale)
      throw numeric_domain_error("spectrum is not real within tolerance");
    if (lam.real() <= 0)
      throw numeric_domain_error("spectrum is not positive");
    vals.push_back(lam.real());
  }
  std::sort(vals.begin(), vals.end(), std::greater<>());

  EigenSplit split;
  split.tolerance = rel_tol;
  std::vector<std::pair<double, int>> clusters;  // (sum, count)
  clusters.emplace_back(vals[0], 1);
  for (int i = 1; i < n; ++i) {
    double prev = clusters.back().first / clusters.back().second;
    double rel_gap = (prev - vals[i]) / std::max(std::abs(prev), std::abs(vals[i]));
    if (rel_gap <= rel_tol) {
      clusters.back().first += vals[i];
      clusters.back().second += 1;
    } else if (rel_gap > kGapSafety * rel_tol) {
      clusters.emplace_back(vals[i], 1);
    } else {
      throw numeric_domain_error("eigenvalue gap inside the ambiguity band");
    }
  }

  for (const auto& [sum, count] : clusters) {
    EigenSplit::Group grp;
    grp.value = sum / count;
    grp.multiplicity = count;
    Eigen::MatrixXd M =
        matrix_power(g - grp.value * Eigen::MatrixXd::Identity(n, n), count);
    grp.basis = kernel_of_dim(M, count, rel_tol);
    split.groups.push_back(std::move(grp));
  }
  return split;
}

namespace {

// orthonormal basis of trace-zero matrices, columns are flattened (column
// major) n x n matrices
Eigen::MatrixXd trace_zero_basis(int n) {
  const int N = n * n;
  Eigen::VectorXd vi = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < n; ++i) vi(i * n + i) = 1.0 / std::sqrt(double(n));
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(N, N) - vi * vi.transpose();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(P);
  return (qr.householderQ() * Eigen::MatrixXd::Identity(N, N - 1)).eval();
}

}  // namespace

Eigen::MatrixXd ad_operator(const Eigen::MatrixXd& g) {
  const int n = int(g.rows());
  Eigen::MatrixXd ginv = g.inverse();
  const int N = n * n;
  Eigen::MatrixXd full(N, N);
  // vec(g X g^-1) = (g^-T kron g) vec(X), column-major vec
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      full.block(i * n, j * n, n, n) = ginv(j, i) * g;
  Eigen::MatrixXd T = trace_zero_basis(n);
  return T.transpose() * full * T;
}

double subspace_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  auto projector = [](const Eigen::MatrixXd& M) {
    if (M.cols() == 0) return Eigen::MatrixXd::Zero(M.rows(), M.rows()).eval();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q =
        qr.householderQ() * Eigen::MatrixXd::Identity(M.rows(), M.cols());
    return (Q * Q.transpose()).eval();
  };
  Eigen::MatrixXd diff = projector(A) - projector(B);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

ParabolicData parabolic_of(const Eigen::MatrixXd& g, double rel_tol) {
  const int n = int(g.rows());
  check_size(n);
  ParabolicData data;
  data.split = eigen_split(g, rel_tol);
  const int k = int(data.split.groups.size());
  data.is_full_group = (k == 1);
  data.is_borel = (k == n);

  // flag of partial sums of the generalized eigenspaces, largest first
  int total = 0;
  Eigen::MatrixXd acc(n, 0);
  for (const auto& grp : data.split.groups) {
    Eigen::MatrixXd wider(n, total + grp.multiplicity);
    wider << acc, grp.basis;
    total += grp.multiplicity;
    acc = range_of_dim(wider, total, rel_tol);
    data.flag.push_back(acc);
    data.levi_block_sizes.push_back(grp.multiplicity);
  }

  // route one: stabilizer algebra of the flag inside trace-zero matrices
  const int N = n * n;
  Eigen::MatrixXd T = trace_zero_basis(n);
  std::vector<Eigen::MatrixXd> rows;
  int row_count = 0;
  for (const auto& F : data.flag) {
    if (F.cols() == n) continue;  // full space constrains nothing
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - F * F.transpose();
    // vec(P X F) = (F^T kron P) vec(X), column-major vec
    Eigen::MatrixXd R(int(F.cols()) * n, N);
    for (int i = 0; i < F.cols(); ++i)
      for (int j = 0; j < n; ++j)
        R.block(i * n, j * n, n, n) = F(j, i) * P;
    rows.push_back(R);
    row_count += int(R.rows());
  }
  Eigen::MatrixXd C(row_count, N - 1);
  int at = 0;
  for (const auto& R : rows) {
    C.block(at, 0, R.rows(), N - 1) = R * T;
    at += int(R.rows());
  }

  // expected dim of the >=1 part: pairs of groups (i, j) with value_i >= value_j
  std::vector<std::pair<double, int>> gspec;
  for (const auto& grp : data.split.groups) gspec.emplace_back(grp.value, grp.multiplicity);
  int dim_ge1 = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i <= j) dim_ge1 += gspec[i].second * gspec[j].second;
  dim_ge1 -= 1;  // trace direction removed

  Eigen::MatrixXd stab;
  if (row_count == 0)
    stab = Eigen::MatrixXd::Identity(N - 1, N - 1);
  else
    stab = kernel_of_dim(C, dim_ge1, rel_tol);
  data.p_lie_basis = stab;

  // route two: the Ad weight spaces assembled from the left and right
  // generalized eigenbases of g itself; the block for the group pair (i, j)
  // is spanned by u v^T over right vectors u of group i and left vectors v of
  // group j, and Ad scales it by value_i / value_j
  std::vector<Eigen::MatrixXd> left(k);
  for (int i = 0; i < k; ++i) {
    Eigen::MatrixXd shifted =
        g.transpose() - gspec[i].first * Eigen::MatrixXd::Identity(n, n);
    left[i] = kernel_of_dim(matrix_power(shifted, gspec[i].second),
                            gspec[i].second, rel_tol);
  }
  // span of the selected blocks in trace-zero coordinates; keeping every
  // diagonal block puts the identity in the span, which projection removes
  auto block_span = [&](auto&& pick) {
    int cols = 0;
    bool all_diag = true;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (pick(i, j))
          cols += gspec[i].second * gspec[j].second;
        else if (i == j)
          all_diag = false;
      }
    Eigen::MatrixXd raw(N, cols);
    int at2 = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (!pick(i, j)) continue;
        const Eigen::MatrixXd& R = data.split.groups[i].basis;
        const Eigen::MatrixXd& L = left[j];
        for (int a = 0; a < R.cols(); ++a)
          for (int b = 0; b < L.cols(); ++b, ++at2)
            for (int c = 0; c < n; ++c)
              raw.col(at2).segment(c * n, n) = L(c, b) * R.col(a);
      }
    return range_of_dim(T.transpose() * raw, cols - (all_diag ? 1 : 0), rel_tol);
  };

  Eigen::MatrixXd ge1 = block_span([](int i, int j) { return i <= j; });
  data.construction_agreement = subspace_distance(stab, ge1);
  if (data.construction_agreement > kAgreementBound)
    throw verification_error("flag-stabilizer and Ad-eigenspace constructions disagree");

  // Levi check: centralizer of the semisimple part vs the Ad 1-eigenspace
  {
    Eigen::MatrixXd S(n, n);
    Eigen::VectorXd d(n);
    int col = 0;
    for (const auto& grp : data.split.groups)
      for (int c = 0; c < grp.multiplicity; ++c, ++col) {
        S.col(col) = grp.basis.col(c);
        d(col) = grp.value;
      }
    Eigen::MatrixXd gs = S * d.asDiagonal() * S.inverse();
    // commutator operator X -> gs X - X gs on trace-zero coordinates
    Eigen::MatrixXd comm(N, N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(n, n);
        if (i == j) blk += gs;
        blk -= gs(j, i) * Eigen::MatrixXd::Identity(n, n);
        comm.block(i * n, j * n, n, n) = blk;
      }
    Eigen::MatrixXd comm_tz = T.transpose() * comm * T;
    int dim_levi = 0;
    for (const auto& grp : data.split.groups)
      dim_levi += grp.multiplicity * grp.multiplicity;
    dim_levi -= 1;
    Eigen::MatrixXd cent = kernel_of_dim(comm_tz, dim_levi, rel_tol);
    Eigen::MatrixXd g1 = block_span([](int i, int j) { return i == j; });
    data.levi_agreement = subspace_distance(cent, g1);
    if (data.levi_agreement > kAgreementBound)
      throw verification_error("centralizer and Ad 1-eigenspace disagree");
  }
  return data;
}

BorelChartReport borel_chart_check(const TNNMatrix& g, double strictness) {
  if (minor_positivity(g.mat) != MinorClass::totally_positive)
    throw validation_error("a totally positive matrix is required");
  const int n = g.n;
  EigenSplit split = eigen_split(to_double(g.mat));
  BorelChartReport report;
  for (const auto& grp : split.groups) {
    report.eigenvalues.push_back(grp.value);
    report.blocks.push_back(grp.multiplicity);
  }
  report.is_borel = (int(split.groups.size()) == n);
  if (!report.is_borel)
    throw verification_error("totally positive input did not have simple spectrum");

  Eigen::MatrixXd acc(n, 0);
  for (int kstep = 1; kstep <= n; ++kstep) {
    Eigen::MatrixXd wider(n, kstep);
    wider << acc, split.groups[kstep - 1].basis;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(wider);
    acc = qr.householderQ() * Eigen::MatrixXd::Identity(n, kstep);

    // all k x k maximal minors must carry one strict sign
    std::vector<double> minors;
    all_subsets(n, kstep, [&](const std::vector<int>& rows) {
      Eigen::MatrixXd sub(kstep, kstep);
      for (int r = 0; r < kstep; ++r) sub.row(r) = acc.row(rows[r]);
      minors.push_back(sub.determinant());
    });
    double top = 0;
    for (double m : minors) top = std::max(top, std::abs(m));
    if (top <= 0) throw verification_error("flag step has all Plucker coordinates zero");
    int sign = minors[0] > 0 ? 1 : -1;
    for (double m : minors)
      if (m * sign <= strictness * top)
        throw verification_error("flag step fails the strict Plucker sign test");
    report.flag_pluecker_signs.push_back(sign);
  }
  report.pass = true;
  return report;
}

Sl2SectionPoint sl2_section_solve(double z, double b, double c) {
  if (!(z > 0) || !(b > 0) || !(c > 0))
    throw validation_error("chart inputs must be positive");
  const double q = b * z + c / z;
  const double eps = (-q + std::sqrt(q * q + 4.0)) / 2.0;
  Sl2SectionPoint pt;
  pt.epsilon = eps;
  pt.b = b;
  pt.c = c;
  pt.a = eps + c / z;
  pt.d = (b * c + 1.0) / pt.a;
  const double det = pt.a * pt.d - pt.b * pt.c;
  const double fixed = pt.c + pt.d * z - z * (pt.a + pt.b * z);
  const double scale = std::max({std::abs(pt.a), std::abs(pt.d), z, 1.0});
  if (!(pt.a > 0 && pt.b > 0 && pt.c > 0 && pt.d > 0) ||
      std::abs(det - 1.0) > 1e-12 * scale * scale ||
      std::abs(fixed) > 1e-12 * scale * scale)
    throw verification_error("chart point failed its membership checks");
  return pt;
}

}  // namespace tnncells
