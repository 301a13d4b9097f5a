#include "ghx/sympoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ghx/errors.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"

namespace ghx {

namespace {

double factorial(int m) {
  double f = 1.0;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegenerateInput("eigensolver failed to converge");
  const Eigen::VectorXd& w = es.eigenvalues();
  return std::vector<double>(w.data(), w.data() + w.size());
}

void check_sigma_args(const std::vector<HermitianForm>& args, const MetricPencil& G) {
  if (args.empty()) throw ContractViolation("mixed_sigma: no arguments");
  if (int(args.size()) > G.dim())
    throw ContractViolation("mixed_sigma: more arguments than the pencil dimension");
  for (const auto& a : args)
    if (a.dim() != G.dim()) throw ContractViolation("mixed_sigma: dimension mismatch");
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

double HomogeneousForm::operator()(const HermitianForm& x) const {
  return polar(std::vector<HermitianForm>(std::size_t(degree()), x));
}

MixedContext::MixedContext(int m, MetricPencil G, std::vector<HermitianForm> fixed)
    : m_(m), G_(std::move(G)), fixed_(std::move(fixed)) {
  if (m_ < 1 || m_ > G_.dim()) throw ContractViolation("MixedContext: need 1 <= m <= n");
  if (int(fixed_.size()) > m_) throw ContractViolation("MixedContext: too many fixed slots");
  for (const auto& f : fixed_)
    if (f.dim() != G_.dim()) throw ContractViolation("MixedContext: fixed slot dimension mismatch");
}

double MixedContext::polar(const std::vector<HermitianForm>& free) const {
  if (int(free.size()) != degree())
    throw ContractViolation("MixedContext: wrong number of free arguments");
  std::vector<HermitianForm> all = fixed_;
  all.insert(all.end(), free.begin(), free.end());
  return mixed_sigma(all, G_);
}

std::vector<double> elementary_symmetric(const std::vector<double>& lambda) {
  const std::size_t n = lambda.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += lambda[i] * e[j - 1];
  return e;
}

double sigma(const HermitianForm& A, const MetricPencil& G, int k) {
  if (k < 1 || k > G.dim()) throw PreconditionError("sigma: k out of range");
  return elementary_symmetric(pencil_eigenvalues(A, G))[std::size_t(k)];
}

double mixed_sigma(const std::vector<HermitianForm>& args, const MetricPencil& G) {
  check_sigma_args(args, G);
  const int m = int(args.size());
  std::vector<Eigen::MatrixXcd> reduced;
  reduced.reserve(args.size());
  for (const auto& a : args) reduced.push_back(G.reduce(a));

  double acc = 0.0;
  const unsigned full = (1u << m) - 1u;
  Eigen::MatrixXcd S(G.dim(), G.dim());
  for (unsigned mask = 1; mask <= full; ++mask) {
    S.setZero();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) S += reduced[std::size_t(i)];
    const double em = elementary_symmetric(hermitian_eigenvalues(S))[std::size_t(m)];
    const int parity = (m - std::popcount(mask)) & 1;
    acc += parity ? -em : em;
  }
  return acc / factorial(m);
}

double mixed_sigma_oracle(const std::vector<HermitianForm>& args, const MetricPencil& G) {
  check_sigma_args(args, G);
  const int m = int(args.size());
  const unsigned count = 1u << m;
  std::vector<double> table(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    HermitianForm S(G.dim());
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) S += args[std::size_t(i)];
    table[mask] = sigma(S, G, m);
  }
  for (int b = 0; b < m; ++b)
    for (unsigned mask = 0; mask < count; ++mask)
      if (mask & (1u << b)) table[mask] -= table[mask ^ (1u << b)];
  return table[count - 1] / factorial(m);
}

PolyOnLine restrict_line(const HomogeneousForm& P, const HermitianForm& a,
                         const HermitianForm& x) {
  const int d = P.degree();
  if (d < 1) throw PreconditionError("restrict_line: degree >= 1 required");
  if (a.dim() != P.dim() || x.dim() != P.dim())
    throw ContractViolation("restrict_line: dimension mismatch");
  PolyOnLine p;
  p.coeffs.resize(std::size_t(d) + 1);
  std::vector<HermitianForm> args(std::size_t(d), x);
  for (int j = 0; j <= d; ++j) {
    if (j > 0) args[std::size_t(j - 1)] = a;
    p.coeffs[std::size_t(j)] = binomial(d, j) * P.polar(args);
  }
  return p;
}

std::vector<Complex> poly_roots(const PolyOnLine& p) {
  double maxc = 0.0;
  for (double c : p.coeffs) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0) throw DegenerateInput("poly_roots: zero polynomial");
  int deg = int(p.coeffs.size()) - 1;
  while (deg > 0 && std::abs(p.coeffs[std::size_t(deg)]) <= 1e-14 * maxc) --deg;
  if (deg == 0) return {};

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = p.coeffs[std::size_t(deg)];
  for (int j = 0; j < deg; ++j) {
    C(j, deg - 1) = -p.coeffs[std::size_t(j)] / lead;
    if (j + 1 < deg) C(j + 1, j) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) throw DegenerateInput("poly_roots: companion eigensolver failed");
  std::vector<Complex> roots(std::size_t(deg), Complex(0.0, 0.0));
  for (int j = 0; j < deg; ++j) roots[std::size_t(j)] = es.eigenvalues()(j);
  std::sort(roots.begin(), roots.end(), [](const Complex& u, const Complex& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return roots;
}

bool real_rooted(const PolyOnLine& p, double tol) {
  for (const Complex& r : poly_roots(p))
    if (std::abs(r.imag()) > tol * (1.0 + std::abs(r))) return false;
  return true;
}

HyperbolicityReport hyperbolic_at(const HomogeneousForm& P, const HermitianForm& a,
                                  int samples, std::uint64_t seed, double tol) {
  const double scale = std::pow(a.frobenius_norm(), P.degree());
  if (std::abs(P(a)) <= 1e-12 * scale)
    throw PreconditionError("hyperbolic_at: P(a) = 0, not a valid anchor");
  for (int i = 0; i < samples; ++i) {
    CounterRng rng = CounterRng::stream(seed, std::uint64_t(i));
    const HermitianForm x = random_hermitian(P.dim(), rng);
    const PolyOnLine p = restrict_line(P, a, x);
    if (!real_rooted(p, tol)) return {false, i + 1, x, poly_roots(p)};
  }
  return {true, samples, std::nullopt, {}};
}

ConeReport in_cone(const HomogeneousForm& P, const HermitianForm& a,
                   const HermitianForm& x, double tol) {
  const std::vector<Complex> roots = poly_roots(restrict_line(P, a, x));
  ConeReport rep;
  if (roots.empty()) {
    rep.member = true;
    rep.margin = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.roots.reserve(roots.size());
  double maxabs = 0.0;
  for (const Complex& r : roots) {
    rep.roots.push_back(r.real());
    maxabs = std::max(maxabs, std::abs(r.real()));
  }
  rep.margin = -rep.roots.back();
  rep.member = rep.margin > tol * (1.0 + maxabs);
  return rep;
}

GammaReport in_gamma_m(const HermitianForm& A, const MetricPencil& G, int m, double tol) {
  if (m < 1 || m > G.dim()) throw PreconditionError("in_gamma_m: need 1 <= m <= n");
  std::vector<double> lambda = pencil_eigenvalues(A, G);
  // Eigenvalues at roundoff level are exact boundary zeros (rank-deficient
  // inputs); left alone they make sigma_l and its scale both pure noise and
  // the margin an arbitrary O(1) number.
  double lam_max = 0.0;
  for (double l : lambda) lam_max = std::max(lam_max, std::abs(l));
  for (double& l : lambda)
    if (std::abs(l) <= 1e-12 * lam_max) l = 0.0;
  std::vector<double> absolute(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) absolute[i] = std::abs(lambda[i]);
  const std::vector<double> e = elementary_symmetric(lambda);
  const std::vector<double> scale = elementary_symmetric(absolute);

  GammaReport rep;
  rep.member = true;
  for (int l = 1; l <= m; ++l) {
    const double el = e[std::size_t(l)];
    const double sl = scale[std::size_t(l)];
    rep.sigmas.push_back(el);
    rep.margins.push_back(sl > 0.0 ? el / sl : 0.0);
    if (!(el > tol * sl)) rep.member = false;
  }
  return rep;
}

int linearity_dimension(const HomogeneousForm& P, std::uint64_t seed) {
  const int d = P.degree();
  if (d < 2) throw PreconditionError("linearity_dimension: degree >= 2 required");
  const int n = P.dim();
  const RealBasis basis(n);
  const int cols = basis.size();
  const int rows = 2 * cols;

  Eigen::MatrixXd M(rows, cols);
  std::vector<HermitianForm> args;
  for (int i = 0; i < rows; ++i) {
    CounterRng rng = CounterRng::stream(seed, std::uint64_t(i));
    args.assign(1, HermitianForm(n));
    for (int t = 1; t < d; ++t) args.push_back(random_hermitian(n, rng));
    for (int j = 0; j < cols; ++j) {
      args[0] = basis.element(j);
      M(i, j) = P.polar(args);
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return cols;
  int kernel = 0;
  for (int j = 0; j < sv.size(); ++j)
    if (sv(j) < 1e-8 * sv(0)) ++kernel;
  return kernel;
}

}  // namespace ghx
