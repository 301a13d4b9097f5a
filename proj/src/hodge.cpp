#include "ghx/hodge.hpp"

#include <cmath>
#include <string>

#include "ghx/errors.hpp"
#include "ghx/parallel.hpp"

namespace ghx {

namespace {

Eigen::VectorXd ortho_coords(const RealBasis& basis, const HermitianForm& A) {
  Eigen::VectorXd c = basis.coordinates(A);
  for (int i = 0; i < c.size(); ++i) c(i) *= std::sqrt(basis.norm2(i));
  return c;
}

HermitianForm from_ortho_coords(const RealBasis& basis, const Eigen::VectorXd& v) {
  Eigen::VectorXd c = v;
  for (int i = 0; i < c.size(); ++i) c(i) /= std::sqrt(basis.norm2(i));
  return basis.reconstruct(c);
}

/// Gram rewritten in the orthonormal frame f_i = e_i / |e_i|.
Eigen::MatrixXd ortho_frame(const RealBasis& basis, const Eigen::MatrixXd& gram) {
  Eigen::MatrixXd Qf = gram;
  for (int i = 0; i < Qf.rows(); ++i) {
    const double si = std::sqrt(basis.norm2(i));
    for (int j = 0; j < Qf.cols(); ++j) Qf(i, j) /= si * std::sqrt(basis.norm2(j));
  }
  return 0.5 * (Qf + Qf.transpose());
}

}  // namespace

Signature signature_of(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegenerateInput("signature_of: eigensolver failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  double scale = 0.0;
  for (int i = 0; i < w.size(); ++i) scale = std::max(scale, std::abs(w(i)));
  Signature s;
  if (scale == 0.0) {
    s.n_zero = int(w.size());
    return s;
  }
  for (int i = 0; i < w.size(); ++i) {
    const double a = std::abs(w(i));
    if (a <= 1e-8 * scale) {
      ++s.n_zero;
      if (a > 1e-12 * scale) s.indeterminate = true;
    } else if (w(i) > 0.0) {
      ++s.n_plus;
    } else {
      ++s.n_minus;
    }
  }
  return s;
}

bool is_lorentzian(const Signature& s, int space_dim) {
  return !s.indeterminate && s.n_plus == 1 && s.n_zero == 0 && s.n_minus == space_dim - 1;
}

QuadraticReport gram_matrix(const std::vector<HermitianForm>& slots, const MetricPencil& G,
                            double tol) {
  const int m = int(slots.size()) + 2;
  if (m > G.dim()) throw ContractViolation("gram_matrix: m exceeds dimension");
  require_gamma_m(slots, G, m, tol);

  const RealBasis basis(G.dim());
  const int d = basis.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(std::size_t(d) * (d + 1) / 2);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) pairs.emplace_back(i, j);

  std::vector<double> entries(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    std::vector<HermitianForm> args = slots;
    args.push_back(basis.element(pairs[k].first));
    args.push_back(basis.element(pairs[k].second));
    entries[k] = mixed_sigma(args, G);
  });

  QuadraticReport rep;
  rep.n = G.dim();
  rep.m = m;
  rep.gram.resize(d, d);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    rep.gram(pairs[k].first, pairs[k].second) = entries[k];
    rep.gram(pairs[k].second, pairs[k].first) = entries[k];
  }
  rep.signature = signature_of(ortho_frame(basis, rep.gram));
  return rep;
}

bool quadratic_hyperbolicity(const QuadraticReport& report) {
  return is_lorentzian(report.signature, report.n * report.n);
}

PrimitiveBasis primitive_basis(const std::vector<HermitianForm>& slots,
                               const HermitianForm& alpha_last, const MetricPencil& G,
                               double tol) {
  std::vector<HermitianForm> all = slots;
  all.push_back(alpha_last);
  const RepresenterReport rr = positive_representer(all, G, tol);

  const RealBasis basis(G.dim());
  const int d = basis.size();
  const Eigen::VectorXd h = ortho_coords(basis, rr.H);
  if (h.norm() == 0.0) throw DegenerateInput("primitive_basis: zero representer");

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(h);
  const Eigen::MatrixXd Q = qr.householderQ();

  PrimitiveBasis pb;
  pb.representer = rr.H;
  pb.representer_min_eig = rr.min_pencil_eig;
  pb.vectors.reserve(std::size_t(d) - 1);
  for (int j = 1; j < d; ++j) pb.vectors.push_back(from_ortho_coords(basis, Q.col(j)));
  return pb;
}

TheoremAReport verify_theorem_a(const std::vector<HermitianForm>& alphas, const MetricPencil& G,
                                const std::optional<HermitianForm>& gamma, double tol) {
  const int m = int(alphas.size()) + 1;
  if (m < 2) throw ContractViolation("verify_theorem_a: need at least one alpha");
  if (m > G.dim()) throw ContractViolation("verify_theorem_a: m exceeds dimension");
  require_gamma_m(alphas, G, m, tol);

  const std::vector<HermitianForm> omega(alphas.begin(), alphas.end() - 1);
  const HermitianForm& alpha_last = alphas.back();

  TheoremAReport rep;
  rep.n = G.dim();
  rep.m = m;
  rep.quadratic = gram_matrix(omega, G, tol);
  rep.primitive = primitive_basis(omega, alpha_last, G, tol);
  rep.hyperbolic = quadratic_hyperbolicity(rep.quadratic);

  const RealBasis basis(G.dim());
  const int d = basis.size();
  const Eigen::MatrixXd Qf = ortho_frame(basis, rep.quadratic.gram);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Qf, Eigen::EigenvaluesOnly);
    rep.spectral_scale = std::max(std::abs(es.eigenvalues()(0)),
                                  std::abs(es.eigenvalues()(d - 1)));
    rep.min_abs_eig = rep.spectral_scale;
    for (int i = 0; i < d; ++i)
      rep.min_abs_eig = std::min(rep.min_abs_eig, std::abs(es.eigenvalues()(i)));
  }
  rep.nonsingular = rep.min_abs_eig > 1e-8 * rep.spectral_scale;

  Eigen::MatrixXd C(d, d - 1);
  for (int j = 0; j + 1 < d; ++j) C.col(j) = ortho_coords(basis, rep.primitive.vectors[std::size_t(j)]);
  const Eigen::MatrixXd R = C.transpose() * Qf * C;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> res(0.5 * (R + R.transpose()),
                                                     Eigen::EigenvaluesOnly);
  rep.restricted_spectrum.assign(res.eigenvalues().data(), res.eigenvalues().data() + d - 1);
  rep.primitive_negative = rep.restricted_spectrum.back() < -1e-10 * rep.spectral_scale;

  std::vector<HermitianForm> qargs = omega;
  qargs.push_back(alpha_last);
  qargs.push_back(alpha_last);
  rep.q_alpha = mixed_sigma(qargs, G);

  const HermitianForm g = gamma.value_or(G.form());
  qargs[qargs.size() - 2] = g;
  const double q_gamma_alpha = mixed_sigma(qargs, G);
  rep.decomposition_constant = q_gamma_alpha / rep.q_alpha;
  const HermitianForm defect = g - rep.decomposition_constant * alpha_last;
  const double hnorm = rep.primitive.representer.frobenius_norm();
  const double denom =
      hnorm * (g.frobenius_norm() +
               std::abs(rep.decomposition_constant) * alpha_last.frobenius_norm()) +
      1e-300;
  rep.decomposition_residual = std::abs(inner(rep.primitive.representer, defect)) / denom;
  rep.decomposition_ok = rep.decomposition_residual <= 1e-10;
  return rep;
}

CorollaryReport corollary_hodge_index(const HermitianForm& alpha, const HermitianForm& beta,
                                      const MetricPencil& G, int m, double tol) {
  if (m < 2 || m > G.dim()) throw ContractViolation("corollary_hodge_index: need 2 <= m <= n");
  require_gamma_m({alpha}, G, m, tol);

  std::vector<HermitianForm> args(std::size_t(m), alpha);
  args[0] = beta;
  CorollaryReport rep;
  rep.pairing = mixed_sigma(args, G);
  args[1] = beta;
  rep.q_value = mixed_sigma(args, G);
  rep.sigma_m = sigma(alpha, G, m);
  rep.scale = rep.pairing * rep.pairing + std::abs(rep.q_value * rep.sigma_m);
  rep.inequality_ok =
      rep.pairing * rep.pairing - rep.q_value * rep.sigma_m >= -1e-9 * rep.scale;
  return rep;
}

MinorReport minor_2x2(const HermitianForm& beta1, const HermitianForm& beta2,
                      const std::vector<HermitianForm>& alphas, const MetricPencil& G,
                      double tol) {
  const int m = int(alphas.size()) + 1;
  if (m < 2) throw ContractViolation("minor_2x2: need at least one alpha");
  require_gamma_m(alphas, G, m, tol);
  const RepresenterReport rr = positive_representer(alphas, G, tol);
  const double hnorm = rr.H.frobenius_norm();
  const HermitianForm* betas[2] = {&beta1, &beta2};
  for (int i = 0; i < 2; ++i) {
    const double defect = std::abs(inner(rr.H, *betas[i]));
    if (defect > 1e-8 * hnorm * (betas[i]->frobenius_norm() + 1e-300))
      throw PreconditionError("minor_2x2: beta_" + std::to_string(i + 1) +
                              " is not primitive (functional residual " +
                              std::to_string(defect) + ")");
  }

  const std::vector<HermitianForm> omega(alphas.begin(), alphas.end() - 1);
  auto q_entry = [&](const HermitianForm& x, const HermitianForm& y) {
    std::vector<HermitianForm> args = omega;
    args.push_back(x);
    args.push_back(y);
    return mixed_sigma(args, G);
  };

  MinorReport rep;
  rep.matrix(0, 0) = q_entry(beta1, beta1);
  rep.matrix(0, 1) = rep.matrix(1, 0) = q_entry(beta1, beta2);
  rep.matrix(1, 1) = q_entry(beta2, beta2);

  const double scale = rep.matrix.cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(rep.matrix, Eigen::EigenvaluesOnly);
  rep.negative_semidefinite = es.eigenvalues()(1) <= 1e-9 * scale;
  rep.degenerate = std::abs(rep.matrix.determinant()) <= 1e-8 * scale * scale;

  const double z1 = beta1.frobenius_norm();
  const double z2 = beta2.frobenius_norm();
  if (z1 <= 1e-14 * G.dim() || z2 <= 1e-14 * G.dim()) {
    rep.proportional_c = 0.0;
  } else {
    rep.proportional_c = proportionality(beta1, beta2, 1e-7);
  }
  rep.consistent = rep.degenerate == rep.proportional_c.has_value();
  return rep;
}

LogConcavityReport log_concavity(const HermitianForm& alpha, const HermitianForm& beta,
                                 const MetricPencil& G, int m, double tol) {
  if (m < 1 || m > G.dim()) throw ContractViolation("log_concavity: need 1 <= m <= n");
  require_gamma_m({alpha, beta}, G, m, tol);

  LogConcavityReport rep;
  std::vector<HermitianForm> args(std::size_t(m), beta);
  for (int k = 0; k <= m; ++k) {
    if (k > 0) args[std::size_t(k - 1)] = alpha;
    rep.a.push_back(mixed_sigma(args, G));
  }
  for (int k = 1; k < m; ++k) {
    const double lhs = rep.a[std::size_t(k)] * rep.a[std::size_t(k)];
    const double rhs = rep.a[std::size_t(k + 1)] * rep.a[std::size_t(k - 1)];
    rep.ok.push_back(lhs - rhs >= -1e-9 * lhs);
    rep.equality.push_back(std::abs(lhs - rhs) <= 1e-9 * (lhs + 1e-300));
  }
  rep.proportional_c = proportionality(alpha, beta, 1e-7);
  return rep;
}

}  // namespace ghx
