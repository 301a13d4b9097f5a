#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ghx/garding.hpp"
#include "ghx/herm.hpp"
#include "ghx/sympoly.hpp"

namespace ghx {

struct Signature {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  /// Some eigenvalue fell in the dead zone (1e-12, 1e-8] relative to the
  /// spectral scale: it was counted as zero, but the signature claim is not
  /// trustworthy and no verdict should silently rely on it.
  bool indeterminate = false;
};

/// Signature of a real symmetric matrix expressed in an orthonormal frame.
/// Zero threshold: |eig| <= 1e-8 * max|eig|.
Signature signature_of(const Eigen::MatrixXd& sym);

/// True iff the signature is nondegenerate Lorentzian (1, 0, d-1) and crisp.
bool is_lorentzian(const Signature& s, int space_dim);

struct QuadraticReport {
  int n = 0;  // matrix dimension; the form lives on Herm(n), dimension n^2
  int m = 0;  // degree of the ambient sigma_m
  /// Gram entries Q(e_i, e_j) over the RealBasis ordering.
  Eigen::MatrixXd gram;
  Signature signature;
};

/// Gram matrix and signature of Q(beta, gamma) = D(beta, gamma, A_1..A_{m-2})
/// with m = slots + 2. The signature is computed in the orthonormalized
/// basis f_i = e_i / |e_i|, where it is congruence-honest.
QuadraticReport gram_matrix(const std::vector<HermitianForm>& slots, const MetricPencil& G,
                            double tol = kDefaultTol);

bool quadratic_hyperbolicity(const QuadraticReport& report);

struct PrimitiveBasis {
  HermitianForm representer;  // H with functional(gamma) = inner(H, gamma)
  double representer_min_eig = 0.0;
  /// Orthonormal under inner(); spans {gamma : inner(H, gamma) = 0}.
  std::vector<HermitianForm> vectors;
};

/// Basis of the primitive hyperplane of the functional
/// gamma -> D(A_1..A_{m-2}, alpha_last, gamma), with m = slots + 2.
PrimitiveBasis primitive_basis(const std::vector<HermitianForm>& slots,
                               const HermitianForm& alpha_last, const MetricPencil& G,
                               double tol = kDefaultTol);

struct TheoremAReport {
  int n = 0;
  int m = 0;
  QuadraticReport quadratic;
  PrimitiveBasis primitive;
  std::vector<double> restricted_spectrum;  // ascending, size n^2 - 1
  bool primitive_negative = false;          // max restricted eig < -1e-10 * scale
  double q_alpha = 0.0;                     // Q(alpha_{m-1}, alpha_{m-1})
  double decomposition_constant = 0.0;      // c for the queried gamma
  double decomposition_residual = 0.0;      // relative primitivity defect of gamma - c alpha
  bool decomposition_ok = false;
  double min_abs_eig = 0.0;                 // of the orthonormal-frame Gram
  bool nonsingular = false;
  bool hyperbolic = false;                  // Lorentzian signature
  double spectral_scale = 0.0;              // max |eig| of the orthonormal-frame Gram
};

/// Full verification of the mixed Hodge-index statement for the tuple
/// alpha_1..alpha_{m-1}: Lorentzian signature, negative definiteness on the
/// primitive hyperplane, direct-sum decomposition along alpha_{m-1} for the
/// queried class (default: the metric form), and Gram nonsingularity.
TheoremAReport verify_theorem_a(const std::vector<HermitianForm>& alphas, const MetricPencil& G,
                                const std::optional<HermitianForm>& gamma = std::nullopt,
                                double tol = kDefaultTol);

struct CorollaryReport {
  double pairing = 0.0;   // D(beta, alpha^{m-1})
  double q_value = 0.0;   // D(beta, beta, alpha^{m-2})
  double sigma_m = 0.0;   // D(alpha^m)
  double scale = 0.0;
  bool inequality_ok = false;  // pairing^2 >= q_value * sigma_m - 1e-9 * scale
};

/// The index-type inequality D(beta, alpha^{m-1})^2 >= D(beta,beta,alpha^{m-2})
/// * sigma_m(alpha); in particular primitive beta have q_value <= 0.
CorollaryReport corollary_hodge_index(const HermitianForm& alpha, const HermitianForm& beta,
                                      const MetricPencil& G, int m, double tol = kDefaultTol);

struct MinorReport {
  Eigen::Matrix2d matrix;  // [[Q(b1,b1), Q(b1,b2)], [., Q(b2,b2)]]
  bool negative_semidefinite = false;
  bool degenerate = false;  // |det| <= 1e-8 * scale^2
  std::optional<double> proportional_c;
  bool consistent = false;  // degenerate iff proportional
};

/// The 2x2 Gram minor of Q on two primitive classes; negative semidefinite,
/// degenerate exactly when beta_1, beta_2 are proportional. `alphas` are all
/// m-1 cone slots: the first m-2 fix Q, the full list fixes primitivity.
MinorReport minor_2x2(const HermitianForm& beta1, const HermitianForm& beta2,
                      const std::vector<HermitianForm>& alphas, const MetricPencil& G,
                      double tol = kDefaultTol);

struct LogConcavityReport {
  std::vector<double> a;         // a_k = D(alpha^k, beta^{m-k}), k = 0..m
  std::vector<bool> ok;          // a_k^2 - a_{k+1} a_{k-1} >= -1e-9 a_k^2
  std::vector<bool> equality;    // |a_k^2 - a_{k+1} a_{k-1}| <= 1e-9 a_k^2
  std::optional<double> proportional_c;
};

LogConcavityReport log_concavity(const HermitianForm& alpha, const HermitianForm& beta,
                                 const MetricPencil& G, int m, double tol = kDefaultTol);

}  // namespace ghx
