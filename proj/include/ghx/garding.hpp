#pragma once

#include <optional>
#include <vector>

#include "ghx/herm.hpp"
#include "ghx/sympoly.hpp"

namespace ghx {

struct GardingReport {
  double lhs = 0.0;  // D(B_1, ..., B_m)
  double rhs = 0.0;  // prod sigma_m(B_i)^{1/m}
  double gap = 0.0;  // lhs - rhs
  bool equality = false;
  /// Pairwise constants c with B_i ~ c B_j, pairs (i, j), i < j, in
  /// lexicographic order. Filled only when `equality` fired.
  std::vector<std::optional<double>> pairwise;
};

/// Garding's inequality for sigma_m: D(B_1,...,B_m) >= prod sigma_m(B_i)^{1/m}
/// for arguments in Gamma_m. The equality witness fires at
/// gap <= eq_tol * rhs; since sigma_m is complete, equality means plain
/// pairwise proportionality, and the constants are reported.
GardingReport garding_gap(const std::vector<HermitianForm>& args, const MetricPencil& G,
                          double tol = kDefaultTol, double eq_tol = 1e-7);

/// D(x_1, ..., x_m) for x_1 in the closed cone minus zero and the rest strict
/// members; strictly positive by the positivity theorem.
double mixed_positivity(const std::vector<HermitianForm>& args, const MetricPencil& G,
                        double tol = kDefaultTol);

struct RepresenterReport {
  HermitianForm H;
  double min_pencil_eig = 0.0;  // smallest pencil eigenvalue of (H, G)
};

/// The unique H with D(A_1,...,A_{m-1}, beta) = inner(H, beta) for every
/// Hermitian beta, expanded over the orthogonal RealBasis. For strict Gamma_m
/// slots H is positive definite relative to G; min_pencil_eig certifies it.
RepresenterReport positive_representer(const std::vector<HermitianForm>& slots,
                                       const MetricPencil& G, double tol = kDefaultTol);

struct ConcavityRow {
  double t = 0.0;
  double g = 0.0;    // sigma_m(alpha + t beta)^{1/m}
  double dg = 0.0;   // closed-form first derivative
  double d2g = 0.0;  // closed-form second derivative
};

/// Profile of g(t) = sigma_m(alpha + t beta)^{1/m} on a grid of t >= 0, with
/// the closed-form derivatives
///   g'  = sigma^{1/m-1} D(beta, alpha_t^{m-1})
///   g'' = (m-1) [sigma^{1/m-1} D(beta, beta, alpha_t^{m-2})
///                - sigma^{1/m-2} D(beta, alpha_t^{m-1})^2].
std::vector<ConcavityRow> concavity_profile(const HermitianForm& alpha,
                                            const HermitianForm& beta,
                                            const MetricPencil& G, int m,
                                            const std::vector<double>& t_grid,
                                            double tol = kDefaultTol);

/// Throws ConeViolation naming the first argument outside Gamma_m. `strict`
/// demands interior membership; otherwise margins >= -tol (closed cone).
void require_gamma_m(const std::vector<HermitianForm>& args, const MetricPencil& G, int m,
                     double tol, bool strict = true);

}  // namespace ghx
