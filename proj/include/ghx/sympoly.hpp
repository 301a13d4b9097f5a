#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ghx/herm.hpp"

namespace ghx {

/// Real univariate polynomial, coefficients ascending: coeffs[j] multiplies s^j.
struct PolyOnLine {
  std::vector<double> coeffs;
};

/// Degree-d homogeneous polynomial on Herm(n), presented through its complete
/// polarization: the symmetric multilinear form D with P(X) = D(X,...,X).
class HomogeneousForm {
 public:
  virtual ~HomogeneousForm() = default;
  virtual int dim() const = 0;
  virtual int degree() const = 0;
  /// Polarization evaluated at degree() arguments.
  virtual double polar(const std::vector<HermitianForm>& args) const = 0;
  /// P(X) = polar(X, ..., X).
  double operator()(const HermitianForm& x) const;
};

/// X -> D(X, ..., X, A_1, ..., A_k): the polarized sigma_m form with k slots
/// frozen. With no fixed slots this is sigma_m itself; free degree is m - k.
class MixedContext : public HomogeneousForm {
 public:
  MixedContext(int m, MetricPencil G, std::vector<HermitianForm> fixed = {});

  int total_degree() const { return m_; }
  const MetricPencil& pencil() const { return G_; }
  const std::vector<HermitianForm>& fixed() const { return fixed_; }

  int dim() const override { return G_.dim(); }
  int degree() const override { return m_ - int(fixed_.size()); }
  double polar(const std::vector<HermitianForm>& free) const override;

 private:
  int m_;
  MetricPencil G_;
  std::vector<HermitianForm> fixed_;
};

/// e_0..e_n of the given values, by the Vieta product recurrence (coefficient
/// extraction from prod (x + lambda_i)), not subset sums.
std::vector<double> elementary_symmetric(const std::vector<double>& lambda);

/// sigma_k of the pencil (A, G): e_k of pencil_eigenvalues(A, G).
double sigma(const HermitianForm& A, const MetricPencil& G, int k);

/// Complete polarization D(B_1,...,B_m) of A -> sigma(A, G, m), by
/// inclusion-exclusion over nonempty subsets:
///   D = (1/m!) sum_S (-1)^{m-|S|} sigma(sum_{i in S} B_i, G, m).
double mixed_sigma(const std::vector<HermitianForm>& args, const MetricPencil& G);

/// Independent cross-check of mixed_sigma: tabulates sigma on the full
/// {0,1}^m grid of argument sums and extracts the multilinear coefficient by
/// iterated in-place differencing, one bit at a time. Same algebra, different
/// summation order and reduction path.
double mixed_sigma_oracle(const std::vector<HermitianForm>& args, const MetricPencil& G);

/// Coefficients of s -> P(sa + x), via c_j = binomial(d, j) D(a^j, x^{d-j}).
PolyOnLine restrict_line(const HomogeneousForm& P, const HermitianForm& a,
                         const HermitianForm& x);

/// Roots of p via the companion matrix of the normalized polynomial, sorted
/// by real part then imaginary part. Leading coefficients below
/// 1e-14 * max|c| are trimmed first.
std::vector<Complex> poly_roots(const PolyOnLine& p);

/// True iff every root r satisfies |Im r| <= tol * (1 + |r|).
bool real_rooted(const PolyOnLine& p, double tol = 1e-7);

struct HyperbolicityReport {
  bool hyperbolic;
  int samples;
  std::optional<HermitianForm> witness;  // first x with a non-real root
  std::vector<Complex> witness_roots;
};

/// Monte-Carlo hyperbolicity certificate: checks real-rootedness of P along
/// `samples` random lines through a. Sample i draws from the counter stream
/// (seed, i), so the verdict does not depend on evaluation order.
HyperbolicityReport hyperbolic_at(const HomogeneousForm& P, const HermitianForm& a,
                                  int samples, std::uint64_t seed, double tol = 1e-7);

struct ConeReport {
  bool member;
  double margin;              // -(largest root of s -> P(sa + x))
  std::vector<double> roots;  // ascending
};

/// x in Gamma(P, a) iff every root of s -> P(sa + x) is strictly negative.
/// Hyperbolicity of P at a is the caller's responsibility.
ConeReport in_cone(const HomogeneousForm& P, const HermitianForm& a,
                   const HermitianForm& x, double tol = kDefaultTol);

struct GammaReport {
  bool member;  // all sigma_l strictly positive, l = 1..m
  std::vector<double> sigmas;   // sigma_1..sigma_m
  std::vector<double> margins;  // sigma_l / scale_l, scale_l = e_l(|lambda|)
};

/// Membership in the Gamma_m cone relative to G. Strict membership needs
/// sigma_l > tol * scale_l for every l <= m; margins >= -tol characterizes
/// the closed cone.
GammaReport in_gamma_m(const HermitianForm& A, const MetricPencil& G, int m,
                       double tol = kDefaultTol);

/// Dimension of the linearity space of P: numerical kernel of the map
/// x -> (D(x, Y^(i)_2, ..., Y^(i)_d))_i over 2 n^2 random tuples, singular
/// values below 1e-8 * largest counting as zero.
int linearity_dimension(const HomogeneousForm& P, std::uint64_t seed);

double binomial(int n, int k);

}  // namespace ghx
