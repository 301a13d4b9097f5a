#include "ghx/garding.hpp"

#include <cmath>
#include <string>

#include "ghx/errors.hpp"

namespace ghx {

void require_gamma_m(const std::vector<HermitianForm>& args, const MetricPencil& G, int m,
                     double tol, bool strict) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const GammaReport rep = in_gamma_m(args[i], G, m, tol);
    for (std::size_t l = 0; l < rep.margins.size(); ++l) {
      const double margin = rep.margins[l];
      if (strict ? margin > tol : margin >= -tol) continue;
      throw ConeViolation("argument " + std::to_string(i) + " outside " +
                              (strict ? "" : "the closure of ") + "Gamma_" + std::to_string(m) +
                              ": sigma_" + std::to_string(l + 1) + " margin " +
                              std::to_string(margin),
                          int(i), margin);
    }
  }
}

GardingReport garding_gap(const std::vector<HermitianForm>& args, const MetricPencil& G,
                          double tol, double eq_tol) {
  const int m = int(args.size());
  if (m < 1) throw ContractViolation("garding_gap: no arguments");
  require_gamma_m(args, G, m, tol);

  GardingReport rep;
  rep.lhs = mixed_sigma(args, G);
  double prod = 1.0;
  for (const auto& a : args) prod *= sigma(a, G, m);
  rep.rhs = std::pow(prod, 1.0 / m);
  rep.gap = rep.lhs - rep.rhs;
  rep.equality = rep.gap <= eq_tol * rep.rhs;
  if (rep.equality) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        rep.pairwise.push_back(
            proportionality(args[std::size_t(i)], args[std::size_t(j)], 1e-6));
  }
  return rep;
}

double mixed_positivity(const std::vector<HermitianForm>& args, const MetricPencil& G,
                        double tol) {
  const int m = int(args.size());
  if (m < 1) throw ContractViolation("mixed_positivity: no arguments");
  if (args[0].frobenius_norm() <= 1e-14 * G.dim())
    throw PreconditionError("mixed_positivity: x_1 is numerically zero");
  require_gamma_m({args[0]}, G, m, tol, /*strict=*/false);
  require_gamma_m(std::vector<HermitianForm>(args.begin() + 1, args.end()), G, m, tol);
  return mixed_sigma(args, G);
}

RepresenterReport positive_representer(const std::vector<HermitianForm>& slots,
                                       const MetricPencil& G, double tol) {
  const int m = int(slots.size()) + 1;
  if (m < 2) throw ContractViolation("positive_representer: need at least one slot");
  if (m > G.dim()) throw ContractViolation("positive_representer: m exceeds dimension");
  require_gamma_m(slots, G, m, tol);

  const RealBasis basis(G.dim());
  HermitianForm H(G.dim());
  std::vector<HermitianForm> args = slots;
  args.push_back(HermitianForm(G.dim()));
  for (int i = 0; i < basis.size(); ++i) {
    args.back() = basis.element(i);
    const double d = mixed_sigma(args, G);
    H += (d / basis.norm2(i)) * basis.element(i);
  }
  RepresenterReport rep{H, pencil_eigenvalues(H, G).front()};
  return rep;
}

std::vector<ConcavityRow> concavity_profile(const HermitianForm& alpha,
                                            const HermitianForm& beta, const MetricPencil& G,
                                            int m, const std::vector<double>& t_grid,
                                            double tol) {
  require_gamma_m({alpha, beta}, G, m, tol);
  for (double t : t_grid)
    if (t < 0.0) throw PreconditionError("concavity_profile: grid values must be >= 0");

  std::vector<ConcavityRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const HermitianForm at = alpha + t * beta;
    const double s = sigma(at, G, m);
    if (!(s > 0.0)) throw DegenerateInput("concavity_profile: sigma_m vanished on the segment");
    ConcavityRow row;
    row.t = t;
    row.g = std::pow(s, 1.0 / m);

    std::vector<HermitianForm> first(std::size_t(m), at);
    first[0] = beta;
    const double d1 = mixed_sigma(first, G);
    row.dg = std::pow(s, 1.0 / m - 1.0) * d1;

    if (m >= 2) {
      std::vector<HermitianForm> second(std::size_t(m), at);
      second[0] = beta;
      second[1] = beta;
      const double d2 = mixed_sigma(second, G);
      row.d2g = (m - 1) * (std::pow(s, 1.0 / m - 1.0) * d2 -
                           std::pow(s, 1.0 / m - 2.0) * d1 * d1);
    } else {
      row.d2g = 0.0;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ghx
