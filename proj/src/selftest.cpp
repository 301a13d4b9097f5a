#include "ghx/selftest.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ghx/errors.hpp"
#include "ghx/garding.hpp"
#include "ghx/herm.hpp"
#include "ghx/hodge.hpp"
#include "ghx/rng.hpp"
#include "ghx/sampling.hpp"
#include "ghx/sympoly.hpp"
#include "ghx/torus.hpp"

namespace ghx {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

void near(double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
    throw Error(os.str());
  }
}

HermitianForm dg(std::vector<double> d) { return HermitianForm::diagonal(std::move(d)); }

/// P(x) = (tr x)^m: polarization is the product of traces; linearity is the
/// trace-free hyperplane.
class TracePower : public HomogeneousForm {
 public:
  TracePower(int n, int m) : n_(n), m_(m) {}
  int dim() const override { return n_; }
  int degree() const override { return m_; }
  double polar(const std::vector<HermitianForm>& args) const override {
    double p = 1.0;
    for (const HermitianForm& a : args) p *= a.trace();
    return p;
  }

 private:
  int n_;
  int m_;
};

/// Quadratic with a prescribed Gram matrix over the RealBasis; signature
/// (2,0,2) makes it non-hyperbolic at every anchor.
class GramQuadratic : public HomogeneousForm {
 public:
  GramQuadratic(int n, Eigen::MatrixXd gram) : basis_(n), gram_(std::move(gram)) {}
  int dim() const override { return basis_.dim(); }
  int degree() const override { return 2; }
  double polar(const std::vector<HermitianForm>& args) const override {
    const Eigen::VectorXd a = basis_.coordinates(args.at(0));
    const Eigen::VectorXd b = basis_.coordinates(args.at(1));
    return a.dot(gram_ * b);
  }

 private:
  RealBasis basis_;
  Eigen::MatrixXd gram_;
};

ScalarField cosine_field(const TorusContext& ctx, int axis, int freq) {
  const int N = ctx.grid();
  std::size_t stride = 1;
  for (int a = 2 * ctx.n() - 2; a >= axis; --a) stride *= std::size_t(N);
  std::vector<double> v(ctx.points());
  for (std::size_t p = 0; p < v.size(); ++p) {
    const int idx = int((p / stride) % std::size_t(N));
    v[p] = std::cos(2.0 * std::numbers::pi * freq * double(idx) / double(N));
  }
  return ScalarField(std::move(v));
}

std::vector<SelfTestCase> build_cases() {
  std::vector<SelfTestCase> cs;
  auto add = [&cs](const char* name, std::function<void()> fn) {
    cs.push_back(SelfTestCase{name, std::move(fn)});
  };
  // Static: the case lambdas outlive this function.
  static constexpr double pi2 = std::numbers::pi * std::numbers::pi;

  // herm-core -----------------------------------------------------------
  add("herm/pencil_eigenvalues diagonal pencil", [] {
    const MetricPencil G(dg({1, 2}));
    const auto ev = pencil_eigenvalues(dg({2, 4}), G);
    near(ev[0], 2.0, 1e-12, "ev0");
    near(ev[1], 2.0, 1e-12, "ev1");
  });
  add("herm/pencil_eigenvalues identity", [] {
    const auto ev = pencil_eigenvalues(HermitianForm::identity(3), MetricPencil::standard(3));
    for (double v : ev) near(v, 1.0, 1e-12, "unit eigenvalue");
  });
  add("herm/pencil_eigenvalues plain diagonal", [] {
    const auto ev = pencil_eigenvalues(dg({1, 2, 3}), MetricPencil::standard(3));
    near(ev[0], 1.0, 1e-12, "ev0");
    near(ev[1], 2.0, 1e-12, "ev1");
    near(ev[2], 3.0, 1e-12, "ev2");
  });
  add("herm/pencil_eigenvalues metric against itself", [] {
    CounterRng rng(41);
    const MetricPencil G(random_metric(4, rng));
    for (double v : pencil_eigenvalues(G.form(), G)) near(v, 1.0, 1e-12, "unit eigenvalue");
  });
  add("herm/inner identity", [] {
    const HermitianForm I = HermitianForm::identity(3);
    near(inner(I, I), 3.0, 1e-14, "inner(I,I)");
  });
  add("herm/inner diagonals", [] {
    near(inner(dg({1, 2}), dg({3, 4})), 11.0, 1e-14, "inner");
  });
  add("herm/inner sym anti orthogonal", [] {
    near(inner(HermitianForm::basis_sym(2, 0, 1), HermitianForm::basis_anti(2, 0, 1)), 0.0,
         1e-14, "orthogonality");
  });
  add("herm/proportionality scalar multiple", [] {
    const auto c = proportionality(3.0 * HermitianForm::identity(2),
                                   HermitianForm::identity(2), 1e-9);
    require(c.has_value(), "expected a constant");
    near(*c, 3.0, 1e-12, "constant");
  });
  add("herm/proportionality absent", [] {
    require(!proportionality(dg({1, 2}), HermitianForm::identity(2), 1e-9).has_value(),
            "diag(1,2) is not proportional to I");
  });
  add("herm/proportionality tiny perturbation", [] {
    const HermitianForm B = dg({1, 1});
    const HermitianForm A = 2.0 * B + 1e-12 * HermitianForm::basis_diag(2, 0);
    const auto c = proportionality(A, B, 1e-9);
    require(c.has_value(), "perturbation below tolerance");
    near(*c, 2.0, 1e-9, "constant");
  });

  // sympoly-cones --------------------------------------------------------
  add("sympoly/sigma diagonal", [] {
    near(sigma(dg({1, 2, 3}), MetricPencil::standard(3), 2), 11.0, 1e-12, "sigma_2");
  });
  add("sympoly/sigma identity binomial", [] {
    near(sigma(HermitianForm::identity(3), MetricPencil::standard(3), 2), 3.0, 1e-12,
         "binomial(3,2)");
  });
  add("sympoly/sigma mixed signs", [] {
    const MetricPencil G = MetricPencil::standard(3);
    near(sigma(dg({3, 3, -1}), G, 2), 3.0, 1e-12, "sigma_2");
    near(sigma(dg({3, 3, -1}), G, 3), -9.0, 1e-12, "sigma_3");
  });
  add("sympoly/mixed_sigma pinned pair", [] {
    near(mixed_sigma({dg({1, 2}), HermitianForm::identity(2)}, MetricPencil::standard(2)),
         1.5, 1e-12, "D(diag(1,2), I)");
  });
  add("sympoly/mixed_sigma diagonal consistency", [] {
    const HermitianForm A = dg({1, 2, 3});
    near(mixed_sigma({A, A, A}, MetricPencil::standard(3)), 6.0, 1e-10, "D(A,A,A)");
  });
  add("sympoly/mixed_sigma unit pair", [] {
    near(mixed_sigma({HermitianForm::basis_diag(2, 0), HermitianForm::basis_diag(2, 1)},
                     MetricPencil::standard(2)),
         0.5, 1e-12, "D(E11, E22)");
  });
  add("sympoly/mixed_sigma_oracle pinned values", [] {
    const MetricPencil G2 = MetricPencil::standard(2);
    near(mixed_sigma_oracle({dg({1, 2}), HermitianForm::identity(2)}, G2), 1.5, 1e-12,
         "oracle pair");
    const HermitianForm A = dg({1, 2, 3});
    near(mixed_sigma_oracle({A, A, A}, MetricPencil::standard(3)), 6.0, 1e-10,
         "oracle diagonal");
    near(mixed_sigma_oracle({HermitianForm::basis_diag(2, 0), HermitianForm::basis_diag(2, 1)},
                            G2),
         0.5, 1e-12, "oracle units");
  });
  add("sympoly/mixed_sigma_oracle zero argument", [] {
    near(mixed_sigma_oracle({HermitianForm(2), dg({1, 2})}, MetricPencil::standard(2)), 0.0,
         1e-14, "multilinearity at 0");
  });
  add("sympoly/mixed_sigma_oracle agreement", [] {
    const MetricPencil G = MetricPencil::standard(3);
    for (int i = 0; i < 20; ++i) {
      CounterRng rng = CounterRng::stream(711, std::uint64_t(i));
      const HermitianForm A = random_hermitian(3, rng);
      const HermitianForm B = random_hermitian(3, rng);
      const double fast = mixed_sigma({A, B}, G);
      const double slow = mixed_sigma_oracle({A, B}, G);
      near(slow, fast, 1e-8 * (1.0 + std::abs(fast)), "oracle agreement");
    }
  });
  add("sympoly/restrict_line affine", [] {
    const MixedContext P(2, MetricPencil::standard(2));
    const PolyOnLine p = restrict_line(P, HermitianForm::identity(2), dg({1, 2}));
    require(p.coeffs.size() == 3, "degree 2");
    near(p.coeffs[0], 2.0, 1e-12, "c0");
    near(p.coeffs[1], 3.0, 1e-12, "c1");
    near(p.coeffs[2], 1.0, 1e-12, "c2");
  });
  add("sympoly/restrict_line pure power", [] {
    const MixedContext P(2, MetricPencil::standard(2));
    const PolyOnLine p = restrict_line(P, HermitianForm::identity(2), HermitianForm(2));
    near(p.coeffs[0], 0.0, 1e-14, "c0");
    near(p.coeffs[1], 0.0, 1e-14, "c1");
    near(p.coeffs[2], 1.0, 1e-14, "c2");
  });
  add("sympoly/restrict_line translation", [] {
    const MixedContext P(2, MetricPencil::standard(2));
    const HermitianForm a = HermitianForm::identity(2);
    const PolyOnLine p = restrict_line(P, a, -1.0 * a);
    near(p.coeffs[0], 1.0, 1e-12, "c0");
    near(p.coeffs[1], -2.0, 1e-12, "c1");
    near(p.coeffs[2], 1.0, 1e-12, "c2");
  });
  add("sympoly/real_rooted negative roots", [] {
    require(real_rooted(PolyOnLine{{2, 3, 1}}), "roots -1, -2");
  });
  add("sympoly/real_rooted complex pair", [] {
    require(!real_rooted(PolyOnLine{{1, 0, 1}}), "roots +-i");
  });
  add("sympoly/real_rooted double root", [] {
    require(real_rooted(PolyOnLine{{1, -2, 1}}), "double root 1");
  });
  add("sympoly/hyperbolic_at sigma_2", [] {
    const MixedContext P(2, MetricPencil::standard(3));
    const auto rep = hyperbolic_at(P, HermitianForm::identity(3), 1000, 2024);
    require(rep.hyperbolic, "sigma_2 is hyperbolic at I");
    require(!rep.witness.has_value(), "no witness expected");
  });
  add("sympoly/hyperbolic_at indefinite quadratic", [] {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4, 4);
    M.diagonal() << 1, 1, -1, -1;
    const GramQuadratic P(2, M);
    const auto rep = hyperbolic_at(P, HermitianForm::basis_diag(2, 0), 500, 7);
    require(!rep.hyperbolic, "signature (2,0,2) is not hyperbolic");
    require(rep.witness.has_value(), "witness required");
    bool complex_root = false;
    for (const Complex& r : rep.witness_roots)
      complex_root = complex_root || std::abs(r.imag()) > 1e-7 * (1.0 + std::abs(r));
    require(complex_root, "witness roots must leave the real line");
  });
  add("sympoly/hyperbolic_at degenerate anchor", [] {
    const MixedContext P(2, MetricPencil::standard(2));
    bool threw = false;
    try {
      hyperbolic_at(P, HermitianForm::basis_diag(2, 0), 10, 1);
    } catch (const PreconditionError&) {
      threw = true;
    }
    require(threw, "P(a) = 0 must be rejected");
  });
  add("sympoly/in_cone identity", [] {
    const MixedContext P(2, MetricPencil::standard(3));
    const HermitianForm I = HermitianForm::identity(3);
    const auto rep = in_cone(P, I, I);
    require(rep.member, "I is interior");
    near(rep.margin, 1.0, 1e-10, "margin");
    for (double r : rep.roots) near(r, -1.0, 1e-10, "root");
  });
  add("sympoly/in_cone gamma_2 member", [] {
    const MixedContext P(2, MetricPencil::standard(3));
    require(in_cone(P, HermitianForm::identity(3), dg({3, 3, -1})).member,
            "diag(3,3,-1) lies in Gamma_2");
  });
  add("sympoly/in_cone gamma_3 non-member", [] {
    const MixedContext P(3, MetricPencil::standard(3));
    require(!in_cone(P, HermitianForm::identity(3), dg({3, 3, -1})).member,
            "sigma_3 = -9 contradicts membership");
  });
  add("sympoly/in_gamma_m mixed signs", [] {
    const MetricPencil G = MetricPencil::standard(3);
    require(in_gamma_m(dg({3, 3, -1}), G, 2).member, "member at m=2");
    require(!in_gamma_m(dg({3, 3, -1}), G, 3).member, "non-member at m=3");
  });
  add("sympoly/in_gamma_m metric form", [] {
    CounterRng rng(5);
    const MetricPencil G(random_metric(3, rng));
    for (int m = 1; m <= 3; ++m)
      require(in_gamma_m(G.form(), G, m).member, "metric form is in every cone");
  });
  add("sympoly/in_gamma_m negative identity", [] {
    const MetricPencil G = MetricPencil::standard(3);
    for (int m = 1; m <= 3; ++m)
      require(!in_gamma_m(-1.0 * HermitianForm::identity(3), G, m).member,
              "sigma_1 < 0 everywhere");
  });
  add("sympoly/linearity sigma complete", [] {
    const MixedContext P(2, MetricPencil::standard(3));
    require(linearity_dimension(P, 31) == 0, "sigma_2 is complete");
  });
  add("sympoly/linearity restricted quadratic complete", [] {
    const MixedContext Q(3, MetricPencil::standard(3), {dg({3, 3, -1})});
    require(linearity_dimension(Q, 32) == 0, "Q(beta) = D(beta,beta,Omega) is complete");
  });
  add("sympoly/linearity trace power", [] {
    require(linearity_dimension(TracePower(2, 2), 33) == 3,
            "kernel of (tr x)^m is the trace-free hyperplane");
  });

  // garding ---------------------------------------------------------------
  add("garding/gap pinned pair", [] {
    const auto rep = garding_gap({dg({1, 2}), HermitianForm::identity(2)},
                                 MetricPencil::standard(2));
    near(rep.lhs, 1.5, 1e-12, "lhs");
    near(rep.rhs, std::sqrt(2.0), 1e-12, "rhs");
    near(rep.gap, 1.5 - std::sqrt(2.0), 1e-12, "gap");
    require(!rep.equality, "strict gap");
  });
  add("garding/gap equality on equal arguments", [] {
    const HermitianForm A = dg({1, 2});
    const auto rep = garding_gap({A, A}, MetricPencil::standard(2));
    require(std::abs(rep.gap) <= 1e-10 * rep.rhs, "gap vanishes");
    require(rep.equality, "equality witness");
    require(rep.pairwise.size() == 1 && rep.pairwise[0].has_value(), "constant reported");
    near(*rep.pairwise[0], 1.0, 1e-9, "constant 1");
  });
  add("garding/gap homogeneity", [] {
    const HermitianForm B = dg({1, 2});
    const auto rep = garding_gap({2.0 * B, B}, MetricPencil::standard(2));
    require(std::abs(rep.gap) <= 1e-10 * rep.rhs, "proportional pair");
    require(rep.equality && rep.pairwise[0].has_value(), "witness");
    near(*rep.pairwise[0], 2.0, 1e-9, "constant 2");
  });
  add("garding/gap cone violation diagnosed", [] {
    bool caught = false;
    try {
      garding_gap({dg({3, 3, -1}), HermitianForm::identity(3), HermitianForm::identity(3)},
                  MetricPencil::standard(3));
    } catch (const ConeViolation& e) {
      caught = true;
      require(e.index == 0, "failing index named");
    }
    require(caught, "argument outside Gamma_3 must be rejected");
  });
  add("garding/mixed_positivity boundary argument", [] {
    near(mixed_positivity({HermitianForm::basis_diag(3, 0), HermitianForm::identity(3)},
                          MetricPencil::standard(3)),
         1.0, 1e-12, "D(E11, I)");
  });
  add("garding/mixed_positivity identity", [] {
    near(mixed_positivity({HermitianForm::identity(3), HermitianForm::identity(3)},
                          MetricPencil::standard(3)),
         3.0, 1e-12, "binomial(3,2)");
  });
  add("garding/mixed_positivity zero rejected", [] {
    bool threw = false;
    try {
      mixed_positivity({HermitianForm(3), HermitianForm::identity(3)},
                       MetricPencil::standard(3));
    } catch (const PreconditionError&) {
      threw = true;
    }
    require(threw, "x_1 = 0 must be rejected");
  });
  add("garding/representer pinned diag", [] {
    const auto rep = positive_representer({dg({1, 2})}, MetricPencil::standard(2));
    near(rep.H.at(0, 0).real(), 1.0, 1e-12, "H00");
    near(rep.H.at(1, 1).real(), 0.5, 1e-12, "H11");
    near(std::abs(rep.H.at(0, 1)), 0.0, 1e-12, "H01");
    near(rep.min_pencil_eig, 0.5, 1e-12, "min eig");
  });
  add("garding/representer identity slots", [] {
    const MetricPencil G = MetricPencil::standard(3);
    const HermitianForm I = HermitianForm::identity(3);
    const auto r2 = positive_representer({I}, G);
    for (int j = 0; j < 3; ++j) near(r2.H.at(j, j).real(), 1.0, 1e-12, "binomial(3,2)/3 I");
    const auto r3 = positive_representer({I, I}, G);
    for (int j = 0; j < 3; ++j) near(r3.H.at(j, j).real(), 1.0 / 3.0, 1e-12, "binomial(3,3)/3 I");
  });
  add("garding/representer non-PD slot", [] {
    const auto rep = positive_representer({dg({3, 3, -1})}, MetricPencil::standard(3));
    near(rep.H.at(0, 0).real(), 1.0, 1e-12, "H00");
    near(rep.H.at(1, 1).real(), 1.0, 1e-12, "H11");
    near(rep.H.at(2, 2).real(), 3.0, 1e-12, "H22");
    near(rep.min_pencil_eig, 1.0, 1e-12, "min eig");
  });
  add("garding/concavity closed form", [] {
    const auto rows = concavity_profile(dg({1, 2}), HermitianForm::identity(2),
                                        MetricPencil::standard(2), 2, {0.0});
    near(rows[0].g, std::sqrt(2.0), 1e-12, "g(0)");
    near(rows[0].dg, 3.0 / (2.0 * std::sqrt(2.0)), 1e-12, "g'(0)");
    near(rows[0].d2g, -1.0 / (4.0 * std::pow(2.0, 1.5)), 1e-12, "g''(0)");
  });
  add("garding/concavity proportional is linear", [] {
    const HermitianForm A = dg({1, 2});
    const auto rows = concavity_profile(A, A, MetricPencil::standard(2), 2, {0.0, 0.5, 1.0});
    for (const auto& r : rows) {
      near(r.g, (1.0 + r.t) * std::sqrt(2.0), 1e-10, "g linear");
      require(std::abs(r.d2g) <= 1e-9 * std::abs(r.g), "g'' vanishes");
    }
  });
  add("garding/concavity strictly negative", [] {
    const MetricPencil G = MetricPencil::standard(3);
    CounterRng ra = CounterRng::stream(99, 0);
    CounterRng rb = CounterRng::stream(99, 1);
    const HermitianForm a = sample_gamma_m(G, 2, ra);
    const HermitianForm b = sample_gamma_m(G, 2, rb);
    for (const auto& r : concavity_profile(a, b, G, 2, {0.0, 0.5, 1.0}))
      require(r.d2g < 0.0, "strict concavity");
  });

  // hodge-index ------------------------------------------------------------
  add("hodge/gram minkowski", [] {
    const auto rep = gram_matrix({}, MetricPencil::standard(2));
    require(rep.signature.n_plus == 1 && rep.signature.n_zero == 0 &&
                rep.signature.n_minus == 3 && !rep.signature.indeterminate,
            "signature (1,0,3)");
    require(quadratic_hyperbolicity(rep), "Minkowski form is Lorentzian");
  });
  add("hodge/gram herm3", [] {
    const auto rep = gram_matrix({}, MetricPencil::standard(3));
    require(rep.signature.n_plus == 1 && rep.signature.n_zero == 0 &&
                rep.signature.n_minus == 8,
            "signature (1,0,8)");
  });
  add("hodge/gram mixed slot", [] {
    // diag(5,5,5,-1) sits in Gamma_3 of Herm(4) without being PD.
    const auto rep = gram_matrix({dg({5, 5, 5, -1})}, MetricPencil::standard(4));
    require(rep.signature.n_plus == 1 && rep.signature.n_zero == 0 &&
                rep.signature.n_minus == 15,
            "signature (1,0,15) with a non-PD slot");
    require(quadratic_hyperbolicity(rep), "Lorentzian");
  });
  add("hodge/quadratic_hyperbolicity rejects definite", [] {
    QuadraticReport rep;
    rep.n = 2;
    rep.m = 2;
    rep.gram = Eigen::MatrixXd::Identity(4, 4);
    rep.signature = signature_of(rep.gram);
    require(!quadratic_hyperbolicity(rep), "(4,0,0) is not Lorentzian");
  });
  add("hodge/primitive trace-free", [] {
    const auto pb = primitive_basis({}, HermitianForm::identity(2), MetricPencil::standard(2));
    require(pb.vectors.size() == 3, "dimension 3");
    for (const auto& v : pb.vectors) {
      require(std::abs(v.trace()) <= 1e-10, "trace-free");
      near(inner(v, v), 1.0, 1e-10, "unit norm");
    }
  });
  add("hodge/primitive hyperplane representer", [] {
    const auto pb =
        primitive_basis({}, dg({3, 3, -1}), MetricPencil::standard(3));
    near(pb.representer.at(2, 2).real(), 3.0, 1e-12, "representer diag(1,1,3)");
    require(pb.vectors.size() == 8, "dimension 8");
    for (const auto& v : pb.vectors)
      require(std::abs(inner(pb.representer, v)) <= 1e-10, "annihilated by functional");
  });
  add("hodge/theorem_a minkowski restriction", [] {
    const auto rep = verify_theorem_a({HermitianForm::identity(2)}, MetricPencil::standard(2));
    require(rep.restricted_spectrum.size() == 3, "3 restricted eigenvalues");
    for (double v : rep.restricted_spectrum) near(v, -0.5, 1e-9, "restricted eigenvalue");
    require(rep.primitive_negative && rep.nonsingular && rep.hyperbolic &&
                rep.decomposition_ok,
            "all verdicts");
    near(rep.q_alpha, 1.0, 1e-12, "Q(I,I)");
  });
  add("hodge/theorem_a mixed slot", [] {
    const auto rep = verify_theorem_a({dg({3, 3, -1})}, MetricPencil::standard(3));
    require(rep.restricted_spectrum.back() < 0.0, "restricted spectrum negative");
    require(rep.primitive_negative && rep.nonsingular && rep.hyperbolic &&
                rep.decomposition_ok,
            "all verdicts");
    require(rep.decomposition_residual <= 1e-10, "decomposition residual");
  });
  add("hodge/theorem_a classical specialization", [] {
    const MetricPencil G3 = MetricPencil::standard(3);
    const auto rep =
        verify_theorem_a({G3.form(), G3.form()}, G3);
    require(rep.primitive_negative && rep.nonsingular && rep.hyperbolic &&
                rep.decomposition_ok,
            "classical Hodge index case");
  });
  add("hodge/corollary equality at alpha", [] {
    const HermitianForm a = dg({1, 2});
    const auto rep = corollary_hodge_index(a, a, MetricPencil::standard(2), 2);
    near(rep.pairing * rep.pairing, rep.q_value * rep.sigma_m, 1e-12 * rep.scale,
         "exact equality");
    require(rep.inequality_ok, "inequality holds");
  });
  add("hodge/corollary pinned", [] {
    const auto rep =
        corollary_hodge_index(dg({1, 2}), dg({1, -1}), MetricPencil::standard(2), 2);
    near(rep.pairing, 0.5, 1e-12, "pairing");
    near(rep.q_value, -1.0, 1e-12, "q value");
    near(rep.sigma_m, 2.0, 1e-12, "sigma_2(alpha)");
    require(rep.inequality_ok, "0.25 >= -2");
  });
  add("hodge/corollary projected class", [] {
    const HermitianForm a = dg({1, 2});
    const HermitianForm b = dg({1, -1});
    const MetricPencil G = MetricPencil::standard(2);
    const auto base = corollary_hodge_index(a, b, G, 2);
    const HermitianForm proj = b - (base.pairing / base.sigma_m) * a;
    const auto rep = corollary_hodge_index(a, proj, G, 2);
    require(std::abs(rep.pairing) <= 1e-12 * (1.0 + rep.scale), "pairing projected away");
    require(rep.q_value <= 1e-9 * rep.scale, "primitive classes are nonpositive");
  });
  add("hodge/minor proportional pair", [] {
    const HermitianForm b1 = dg({1, -1});
    const auto rep = minor_2x2(b1, 2.0 * b1, {HermitianForm::identity(2)},
                               MetricPencil::standard(2));
    require(rep.negative_semidefinite, "NSD");
    require(rep.degenerate, "degenerate");
    require(rep.proportional_c.has_value() && rep.consistent, "proportionality detected");
  });
  add("hodge/minor pinned", [] {
    const auto rep = minor_2x2(dg({1, -1}), HermitianForm::basis_sym(2, 0, 1),
                               {HermitianForm::identity(2)}, MetricPencil::standard(2));
    near(rep.matrix(0, 0), -1.0, 1e-12, "Q(b1,b1)");
    near(rep.matrix(1, 1), -1.0, 1e-12, "Q(b2,b2)");
    near(rep.matrix(0, 1), 0.0, 1e-12, "Q(b1,b2)");
    require(rep.negative_semidefinite && !rep.degenerate && rep.consistent,
            "negative definite, independent");
  });
  add("hodge/minor rejects non-primitive", [] {
    bool threw = false;
    try {
      minor_2x2(HermitianForm::identity(2), dg({1, -1}), {HermitianForm::identity(2)},
                MetricPencil::standard(2));
    } catch (const PreconditionError&) {
      threw = true;
    }
    require(threw, "I is not primitive");
  });
  add("hodge/log_concavity pinned", [] {
    const auto rep =
        log_concavity(dg({1, 2}), HermitianForm::identity(2), MetricPencil::standard(2), 2);
    near(rep.a[0], 1.0, 1e-12, "a0");
    near(rep.a[1], 1.5, 1e-12, "a1");
    near(rep.a[2], 2.0, 1e-12, "a2");
    require(rep.ok[0] && !rep.equality[0], "2.25 >= 2 strictly");
    require(!rep.proportional_c.has_value(), "not proportional");
  });
  add("hodge/log_concavity proportional", [] {
    const HermitianForm a = dg({1, 2});
    const auto rep = log_concavity(a, 2.0 * a, MetricPencil::standard(2), 2);
    require(rep.ok[0] && rep.equality[0], "geometric sequence");
    require(rep.proportional_c.has_value(), "proportionality detected");
    near(*rep.proportional_c, 0.5, 1e-9, "constant");
  });
  add("hodge/log_concavity mixed signs", [] {
    const auto rep =
        log_concavity(dg({3, 3, -1}), HermitianForm::identity(3), MetricPencil::standard(3), 2);
    near(rep.a[0], 3.0, 1e-12, "a0");
    near(rep.a[1], 5.0, 1e-12, "a1");
    near(rep.a[2], 3.0, 1e-12, "a2");
    require(rep.ok[0] && !rep.equality[0], "25 >= 9 strictly");
  });

  // torus-model -------------------------------------------------------------
  add("torus/tree_sum matches serial", [] {
    std::vector<double> v(1000);
    double serial = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = 1.0 / double(i + 1);
      serial += v[i];
    }
    near(tree_sum(v.data(), v.size()), serial, 1e-12 * serial, "pairwise sum");
  });
  add("torus/ddc single mode", [&] {
    const TorusContext ctx(1, 16);
    const ScalarField psi = cosine_field(ctx, 0, 1);
    const HermitianGrid g = ddc(psi, ctx);
    for (std::size_t p = 0; p < ctx.points(); ++p)
      near(g.point(p)[0], -pi2 * psi.values()[p], 1e-10, "entry -pi^2 cos(2 pi x)");
  });
  add("torus/ddc constant potential", [] {
    const TorusContext ctx(1, 8);
    const ScalarField psi(std::vector<double>(ctx.points(), 1.5));
    require(ddc(psi, ctx).max_frobenius() <= 1e-12, "constant has zero Hessian");
  });
  add("torus/ddc zero mean entries", [] {
    const TorusContext ctx(1, 16);
    CounterRng rng(314);
    const HermitianGrid g = ddc(random_band_limited(ctx, rng), ctx);
    double mean = 0.0;
    for (std::size_t p = 0; p < ctx.points(); ++p) mean += g.point(p)[0];
    mean /= double(ctx.points());
    require(std::abs(mean) <= 1e-10 * std::max(g.max_frobenius(), 1e-300),
            "exact forms integrate to zero");
  });
  add("torus/ddc aliasing guard", [&] {
    const TorusContext ctx(1, 8);
    bool threw = false;
    try {
      ddc(cosine_field(ctx, 0, 2), ctx);
    } catch (const AliasingError&) {
      threw = true;
    }
    require(threw, "frequency N/4 must be rejected");
  });
  add("torus/integral_pairing constants", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    near(integral_pairing({FormField{dg({1, 2}), std::nullopt},
                           FormField{HermitianForm::identity(2), std::nullopt}},
                          G, ctx),
         1.5, 0.0, "exact all-constant path");
  });
  add("torus/integral_pairing exactness", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    CounterRng rng(55);
    const ScalarField psi = random_band_limited(ctx, rng);
    near(integral_pairing({FormField{dg({1, 2}), psi},
                           FormField{HermitianForm::identity(2), std::nullopt}},
                          G, ctx),
         1.5, 1e-10, "dd^c integrates to zero");
  });
  add("torus/integral_pairing zero class", [] {
    const TorusContext ctx(2, 8);
    near(integral_pairing({FormField{HermitianForm(2), std::nullopt},
                           FormField{HermitianForm::identity(2), std::nullopt}},
                          MetricPencil::standard(2), ctx),
         0.0, 0.0, "zero class pairs to zero");
  });
  add("torus/laplacian pinned mode", [&] {
    const TorusContext ctx(1, 16);
    const ScalarField f = cosine_field(ctx, 0, 1);
    const auto sol = laplacian_solve(HermitianForm::identity(1), f, ctx);
    for (std::size_t p = 0; p < ctx.points(); ++p)
      near(sol.phi.values()[p], -f.values()[p] / pi2, 1e-10, "phi = -cos(2 pi x)/pi^2");
    require(sol.residual <= 1e-8, "residual");
  });
  add("torus/laplacian zero data", [] {
    const TorusContext ctx(1, 8);
    const ScalarField f(std::vector<double>(ctx.points(), 0.0));
    const auto sol = laplacian_solve(HermitianForm::identity(1), f, ctx);
    require(sol.phi.max_abs() == 0.0 && sol.residual == 0.0, "phi = 0");
  });
  add("torus/laplacian band-limited residual", [] {
    const TorusContext ctx(2, 16);
    CounterRng rng(88);
    const ScalarField f = random_band_limited(ctx, rng);
    const auto sol = laplacian_solve(dg({1.0, 0.5}), f, ctx);
    require(sol.residual <= 1e-8, "spectral exactness");
  });
  add("torus/theorem_a constant class", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    const ScalarField psi(std::vector<double>(ctx.points(), 0.0));
    const auto rep = verify_theorem_a_torus({HermitianForm::identity(2)}, G, dg({1, -1}),
                                            psi, ctx);
    near(rep.integrated, -1.0, 1e-10, "integrated Q");
    near(rep.constant_model, -1.0, 1e-12, "constant model");
    require(rep.match_ok && rep.pointwise_ok, "verdicts");
    require(rep.primitivity_residual <= 1e-8, "primitivity");
  });
  add("torus/theorem_a zero class recovers -psi", [] {
    const TorusContext ctx(2, 16);
    const MetricPencil G = MetricPencil::standard(2);
    CounterRng rng(123);
    const ScalarField psi = random_band_limited(ctx, rng);
    const auto rep =
        verify_theorem_a_torus({HermitianForm::identity(2)}, G, HermitianForm(2), psi, ctx);
    double defect = 0.0;
    for (std::size_t p = 0; p < ctx.points(); ++p)
      defect = std::max(defect, std::abs(rep.phi.values()[p] + psi.values()[p]));
    require(defect <= 1e-8 * psi.max_abs(), "phi = -psi");
    near(rep.constant_model, 0.0, 0.0, "zero class");
    require(rep.match_ok, "integrated Q collapses to zero");
  });
  add("torus/theorem_a end-to-end", [] {
    const TorusContext ctx(3, 8);
    const MetricPencil G = MetricPencil::standard(3);
    CounterRng rpsi(9001);
    CounterRng rbeta(9002);
    const ScalarField psi = random_band_limited(ctx, rpsi, 6, 0.25);
    const HermitianForm beta = random_hermitian(3, rbeta);
    const auto rep = verify_theorem_a_torus({dg({3, 3, -1})}, G, beta, psi, ctx);
    require(rep.solver_residual <= 1e-8, "solver residual");
    require(rep.primitivity_residual <= 1e-8, "primitivity residual");
    require(rep.pointwise_ok, "pointwise nonpositivity");
    require(rep.match_ok, "integral matches constant model");
    require(rep.integrated < 0.0, "strictly negative for a nonzero class");
  });
  add("torus/hessian identity class", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    const auto rep = hessian_constant_check({G.form(), G.form()}, G, ctx);
    near(rep.c[0], 1.0, 1e-12, "c = binomial(2,2)");
    near(rep.integrated, rep.rhs, 1e-12, "equality case");
    require(rep.inequality_ok && rep.equality, "verdicts");
  });
  add("torus/hessian pinned pair", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    const auto rep =
        hessian_constant_check({dg({1, 2}), HermitianForm::identity(2)}, G, ctx);
    near(rep.integrated, 1.5, 1e-12, "integrated");
    near(rep.rhs, std::sqrt(2.0), 1e-12, "rhs");
    require(rep.inequality_ok && !rep.equality, "strict inequality");
    near(rep.c_integral[0], rep.c[0], 1e-12, "normalization consistency");
  });
  add("torus/hessian proportional ratio", [] {
    const TorusContext ctx(2, 8);
    const MetricPencil G = MetricPencil::standard(2);
    const HermitianForm I = HermitianForm::identity(2);
    const auto rep = hessian_constant_check({2.0 * I, I}, G, ctx);
    require(rep.equality, "proportional pair is the equality case");
    require(rep.pairwise[0].has_value(), "proportionality detected");
    near(rep.ratios[0], 2.0, 1e-12, "(c_1/c_2)^{1/m}");
  });

  return cs;
}

}  // namespace

const std::vector<SelfTestCase>& selftest_cases() {
  static const std::vector<SelfTestCase> cases = build_cases();
  return cases;
}

int run_selftests(std::ostream& out, bool list_only) {
  const auto& cases = selftest_cases();
  if (list_only) {
    for (const auto& c : cases) out << c.name << "\n";
    return 0;
  }
  int failures = 0;
  for (const auto& c : cases) {
    try {
      c.run();
      out << "ok   " << c.name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      out << "FAIL " << c.name << ": " << e.what() << "\n";
    }
  }
  out << "selftest: " << cases.size() << " cases, " << failures << " failures\n";
  return failures;
}

}  // namespace ghx
