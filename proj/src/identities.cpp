#include "lieb/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "lieb/errors.hpp"

namespace lieb {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double radial_value(const Field& field, double r) {
  const double v = (*field.profile())(r);
  return field.power() == 1.0 ? v : std::pow(v, field.power());
}

void require_radial(const Field& a, const Field& b) {
  if (!a.profile() || !b.profile()) fail(ErrorCode::InvalidArgument, "identity integrals need radial fields");
  if (a.dimension() != b.dimension()) fail(ErrorCode::InvalidArgument, "field dimension mismatch");
}

// Integrand on the half line t > 0: h(t) + h(-t) for n = 1, the radial
// integrand for n >= 2 (sphere area applied by the caller).
struct PairIntegrand {
  const Field& a;
  const MultiIndex& alpha;
  const Field& b;
  const MultiIndex& beta;

  double line(double x) const {
    const double p[1] = {x};
    return a.derivative(alpha, p) * b.derivative(beta, p);
  }
  double radial(double r) const {
    return radial_value(a, r) * radial_value(b, r) * std::pow(r, a.dimension() - 1);
  }
};

bool parity_forces_zero(const Field& a, const MultiIndex& alpha, const Field& b, const MultiIndex& beta) {
  return a.dimension() == 1 && a.profile() && b.profile() && (alpha.order() + beta.order()) % 2 == 1;
}

QuadratureSpec tail_spec(const QuadratureSpec& quad, const SingularityBudget& budget) {
  QuadratureSpec spec = quad;
  spec.split_points.clear();
  for (const auto& le : budget.local_exponents) {
    if (std::isinf(le.location)) spec.tail_exponent_hint = le.exponent;
  }
  return spec;
}

}  // namespace

const char* identity_id_name(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::Eq5: return "Eq5";
    case IdentityId::Eq6: return "Eq6";
    case IdentityId::Eq7: return "Eq7";
    case IdentityId::Eq8: return "Eq8";
    case IdentityId::Eq9a: return "Eq9a";
    case IdentityId::Eq9b: return "Eq9b";
    case IdentityId::Eq10: return "Eq10";
  }
  return "Unknown";
}

IdentityId identity_id_from_name(const std::string& name) {
  for (auto id : {IdentityId::Eq5, IdentityId::Eq6, IdentityId::Eq7, IdentityId::Eq8, IdentityId::Eq9a,
                  IdentityId::Eq9b, IdentityId::Eq10}) {
    if (name == identity_id_name(id)) return id;
  }
  fail(ErrorCode::Parse, "unknown identity id '" + name + "'");
}

SingularityBudget pair_budget(const Field& a, const MultiIndex& alpha, const Field& b,
                              const MultiIndex& beta) {
  require_radial(a, b);
  const int n = a.dimension();
  const double jac = n - 1;
  SingularityBudget budget;
  budget.add(0.0, a.origin_exponent(alpha.order()) + b.origin_exponent(beta.order()) + jac);
  budget.add(kInfinity, a.infinity_exponent(alpha.order()) + b.infinity_exponent(beta.order()) + jac);
  return budget;
}

PairIntegral integrate_pair(const Field& a, const MultiIndex& alpha, const Field& b,
                            const MultiIndex& beta, const QuadratureSpec& quad, bool want_absolute) {
  const SingularityBudget budget = pair_budget(a, alpha, b, beta);
  PairIntegral out;
  out.screen = convergence_screen(budget);
  out.parity_forced = parity_forces_zero(a, alpha, b, beta);
  if (!out.screen.convergent) return out;

  const int n = a.dimension();
  const QuadratureSpec spec = tail_spec(quad, budget);
  const PairIntegrand h{a, alpha, b, beta};
  if (n == 1) {
    const auto plus = integrate([&](double t) { return h.line(t); }, 0.0, kInfinity, spec);
    const auto minus = integrate([&](double t) { return h.line(-t); }, 0.0, kInfinity, spec);
    out.value = plus.value + minus.value;
    out.err_estimate = plus.err_estimate + minus.err_estimate;
    if (want_absolute) {
      const auto ap = integrate([&](double t) { return std::abs(h.line(t)); }, 0.0, kInfinity, spec);
      const auto am = integrate([&](double t) { return std::abs(h.line(-t)); }, 0.0, kInfinity, spec);
      out.absolute = ap.value + am.value;
    }
    return out;
  }
  if (alpha.order() != 0 || beta.order() != 0) {
    fail(ErrorCode::InvalidArgument, "identity integrals in n >= 2 support only alpha = beta = 0");
  }
  const double area = sphere_area(n);
  const auto res = integrate([&](double r) { return h.radial(r); }, 0.0, kInfinity, spec);
  out.value = area * res.value;
  out.err_estimate = area * res.err_estimate;
  // Radial fields are positive, so the integrand never changes sign.
  if (want_absolute) out.absolute = std::abs(out.value);
  return out;
}

QuadratureResult truncated_abs_pair_integral(const Field& a, const MultiIndex& alpha, const Field& b,
                                             const MultiIndex& beta, double R, const QuadratureSpec& quad) {
  require_radial(a, b);
  if (!(R > 1.0)) fail(ErrorCode::InvalidArgument, "cutoff radius must exceed 1");
  QuadratureSpec spec = quad;
  spec.split_points = {1.0};
  spec.tail_exponent_hint.reset();
  const PairIntegrand h{a, alpha, b, beta};
  QuadratureResult res;
  if (a.dimension() == 1) {
    res = integrate([&](double t) { return std::abs(h.line(t)) + std::abs(h.line(-t)); }, 1.0 / R, R, spec);
  } else {
    if (alpha.order() != 0 || beta.order() != 0) {
      fail(ErrorCode::InvalidArgument, "identity integrals in n >= 2 support only alpha = beta = 0");
    }
    const double area = sphere_area(a.dimension());
    res = integrate([&](double r) { return std::abs(h.radial(r)); }, 1.0 / R, R, spec);
    res.value *= area;
    res.err_estimate *= area;
  }
  return res;
}

namespace {

void finish_equality(IdentityReport& rep, const IdentityTolerances& tol) {
  rep.tolerance = tol.relative;
  const double denom = std::max({std::abs(rep.lhs), std::abs(rep.rhs), tol.absolute});
  rep.rel_gap = std::abs(rep.lhs - rep.rhs) / denom;
  rep.verdict = classify_residual(rep.rel_gap, (rep.lhs_err + rep.rhs_err) / denom, tol.relative);
}

void finish_zero(IdentityReport& rep, const IdentityTolerances& tol) {
  rep.zero_target = true;
  rep.tolerance = tol.absolute;
  const double denom = std::max({std::abs(rep.lhs), std::abs(rep.rhs), tol.absolute});
  rep.rel_gap = std::abs(rep.lhs - rep.rhs) / denom;
  const double worst = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.verdict = classify_residual(worst, std::max(rep.lhs_err, rep.rhs_err), tol.absolute);
}

void not_applicable(IdentityReport& rep, const ScreenResult& screen, double tolerance) {
  rep.screen = screen;
  rep.lhs = rep.rhs = rep.rel_gap = kNaN;
  rep.lhs_err = rep.rhs_err = kNaN;
  rep.tolerance = tolerance;
  rep.verdict = Verdict::NotApplicable;
}

std::string pair_label(const char* first, const MultiIndex& a, const char* second, const MultiIndex& b) {
  return std::string("int ") + a.to_string() + "(" + first + ") " + b.to_string() + "(" + second + ")";
}

// Integrals of Lambda(A) Omega(B) assembled from cached term-pair integrals.
class FormIntegrator {
 public:
  FormIntegrator(std::vector<Field> fields, const QuadratureSpec& quad, bool want_absolute)
      : fields_(std::move(fields)), quad_(quad), want_absolute_(want_absolute) {}

  struct Sum {
    double value = 0.0;
    double err = 0.0;
    double absolute = 0.0;
    ScreenResult screen;
    bool parity_forced = true;
  };

  Sum integral(const DifferentialForm& lam, int a, const DifferentialForm& om, int b) {
    Sum s;
    for (const auto& tl : lam.terms()) {
      for (const auto& to : om.terms()) {
        const PairIntegral& pi = pair(a, tl.index, b, to.index);
        if (!pi.screen.convergent) {
          if (s.screen.convergent) s.screen = pi.screen;
          continue;
        }
        const double c = tl.coefficient * to.coefficient;
        s.value += c * pi.value;
        s.err += std::abs(c) * pi.err_estimate;
        s.absolute += std::abs(c) * pi.absolute;
        s.parity_forced = s.parity_forced && pi.parity_forced;
      }
    }
    return s;
  }

 private:
  const PairIntegral& pair(int a, const MultiIndex& alpha, int b, const MultiIndex& beta) {
    // Canonical order so that A/B swaps share one integral.
    auto key = std::make_tuple(a, alpha, b, beta);
    if (std::tie(b, beta) < std::tie(a, alpha)) key = std::make_tuple(b, beta, a, alpha);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const auto& [ka, kal, kb, kbe] = key;
      it = cache_.emplace(key, integrate_pair(fields_[static_cast<std::size_t>(ka)], kal,
                                              fields_[static_cast<std::size_t>(kb)], kbe, quad_,
                                              want_absolute_))
               .first;
    }
    return it->second;
  }

  std::vector<Field> fields_;
  QuadratureSpec quad_;
  bool want_absolute_;
  std::map<std::tuple<int, MultiIndex, int, MultiIndex>, PairIntegral> cache_;
};

}  // namespace

IdentityReport check_commutativity(const RadialProfile& f, const RadialProfile& g,
                                   const MultiIndex& alpha, const MultiIndex& beta,
                                   const Params& params, const QuadratureSpec& quad,
                                   const IdentityTolerances& tol) {
  const Field F = Field::radial(f, params.n);
  const Field G = Field::radial(g, params.n);
  const Field Fq = F.raised(params.pm1);
  const Field Gq = G.raised(params.pm1);
  IdentityReport rep;
  rep.id = IdentityId::Eq6;
  rep.label = pair_label("g", beta, "f^(p-1)", alpha) + " = " + pair_label("f", alpha, "g^(p-1)", beta);

  const auto left_screen = convergence_screen(pair_budget(G, beta, Fq, alpha));
  const auto right_screen = convergence_screen(pair_budget(F, alpha, Gq, beta));
  if (!left_screen.convergent || !right_screen.convergent) {
    not_applicable(rep, left_screen.convergent ? right_screen : left_screen, tol.relative);
    return rep;
  }
  const auto lhs = integrate_pair(G, beta, Fq, alpha, quad);
  const auto rhs = integrate_pair(F, alpha, Gq, beta, quad);
  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  rep.lhs_err = lhs.err_estimate;
  rep.rhs_err = rhs.err_estimate;
  rep.parity_forced = lhs.parity_forced;
  finish_equality(rep, tol);
  return rep;
}

IdentityReport check_orthogonality(const RadialProfile& f, const MultiIndex& alpha,
                                   const MultiIndex& beta, const Params& params,
                                   const QuadratureSpec& quad, const IdentityTolerances& tol) {
  const Field F = Field::radial(f, params.n);
  const Field Fq = F.raised(params.pm1);
  const bool odd_total = (alpha.order() + beta.order()) % 2 == 1;
  IdentityReport rep;
  rep.id = odd_total ? IdentityId::Eq8 : IdentityId::Eq7;
  rep.label = pair_label("f", beta, "f^(p-1)", alpha) + (odd_total ? " = " : " ~ ") +
              pair_label("f", alpha, "f^(p-1)", beta);

  const auto left_screen = convergence_screen(pair_budget(F, beta, Fq, alpha));
  const auto right_screen = convergence_screen(pair_budget(F, alpha, Fq, beta));
  if (!left_screen.convergent || !right_screen.convergent) {
    not_applicable(rep, left_screen.convergent ? right_screen : left_screen,
                   odd_total ? tol.absolute : tol.relative);
    return rep;
  }
  const auto lhs = integrate_pair(F, beta, Fq, alpha, quad, odd_total);
  const auto rhs = integrate_pair(F, alpha, Fq, beta, quad, odd_total);
  rep.lhs_err = lhs.err_estimate;
  rep.rhs_err = rhs.err_estimate;
  rep.parity_forced = lhs.parity_forced;
  if (odd_total) {
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    rep.conditioning = std::max(lhs.absolute, rhs.absolute);
    finish_zero(rep, tol);
  } else {
    rep.lhs = (beta.parity() > 0 ? 1.0 : -1.0) * lhs.value;
    rep.rhs = (alpha.parity() > 0 ? 1.0 : -1.0) * rhs.value;
    finish_equality(rep, tol);
  }
  return rep;
}

std::vector<IdentityReport> check_composite(const RadialProfile& f, const RadialProfile& g,
                                            const DifferentialForm& lambda_form,
                                            const DifferentialForm& omega_form,
                                            const Params& params, const QuadratureSpec& quad,
                                            const IdentityTolerances& tol) {
  if (lambda_form.dimension() != params.n || omega_form.dimension() != params.n) {
    fail(ErrorCode::InvalidArgument, "form dimension does not match n");
  }
  enum { kF = 0, kFq = 1, kG = 2, kGq = 3 };
  const Field F = Field::radial(f, params.n);
  const Field G = Field::radial(g, params.n);
  FormIntegrator fi({F, F.raised(params.pm1), G, G.raised(params.pm1)}, quad, true);
  const auto [lam_e, lam_o] = parity_split(lambda_form);
  const auto [om_e, om_o] = parity_split(omega_form);

  std::vector<IdentityReport> out;
  const auto equality = [&](IdentityId id, std::string label, const FormIntegrator::Sum& l,
                            const FormIntegrator::Sum& r) {
    IdentityReport rep;
    rep.id = id;
    rep.label = std::move(label);
    if (!l.screen.convergent || !r.screen.convergent) {
      not_applicable(rep, l.screen.convergent ? r.screen : l.screen, tol.relative);
    } else {
      rep.lhs = l.value;
      rep.rhs = r.value;
      rep.lhs_err = l.err;
      rep.rhs_err = r.err;
      finish_equality(rep, tol);
    }
    out.push_back(rep);
  };
  const auto zero = [&](std::string label, const FormIntegrator::Sum& s) {
    IdentityReport rep;
    rep.id = IdentityId::Eq9b;
    rep.label = std::move(label);
    if (!s.screen.convergent) {
      not_applicable(rep, s.screen, tol.absolute);
    } else {
      rep.lhs = s.value;
      rep.rhs = 0.0;
      rep.lhs_err = s.err;
      rep.conditioning = s.absolute;
      rep.parity_forced = s.parity_forced;
      finish_zero(rep, tol);
    }
    out.push_back(rep);
  };
  const auto add = [](FormIntegrator::Sum a, const FormIntegrator::Sum& b) {
    a.value += b.value;
    a.err += b.err;
    a.absolute += b.absolute;
    if (a.screen.convergent) a.screen = b.screen;
    return a;
  };

  equality(IdentityId::Eq9a, "int L(f) W(g^(p-1)) = int L(f^(p-1)) W(g)",
           fi.integral(lambda_form, kF, omega_form, kGq), fi.integral(lambda_form, kFq, omega_form, kG));
  zero("int Le(f) Lo(f^(p-1)) = 0", fi.integral(lam_e, kF, lam_o, kFq));
  zero("int Le(f^(p-1)) Lo(f) = 0", fi.integral(lam_e, kFq, lam_o, kF));

  const auto a = fi.integral(lambda_form, kF, omega_form, kFq);
  const auto b = fi.integral(lambda_form, kFq, omega_form, kF);
  const auto c = add(fi.integral(lam_e, kF, om_e, kFq), fi.integral(lam_o, kF, om_o, kFq));
  const auto d = add(fi.integral(lam_e, kFq, om_e, kF), fi.integral(lam_o, kFq, om_o, kF));
  equality(IdentityId::Eq10, "int L(f) W(f^(p-1)) = int L(f^(p-1)) W(f)", a, b);
  equality(IdentityId::Eq10, "int L(f^(p-1)) W(f) = int Le(f) We(f^(p-1)) + int Lo(f) Wo(f^(p-1))", b, c);
  equality(IdentityId::Eq10,
           "int Le(f) We(f^(p-1)) + int Lo(f) Wo(f^(p-1)) = int Le(f^(p-1)) We(f) + int Lo(f^(p-1)) Wo(f)",
           c, d);
  return out;
}

IdentityReport check_corollary_identity(const Params& params, const QuadratureSpec& quad, double tolerance) {
  const int n = params.n;
  const double lam = params.lambda;
  QuadratureSpec tight = quad.with_rel_tol(std::min(quad.rel_tol, 0.01 * tolerance));
  const double C = lieb_constant_C(params);
  const double L = lieb_constant_L(params, tight);
  const double area = sphere_area(n);

  IdentityReport rep;
  rep.id = IdentityId::Eq5;
  rep.label = "L^(p-1) C int |x|^-(n-l/2) (1+|x|^2)^(-l/2) = L C^(p-1) int |x|^(-l/2) (1+|x|^2)^-(n-l/2)";

  // Radial integrands after the |x|^{n-1} Jacobian.
  const double e_left0 = lam / 2.0 - 1.0;
  const double e_right0 = n - 1.0 - lam / 2.0;
  SingularityBudget budget;
  budget.add(0.0, e_left0).add(0.0, e_right0);
  budget.add(kInfinity, e_left0 - lam).add(kInfinity, e_right0 - (2.0 * n - lam));
  rep.screen = convergence_screen(budget);
  if (!rep.screen.convergent) {
    not_applicable(rep, rep.screen, tolerance);
    return rep;
  }
  QuadratureSpec left_spec = tight;
  left_spec.tail_exponent_hint = e_left0 - lam;
  QuadratureSpec right_spec = tight;
  right_spec.tail_exponent_hint = e_right0 - (2.0 * n - lam);
  const auto left = integrate(
      [&](double r) { return std::pow(r, e_left0) * std::pow(1.0 + r * r, -lam / 2.0); }, 0.0, kInfinity,
      left_spec);
  const auto right = integrate(
      [&](double r) { return std::pow(r, e_right0) * std::pow(1.0 + r * r, -(n - lam / 2.0)); }, 0.0,
      kInfinity, right_spec);
  const double left_factor = std::pow(L, params.pm1) * C * area;
  const double right_factor = L * std::pow(C, params.pm1) * area;
  rep.lhs = left_factor * left.value;
  rep.rhs = right_factor * right.value;
  rep.lhs_err = left_factor * left.err_estimate;
  rep.rhs_err = right_factor * right.err_estimate;
  finish_equality(rep, IdentityTolerances{tolerance, 0.0});
  return rep;
}

}  // namespace lieb
