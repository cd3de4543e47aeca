#include "npival/seshadri.hpp"

#include "npival/errors.hpp"
#include "npival/zariski.hpp"

namespace npival {

bool is_big(const BigDivisor& d, int delta) {
  return d.b > 0 && d.a > -static_cast<std::int64_t>(delta) * d.b;
}

bool is_nef(const BigDivisor& d) { return d.a >= 0 && d.b >= 0; }

Rational volume(const BigDivisor& d, int delta) {
  if (!is_big(d, delta)) throw Error(ErrorCode::NotBig, "divisor is not big");
  if (is_nef(d)) {
    return Rational(2 * d.a * d.b) + Rational(d.b * d.b) * delta;
  }
  const auto base = zariski_fano_base(d, delta);
  return base.positive_b * base.positive_b * delta;
}

Rational theta(const DivisorialValuation& val, const BigDivisor& d) {
  const Rational f(val.phi_f1), m(val.phi_m);
  if (val.kind == ValuationKind::Special) return d.a * f - d.b * m;
  return d.a * f - d.b * (m - val.surface.delta * f);
}

namespace {

void require_npi_big(const DivisorialValuation& val, const BigDivisor& d) {
  if (!is_npi(val)) throw Error(ErrorCode::NotNPI, "valuation is not non-positive at infinity");
  if (!is_big(d, val.surface.delta)) throw Error(ErrorCode::NotBig, "divisor is not big");
}

}  // namespace

Rational mu_hat(const DivisorialValuation& val, const BigDivisor& d) {
  require_npi_big(val, d);
  const Rational f(val.phi_f1), m(val.phi_m), a(d.a), b(d.b);
  const int delta = val.surface.delta;
  if (val.kind == ValuationKind::Special) return (a + b * delta) * f + b * m;
  if (is_nef(d)) return a * f + b * m;
  // N = (-a/delta) M0 misses p, so only P = (b + a/delta) M contributes.
  return (b + a / delta) * m;
}

LowerBound lower_bound(const DivisorialValuation& val, const BigDivisor& d) {
  const Rational mu = mu_hat(val, d);
  LowerBound out;
  out.mu_hat_squared = mu * mu;
  out.volume_times_beta = volume(d, val.surface.delta) * val.beta_last();
  out.holds = out.mu_hat_squared >= out.volume_times_beta;
  return out;
}

bool is_minimal(const DivisorialValuation& val, const BigDivisor& d) {
  require_npi_big(val, d);
  if (!is_nef(d)) throw Error(ErrorCode::NotNefBig, "divisor must be nef");
  const bool tight = npi_quantity(val) == val.beta_last();
  const bool balanced = theta(val, d) == 0;
  const bool minimal = tight && balanced;
  const auto lb = lower_bound(val, d);
  if (minimal != (lb.mu_hat_squared == lb.volume_times_beta)) {
    throw Error(ErrorCode::VerificationFailed, "minimality criterion disagrees with the volume bound");
  }
  return minimal;
}

bool never_minimal(const DivisorialValuation& val) {
  if (!is_npi(val)) throw Error(ErrorCode::NotNPI, "valuation is not non-positive at infinity");
  return npi_quantity(val) > val.beta_last();
}

bool mu_hat_bisection_check(const DivisorialValuation& val, const BigDivisor& d) {
  require_npi_big(val, d);
  if (!is_nef(d)) throw Error(ErrorCode::NotNefBig, "divisor must be nef");
  const Rational mu = mu_hat(val, d);
  const CurveBasis basis(val);
  const auto& lattice = basis.lattice();
  const Rational before = mu * ratio(1023, 1024);
  const auto inside = zariski_decompose(shifted_pullback(lattice, d, before), basis);
  const auto at_end = zariski_decompose(shifted_pullback(lattice, d, mu), basis);
  return lattice.square(inside.positive) > 0 && lattice.square(at_end.positive) == 0;
}

GermVector mu_hat_witness(const DivisorialValuation& val, const BigDivisor& d) {
  if (!is_nef(d)) throw Error(ErrorCode::NotNefBig, "witness curve needs a nef divisor");
  const auto& config = val.config;
  const auto f = f1_germ(config);
  const auto m = m_germ(config);
  const bool m_counts = val.special_point_on_m0() || val.kind == ValuationKind::NonSpecial;
  const std::int64_t cf =
      val.kind == ValuationKind::Special ? d.a + d.b * val.surface.delta : d.a;
  GermVector out{std::vector<std::int64_t>(f.mult.size(), 0)};
  for (std::size_t i = 0; i < f.mult.size(); ++i) {
    out.mult[i] = cf * f.mult[i] + (m_counts ? d.b * m.mult[i] : 0);
  }
  return out;
}

}  // namespace npival
