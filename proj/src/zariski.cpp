#include "npival/zariski.hpp"

#include <optional>

#include "npival/errors.hpp"

namespace npival {

DivisorClass ZariskiPair::negative_class(const CurveBasis& basis) const {
  auto n = DivisorClass::zero(basis.rank());
  for (const auto& [id, c] : negative) n += c * basis.get(id);
  return n;
}

Rational ZariskiPair::coefficient(const CurveId& id) const {
  auto it = negative.find(id);
  return it == negative.end() ? Rational(0) : it->second;
}

BaseDecomposition zariski_fano_base(const BigDivisor& d, int delta) {
  if (d.b < 0 || (d.a < 0 && (delta == 0 || d.a < -delta * d.b))) {
    throw Error(ErrorCode::NotPseudoeffective, "aF + bM is not pseudoeffective");
  }
  BaseDecomposition out;
  if (d.a >= 0) {
    out.positive_a = d.a;
    out.positive_b = d.b;
    out.negative_m0 = 0;
    out.nef = true;
    return out;
  }
  // P ~ (b + a/delta) M, N ~ (-a/delta) M0 with M0 ~ M - delta F.
  out.positive_a = 0;
  out.positive_b = Rational(d.b) + Rational(d.a) / delta;
  out.negative_m0 = Rational(-d.a) / delta;
  out.nef = false;
  return out;
}

DivisorClass shifted_pullback(const PicardLattice& lattice, const BigDivisor& d, const Rational& t) {
  auto c = lattice.pullback(d.a, d.b);
  c.e[static_cast<std::size_t>(lattice.rank() - 1)] = -t;
  return c;
}

namespace {

// c0 + c1 t
struct Affine {
  Rational c0;
  Rational c1;

  Rational at(const Rational& t) const { return c0 + c1 * t; }
};

// A value of t, or the germ of the interval just to its right.
struct Probe {
  Rational t;
  bool right = false;
};

int sign_at(const Affine& f, const Probe& p) {
  const Rational v = f.at(p.t);
  if (v != 0) return sgn(v);
  return p.right ? sgn(f.c1) : 0;
}

struct Universe {
  const CurveBasis& basis;
  std::vector<NamedCurve> curves;
  std::vector<std::vector<Rational>> gram;

  explicit Universe(const CurveBasis& b) : basis(b), curves(b.generators()) {
    std::vector<DivisorClass> classes;
    for (const auto& c : curves) classes.push_back(c.cls);
    gram = gram_matrix(b.lattice(), classes);
  }
};

struct AffineDecomposition {
  std::vector<int> s;               // indices into the universe
  std::vector<Affine> lambda;       // coefficient of each curve of s
  DivisorClass p0;
  DivisorClass p1;
};

// Zariski decomposition of d0 + t d1 at the probe; all coefficients come out
// affine in t on the interval the probe describes.
AffineDecomposition decompose_affine(const Universe& u, const DivisorClass& d0,
                                     const DivisorClass& d1, const Probe& probe) {
  const auto& lattice = u.basis.lattice();
  const std::size_t n = u.curves.size();
  std::vector<Affine> dc(n);
  for (std::size_t i = 0; i < n; ++i) {
    dc[i] = {lattice.pair(d0, u.curves[i].cls), lattice.pair(d1, u.curves[i].cls)};
  }

  std::vector<int> s;
  std::vector<Affine> lambda;
  std::vector<char> in_s(n, 0);
  for (;;) {
    if (!s.empty()) {
      std::vector<std::vector<Rational>> g(s.size(), std::vector<Rational>(s.size()));
      std::vector<Rational> r0(s.size()), r1(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          g[i][j] = u.gram[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])];
        }
        r0[i] = dc[static_cast<std::size_t>(s[i])].c0;
        r1[i] = dc[static_cast<std::size_t>(s[i])].c1;
      }
      if (!is_negative_definite(g)) {
        throw Error(ErrorCode::NotPseudoeffective, "support of N is not negative definite");
      }
      auto l0 = solve(g, r0);
      auto l1 = solve(g, r1);
      lambda.assign(s.size(), {});
      for (std::size_t i = 0; i < s.size(); ++i) lambda[i] = {l0[i], l1[i]};
    }
    bool grew = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (in_s[c]) continue;
      Affine pc = dc[c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& gij = u.gram[static_cast<std::size_t>(s[i])][c];
        pc.c0 -= lambda[i].c0 * gij;
        pc.c1 -= lambda[i].c1 * gij;
      }
      if (sign_at(pc, probe) < 0) {
        in_s[c] = 1;
        grew = true;
      }
    }
    if (!grew) break;
    s.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (in_s[c]) s.push_back(static_cast<int>(c));
    }
  }
  for (const auto& l : lambda) {
    if (sign_at(l, probe) < 0) {
      throw Error(ErrorCode::NotPseudoeffective, "negative coefficient in N");
    }
  }

  AffineDecomposition out{s, lambda, d0, d1};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& cls = u.curves[static_cast<std::size_t>(s[i])].cls;
    out.p0 -= lambda[i].c0 * cls;
    out.p1 -= lambda[i].c1 * cls;
  }
  return out;
}

ZariskiPair evaluate(const Universe& u, const AffineDecomposition& a, const Rational& t) {
  ZariskiPair z{a.p0 + t * a.p1, {}};
  for (std::size_t i = 0; i < a.s.size(); ++i) {
    const Rational c = a.lambda[i].at(t);
    if (c != 0) z.negative[u.curves[static_cast<std::size_t>(a.s[i])].id] = c;
  }
  return z;
}

void require_npi_nef_big(const DivisorialValuation& val, const BigDivisor& d) {
  if (!is_npi(val)) throw Error(ErrorCode::NotNPI, "valuation is not non-positive at infinity");
  if (!is_big(d, val.surface.delta) || !is_nef(d)) {
    throw Error(ErrorCode::NotNefBig, "divisor must be big and nef");
  }
}

// Values of the curvettes and of the chain germs along the truncations nu_i.
struct ClosedFormData {
  std::vector<Rational> nu_r_phi;  // nu_r(phi_i), i = 1..r
  std::vector<Rational> nu_i_f;    // nu_i(phi_F1)
  std::vector<Rational> nu_i_m;    // nu_i(phi_M) for the distinguished section
};

ClosedFormData closed_form_data(const DivisorialValuation& val) {
  ClosedFormData out;
  const auto& config = val.config;
  const bool m_counts = val.special_point_on_m0() || val.kind == ValuationKind::NonSpecial;
  for (int i = 1; i <= val.r; ++i) {
    out.nu_r_phi.emplace_back(germ_value(val, curvette(config, i)));
    const auto mi = multiplicities(config, i);
    std::int64_t f = 0, m = 0;
    for (int j = 1; j <= i; ++j) {
      if (j <= config.f1_chain()) f += mi[static_cast<std::size_t>(j - 1)];
      if (m_counts && j <= config.m_chain()) m += mi[static_cast<std::size_t>(j - 1)];
    }
    out.nu_i_f.emplace_back(f);
    out.nu_i_m.emplace_back(m);
  }
  return out;
}

}  // namespace

ZariskiPair zariski_decompose(const DivisorClass& d, const CurveBasis& basis) {
  Universe u(basis);
  const auto a = decompose_affine(u, d, DivisorClass::zero(basis.rank()), Probe{0, false});
  return evaluate(u, a, 0);
}

Rational t_value(TCase c, const DivisorialValuation& val, const BigDivisor& d) {
  const Rational f(val.phi_f1), m(val.phi_m), B(val.beta_last());
  const Rational a(d.a), b(d.b);
  const int delta = val.surface.delta;
  const Rational th = theta(val, d);
  switch (c) {
    case TCase::T1:
    case TCase::T5:
      return b * B / f;
    case TCase::T2:
    case TCase::T6:
      return b * B / f + th;
    case TCase::T3:
      return a * B / m;
    case TCase::T4:
      return ((a + b * delta) * B - th * m) / (m + delta * f);
    case TCase::T7:
      return (a + b * delta) * B / m;
    case TCase::T8:
      return (a * B - m * th) / (m - delta * f);
  }
  return 0;
}

TValues t_values(const DivisorialValuation& val, const BigDivisor& d) {
  require_npi_nef_big(val, d);
  const bool nonneg = theta(val, d) >= 0;
  TValues out;
  if (val.kind == ValuationKind::Special) {
    out.first_case = nonneg ? TCase::T1 : TCase::T3;
    out.second_case = nonneg ? TCase::T2 : TCase::T4;
  } else {
    out.first_case = nonneg ? TCase::T5 : TCase::T7;
    out.second_case = nonneg ? TCase::T6 : TCase::T8;
  }
  out.first = t_value(out.first_case, val, d);
  out.second = t_value(out.second_case, val, d);
  const Rational mu = mu_hat(val, d);
  for (const auto* t : {&out.first, &out.second}) {
    if (*t < 0 || *t > mu) {
      throw Error(ErrorCode::VerificationFailed, "t-value " + to_string(*t) + " outside [0, mu_hat]");
    }
  }
  return out;
}

ZariskiPair closed_form_decomposition(TCase c, const DivisorialValuation& val,
                                      const BigDivisor& d) {
  require_npi_nef_big(val, d);
  const bool special = val.kind == ValuationKind::Special;
  const int ci = static_cast<int>(c);
  if (special != (ci <= 4)) {
    throw Error(ErrorCode::WrongSignCase, "case does not match the valuation type");
  }
  const Rational th = theta(val, d);
  const bool wants_nonneg = ci == 1 || ci == 2 || ci == 5 || ci == 6;
  if (wants_nonneg != (th >= 0)) {
    throw Error(ErrorCode::WrongSignCase, "case does not match the sign of theta");
  }

  const CurveBasis basis(val);
  const auto data = closed_form_data(val);
  const Rational f(val.phi_f1), m(val.phi_m), a(d.a), b(d.b);
  const int delta = val.surface.delta;
  const int r = val.r;
  std::map<CurveId, Rational> n;

  auto add = [&n](CurveId id, const Rational& v) {
    if (v != 0) n[id] = v;
  };
  auto along_e = [&](auto coefficient) {
    for (int i = 1; i < r; ++i) {
      const auto k = static_cast<std::size_t>(i - 1);
      add({CurveRole::E, i}, coefficient(data.nu_r_phi[k], data.nu_i_f[k], data.nu_i_m[k]));
    }
  };

  switch (c) {
    case TCase::T1:
    case TCase::T5:
      along_e([&](const Rational& phi, const Rational&, const Rational&) -> Rational {
        return b * phi / f;
      });
      break;
    case TCase::T2:
    case TCase::T6:
      add({CurveRole::F1, 0}, th / f);
      along_e([&](const Rational& phi, const Rational& nf, const Rational&) -> Rational {
        return (b * phi + th * nf) / f;
      });
      break;
    case TCase::T3:
      along_e([&](const Rational& phi, const Rational&, const Rational&) -> Rational {
        return a * phi / m;
      });
      break;
    case TCase::T4: {
      const Rational den = m + delta * f;
      add({CurveRole::M0, 0}, -th / den);
      along_e([&](const Rational& phi, const Rational&, const Rational& nm) -> Rational {
        return ((a + b * delta) * phi - th * nm) / den;
      });
      break;
    }
    case TCase::T7:
      along_e([&](const Rational& phi, const Rational&, const Rational&) -> Rational {
        return (a + b * delta) * phi / m;
      });
      break;
    case TCase::T8: {
      const Rational den = m - delta * f;
      add({CurveRole::M1, 0}, -th / den);
      along_e([&](const Rational& phi, const Rational&, const Rational& nm) -> Rational {
        return (a * phi - th * nm) / den;
      });
      break;
    }
  }

  ZariskiPair z{shifted_pullback(basis.lattice(), d, t_value(c, val, d)), std::move(n)};
  z.positive -= z.negative_class(basis);
  return z;
}

namespace {

void require_generic(const FlagValuation& flag, const BigDivisor& d) {
  if (!is_nef(d) && flag.base.special_point_on_m0() && flag.base.phi_m > 0) {
    throw Error(ErrorCode::GenericityViolation, "p lies on M0, which is in the support of D");
  }
}

AlphaBeta read_alpha_beta(const FlagValuation& flag, const CurveBasis& basis, const ZariskiPair& z) {
  const int r = flag.base.r;
  if (z.coefficient({CurveRole::E, r}) != 0) {
    throw Error(ErrorCode::NegativePartOnEr, "E_r entered the negative part");
  }
  AlphaBeta ab;
  ab.alpha = flag.eta ? z.coefficient({CurveRole::E, *flag.eta}) : Rational(0);
  ab.beta = ab.alpha + basis.lattice().pair(z.positive, basis.exceptional(r));
  return ab;
}

}  // namespace

AlphaBeta alpha_beta(const FlagValuation& flag, const BigDivisor& d, const Rational& t) {
  const CurveBasis basis(flag.base);
  const auto z = zariski_decompose(shifted_pullback(basis.lattice(), d, t), basis);
  return read_alpha_beta(flag, basis, z);
}

std::vector<SweepSample> sweep(const FlagValuation& flag, const BigDivisor& d) {
  require_generic(flag, d);
  const CurveBasis basis(flag.base);
  const Universe u(basis);
  const auto& lattice = basis.lattice();
  const int r = flag.base.r;
  const DivisorClass d0 = lattice.pullback(d.a, d.b);
  const DivisorClass d1 = Rational(-1) * lattice.exceptional(r);

  std::vector<SweepSample> samples;
  auto record = [&](const AffineDecomposition& a, const Rational& t, bool with_support) {
    const auto z = evaluate(u, a, t);
    const auto ab = read_alpha_beta(flag, basis, z);
    SweepSample s{t, ab.alpha, ab.beta, lattice.square(z.positive), {}};
    if (with_support) {
      for (std::size_t i = 0; i < a.s.size(); ++i) {
        if (sign_at(a.lambda[i], Probe{t, true}) > 0) {
          s.support.push_back(u.curves[static_cast<std::size_t>(a.s[i])].id);
        }
      }
    }
    samples.push_back(std::move(s));
  };

  Rational t = 0;
  if (!is_big(d, flag.base.surface.delta)) {
    throw Error(ErrorCode::NotBig, "divisor is not big");
  }
  const std::size_t max_events = 8 * (u.curves.size() + 2);
  for (std::size_t step = 0; step < max_events; ++step) {
    const auto a = decompose_affine(u, d0, d1, Probe{t, true});
    for (std::size_t i = 0; i < a.s.size(); ++i) {
      if (u.curves[static_cast<std::size_t>(a.s[i])].id == CurveId{CurveRole::E, r} &&
          sign_at(a.lambda[i], Probe{t, true}) > 0) {
        throw Error(ErrorCode::NegativePartOnEr, "E_r enters the negative part");
      }
    }
    record(a, t, true);

    std::optional<Rational> next;
    auto consider = [&](const Affine& f) {
      if (f.c1 >= 0) return;
      Rational root = -f.c0 / f.c1;
      if (root > t && (!next || root < *next)) next = root;
    };
    for (const auto& l : a.lambda) consider(l);
    std::vector<char> in_s(u.curves.size(), 0);
    for (int i : a.s) in_s[static_cast<std::size_t>(i)] = 1;
    for (std::size_t c = 0; c < u.curves.size(); ++c) {
      if (in_s[c]) continue;
      const auto& cls = u.curves[c].cls;
      consider(Affine{lattice.pair(a.p0, cls), lattice.pair(a.p1, cls)});
    }
    if (!next) {
      throw Error(ErrorCode::VerificationFailed, "sweep found no end of the big cone");
    }
    const Rational p_square = lattice.square(a.p0 + *next * a.p1);
    if (p_square < 0) {
      throw Error(ErrorCode::VerificationFailed, "positive part lost nefness inside an interval");
    }
    if (p_square == 0) {
      record(a, *next, false);
      return samples;
    }
    t = *next;
  }
  throw Error(ErrorCode::VerificationFailed, "sweep did not terminate");
}

}  // namespace npival
