#include "npival/okounkov.hpp"

#include <algorithm>
#include <array>

#include "npival/errors.hpp"
#include "npival/lattice.hpp"

namespace npival {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Polygon Polygon::hull(std::vector<Point> points) {
  auto less = [](const Point& p, const Point& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  for (auto& p : points) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polygon poly;
  if (points.size() <= 2) {
    poly.vertices_ = points;
  } else {
    // Monotone chain; strict turns only, so collinear points are dropped.
    std::vector<Point> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
      h[k++] = points[i];
    }
    h.resize(k - 1);
    poly.vertices_ = std::move(h);
  }

  const Point origin{0, 0};
  auto it = std::find(poly.vertices_.begin(), poly.vertices_.end(), origin);
  if (it != poly.vertices_.end()) std::rotate(poly.vertices_.begin(), it, poly.vertices_.end());
  return poly;
}

Rational Polygon::twice_area() const {
  Rational s = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool Polygon::contains(const Point& p) const {
  const std::size_t n = vertices_.size();
  if (n < 3) return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

bool Polygon::contains(const Polygon& other) const {
  return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                     [this](const Point& p) { return contains(p); });
}

Polygon Polygon::scaled(const Rational& c) const {
  std::vector<Point> pts;
  for (const auto& v : vertices_) pts.push_back({c * v.x, c * v.y});
  return hull(std::move(pts));
}

const Point& QPoints::at(int label) const {
  auto it = points.find(label);
  if (it == points.end()) {
    throw Error(ErrorCode::UndefinedQ, "Q" + std::to_string(label) + " is not defined here");
  }
  return it->second;
}

std::string to_string(BodyCase c) {
  switch (c) {
    case BodyCase::Minimal: return "minimal";
    case BodyCase::SatelliteAfter: return "satellite, r not preceding eta";
    case BodyCase::SatelliteBefore: return "satellite, r preceding eta";
    case BodyCase::Free: return "free";
    case BodyCase::ScaledFromM: return "scaled from M";
  }
  return "?";
}

ConeRays cone_rays(const FlagValuation& flag) {
  const Rational B(flag.base.beta_last());
  if (!flag.is_satellite()) return {{1, 0}, {B, 1}};
  const Rational v(germ_value(flag.base, curvette(flag.base.config, *flag.eta)));
  return {{B, v}, {B, v + 1}};
}

Polygon cone_triangle(const FlagValuation& flag, const BigDivisor& d) {
  const Rational mu = mu_hat(flag.base, d);
  const auto rays = cone_rays(flag);
  return Polygon::hull({{0, 0},
                        {mu, mu * rays.lower.y / rays.lower.x},
                        {mu, mu * rays.upper.y / rays.upper.x}});
}

FlagData flag_data(const FlagValuation& flag, const BigDivisor& d) {
  FlagData out;
  if (!flag.is_satellite()) return out;
  const auto& base = flag.base;
  const auto eta = eta_valuation(flag);
  if (!is_npi(eta)) {
    throw Error(ErrorCode::EtaNotNPI, "nu_" + std::to_string(*flag.eta) + " is not NPI");
  }
  const bool m_counts = base.special_point_on_m0() || base.kind == ValuationKind::NonSpecial;
  out.nu_r_phi_eta = germ_value(base, curvette(base.config, *flag.eta));
  out.eta_f1 = eta.phi_f1;
  out.eta_m = m_counts ? Rational(pair_values(m_germ(eta.config), eta.m)) : Rational(0);
  const int delta = base.surface.delta;
  if (base.kind == ValuationKind::Special) {
    out.eta_mu = (d.a + d.b * delta) * out.eta_f1 + d.b * out.eta_m;
  } else {
    out.eta_mu = d.a * out.eta_f1 + d.b * out.eta_m;
  }
  return out;
}

namespace {

void require_npi_big(const DivisorialValuation& val, const BigDivisor& d) {
  if (!is_npi(val)) throw Error(ErrorCode::NotNPI, "valuation is not non-positive at infinity");
  if (!is_big(d, val.surface.delta)) throw Error(ErrorCode::NotBig, "divisor is not big");
}

}  // namespace

QPoints q_points(const FlagValuation& flag, const BigDivisor& d) {
  const auto& val = flag.base;
  require_npi_big(val, d);
  if (!is_nef(d)) throw Error(ErrorCode::NotNefBig, "Q points need a nef divisor");
  if (is_minimal(val, d)) throw Error(ErrorCode::MinimalValuation, "valuation is minimal for D");

  const auto fd = flag_data(flag, d);
  const bool sat = flag.is_satellite();
  const Rational F(val.phi_f1), Mv(val.phi_m), B(val.beta_last()), a(d.a), b(d.b);
  const int delta = val.surface.delta;
  const Rational v = fd.nu_r_phi_eta;
  QPoints q;
  q.theta = theta(val, d);
  const Rational& th = q.theta;
  auto put = [&](int label, const Rational& x, const Rational& y) {
    q.points[label] = Point{x, sat ? y : Rational(0)};
  };
  auto above = [&](int label, int from, const Rational& dy) {
    const auto& p = q.points.at(from);
    q.points[label] = Point{p.x, p.y + dy};
  };

  if (val.kind == ValuationKind::Special) {
    if (th >= 0) {
      put(1, b * B / F, b * v / F);
      above(2, 1, b / F);
      put(3, b * B / F + th, (b * v + th * fd.eta_f1) / F);
      above(4, 3, b / F);
    }
    if (th <= 0 && Mv != 0) {
      put(5, a * B / Mv, a * v / Mv);
      above(6, 5, a / Mv);
      const Rational den = Mv + delta * F;
      put(7, ((a + b * delta) * B - th * Mv) / den, ((a + b * delta) * v - th * fd.eta_m) / den);
      above(8, 7, (a + b * delta) / den);
    }
    put(9, mu_hat(val, d), fd.eta_mu);
  } else {
    const Rational W = Mv - delta * F;
    if (th >= 0) {
      put(10, b * B / F, b * v / F);
      above(11, 10, b / F);
      put(12, b * B / F + th, (b * v + th * fd.eta_f1) / F);
      above(13, 12, b / F);
    }
    if (th <= 0) {
      put(14, (a + b * delta) * B / Mv, (a + b * delta) * v / Mv);
      above(15, 14, (a + b * delta) / Mv);
      put(16, (a * B - th * Mv) / W, (a * v - th * fd.eta_m) / W);
      above(17, 16, a / W);
    }
    put(18, mu_hat(val, d), fd.eta_mu);
  }
  return q;
}

namespace {

struct Selection {
  std::array<int, 2> listed;
  std::array<int, 2> unlisted;
  int last;
  BodyCase body_case;
};

Selection select(const FlagValuation& flag, const Rational& th) {
  const auto& val = flag.base;
  BodyCase bc = BodyCase::Free;
  bool lower = false;
  if (flag.is_satellite()) {
    const auto graph = dual_graph(CurveBasis(val));
    lower = !precedes(graph, val.r, *flag.eta);
    bc = lower ? BodyCase::SatelliteAfter : BodyCase::SatelliteBefore;
  }
  const int shift = val.kind == ValuationKind::Special ? 0 : 9;
  const int first = (th >= 0 ? 1 : 5) + shift;
  const std::array<int, 2> low{first, first + 2};
  const std::array<int, 2> high{first + 1, first + 3};
  return {lower ? low : high, lower ? high : low, 9 + shift, bc};
}

}  // namespace

bool eta_proportional(const FlagValuation& flag, const BigDivisor& d) {
  if (!flag.is_satellite()) return true;
  const auto& val = flag.base;
  const auto fd = flag_data(flag, d);
  const Rational scale = ratio(eta_valuation(flag).beta_bar[0], val.beta_bar[0]);
  const bool m_counts = val.special_point_on_m0() || val.kind == ValuationKind::NonSpecial;
  const Rational m(m_counts ? val.phi_m : 0);
  return fd.eta_f1 == scale * val.phi_f1 && fd.eta_m == scale * m;
}

Body newton_okounkov_body(const FlagValuation& flag, const BigDivisor& d) {
  const auto& val = flag.base;
  require_npi_big(val, d);
  const int delta = val.surface.delta;
  if (!is_nef(d)) {
    if (val.special_point_on_m0() && val.phi_m > 0) {
      throw Error(ErrorCode::GenericityViolation, "p lies on M0, which is in the support of D");
    }
    Body m_body = newton_okounkov_body(flag, BigDivisor{0, 1});
    const Rational c = Rational(d.b) + Rational(d.a) / delta;
    m_body.polygon = m_body.polygon.scaled(c);
    m_body.table_polygon = m_body.table_polygon.scaled(c);
    m_body.body_case = BodyCase::ScaledFromM;
    return m_body;
  }
  if (is_minimal(val, d)) {
    Body out;
    out.polygon = cone_triangle(flag, d);
    out.table_polygon = out.polygon;
    out.body_case = BodyCase::Minimal;
    return out;
  }
  const auto q = q_points(flag, d);
  const auto sel = select(flag, q.theta);
  Body out;
  std::vector<Point> all{{0, 0}};
  for (const auto& [label, p] : q.points) all.push_back(p);
  out.polygon = Polygon::hull(std::move(all));
  out.table_polygon =
      Polygon::hull({{0, 0}, q.at(sel.listed[0]), q.at(sel.listed[1]), q.at(sel.last)});
  out.body_case = sel.body_case;
  out.labels = {sel.listed[0], sel.listed[1], sel.last};
  out.predicted_quadrilateral = d.a != 0 && q.theta != 0;
  out.table_applies = eta_proportional(flag, d);
  return out;
}

std::vector<int> unlisted_labels(const FlagValuation& flag, const BigDivisor& d) {
  const auto q = q_points(flag, d);
  const auto sel = select(flag, q.theta);
  return {sel.unlisted[0], sel.unlisted[1]};
}

Polygon sweep_polygon(const std::vector<SweepSample>& samples) {
  std::vector<Point> pts;
  for (const auto& s : samples) {
    pts.push_back({s.t, s.alpha});
    pts.push_back({s.t, s.beta});
  }
  return Polygon::hull(std::move(pts));
}

bool VerificationReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

VerificationReport inspect_body(const FlagValuation& flag, const BigDivisor& d) {
  const auto& val = flag.base;
  const auto body = newton_okounkov_body(flag, d);
  VerificationReport report;

  const Rational vol = volume(d, val.surface.delta);
  const Rational twice = body.polygon.twice_area();
  report.clauses.push_back({"area", twice == vol, false,
                            "2*area = " + to_string(twice) + ", vol(D) = " + to_string(vol)});

  report.samples = sweep(flag, d);
  report.sweep_polygon = sweep_polygon(report.samples);
  report.clauses.push_back({"sweep", report.sweep_polygon == body.polygon, false,
                            std::to_string(report.samples.size()) + " breakpoints"});

  Clause table{"table", true, !body.table_applies, "eta values not proportional"};
  if (body.table_applies) {
    table.passed = body.table_polygon == body.polygon;
    table.detail = "table vertices (0,0)";
    for (int label : body.labels) table.detail += ", Q" + std::to_string(label);
  }
  report.clauses.push_back(table);

  const auto triangle = cone_triangle(flag, d);
  report.clauses.push_back({"cone", triangle.contains(body.polygon), false,
                            "body inside the cone triangle"});

  Clause identities{"identities", true, true, "not a satellite flag with r preceding eta"};
  if (flag.is_satellite() && precedes(dual_graph(CurveBasis(val)), val.r, *flag.eta)) {
    const auto eta = eta_valuation(flag);
    const int g = val.g();
    const Rational v(germ_value(val, curvette(val.config, *flag.eta)));
    const Rational B(val.beta_last());
    identities.vacuous = false;
    if (g < 0 || static_cast<std::size_t>(g) >= eta.beta_bar.size()) {
      identities.passed = false;
      identities.detail = "nu_eta has too few maximal contact values";
    } else {
      const Rational b0(val.beta_bar[0]), bg(val.beta_bar[static_cast<std::size_t>(g)]);
      const Rational e0(eta.beta_bar[0]), eg(eta.beta_bar[static_cast<std::size_t>(g)]);
      const bool first = v == B * e0 / b0;
      const bool second = v + 1 == B * eg / bg;
      identities.passed = first && second;
      identities.detail = "nu_r(phi_eta) = " + to_string(v);
    }
  }
  report.clauses.push_back(identities);
  return report;
}

VerificationReport verify_body(const FlagValuation& flag, const BigDivisor& d) {
  auto report = inspect_body(flag, d);
  for (const auto& c : report.clauses) {
    if (!c.passed) {
      throw Error(ErrorCode::VerificationFailed, c.name + ": " + c.detail);
    }
  }
  return report;
}

}  // namespace npival
