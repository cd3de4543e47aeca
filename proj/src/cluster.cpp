#include "npival/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "npival/errors.hpp"

namespace npival {

namespace {

std::string point_name(int i) { return "p" + std::to_string(i); }

}  // namespace

Surface make_surface(int delta, PointKind kind) {
  if (delta < 0) {
    throw Error(ErrorCode::InvalidInput, "delta must be non-negative");
  }
  if (delta == 0 && kind == PointKind::General) {
    throw Error(ErrorCode::InvalidInput, "on F_0 every point is special");
  }
  return Surface{delta, kind};
}

bool Configuration::is_proximate(int i, int j) const {
  if (i < 1 || i > size() || j < 1 || j >= i) return false;
  return j == i - 1 || extra(i) == j;
}

Configuration Configuration::truncated(int n) const {
  if (n < 1 || n > size()) {
    throw Error(ErrorCode::InvalidInput, "truncation index out of range");
  }
  std::vector<PointRecord> records(points_.begin(), points_.begin() + n);
  return build_configuration(records);
}

Configuration build_configuration(std::span<const PointRecord> records) {
  if (records.empty()) {
    throw Error(ErrorCode::InvalidInput, "a configuration needs at least one point");
  }
  std::vector<std::string> chain, satellite, incidence;
  const int r = static_cast<int>(records.size());

  for (int i = 1; i <= r; ++i) {
    const PointRecord& p = records[static_cast<std::size_t>(i - 1)];
    if (p.index != i) {
      chain.push_back("record " + std::to_string(i) + " has index " + std::to_string(p.index));
    }
    if (i == 1 && p.parent) {
      chain.push_back("p1 has a parent");
    }
    if (i > 1 && p.parent != i - 1) {
      chain.push_back(point_name(i) + " must have parent " + std::to_string(i - 1));
    }
    if (p.extra_proximity) {
      const int j = *p.extra_proximity;
      std::optional<int> previous =
          i >= 2 ? records[static_cast<std::size_t>(i - 2)].extra_proximity : std::nullopt;
      if (i < 3) {
        satellite.push_back(point_name(i) + " cannot be satellite");
      } else if (j != i - 2 && previous != j) {
        satellite.push_back(point_name(i) + " cannot be proximate to " + point_name(j));
      }
    }
  }

  auto chain_length = [&](bool PointRecord::*flag, const char* name) {
    int k = 0;
    while (k < r && records[static_cast<std::size_t>(k)].*flag) ++k;
    for (int i = k + 1; i <= r; ++i) {
      if (records[static_cast<std::size_t>(i - 1)].*flag) {
        incidence.push_back(std::string(name) + " points do not form an initial segment");
        break;
      }
    }
    for (int i = 2; i <= k; ++i) {
      if (records[static_cast<std::size_t>(i - 1)].extra_proximity) {
        incidence.push_back(point_name(i) + " on " + name + " is satellite");
      }
    }
    return k;
  };
  const int kf = chain_length(&PointRecord::on_f1, "F1");
  const int km = chain_length(&PointRecord::on_m, "M");
  if (kf == 0) incidence.push_back("p1 must lie on F1");
  if (kf >= 2 && km >= 2) incidence.push_back("F1 and M share a point beyond p1");

  std::vector<std::string> all;
  all.insert(all.end(), chain.begin(), chain.end());
  all.insert(all.end(), satellite.begin(), satellite.end());
  all.insert(all.end(), incidence.begin(), incidence.end());
  if (!chain.empty()) throw Error(ErrorCode::ChainBroken, chain.front(), all);
  if (!satellite.empty()) throw Error(ErrorCode::BadSatellite, satellite.front(), all);
  if (!incidence.empty()) throw Error(ErrorCode::BadIncidence, incidence.front(), all);

  Configuration c;
  c.points_.assign(records.begin(), records.end());
  c.f1_chain_ = kf;
  c.m_chain_ = km;
  return c;
}

Multiplicities multiplicities(const Configuration& config, int r) {
  if (r < 1 || r > config.size()) {
    throw Error(ErrorCode::InvalidInput, "valuation index out of range");
  }
  Multiplicities m(static_cast<std::size_t>(r), 0);
  m[static_cast<std::size_t>(r - 1)] = 1;
  for (int j = r; j >= 2; --j) {
    const auto mj = m[static_cast<std::size_t>(j - 1)];
    m[static_cast<std::size_t>(j - 2)] += mj;
    if (auto e = config.extra(j)) m[static_cast<std::size_t>(*e - 1)] += mj;
  }
  return m;
}

GermVector GermVector::operator+(const GermVector& other) const {
  if (mult.size() != other.mult.size()) {
    throw Error(ErrorCode::DimensionMismatch, "germ vectors of different length");
  }
  GermVector s = *this;
  for (std::size_t i = 0; i < mult.size(); ++i) s.mult[i] += other.mult[i];
  return s;
}

bool satisfies_proximity(const Configuration& config, const GermVector& germ) {
  const int n = static_cast<int>(germ.mult.size());
  if (n > config.size()) return false;
  std::vector<std::int64_t> load(static_cast<std::size_t>(n), 0);
  for (int j = 2; j <= n; ++j) {
    const auto x = germ.mult[static_cast<std::size_t>(j - 1)];
    load[static_cast<std::size_t>(j - 2)] += x;
    if (auto e = config.extra(j)) load[static_cast<std::size_t>(*e - 1)] += x;
  }
  for (int i = 0; i < n; ++i) {
    if (germ.mult[static_cast<std::size_t>(i)] < 0) return false;
    if (germ.mult[static_cast<std::size_t>(i)] < load[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

GermVector curvette(const Configuration& config, int i) {
  GermVector g{multiplicities(config, i)};
  g.mult.resize(static_cast<std::size_t>(config.size()), 0);
  return g;
}

namespace {

GermVector chain_germ(const Configuration& config, int k) {
  GermVector g{std::vector<std::int64_t>(static_cast<std::size_t>(config.size()), 0)};
  for (int i = 0; i < k; ++i) g.mult[static_cast<std::size_t>(i)] = 1;
  return g;
}

}  // namespace

GermVector f1_germ(const Configuration& config) { return chain_germ(config, config.f1_chain()); }
GermVector m_germ(const Configuration& config) { return chain_germ(config, config.m_chain()); }

std::int64_t pair_values(const GermVector& germ, const Multiplicities& m) {
  if (germ.mult.size() != m.size()) {
    throw Error(ErrorCode::DimensionMismatch, "germ and valuation have different lengths");
  }
  std::int64_t v = 0;
  for (std::size_t i = 0; i < m.size(); ++i) v += germ.mult[i] * m[i];
  return v;
}

std::vector<std::int64_t> maximal_contact_values(const Configuration& config,
                                                 const Multiplicities& m) {
  if (static_cast<int>(m.size()) != config.size()) {
    throw Error(ErrorCode::DimensionMismatch, "multiplicities do not match the configuration");
  }
  std::int64_t bound = 0;
  for (auto x : m) bound += x * x;
  if (bound > kSemigroupBound) {
    throw Error(ErrorCode::SemigroupOverflow, "sum of squared multiplicities is too large");
  }

  // Germ vectors are the non-negative integral combinations of curvettes, so
  // the curvette values generate the semigroup.
  std::vector<std::int64_t> candidates;
  for (int i = 1; i <= config.size(); ++i) {
    const auto v = pair_values(curvette(config, i), m);
    if (v > bound) throw Error(ErrorCode::SemigroupOverflow, "curvette value beyond bound");
    candidates.push_back(v);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<char> reachable(static_cast<std::size_t>(bound) + 1, 0);
  reachable[0] = 1;
  std::vector<std::int64_t> gens;
  for (auto c : candidates) {
    if (reachable[static_cast<std::size_t>(c)]) continue;
    gens.push_back(c);
    for (std::int64_t v = c; v <= bound; ++v) {
      if (reachable[static_cast<std::size_t>(v - c)]) reachable[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::int64_t e = 0;
  for (auto x : gens) e = std::gcd(e, x);
  if (e != 1) throw Error(ErrorCode::NotRealizable, "semigroup generators are not coprime");
  gens.push_back(bound);
  return gens;
}

Configuration configuration_from_multiplicities(const Multiplicities& m, int f1_chain,
                                                int m_chain) {
  const int r = static_cast<int>(m.size());
  if (r == 0 || m.back() != 1) {
    throw Error(ErrorCode::NotRealizable, "last multiplicity must be 1");
  }
  std::vector<PointRecord> records(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    auto& p = records[static_cast<std::size_t>(i - 1)];
    p.index = i;
    if (i > 1) p.parent = i - 1;
    p.on_f1 = i <= f1_chain;
    p.on_m = i <= m_chain;
  }
  for (int i = 1; i < r; ++i) {
    std::int64_t sum = 0;
    int j = i + 1;
    while (j <= r && sum < m[static_cast<std::size_t>(i - 1)]) {
      sum += m[static_cast<std::size_t>(j - 1)];
      if (j >= i + 2) {
        auto& p = records[static_cast<std::size_t>(j - 1)];
        if (p.extra_proximity) {
          throw Error(ErrorCode::NotRealizable,
                      point_name(j) + " would be proximate to three points");
        }
        p.extra_proximity = i;
      }
      ++j;
    }
    if (sum != m[static_cast<std::size_t>(i - 1)]) {
      throw Error(ErrorCode::NotRealizable,
                  "proximity equality fails at " + point_name(i));
    }
  }
  Configuration c = build_configuration(records);
  if (multiplicities(c, r) != m) {
    throw Error(ErrorCode::NotRealizable, "multiplicity vector does not round-trip");
  }
  return c;
}

namespace {

// Appends the multiplicities produced by the Euclidean algorithm on (a, b).
void euclid_multiplicities(std::int64_t a, std::int64_t b, Multiplicities& out) {
  while (b != 0) {
    const auto q = a / b;
    for (std::int64_t k = 0; k < q; ++k) out.push_back(b);
    const auto rem = a % b;
    a = b;
    b = rem;
  }
}

}  // namespace

Configuration from_maximal_contact(std::span<const std::int64_t> beta_bar, int f1_chain,
                                   int m_chain) {
  const int n = static_cast<int>(beta_bar.size());
  if (n < 2) throw Error(ErrorCode::NotRealizable, "need at least beta_bar_0 and beta_bar_{g+1}");
  for (int j = 0; j < n; ++j) {
    if (beta_bar[static_cast<std::size_t>(j)] <= 0) {
      throw Error(ErrorCode::NotRealizable, "maximal contact values must be positive");
    }
    // beta_bar_{g+1} may equal beta_bar_g only for the single point {1, 1}.
    const auto prev = j > 0 ? beta_bar[static_cast<std::size_t>(j - 1)] : 0;
    const auto cur = beta_bar[static_cast<std::size_t>(j)];
    if (j > 0 && (cur < prev || (cur == prev && j < n - 1))) {
      throw Error(ErrorCode::NotRealizable, "maximal contact values must increase");
    }
  }
  const int g = n - 2;
  const auto last = beta_bar[static_cast<std::size_t>(g + 1)];
  Multiplicities m;

  if (g == 0) {
    if (beta_bar[0] != 1) throw Error(ErrorCode::NotRealizable, "g = 0 requires beta_bar_0 = 1");
    if (last > kSemigroupBound) throw Error(ErrorCode::SemigroupOverflow, "too many points");
    m.assign(static_cast<std::size_t>(last), 1);
  } else {
    std::vector<std::int64_t> e(static_cast<std::size_t>(g + 1));
    e[0] = beta_bar[0];
    for (int j = 1; j <= g; ++j) {
      e[static_cast<std::size_t>(j)] =
          std::gcd(e[static_cast<std::size_t>(j - 1)], beta_bar[static_cast<std::size_t>(j)]);
      if (e[static_cast<std::size_t>(j)] >= e[static_cast<std::size_t>(j - 1)]) {
        throw Error(ErrorCode::NotRealizable, "gcd sequence is not strictly decreasing");
      }
    }
    if (e[static_cast<std::size_t>(g)] != 1) {
      throw Error(ErrorCode::NotRealizable, "maximal contact values are not coprime");
    }
    // Characteristic exponents beta_j from the maximal contact values.
    std::vector<std::int64_t> beta(static_cast<std::size_t>(g + 1));
    beta[0] = beta_bar[0];
    beta[1] = beta_bar[1];
    for (int j = 1; j < g; ++j) {
      const auto nj = e[static_cast<std::size_t>(j - 1)] / e[static_cast<std::size_t>(j)];
      beta[static_cast<std::size_t>(j + 1)] = beta_bar[static_cast<std::size_t>(j + 1)] -
                                              nj * beta_bar[static_cast<std::size_t>(j)] +
                                              beta[static_cast<std::size_t>(j)];
      if (beta[static_cast<std::size_t>(j + 1)] <= beta[static_cast<std::size_t>(j)]) {
        throw Error(ErrorCode::NotRealizable, "characteristic exponents do not increase");
      }
    }
    euclid_multiplicities(beta[1], beta[0], m);
    for (int j = 2; j <= g; ++j) {
      euclid_multiplicities(beta[static_cast<std::size_t>(j)] - beta[static_cast<std::size_t>(j - 1)],
                            e[static_cast<std::size_t>(j - 1)], m);
    }
    const auto trailing = last - e[static_cast<std::size_t>(g - 1)] * beta_bar[static_cast<std::size_t>(g)];
    if (trailing < 0) throw Error(ErrorCode::NotRealizable, "beta_bar_{g+1} is too small");
    if (trailing > kSemigroupBound) throw Error(ErrorCode::SemigroupOverflow, "too many points");
    m.insert(m.end(), static_cast<std::size_t>(trailing), 1);
  }

  Configuration c = configuration_from_multiplicities(m, f1_chain, m_chain);
  const auto back = maximal_contact_values(c, multiplicities(c, c.size()));
  if (!std::equal(back.begin(), back.end(), beta_bar.begin(), beta_bar.end())) {
    throw Error(ErrorCode::NotRealizable, "maximal contact values do not round-trip");
  }
  return c;
}

ValuationKind classify(const Surface& surface, const Configuration& config) {
  if (surface.delta == 0 || surface.point_kind == PointKind::Special) {
    return ValuationKind::Special;
  }
  return config.m_chain() > surface.delta ? ValuationKind::NonSpecial : ValuationKind::Special;
}

bool DivisorialValuation::special_point_on_m0() const {
  return surface.delta == 0 || surface.point_kind == PointKind::Special;
}

DivisorialValuation make_valuation(const Surface& surface, const Configuration& config) {
  make_surface(surface.delta, surface.point_kind);
  if ((surface.delta == 0 || surface.point_kind == PointKind::Special) && config.m_chain() == 0) {
    throw Error(ErrorCode::BadIncidence, "p1 must lie on M0 for a special point");
  }
  DivisorialValuation v;
  v.surface = surface;
  v.config = config;
  v.r = config.size();
  v.m = multiplicities(config, v.r);
  v.beta_bar = maximal_contact_values(config, v.m);
  v.kind = classify(surface, config);
  v.phi_f1 = pair_values(f1_germ(config), v.m);
  // A general point is off M0; the declared M chain then only matters when it
  // is the negative curve M1.
  const bool m_counts = v.special_point_on_m0() || v.kind == ValuationKind::NonSpecial;
  v.phi_m = m_counts ? pair_values(m_germ(config), v.m) : 0;
  return v;
}

std::int64_t germ_value(const DivisorialValuation& val, const GermVector& germ) {
  return pair_values(germ, val.m);
}

std::int64_t npi_quantity(const DivisorialValuation& val) {
  const auto f = val.phi_f1;
  const auto cross = 2 * val.phi_m * f;
  const auto square = static_cast<std::int64_t>(val.surface.delta) * f * f;
  return val.kind == ValuationKind::Special ? cross + square : cross - square;
}

bool is_npi(const DivisorialValuation& val) { return npi_quantity(val) >= val.beta_last(); }

FlagValuation make_flag(const DivisorialValuation& base, std::optional<int> eta) {
  FlagValuation flag{base, eta, std::nullopt};
  if (!eta) return flag;
  const int r = base.r;
  if (*eta < 1 || *eta >= r || !base.config.is_proximate(r, *eta)) {
    throw Error(ErrorCode::BadFlag,
                "E_" + std::to_string(*eta) + " does not meet E_" + std::to_string(r));
  }
  flag.eta_val = make_valuation(base.surface, base.config.truncated(*eta));
  return flag;
}

DivisorialValuation eta_valuation(const FlagValuation& flag) {
  if (!flag.eta_val) throw Error(ErrorCode::NotSatellite, "flag point is free");
  return *flag.eta_val;
}

}  // namespace npival
