#pragma once

// Configurations of infinitely near points over a Hirzebruch surface and the
// divisorial valuations they define. Points are indexed 1..r throughout.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace npival {

enum class PointKind { Special, General };

struct Surface {
  int delta = 0;
  PointKind point_kind = PointKind::Special;
};

// Throws InvalidInput for delta < 0 or a general point on F_0.
Surface make_surface(int delta, PointKind kind);

struct PointRecord {
  int index = 0;
  std::optional<int> parent;
  std::optional<int> extra_proximity;
  bool on_f1 = false;
  bool on_m = false;

  bool operator==(const PointRecord&) const = default;
};

class Configuration {
 public:
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<PointRecord>& points() const { return points_; }
  const PointRecord& point(int i) const { return points_.at(static_cast<std::size_t>(i - 1)); }

  bool is_satellite(int i) const { return point(i).extra_proximity.has_value(); }
  std::optional<int> extra(int i) const { return point(i).extra_proximity; }

  // p_i -> p_j
  bool is_proximate(int i, int j) const;

  // Length k of the initial segment {1..k} lying on F1 (resp. on M).
  int f1_chain() const { return f1_chain_; }
  int m_chain() const { return m_chain_; }

  // The configuration {p_1, ..., p_n}.
  Configuration truncated(int n) const;

 private:
  friend Configuration build_configuration(std::span<const PointRecord> records);

  std::vector<PointRecord> points_;
  int f1_chain_ = 0;
  int m_chain_ = 0;
};

// Validates every record and reports all violations at once through the
// diagnostics of the thrown Error (ChainBroken, BadSatellite or BadIncidence,
// whichever occurs first).
Configuration build_configuration(std::span<const PointRecord> records);

using Multiplicities = std::vector<std::int64_t>;

// m_i = nu_r(m_i) for i <= r: m_r = 1 and the proximity equalities.
Multiplicities multiplicities(const Configuration& config, int r);

struct GermVector {
  std::vector<std::int64_t> mult;

  GermVector operator+(const GermVector& other) const;
  bool operator==(const GermVector&) const = default;
};

bool satisfies_proximity(const Configuration& config, const GermVector& germ);

// The curvette of E_i: a smooth branch whose last point in the cluster is p_i,
// padded with zeros to the size of the configuration.
GermVector curvette(const Configuration& config, int i);

GermVector f1_germ(const Configuration& config);
GermVector m_germ(const Configuration& config);

std::int64_t pair_values(const GermVector& germ, const Multiplicities& m);

// beta_bar_0 < ... < beta_bar_g are the minimal generators of the value
// semigroup, followed by beta_bar_{g+1} = sum of m_i^2.
std::vector<std::int64_t> maximal_contact_values(const Configuration& config,
                                                 const Multiplicities& m);

inline constexpr std::int64_t kSemigroupBound = std::int64_t{1} << 26;

// Rebuilds the configuration from the maximal contact values. The incidence
// chains on F1 and M are not encoded in beta_bar and are supplied separately.
Configuration from_maximal_contact(std::span<const std::int64_t> beta_bar, int f1_chain,
                                   int m_chain);

// Configuration with the given multiplicity vector (proximities are forced by it).
Configuration configuration_from_multiplicities(const Multiplicities& m, int f1_chain,
                                                int m_chain);

enum class ValuationKind { Special, NonSpecial };

ValuationKind classify(const Surface& surface, const Configuration& config);

struct DivisorialValuation {
  Surface surface;
  Configuration config;
  int r = 0;
  Multiplicities m;
  std::vector<std::int64_t> beta_bar;
  ValuationKind kind = ValuationKind::Special;
  std::int64_t phi_f1 = 0;
  std::int64_t phi_m = 0;

  int g() const { return static_cast<int>(beta_bar.size()) - 2; }
  std::int64_t beta_last() const { return beta_bar.back(); }
  bool special_point_on_m0() const;
};

DivisorialValuation make_valuation(const Surface& surface, const Configuration& config);

std::int64_t germ_value(const DivisorialValuation& val, const GermVector& germ);

// 2 phi_M phi_F1 +/- delta phi_F1^2, to be compared with beta_bar_{g+1}.
std::int64_t npi_quantity(const DivisorialValuation& val);
bool is_npi(const DivisorialValuation& val);

struct FlagValuation {
  DivisorialValuation base;
  std::optional<int> eta;
  std::optional<DivisorialValuation> eta_val;

  bool is_satellite() const { return eta.has_value(); }
};

// eta = nullopt gives a free flag point. A satellite point must sit on
// E_eta meeting E_r, so eta is a neighbour of r in the dual graph.
FlagValuation make_flag(const DivisorialValuation& base, std::optional<int> eta);

DivisorialValuation eta_valuation(const FlagValuation& flag);

}  // namespace npival
