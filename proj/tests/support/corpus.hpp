#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "npival/cluster.hpp"
#include "npival/seshadri.hpp"

namespace corpus {

using npival::BigDivisor;
using npival::Configuration;
using npival::DivisorialValuation;
using npival::FlagValuation;
using npival::Surface;

Configuration worked_special_config();
Configuration worked_nonspecial_config();
Configuration minimal_config();

DivisorialValuation worked_special();
DivisorialValuation worked_nonspecial();
DivisorialValuation minimal_valuation();

// Random valid configuration with r points; chains are initial free segments.
Configuration random_configuration(std::mt19937_64& rng, int r, int f1_chain, int m_chain,
                                   double satellite_probability);

// Random configuration and surface, not necessarily NPI.
DivisorialValuation random_valuation(std::mt19937_64& rng, int max_points);

// Rejection-samples until the valuation is NPI.
DivisorialValuation random_npi_valuation(std::mt19937_64& rng, int max_points);

BigDivisor random_nef_big(std::mt19937_64& rng, const DivisorialValuation& val, int max_coeff);

// Flag positions available over the valuation: free, r-1 and extra(r).
std::vector<std::optional<int>> flag_choices(const DivisorialValuation& val);

struct Case {
  FlagValuation flag;
  BigDivisor divisor;
};

// The fixed-seed corpus shared by the property suites and the acceptance run:
// NPI valuations with at most max_points points, every flag choice, and
// nef big divisors with coefficients up to max_coeff.
std::vector<Case> npi_corpus(std::uint64_t seed, int valuations, int max_points, int max_coeff);

// Values x.m < bound over all germ vectors on the configuration.
std::set<std::int64_t> brute_force_values(const Configuration& config,
                                          const std::vector<std::int64_t>& m, std::int64_t bound);

// Elements below bound of the monoid generated by gens.
std::set<std::int64_t> monoid_below(const std::vector<std::int64_t>& gens, std::int64_t bound);

}  // namespace corpus
