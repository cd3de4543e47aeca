#pragma once

#include <cstdint>

#include "npival/cluster.hpp"
#include "npival/rational.hpp"

namespace npival {

// The class aF + bM on F_delta.
struct BigDivisor {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

bool is_big(const BigDivisor& d, int delta);
bool is_nef(const BigDivisor& d);

// P_D^2.
Rational volume(const BigDivisor& d, int delta);

// theta_1 = a phi_F1 - b phi_M0 (special), theta_2 = a phi_F1 - b (phi_M1 - delta phi_F1).
Rational theta(const DivisorialValuation& val, const BigDivisor& d);

Rational mu_hat(const DivisorialValuation& val, const BigDivisor& d);

struct LowerBound {
  Rational mu_hat_squared;
  Rational volume_times_beta;
  bool holds = false;
};

LowerBound lower_bound(const DivisorialValuation& val, const BigDivisor& d);

bool is_minimal(const DivisorialValuation& val, const BigDivisor& d);
bool never_minimal(const DivisorialValuation& val);

bool mu_hat_bisection_check(const DivisorialValuation& val, const BigDivisor& d);

// Germ of the curve (a + delta b) F1 + b M0, or a F1 + b M1, whose value is mu_hat.
GermVector mu_hat_witness(const DivisorialValuation& val, const BigDivisor& d);

}  // namespace npival
