#pragma once

#include <map>
#include <vector>

#include "npival/cluster.hpp"
#include "npival/lattice.hpp"
#include "npival/seshadri.hpp"

namespace npival {

struct ZariskiPair {
  DivisorClass positive;
  std::map<CurveId, Rational> negative;

  DivisorClass negative_class(const CurveBasis& basis) const;
  Rational coefficient(const CurveId& id) const;
};

// Decomposition of aF + bM on F_delta itself: P = p_a F + p_b M, N = n_m0 M0.
struct BaseDecomposition {
  Rational positive_a;
  Rational positive_b;
  Rational negative_m0;
  bool nef = true;
};

BaseDecomposition zariski_fano_base(const BigDivisor& d, int delta);

// Fujita iteration against the NPI generator list of the basis.
ZariskiPair zariski_decompose(const DivisorClass& d, const CurveBasis& basis);

// D* - t E_r*.
DivisorClass shifted_pullback(const PicardLattice& lattice, const BigDivisor& d, const Rational& t);

enum class TCase { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

struct TValues {
  TCase first_case;
  Rational first;
  TCase second_case;
  Rational second;
};

TValues t_values(const DivisorialValuation& val, const BigDivisor& d);
Rational t_value(TCase c, const DivisorialValuation& val, const BigDivisor& d);

ZariskiPair closed_form_decomposition(TCase c, const DivisorialValuation& val,
                                      const BigDivisor& d);

struct AlphaBeta {
  Rational alpha;
  Rational beta;
};

AlphaBeta alpha_beta(const FlagValuation& flag, const BigDivisor& d, const Rational& t);

struct SweepSample {
  Rational t;
  Rational alpha;
  Rational beta;
  Rational volume;
  std::vector<CurveId> support;  // support of N just to the right of t
};

// Follows the decomposition of D* - t E_r* from t = 0 to the end of the big
// cone, stopping at every t where the support of N or the set of curves
// orthogonal to P changes.
std::vector<SweepSample> sweep(const FlagValuation& flag, const BigDivisor& d);

}  // namespace npival
