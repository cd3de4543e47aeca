#include <doctest.h>

#include "corpus.hpp"
#include "npival/errors.hpp"
#include "npival/zariski.hpp"

using namespace npival;

namespace {

// P nef against the generators, P.C = 0 on the support, support negative
// definite and every coefficient positive.
void check_sound(const ZariskiPair& z, const CurveBasis& basis) {
  const auto& l = basis.lattice();
  CHECK(is_nef_against(z.positive, basis));
  std::vector<DivisorClass> support;
  for (const auto& [id, c] : z.negative) {
    CHECK(c > 0);
    CHECK(l.pair(z.positive, basis.get(id)) == 0);
    support.push_back(basis.get(id));
  }
  if (!support.empty()) CHECK(is_negative_definite(l, support));
}

}  // namespace

TEST_SUITE("zariski") {

TEST_CASE("base surface") {
  const auto nef = zariski_fano_base({2, 3}, 1);
  CHECK(nef.nef);
  CHECK(nef.negative_m0 == 0);
  const auto big = zariski_fano_base({-1, 3}, 2);
  CHECK_FALSE(big.nef);
  CHECK(big.positive_b == ratio(5, 2));
  CHECK(big.negative_m0 == ratio(1, 2));
  CHECK_THROWS_AS(zariski_fano_base({-1, 1}, 0), Error);
  CHECK_THROWS_AS(zariski_fano_base({1, -1}, 1), Error);
}

TEST_CASE("t-values of the worked examples") {
  const auto s = corpus::worked_special();
  const auto ts = t_values(s, {1, 2});
  CHECK(ts.first_case == TCase::T3);
  CHECK(ts.first == ratio(612, 28));
  CHECK(ts.second_case == TCase::T4);
  CHECK(ts.second == ratio(4068, 68));

  const auto n = corpus::worked_nonspecial();
  const auto tn = t_values(n, {2, 5});
  CHECK(tn.first_case == TCase::T7);
  CHECK(tn.first == ratio(9432, 45));
  CHECK(tn.second_case == TCase::T8);
  CHECK(tn.second == ratio(3597, 15));

  CHECK_THROWS_AS(closed_form_decomposition(TCase::T1, s, {1, 2}), Error);
  CHECK_THROWS_AS(closed_form_decomposition(TCase::T7, s, {1, 2}), Error);
}

TEST_CASE("closed forms agree with the Fujita iteration") {
  for (const auto& [v, d] : {std::pair{corpus::worked_special(), BigDivisor{1, 2}},
                             std::pair{corpus::worked_nonspecial(), BigDivisor{2, 5}}}) {
    const CurveBasis basis(v);
    const auto ts = t_values(v, d);
    for (auto [c, t] : {std::pair{ts.first_case, ts.first}, std::pair{ts.second_case, ts.second}}) {
      const auto closed = closed_form_decomposition(c, v, d);
      const auto direct = zariski_decompose(shifted_pullback(basis.lattice(), d, t), basis);
      CHECK(closed.positive == direct.positive);
      CHECK(closed.negative == direct.negative);
      check_sound(closed, basis);
    }
  }
}

TEST_CASE("sweep of the special example") {
  const auto flag = make_flag(corpus::worked_special(), 8);
  const auto samples = sweep(flag, {1, 2});
  REQUIRE(samples.size() >= 3);
  CHECK(samples.front().t == 0);
  CHECK(samples.front().volume == 12);
  CHECK(samples.back().t == 156);
  CHECK(samples.back().volume == 0);
  CHECK(samples.back().alpha == 39);
  CHECK(samples.back().beta == 39);
  bool saw_first = false;
  for (const auto& s : samples) {
    if (s.t == ratio(612, 28)) {
      saw_first = true;
      CHECK(s.alpha == ratio(152, 28));
    }
  }
  CHECK(saw_first);
}

TEST_CASE("soundness over the random corpus") {
  const auto cases = corpus::npi_corpus(2024, 60, 10, 20);
  for (const auto& [flag, d] : cases) {
    const auto& v = flag.base;
    const CurveBasis basis(v);
    const auto ts = t_values(v, d);
    CHECK(ts.first <= ts.second);
    for (auto [c, t] : {std::pair{ts.first_case, ts.first}, std::pair{ts.second_case, ts.second}}) {
      const auto closed = closed_form_decomposition(c, v, d);
      const auto d_t = shifted_pullback(basis.lattice(), d, t);
      CHECK(closed.positive + closed.negative_class(basis) == d_t);
      check_sound(closed, basis);
      const auto direct = zariski_decompose(d_t, basis);
      CHECK(closed.positive == direct.positive);
    }
    const auto samples = sweep(flag, d);
    CHECK(samples.back().t == mu_hat(v, d));
    for (std::size_t i = 1; i < samples.size(); ++i) {
      CHECK(samples[i - 1].t < samples[i].t);
      CHECK(samples[i - 1].volume > samples[i].volume);
      CHECK(samples[i - 1].alpha <= samples[i].alpha);
      CHECK(samples[i].alpha <= samples[i].beta);
    }
    // Spot check a midpoint of every interval against a fresh decomposition.
    for (std::size_t i = 1; i < samples.size(); ++i) {
      const Rational t = (samples[i - 1].t + samples[i].t) / 2;
      const auto z = zariski_decompose(shifted_pullback(basis.lattice(), d, t), basis);
      check_sound(z, basis);
    }
  }
}

}  // TEST_SUITE
