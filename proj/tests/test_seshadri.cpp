#include <doctest.h>

#include "corpus.hpp"
#include "npival/errors.hpp"
#include "npival/seshadri.hpp"

using namespace npival;

TEST_SUITE("seshadri") {

TEST_CASE("big and nef") {
  CHECK(is_big({0, 1}, 2));
  CHECK(is_big({-1, 1}, 2));
  CHECK_FALSE(is_big({-2, 1}, 2));
  CHECK_FALSE(is_big({0, 1}, 0));
  CHECK_FALSE(is_big({3, 0}, 1));
  CHECK(is_nef({0, 1}));
  CHECK_FALSE(is_nef({-1, 1}));
  CHECK(volume({1, 2}, 2) == 12);
  CHECK(volume({2, 5}, 2) == 70);
  CHECK(volume({-1, 2}, 1) == 1);  // P = M, N = M0
  CHECK_THROWS_AS(volume({-2, 1}, 1), Error);
}

TEST_CASE("worked examples") {
  const auto s = corpus::worked_special();
  CHECK(theta(s, {1, 2}) == -36);
  CHECK(mu_hat(s, {1, 2}) == 156);
  CHECK(never_minimal(s));
  CHECK_FALSE(is_minimal(s, {1, 2}));

  const auto n = corpus::worked_nonspecial();
  CHECK(theta(n, {2, 5}) == -45);
  CHECK(mu_hat(n, {2, 5}) == 255);
  CHECK(never_minimal(n));
  CHECK(mu_hat(n, {-1, 2}) == ratio(135, 2));

  const auto m = corpus::minimal_valuation();
  CHECK_FALSE(never_minimal(m));
  CHECK(mu_hat(m, {2, 1}) == 4);
  CHECK(is_minimal(m, {2, 1}));
  CHECK_FALSE(is_minimal(m, {1, 1}));
  const auto lb = lower_bound(m, {2, 1});
  CHECK(lb.mu_hat_squared == 16);
  CHECK(lb.volume_times_beta == 16);
}

TEST_CASE("argument checks") {
  const auto m = corpus::minimal_valuation();
  CHECK_THROWS_AS(mu_hat(m, {0, 0}), Error);
  std::mt19937_64 rng(1);
  for (;;) {
    const auto v = corpus::random_valuation(rng, 6);
    if (is_npi(v)) continue;
    try {
      mu_hat(v, {1, 1});
      FAIL("expected NotNPI");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotNPI);
    }
    break;
  }
}

TEST_CASE("random NPI valuations") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 150; ++k) {
    const auto v = corpus::random_npi_valuation(rng, 10);
    const auto d = corpus::random_nef_big(rng, v, 12);
    const auto lb = lower_bound(v, d);
    CHECK(lb.holds);
    CHECK(germ_value(v, mu_hat_witness(v, d)) == mu_hat(v, d));
    CHECK(mu_hat_bisection_check(v, d));
    CHECK_NOTHROW(is_minimal(v, d));
  }
}

}  // TEST_SUITE
