#include <doctest.h>

#include "corpus.hpp"
#include "npival/errors.hpp"
#include "npival/lattice.hpp"

using namespace npival;

TEST_SUITE("lattice") {

TEST_CASE("intersection form") {
  const PicardLattice l(3, 2);
  CHECK(l.square(l.fiber()) == 0);
  CHECK(l.pair(l.fiber(), l.section()) == 1);
  CHECK(l.square(l.section()) == 3);
  CHECK(l.square(l.exceptional(1)) == -1);
  CHECK(l.pair(l.exceptional(1), l.exceptional(2)) == 0);
  CHECK(l.pair(l.pullback(2, 1), l.exceptional(2)) == 0);
  // M0 = M - delta F has self-intersection -delta.
  CHECK(l.square(l.section() - Rational(3) * l.fiber()) == -3);
}

TEST_CASE("strict transforms of the special example") {
  const auto v = corpus::worked_special();
  const CurveBasis basis(v);
  const auto& l = basis.lattice();
  CHECK(l.square(basis.f1()) == -1);
  CHECK(l.square(basis.m0()) == -4);
  CHECK(l.square(basis.exceptional(12)) == -1);
  CHECK(l.square(basis.exceptional(8)) == -5);
  CHECK(l.square(basis.exceptional(1)) == -4);
  CHECK(l.pair(basis.f1(), basis.exceptional(1)) == 1);
  CHECK(l.pair(basis.m0(), basis.exceptional(2)) == 1);
  CHECK(basis.generators().size() == 14);
  CHECK_THROWS_AS(basis.m1(), Error);
}

TEST_CASE("strict transforms of the non-special example") {
  const auto v = corpus::worked_nonspecial();
  const CurveBasis basis(v);
  const auto& l = basis.lattice();
  CHECK(l.square(basis.m1()) == -1);
  CHECK(l.square(basis.m0()) == -2);
  CHECK(l.pair(basis.m0(), basis.m1()) == 0);
  CHECK(basis.generators().size() == 15);
}

TEST_CASE("dual graph") {
  const CurveBasis basis(corpus::worked_special());
  const auto g = dual_graph(basis);
  CHECK(g.edges().size() == 11);
  CHECK(g.adjacent(12, 8));
  CHECK(g.adjacent(4, 1));
  CHECK(g.adjacent(12, 11));
  CHECK_FALSE(g.adjacent(12, 10));
  CHECK(precedes(g, 1, 12));
  CHECK(precedes(g, 8, 12));
  CHECK_FALSE(precedes(g, 12, 8));
  CHECK(precedes(g, 12, 12));
}

TEST_CASE("negative definiteness and solving") {
  const PicardLattice l(0, 2);
  std::vector<DivisorClass> es{l.exceptional(1) - l.exceptional(2), l.exceptional(2)};
  CHECK(is_negative_definite(l, es));
  std::vector<DivisorClass> bad{l.fiber()};
  CHECK_FALSE(is_negative_definite(l, bad));
  const auto x = solve({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, {Rational(3), Rational(4)});
  CHECK(x[0] == 1);
  CHECK(x[1] == 1);
}

TEST_CASE("exceptional configurations are trees with definite exceptional lattice") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto v = corpus::random_valuation(rng, 12);
    const CurveBasis basis(v);
    const auto g = dual_graph(basis);
    CHECK(g.edges().size() == static_cast<std::size_t>(v.r - 1));
    std::vector<DivisorClass> es;
    for (int i = 1; i <= v.r; ++i) es.push_back(basis.exceptional(i));
    CHECK(is_negative_definite(basis.lattice(), es));
    // E_r~ is a (-1)-curve meeting exactly the E_i~ it is proximate to.
    CHECK(basis.lattice().square(basis.exceptional(v.r)) == -1);
    for (int i = 1; i < v.r; ++i) {
      const int expected = v.config.is_proximate(v.r, i) ? 1 : 0;
      CHECK(basis.lattice().pair(basis.exceptional(v.r), basis.exceptional(i)) == expected);
    }
  }
}

}  // TEST_SUITE
