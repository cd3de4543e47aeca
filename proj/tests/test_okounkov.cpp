#include <doctest.h>

#include "corpus.hpp"
#include "npival/errors.hpp"
#include "npival/okounkov.hpp"

using namespace npival;

namespace {

Polygon poly(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return Polygon::hull(v);
}

}  // namespace

TEST_SUITE("okounkov") {

TEST_CASE("polygon basics") {
  const auto sq = poly({{1, 1}, {0, 0}, {1, 0}, {0, 1}, {ratio(1, 2), ratio(1, 2)}, {1, ratio(1, 2)}});
  CHECK(sq.size() == 4);
  CHECK(sq.vertices().front() == Point{0, 0});
  CHECK(sq.twice_area() == 2);
  CHECK(sq.contains(Point{ratio(1, 3), 1}));
  CHECK_FALSE(sq.contains(Point{2, 0}));
  CHECK(sq.scaled(2).twice_area() == 8);
  const auto degenerate = poly({{0, 0}, {1, 1}, {2, 2}});
  CHECK(degenerate.size() == 2);
  CHECK(degenerate.twice_area() == 0);
  CHECK(poly({{0, 0}, {2, 0}, {0, 2}}).contains(poly({{0, 0}, {1, 0}, {0, 1}})));
}

TEST_CASE("special example") {
  const auto flag = make_flag(corpus::worked_special(), 8);
  const BigDivisor d{1, 2};
  const auto body = newton_okounkov_body(flag, d);
  CHECK(body.polygon == poly({{0, 0}, {ratio(612, 28), ratio(152, 28)},
                              {ratio(4068, 68), ratio(1012, 68)}, {156, 39}}));
  CHECK(body.body_case == BodyCase::SatelliteAfter);
  CHECK(body.labels == std::vector<int>{5, 7, 9});
  CHECK(body.quadrilateral());
  CHECK(body.polygon.twice_area() == 12);
  const auto rays = cone_rays(flag);
  CHECK(rays.lower.y / rays.lower.x == ratio(38, 153));
  CHECK(verify_body(flag, d).passed());
  const auto q = q_points(flag, d);
  CHECK_FALSE(q.has(1));
  CHECK_THROWS_AS(q.at(1), Error);
}

TEST_CASE("non-special example") {
  const auto flag = make_flag(corpus::worked_nonspecial(), 9);
  const BigDivisor d{2, 5};
  const auto body = newton_okounkov_body(flag, d);
  CHECK(body.polygon == poly({{0, 0}, {ratio(9432, 45), ratio(3132, 45)},
                              {ratio(3597, 15), ratio(1197, 15)}, {255, 85}}));
  CHECK(body.labels == std::vector<int>{14, 16, 18});
  CHECK(body.polygon.twice_area() == 70);
  CHECK(verify_body(flag, d).passed());
}

TEST_CASE("minimal example") {
  const auto flag = make_flag(corpus::minimal_valuation(), std::nullopt);
  const BigDivisor d{2, 1};
  const auto body = newton_okounkov_body(flag, d);
  CHECK(body.body_case == BodyCase::Minimal);
  CHECK(body.polygon == poly({{0, 0}, {4, 0}, {4, 1}}));
  CHECK(verify_body(flag, d).passed());
  CHECK_THROWS_AS(q_points(flag, d), Error);
}

TEST_CASE("big but not nef") {
  // Non-special at a general point, delta = 2.
  const auto flag = make_flag(corpus::worked_nonspecial(), 9);
  const BigDivisor d{-1, 2};
  const auto body = newton_okounkov_body(flag, d);
  CHECK(body.body_case == BodyCase::ScaledFromM);
  CHECK(body.polygon == newton_okounkov_body(flag, {0, 1}).polygon.scaled(ratio(3, 2)));
  CHECK(body.polygon.twice_area() == volume(d, 2));
  CHECK(sweep_polygon(sweep(flag, d)) == body.polygon);

  try {
    newton_okounkov_body(make_flag(corpus::worked_special(), 8), {-1, 2});
    FAIL("expected GenericityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenericityViolation);
  }
}

TEST_CASE("random corpus") {
  const auto cases = corpus::npi_corpus(77, 60, 10, 20);
  int quadrilaterals = 0, outside = 0;
  for (const auto& [flag, d] : cases) {
    const auto report = inspect_body(flag, d);
    for (const auto& c : report.clauses) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
    const auto body = newton_okounkov_body(flag, d);
    CHECK(body.polygon.vertices().front() == Point{0, 0});
    CHECK(body.polygon.size() >= 3);
    CHECK(body.polygon.size() <= 4);
    if (body.body_case == BodyCase::Minimal) continue;
    if (!body.table_applies) {
      ++outside;
      continue;
    }
    CHECK(body.polygon == body.table_polygon);
    CHECK(body.quadrilateral() == body.predicted_quadrilateral);
    quadrilaterals += body.quadrilateral() ? 1 : 0;
    const auto q = q_points(flag, d);
    const auto& last = q.at(body.labels.back());
    for (int label : unlisted_labels(flag, d)) {
      CHECK(cross(Point{0, 0}, q.at(label), last) == 0);
    }
  }
  CHECK(quadrilaterals > 0);
  CHECK(outside < static_cast<int>(cases.size()) / 2);
}

TEST_CASE("vertex table needs proportional eta values") {
  // All points free on F1, flag at E_8 and E_9, theta = 0: the table gives a
  // triangle but the body is a quadrilateral.
  std::vector<PointRecord> recs;
  for (int i = 1; i <= 9; ++i) {
    PointRecord p;
    p.index = i;
    if (i > 1) p.parent = i - 1;
    p.on_f1 = true;
    p.on_m = i == 1;
    recs.push_back(p);
  }
  const auto v = make_valuation(Surface{0, PointKind::Special}, build_configuration(recs));
  const auto flag = make_flag(v, 8);
  const BigDivisor d{1, 9};
  CHECK(theta(v, d) == 0);
  CHECK_FALSE(eta_proportional(flag, d));
  const auto body = newton_okounkov_body(flag, d);
  CHECK(body.table_polygon == poly({{0, 0}, {9, 8}, {18, 17}}));
  CHECK(body.polygon == poly({{0, 0}, {9, 8}, {18, 17}, {9, 9}}));
  CHECK(sweep_polygon(sweep(flag, d)) == body.polygon);
  CHECK(body.polygon.twice_area() == volume(d, 0));
}

}  // TEST_SUITE
