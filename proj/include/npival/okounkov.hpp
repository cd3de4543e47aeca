#pragma once

#include <map>
#include <string>
#include <vector>

#include "npival/cluster.hpp"
#include "npival/rational.hpp"
#include "npival/seshadri.hpp"
#include "npival/zariski.hpp"

namespace npival {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Convex polygon, counterclockwise, starting at the origin when the origin is
// a vertex, without repeated or collinear vertices.
class Polygon {
 public:
  Polygon() = default;
  static Polygon hull(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Rational twice_area() const;
  Rational area() const { return twice_area() / 2; }
  bool contains(const Point& p) const;
  bool contains(const Polygon& other) const;
  Polygon scaled(const Rational& c) const;

  bool operator==(const Polygon& o) const { return vertices_ == o.vertices_; }

 private:
  std::vector<Point> vertices_;
};

// cross((b - a), (c - a))
Rational cross(const Point& a, const Point& b, const Point& c);

struct ConeRays {
  Point lower;  // direction vectors
  Point upper;
};

ConeRays cone_rays(const FlagValuation& flag);
Polygon cone_triangle(const FlagValuation& flag, const BigDivisor& d);

// Values of the flag valuation's second coordinate that feed the Q points.
struct FlagData {
  Rational nu_r_phi_eta;  // nu_r(phi_eta)
  Rational eta_f1;        // nu_eta(phi_F1)
  Rational eta_m;         // nu_eta of the distinguished section germ
  Rational eta_mu;        // nu_eta(C1), the ordinate of Q9 / Q18
};

FlagData flag_data(const FlagValuation& flag, const BigDivisor& d);

struct QPoints {
  Rational theta;
  std::map<int, Point> points;

  bool has(int label) const { return points.count(label) != 0; }
  const Point& at(int label) const;
};

QPoints q_points(const FlagValuation& flag, const BigDivisor& d);

enum class BodyCase { Minimal, SatelliteAfter, SatelliteBefore, Free, ScaledFromM };

std::string to_string(BodyCase c);

// For a satellite flag: nu_eta(phi) = (beta_bar_0(nu_eta) / beta_bar_0(nu_r)) nu_r(phi)
// for phi = phi_F1 and for the section germ. The vertex table relies on both;
// free flags always qualify.
bool eta_proportional(const FlagValuation& flag, const BigDivisor& d);

struct Body {
  // Convex hull of (0,0) and the Q points of the applicable row.
  Polygon polygon;
  BodyCase body_case = BodyCase::Free;
  // The vertex table's choice: (0,0) plus the listed Q points.
  Polygon table_polygon;
  std::vector<int> labels;
  bool predicted_quadrilateral = false;
  bool table_applies = true;  // eta_proportional

  bool quadrilateral() const { return polygon.size() == 4; }
};

Body newton_okounkov_body(const FlagValuation& flag, const BigDivisor& d);

// Q points of the applicable rows that are not vertices of the body.
std::vector<int> unlisted_labels(const FlagValuation& flag, const BigDivisor& d);

struct Clause {
  std::string name;
  bool passed = false;
  bool vacuous = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Clause> clauses;
  Polygon sweep_polygon;
  std::vector<SweepSample> samples;

  bool passed() const;
};

// Runs all checks and reports them; never throws on a failed clause.
VerificationReport inspect_body(const FlagValuation& flag, const BigDivisor& d);

// As inspect_body, but throws VerificationFailed naming the first failed clause.
VerificationReport verify_body(const FlagValuation& flag, const BigDivisor& d);

Polygon sweep_polygon(const std::vector<SweepSample>& samples);

}  // namespace npival
