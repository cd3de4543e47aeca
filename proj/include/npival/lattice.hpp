#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "npival/cluster.hpp"
#include "npival/rational.hpp"

namespace npival {

// Coordinates over the pullback basis F*, M*, E_1*, ..., E_r*.
struct DivisorClass {
  Rational f;
  Rational m;
  std::vector<Rational> e;

  static DivisorClass zero(int r);

  int rank() const { return static_cast<int>(e.size()); }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& c);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
  bool operator==(const DivisorClass&) const = default;
};

class PicardLattice {
 public:
  PicardLattice(int delta, int r);

  int delta() const { return delta_; }
  int rank() const { return r_; }

  Rational pair(const DivisorClass& x, const DivisorClass& y) const;
  Rational square(const DivisorClass& x) const { return pair(x, x); }

  DivisorClass fiber() const;
  DivisorClass section() const;
  DivisorClass exceptional(int i) const;
  // Total transform of aF + bM.
  DivisorClass pullback(const Rational& a, const Rational& b) const;

 private:
  int delta_;
  int r_;
};

enum class CurveRole { F1, M0, M1, E };

struct CurveId {
  CurveRole role = CurveRole::E;
  int index = 0;

  auto operator<=>(const CurveId&) const = default;
};

std::string to_string(const CurveId& id);

struct NamedCurve {
  CurveId id;
  DivisorClass cls;
};

class CurveBasis {
 public:
  explicit CurveBasis(const DivisorialValuation& val);

  const PicardLattice& lattice() const { return lattice_; }
  ValuationKind kind() const { return kind_; }
  int rank() const { return lattice_.rank(); }

  const DivisorClass& f1() const { return f1_; }
  const DivisorClass& m0() const { return m0_; }
  const DivisorClass& m1() const;
  const DivisorClass& exceptional(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
  const DivisorClass& get(const CurveId& id) const;

  // F1~, M0~, [M1~,] E_1~, ..., E_r~: the curves generating the cone of curves
  // of an NPI valuation.
  std::vector<NamedCurve> generators() const;

 private:
  PicardLattice lattice_;
  ValuationKind kind_;
  DivisorClass f1_;
  DivisorClass m0_;
  DivisorClass m1_;
  std::vector<DivisorClass> e_;
};

struct DualGraph {
  std::vector<std::vector<int>> adjacency;  // 1-based; entry 0 unused

  int size() const { return static_cast<int>(adjacency.size()) - 1; }
  bool adjacent(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;
};

DualGraph dual_graph(const CurveBasis& basis);

// True iff alpha lies on the path from vertex 1 to beta.
bool precedes(const DualGraph& graph, int alpha, int beta);

bool is_nef_against(const DivisorClass& d, const CurveBasis& basis);

std::vector<std::vector<Rational>> gram_matrix(const PicardLattice& lattice,
                                               std::span<const DivisorClass> classes);
bool is_negative_definite(const std::vector<std::vector<Rational>>& gram);
bool is_negative_definite(const PicardLattice& lattice, std::span<const DivisorClass> classes);

// Solves G x = rhs for a nonsingular G.
std::vector<Rational> solve(std::vector<std::vector<Rational>> g, std::vector<Rational> rhs);

}  // namespace npival
