#include "npival/lattice.hpp"

#include <algorithm>

#include "npival/errors.hpp"

namespace npival {

DivisorClass DivisorClass::zero(int r) {
  return DivisorClass{0, 0, std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))};
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.e.size() != e.size()) throw Error(ErrorCode::DimensionMismatch, "class ranks differ");
  f += o.f;
  m += o.m;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.e.size() != e.size()) throw Error(ErrorCode::DimensionMismatch, "class ranks differ");
  f -= o.f;
  m -= o.m;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  f *= c;
  m *= c;
  for (auto& x : e) x *= c;
  return *this;
}

PicardLattice::PicardLattice(int delta, int r) : delta_(delta), r_(r) {
  if (delta < 0 || r < 0) throw Error(ErrorCode::InvalidInput, "bad lattice parameters");
}

Rational PicardLattice::pair(const DivisorClass& x, const DivisorClass& y) const {
  if (x.rank() != r_ || y.rank() != r_) {
    throw Error(ErrorCode::DimensionMismatch, "class rank does not match the lattice");
  }
  Rational v = x.f * y.m + x.m * y.f + delta_ * x.m * y.m;
  for (int i = 0; i < r_; ++i) v -= x.e[static_cast<std::size_t>(i)] * y.e[static_cast<std::size_t>(i)];
  return v;
}

DivisorClass PicardLattice::fiber() const {
  auto d = DivisorClass::zero(r_);
  d.f = 1;
  return d;
}

DivisorClass PicardLattice::section() const {
  auto d = DivisorClass::zero(r_);
  d.m = 1;
  return d;
}

DivisorClass PicardLattice::exceptional(int i) const {
  if (i < 1 || i > r_) throw Error(ErrorCode::DimensionMismatch, "no such exceptional divisor");
  auto d = DivisorClass::zero(r_);
  d.e[static_cast<std::size_t>(i - 1)] = 1;
  return d;
}

DivisorClass PicardLattice::pullback(const Rational& a, const Rational& b) const {
  auto d = DivisorClass::zero(r_);
  d.f = a;
  d.m = b;
  return d;
}

std::string to_string(const CurveId& id) {
  switch (id.role) {
    case CurveRole::F1: return "F1";
    case CurveRole::M0: return "M0";
    case CurveRole::M1: return "M1";
    case CurveRole::E: return "E" + std::to_string(id.index);
  }
  return "?";
}

CurveBasis::CurveBasis(const DivisorialValuation& val)
    : lattice_(val.surface.delta, val.r), kind_(val.kind) {
  const int r = val.r;
  const auto& config = val.config;
  f1_ = lattice_.fiber();
  for (int i = 1; i <= config.f1_chain(); ++i) f1_.e[static_cast<std::size_t>(i - 1)] = -1;

  m0_ = lattice_.section();
  m0_.f = -val.surface.delta;
  if (val.special_point_on_m0()) {
    for (int i = 1; i <= config.m_chain(); ++i) m0_.e[static_cast<std::size_t>(i - 1)] = -1;
  }

  m1_ = lattice_.section();
  if (kind_ == ValuationKind::NonSpecial) {
    for (int i = 1; i <= config.m_chain(); ++i) m1_.e[static_cast<std::size_t>(i - 1)] = -1;
  }

  e_.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    auto d = lattice_.exceptional(i);
    for (int j = i + 1; j <= r; ++j) {
      if (config.is_proximate(j, i)) d.e[static_cast<std::size_t>(j - 1)] = -1;
    }
    e_.push_back(std::move(d));
  }
}

const DivisorClass& CurveBasis::m1() const {
  if (kind_ != ValuationKind::NonSpecial) {
    throw Error(ErrorCode::InvalidInput, "M1 is only distinguished for non-special valuations");
  }
  return m1_;
}

const DivisorClass& CurveBasis::get(const CurveId& id) const {
  switch (id.role) {
    case CurveRole::F1: return f1_;
    case CurveRole::M0: return m0_;
    case CurveRole::M1: return m1();
    case CurveRole::E: return exceptional(id.index);
  }
  return f1_;
}

std::vector<NamedCurve> CurveBasis::generators() const {
  std::vector<NamedCurve> out;
  out.push_back({{CurveRole::F1, 0}, f1_});
  out.push_back({{CurveRole::M0, 0}, m0_});
  if (kind_ == ValuationKind::NonSpecial) out.push_back({{CurveRole::M1, 0}, m1_});
  for (int i = 1; i <= rank(); ++i) out.push_back({{CurveRole::E, i}, exceptional(i)});
  return out;
}

bool DualGraph::adjacent(int i, int j) const {
  const auto& a = adjacency.at(static_cast<std::size_t>(i));
  return std::find(a.begin(), a.end(), j) != a.end();
}

std::vector<std::pair<int, int>> DualGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= size(); ++i) {
    for (int j : adjacency[static_cast<std::size_t>(i)]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

DualGraph dual_graph(const CurveBasis& basis) {
  const int r = basis.rank();
  DualGraph g;
  g.adjacency.resize(static_cast<std::size_t>(r + 1));
  int edge_count = 0;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      const Rational p = basis.lattice().pair(basis.exceptional(i), basis.exceptional(j));
      if (p == 1) {
        g.adjacency[static_cast<std::size_t>(i)].push_back(j);
        g.adjacency[static_cast<std::size_t>(j)].push_back(i);
        ++edge_count;
      } else if (p != 0) {
        throw Error(ErrorCode::NotATree, "exceptional curves meet with multiplicity " + to_string(p));
      }
    }
  }
  // Connected with r - 1 edges.
  std::vector<char> seen(static_cast<std::size_t>(r + 1), 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (edge_count != r - 1 || visited != r) {
    throw Error(ErrorCode::NotATree, "dual graph is not a tree");
  }
  return g;
}

bool precedes(const DualGraph& graph, int alpha, int beta) {
  const int n = graph.size();
  if (alpha < 1 || alpha > n || beta < 1 || beta > n) {
    throw Error(ErrorCode::InvalidInput, "vertex out of range");
  }
  std::vector<int> parent(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> stack{1};
  parent[1] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] == 0) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  for (int v = beta; v != -1; v = parent[static_cast<std::size_t>(v)]) {
    if (v == alpha) return true;
  }
  return false;
}

bool is_nef_against(const DivisorClass& d, const CurveBasis& basis) {
  for (const auto& c : basis.generators()) {
    if (basis.lattice().pair(d, c.cls) < 0) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> gram_matrix(const PicardLattice& lattice,
                                               std::span<const DivisorClass> classes) {
  const std::size_t n = classes.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = lattice.pair(classes[i], classes[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

bool is_negative_definite(const std::vector<std::vector<Rational>>& gram) {
  // -G is positive definite iff Gaussian elimination without pivoting meets
  // only positive pivots; the pivots are ratios of leading principal minors.
  const std::size_t n = gram.size();
  if (n == 0) return false;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -gram[i][j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return true;
}

bool is_negative_definite(const PicardLattice& lattice, std::span<const DivisorClass> classes) {
  return is_negative_definite(gram_matrix(lattice, classes));
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> g, std::vector<Rational> rhs) {
  const std::size_t n = g.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && g[pivot][k] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::InvalidInput, "singular system");
    std::swap(g[k], g[pivot]);
    std::swap(rhs[k], rhs[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || g[i][k] == 0) continue;
      const Rational factor = g[i][k] / g[k][k];
      for (std::size_t j = k; j < n; ++j) g[i][j] -= factor * g[k][j];
      rhs[i] -= factor * rhs[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) rhs[k] /= g[k][k];
  return rhs;
}

}  // namespace npival
