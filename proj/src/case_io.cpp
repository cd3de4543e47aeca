#include "npival/case_io.hpp"

#include <fstream>
#include <sstream>

#include "npival/errors.hpp"
#include "npival/lattice.hpp"

namespace npival {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

template <typename T>
T get_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::ParseError, where + ": bad type for '" + key + "'");
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get_field<T>(j, key, where);
}

PointKind parse_point_kind(const std::string& s) {
  if (s == "special") return PointKind::Special;
  if (s == "general") return PointKind::General;
  throw Error(ErrorCode::ParseError, "surface.point must be 'special' or 'general'");
}

ojson rational_pair(const Point& p) { return ojson::array({to_string(p.x), to_string(p.y)}); }

std::string kind_name(ValuationKind k) {
  return k == ValuationKind::Special ? "special" : "non-special";
}

}  // namespace

CaseFile parse_case(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "case must be a JSON object");
  CaseFile c;

  const auto surface = get_field<json>(j, "surface", "case");
  c.surface = make_surface(get_field<int>(surface, "delta", "surface"),
                           parse_point_kind(get_field<std::string>(surface, "point", "surface")));

  const bool has_config = j.contains("configuration");
  const bool has_beta = j.contains("beta_bar");
  if (has_config == has_beta) {
    throw Error(ErrorCode::ParseError, "exactly one of 'configuration' and 'beta_bar' is required");
  }
  if (has_config) {
    const auto config = get_field<json>(j, "configuration", "case");
    const auto points = get_field<json>(config, "points", "configuration");
    if (!points.is_array()) throw Error(ErrorCode::ParseError, "configuration.points must be an array");
    std::vector<PointRecord> records;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      const std::string where = "configuration.points[" + std::to_string(i) + "]";
      PointRecord rec;
      rec.index = get_field<int>(p, "index", where);
      rec.parent = optional_field<int>(p, "parent", where);
      rec.extra_proximity = optional_field<int>(p, "extra_proximity", where);
      rec.on_f1 = optional_field<bool>(p, "on_f1", where).value_or(false);
      rec.on_m = optional_field<bool>(p, "on_m", where).value_or(false);
      records.push_back(rec);
    }
    c.points = std::move(records);
  } else {
    const auto beta = get_field<json>(j, "beta_bar", "case");
    BetaBarInput in;
    in.values = get_field<std::vector<std::int64_t>>(beta, "values", "beta_bar");
    in.f1_chain = get_field<int>(beta, "f1_chain", "beta_bar");
    in.m_chain = get_field<int>(beta, "m_chain", "beta_bar");
    c.beta_bar = std::move(in);
  }

  if (j.contains("flag")) {
    const auto flag = get_field<json>(j, "flag", "case");
    const auto kind = get_field<std::string>(flag, "kind", "flag");
    if (kind == "satellite") {
      c.eta = get_field<int>(flag, "eta", "flag");
    } else if (kind != "free") {
      throw Error(ErrorCode::ParseError, "flag.kind must be 'free' or 'satellite'");
    }
  }

  const auto divisor = get_field<json>(j, "divisor", "case");
  c.divisor.a = get_field<std::int64_t>(divisor, "a", "divisor");
  c.divisor.b = get_field<std::int64_t>(divisor, "b", "divisor");
  return c;
}

CaseFile load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return parse_case(j);
}

FlagValuation realize(const CaseFile& c) {
  Configuration config = c.points
                             ? build_configuration(*c.points)
                             : from_maximal_contact(c.beta_bar->values, c.beta_bar->f1_chain,
                                                    c.beta_bar->m_chain);
  return make_flag(make_valuation(c.surface, config), c.eta);
}

std::string divisor_name(const BigDivisor& d) {
  std::string s;
  auto term = [&s](std::int64_t k, const char* name) {
    if (k == 0) return;
    if (k < 0) s += "-";
    else if (!s.empty()) s += "+";
    const auto mag = k < 0 ? -k : k;
    if (mag != 1) s += std::to_string(mag);
    s += name;
  };
  term(d.a, "F");
  term(d.b, "M");
  return s.empty() ? "0" : s;
}

std::string classify_line(const DivisorialValuation& val, const BigDivisor& d) {
  std::string line = kind_name(val.kind);
  if (!is_npi(val)) return line + ", not NPI";
  line += ", NPI, ";
  if (never_minimal(val)) {
    line += "never-minimal";
  } else if (is_nef(d) && is_big(d, val.surface.delta)) {
    line += is_minimal(val, d) ? "minimal" : "non-minimal";
  } else {
    line += "minimality undecided";
  }
  line += ", μ̂(" + divisor_name(d) + ") = " + to_string(mu_hat(val, d));
  return line;
}

ojson classify_json(const DivisorialValuation& val, const BigDivisor& d) {
  ojson out;
  out["kind"] = kind_name(val.kind);
  out["npi"] = is_npi(val);
  out["npi_quantity"] = npi_quantity(val);
  out["beta_bar"] = val.beta_bar;
  out["multiplicities"] = val.m;
  out["phi_f1"] = val.phi_f1;
  out["phi_m"] = val.phi_m;
  out["divisor"] = ojson{{"a", d.a}, {"b", d.b}, {"nef", is_nef(d)}};
  if (is_npi(val)) {
    out["never_minimal"] = never_minimal(val);
    if (is_nef(d)) out["minimal"] = is_minimal(val, d);
    out["theta"] = to_string(theta(val, d));
    out["mu_hat"] = to_string(mu_hat(val, d));
  }
  return out;
}

ojson polygon_json(const Polygon& p) {
  ojson arr = ojson::array();
  for (const auto& v : p.vertices()) arr.push_back(rational_pair(v));
  return arr;
}

ojson body_json(const FlagValuation& flag, const BigDivisor& d, bool verify, bool oracle) {
  const auto& val = flag.base;
  const auto body = newton_okounkov_body(flag, d);
  ojson out;
  out["classification"] = classify_json(val, d);
  ojson f;
  f["kind"] = flag.is_satellite() ? "satellite" : "free";
  if (flag.eta) f["eta"] = *flag.eta;
  out["flag"] = f;
  out["case"] = to_string(body.body_case);
  out["shape"] = body.quadrilateral() ? "quadrilateral" : "triangle";
  out["vertices"] = polygon_json(body.polygon);
  out["area"] = to_string(body.polygon.area());
  ojson labels = ojson::array();
  for (int label : body.labels) labels.push_back("Q" + std::to_string(label));
  out["vertex_table"] = ojson{{"applies", body.table_applies},
                              {"listed", labels},
                              {"vertices", polygon_json(body.table_polygon)}};
  out["cone_triangle"] = polygon_json(cone_triangle(flag, d));

  if (verify || oracle) {
    const auto report = inspect_body(flag, d);
    if (verify) {
      ojson clauses = ojson::array();
      for (const auto& c : report.clauses) {
        clauses.push_back(ojson{{"name", c.name}, {"passed", c.passed}, {"vacuous", c.vacuous},
                                {"detail", c.detail}});
      }
      out["verification"] = ojson{{"passed", report.passed()}, {"clauses", clauses}};
    }
    if (oracle) {
      ojson samples = ojson::array();
      for (const auto& s : report.samples) {
        ojson support = ojson::array();
        for (const auto& id : s.support) support.push_back(to_string(id));
        samples.push_back(ojson{{"t", to_string(s.t)},
                                {"alpha", to_string(s.alpha)},
                                {"beta", to_string(s.beta)},
                                {"volume", to_string(s.volume)},
                                {"support", support}});
      }
      out["oracle"] = ojson{{"vertices", polygon_json(report.sweep_polygon)}, {"breakpoints", samples}};
    }
  }
  return out;
}

}  // namespace npival
