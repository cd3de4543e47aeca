#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "npival/cluster.hpp"
#include "npival/okounkov.hpp"
#include "npival/seshadri.hpp"

namespace npival {

struct BetaBarInput {
  std::vector<std::int64_t> values;
  int f1_chain = 1;
  int m_chain = 0;
};

struct CaseFile {
  Surface surface;
  std::optional<std::vector<PointRecord>> points;
  std::optional<BetaBarInput> beta_bar;
  std::optional<int> eta;
  BigDivisor divisor;
};

CaseFile parse_case(const nlohmann::json& j);
CaseFile load_case(const std::string& path);

// Builds the validated flag valuation described by the case.
FlagValuation realize(const CaseFile& c);

std::string divisor_name(const BigDivisor& d);

// One line: "special, NPI, never-minimal, μ̂(F+2M) = 156".
std::string classify_line(const DivisorialValuation& val, const BigDivisor& d);
nlohmann::ordered_json classify_json(const DivisorialValuation& val, const BigDivisor& d);

nlohmann::ordered_json polygon_json(const Polygon& p);
nlohmann::ordered_json body_json(const FlagValuation& flag, const BigDivisor& d, bool verify,
                                 bool oracle);

std::string render_svg(const Polygon& body, const Polygon& triangle);

}  // namespace npival
