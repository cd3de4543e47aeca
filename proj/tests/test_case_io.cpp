#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "npival/case_io.hpp"
#include "npival/errors.hpp"

using namespace npival;
using json = nlohmann::json;

namespace {

std::string fixture(const char* name) { return std::string(NPIVAL_FIXTURES) + "/" + name; }

ErrorCode parse_error_of(const json& j) {
  try {
    realize(parse_case(j));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("case_io") {

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("612/28")) == "153/7");
  CHECK(to_string(parse_rational("-4")) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("fixtures load and agree") {
  const auto a = realize(load_case(fixture("special_example.json")));
  const auto b = realize(load_case(fixture("special_example_beta.json")));
  CHECK(a.base.config.points() == b.base.config.points());
  CHECK(a.eta == std::optional<int>(8));
  const auto n = realize(load_case(fixture("nonspecial_example.json")));
  const auto nb = realize(load_case(fixture("nonspecial_example_beta.json")));
  CHECK(n.base.beta_bar == nb.base.beta_bar);
  CHECK(n.base.kind == ValuationKind::NonSpecial);
}

TEST_CASE("classification line") {
  const auto s = load_case(fixture("special_example.json"));
  CHECK(classify_line(realize(s).base, s.divisor) ==
        "special, NPI, never-minimal, μ̂(F+2M) = 156");
  const auto n = load_case(fixture("nonspecial_example.json"));
  CHECK(classify_line(realize(n).base, n.divisor) ==
        "non-special, NPI, never-minimal, μ̂(2F+5M) = 255");
  const auto m = load_case(fixture("minimal_example.json"));
  CHECK(classify_line(realize(m).base, m.divisor) == "special, NPI, minimal, μ̂(2F+M) = 4");
  const auto bad = load_case(fixture("not_npi.json"));
  CHECK(classify_line(realize(bad).base, bad.divisor) == "special, not NPI");
  CHECK(divisor_name({-1, 2}) == "-F+2M");
  CHECK(divisor_name({0, 1}) == "M");
}

TEST_CASE("body output") {
  const auto c = load_case(fixture("special_example.json"));
  const auto j = body_json(realize(c), c.divisor, true, true);
  CHECK(j["shape"] == "quadrilateral");
  CHECK(j["area"] == "6");
  CHECK(j["vertices"].dump() == R"([["0","0"],["153/7","38/7"],["1017/17","253/17"],["156","39"]])");
  CHECK(j["verification"]["passed"] == true);
  CHECK(j["oracle"]["vertices"] == j["vertices"]);
  CHECK(j.dump() == body_json(realize(c), c.divisor, true, true).dump());

  const auto svg = render_svg(newton_okounkov_body(realize(c), c.divisor).polygon,
                              cone_triangle(realize(c), c.divisor));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polygon") != std::string::npos);
}

TEST_CASE("malformed cases") {
  CHECK_THROWS_AS(load_case(fixture("missing.json")), Error);
  const json base = json::parse(R"({
    "surface": {"delta": 1, "point": "special"},
    "configuration": {"points": [{"index": 1, "on_f1": true, "on_m": true}]},
    "divisor": {"a": 1, "b": 1}
  })");
  CHECK_NOTHROW(realize(parse_case(base)));

  auto j = base;
  j.erase("divisor");
  CHECK(parse_error_of(j) == ErrorCode::ParseError);
  j = base;
  j["surface"]["point"] = "corner";
  CHECK(parse_error_of(j) == ErrorCode::ParseError);
  j = base;
  j["beta_bar"] = json{{"values", {1, 1}}, {"f1_chain", 1}, {"m_chain", 1}};
  CHECK(parse_error_of(j) == ErrorCode::ParseError);
  j = base;
  j["surface"]["delta"] = "two";
  CHECK(parse_error_of(j) == ErrorCode::ParseError);
  j = base;
  j["flag"] = json{{"kind", "satellite"}, {"eta", 1}};
  CHECK(parse_error_of(j) == ErrorCode::BadFlag);
  j = base;
  j["surface"] = json{{"delta", 0}, {"point", "general"}};
  CHECK(parse_error_of(j) == ErrorCode::InvalidInput);
  CHECK_THROWS_AS(realize(load_case(fixture("bad_satellite.json"))), Error);
}

}  // TEST_SUITE
