#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "npival/case_io.hpp"
#include "npival/errors.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

int report_error(const npival::Error& e) {
  std::cerr << "error: " << e.what() << '\n';
  if (e.diagnostics().size() > 1) {
    for (const auto& d : e.diagnostics()) std::cerr << "  " << d << '\n';
  }
  return e.code() == npival::ErrorCode::VerificationFailed ? kExitVerification : kExitValidation;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seshadri-type constants and Newton-Okounkov polygons on Hirzebruch surfaces"};
  app.require_subcommand(1);

  std::string classify_path;
  bool classify_as_json = false;
  auto* classify = app.add_subcommand("classify", "classify the valuation of a case file");
  classify->add_option("case", classify_path, "case file (JSON)")->required();
  classify->add_flag("--json", classify_as_json, "print JSON instead of one line");

  std::string body_path, svg_path, out_path;
  bool verify = false, oracle = false;
  auto* body = app.add_subcommand("body", "compute the Newton-Okounkov polygon of a case");
  body->add_option("case", body_path, "case file (JSON)")->required();
  body->add_flag("--verify", verify, "cross-check against the Zariski sweep and cone");
  body->add_flag("--oracle", oracle, "include the sweep polygon and breakpoints");
  body->add_option("--svg", svg_path, "write a plot of the body and cone triangle");
  body->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (*classify) {
      const auto c = npival::load_case(classify_path);
      const auto flag = npival::realize(c);
      if (classify_as_json) {
        std::cout << npival::classify_json(flag.base, c.divisor).dump(2) << '\n';
      } else {
        std::cout << npival::classify_line(flag.base, c.divisor) << '\n';
      }
      return 0;
    }

    const auto c = npival::load_case(body_path);
    const auto flag = npival::realize(c);
    const auto j = npival::body_json(flag, c.divisor, verify, oracle);
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else if (!write_file(out_path, text)) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitValidation;
    }
    if (!svg_path.empty()) {
      const auto b = npival::newton_okounkov_body(flag, c.divisor);
      if (!write_file(svg_path, npival::render_svg(b.polygon, npival::cone_triangle(flag, c.divisor)))) {
        std::cerr << "error: cannot write " << svg_path << '\n';
        return kExitValidation;
      }
    }
    if (verify && !j["verification"]["passed"].get<bool>()) {
      for (const auto& clause : j["verification"]["clauses"]) {
        if (!clause["passed"].get<bool>()) {
          std::cerr << "error: VerificationFailed: " << clause["name"].get<std::string>() << ": "
                    << clause["detail"].get<std::string>() << '\n';
          break;
        }
      }
      return kExitVerification;
    }
    return 0;
  } catch (const npival::Error& e) {
    return report_error(e);
  }
}
