#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qstrat/problem.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard modules and stratification checks for bound quiver algebras"};
  std::string input = "-";
  std::string checks = "ss,qh";
  std::string side, field, module, emit = "json";
  std::size_t max_path_length = 0;
  bool parallel = false, no_guard = false, timing = false;
  app.add_option("--input", input, "problem document (JSON); '-' reads stdin");
  app.add_option("--check", checks,
                 "comma-separated checks: ss, qh, ideally-ss, ideally-qh, noetherian, membership, "
                 "multiplicities, within-stratum-hom, all");
  app.add_option("--side", side, "left or right; overrides the document")
      ->check(CLI::IsMember({"left", "right"}));
  app.add_option("--module", module, "only query this module for membership and multiplicities");
  app.add_option("--emit", emit, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", field, "Q or Fp:P; overrides the document");
  app.add_option("--max-path-length", max_path_length, "bound for the nilpotency search; overrides the document")
      ->check(CLI::PositiveNumber);
  app.add_flag("--parallel", parallel, "fan out independent (stratum, vertex) checks");
  app.add_flag("--no-boundary-guard", no_guard, "report hard verdicts at boundary-unsafe strata");
  app.add_flag("--timing", timing, "include wall-clock timing per check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    qstrat::ProblemSpec spec;
    if (input == "-") {
      std::string text(std::istreambuf_iterator<char>(std::cin), {});
      spec = qstrat::parse_problem(text);
    } else {
      spec = qstrat::load_problem(input);
    }
    if (!side.empty()) spec.side = qstrat::parse_side(side);
    if (!field.empty()) spec.field = qstrat::Field::parse(field);
    if (max_path_length) spec.max_path_length = max_path_length;

    qstrat::RunOptions opts;
    opts.checks = qstrat::parse_checks(split_list(checks));
    if (!module.empty()) opts.module = module;
    opts.parallel = parallel;
    opts.boundary_guard = !no_guard;
    opts.timing = timing;

    qstrat::Report report = qstrat::run(spec, opts);
    std::cout << (emit == "text" ? qstrat::emit_text(report) : qstrat::emit_json(report));
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "qstrat: " << e.what() << "\n";
    return 2;
  }
}
