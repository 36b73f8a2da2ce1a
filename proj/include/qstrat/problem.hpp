#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qstrat/algebra.hpp"
#include "qstrat/stratify.hpp"

namespace qstrat {

/// Input error with the location it refers to (a JSON pointer, or line:column
/// for syntax errors).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class Side { Right, Left };

std::string_view side_code(Side s);
Side parse_side(std::string_view text);

struct RawTerm {
  std::string coeff;
  std::vector<std::string> path;
};

/// Module data as written in the input. On side=right the matrix of an arrow
/// from -> to is dims[from] x dims[to]; on side=left it is the covariant map
/// M(from) -> M(to), a dims[to] x dims[from] matrix. Either way it is stored
/// as given; arrows without a matrix act by zero.
struct ModuleSpec {
  std::vector<std::size_t> dims;  // in vertex order
  std::map<std::string, std::vector<std::vector<std::string>>> arrows;
};

struct ProblemSpec {
  Field field;
  Quiver quiver;
  std::vector<std::vector<RawTerm>> relations;
  std::vector<std::vector<std::string>> partition;
  Side side = Side::Right;
  std::size_t max_path_length = 12;
  std::map<std::string, ModuleSpec> modules;
  std::vector<std::string> boundary;

  std::vector<RelationSpec> relation_specs(Field f) const;
};

ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"ss",         "qh",         "ideally-ss",     "ideally-qh",
                                              "noetherian", "membership", "multiplicities", "within-stratum-hom"};
  return names;
}

/// Expands "all" and rejects unknown names.
std::set<std::string> parse_checks(const std::vector<std::string>& names);

struct RunOptions {
  std::set<std::string> checks;
  std::optional<std::string> module;
  bool parallel = false;
  bool boundary_guard = true;
  bool timing = false;
};

struct ReportWitness {
  std::size_t stratum = 0;
  std::string vertex;
  Reason reason = Reason::SectionNotProjective;
  std::string detail;

  friend bool operator==(const ReportWitness&, const ReportWitness&) = default;
};

struct CheckEntry {
  std::string check;
  Verdict verdict = Verdict::True;
  std::optional<ReportWitness> witness;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct DeltaEntry {
  std::size_t stratum = 0;
  std::string vertex;
  std::vector<std::size_t> dims;

  friend bool operator==(const DeltaEntry&, const DeltaEntry&) = default;
};

struct ModuleEntry {
  std::string name;
  Verdict member = Verdict::True;
  std::optional<ReportWitness> witness;
  /// Present when multiplicities were requested and the module is filtered.
  std::optional<std::map<std::string, std::size_t>> multiplicities;
  std::vector<std::size_t> layer_strata;

  friend bool operator==(const ModuleEntry&, const ModuleEntry&) = default;
};

struct NoetherianEntry {
  std::string vertex;
  std::vector<std::size_t> support;
  bool stabilizes = true;
  bool boundary_unsafe = false;

  friend bool operator==(const NoetherianEntry&, const NoetherianEntry&) = default;
};

struct Report {
  std::string field;
  Side side = Side::Right;
  std::vector<std::vector<std::string>> partition;
  std::size_t algebra_dimension = 0;
  std::size_t nilpotency_bound = 0;
  std::vector<DeltaEntry> standard_modules;
  std::vector<CheckEntry> checks;
  std::vector<ModuleEntry> modules;
  std::vector<NoetherianEntry> noetherian;
  std::vector<std::string> unsafe_vertices;
  std::vector<std::string> warnings;
  /// Wall time per check in milliseconds; only filled on request.
  std::optional<std::map<std::string, double>> timing_ms;

  /// 0 when every verdict is true, 1 otherwise.
  int exit_code() const;
  friend bool operator==(const Report&, const Report&) = default;
};

Report run(const ProblemSpec& spec, const RunOptions& opts);

/// The right module over `algebra` described by a module spec; `algebra` is
/// already the opposite algebra when the spec is left-sided.
RightModule build_module(const AlgebraPtr& algebra, const ModuleSpec& m, const std::string& name);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string emit_json(const Report& r);
std::string emit_text(const Report& r);

}  // namespace qstrat
