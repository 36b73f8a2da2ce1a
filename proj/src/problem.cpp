#include "qstrat/problem.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace qstrat {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys{"name",      "description", "field",           "vertices", "arrows",
                                          "relations", "partition",   "side",            "modules",  "boundary",
                                          "max_path_length"};

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

// Scalars may be written as JSON strings ("-3/4") or integers.
std::string as_literal(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where, "expected a rational literal as a string or an integer");
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], ptr(where, i)));
  return out;
}

Field parse_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object() && j.size() == 1 && j.contains("Fp") && j.at("Fp").is_number_unsigned())
      return Field::prime(j.at("Fp").get<std::uint32_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
  throw ParseError(where, "field must be \"Q\", \"Fp:<p>\" or {\"Fp\": <p>}");
}

ModuleSpec parse_module(const json& j, const Quiver& q, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "module must be an object with 'dims' and 'arrows'");
  for (const auto& [k, v] : j.items())
    if (k != "dims" && k != "arrows") throw ParseError(where + "/" + k, "unknown module key");
  ModuleSpec m;
  const json& dims = require(j, "dims", where);
  m.dims.assign(q.vertex_count(), 0);
  if (dims.is_array()) {
    if (dims.size() != q.vertex_count())
      throw ParseError(where + "/dims", "expected " + std::to_string(q.vertex_count()) + " dimensions");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (!dims[i].is_number_unsigned()) throw ParseError(ptr(where + "/dims", i), "expected a natural number");
      m.dims[i] = dims[i].get<std::size_t>();
    }
  } else if (dims.is_object()) {
    for (const auto& [k, v] : dims.items()) {
      auto vid = q.find_vertex(k);
      if (!vid) throw ParseError(where + "/dims/" + k, "unknown vertex");
      if (!v.is_number_unsigned()) throw ParseError(where + "/dims/" + k, "expected a natural number");
      m.dims[*vid] = v.get<std::size_t>();
    }
  } else {
    throw ParseError(where + "/dims", "expected an array or an object keyed by vertex");
  }
  if (j.contains("arrows")) {
    const json& arrows = j.at("arrows");
    if (!arrows.is_object()) throw ParseError(where + "/arrows", "expected an object keyed by arrow name");
    for (const auto& [k, v] : arrows.items()) {
      const std::string at = where + "/arrows/" + k;
      try {
        q.arrow_id(k);
      } catch (const UnknownName&) {
        throw ParseError(at, "unknown arrow");
      }
      if (!v.is_array()) throw ParseError(at, "expected a matrix as an array of rows");
      std::vector<std::vector<std::string>> rows;
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (!v[r].is_array()) throw ParseError(ptr(at, r), "expected a row array");
        rows.emplace_back();
        for (std::size_t c = 0; c < v[r].size(); ++c) {
          std::string lit = as_literal(v[r][c], ptr(ptr(at, r), c));
          try {
            Scalar::parse(Field::rationals(), lit);
          } catch (const std::invalid_argument& e) {
            throw ParseError(ptr(ptr(at, r), c), e.what());
          }
          rows.back().push_back(std::move(lit));
        }
        if (rows.back().size() != rows.front().size()) throw ParseError(ptr(at, r), "ragged matrix");
      }
      m.arrows[k] = std::move(rows);
    }
  }
  return m;
}

json witness_json(const ReportWitness& w) {
  return {{"stratum", w.stratum}, {"vertex", w.vertex}, {"reason", std::string(reason_code(w.reason))},
          {"detail", w.detail}};
}

ReportWitness witness_from_json(const json& j) {
  return {j.at("stratum").get<std::size_t>(), j.at("vertex").get<std::string>(),
          parse_reason(j.at("reason").get<std::string>()), j.at("detail").get<std::string>()};
}

ReportWitness named(const Quiver& q, const Witness& w) {
  return {w.stratum, q.vertex_name(w.vertex), w.reason, w.detail};
}

CheckEntry entry(const Quiver& q, std::string name, const CheckOutcome& o) {
  CheckEntry e{std::move(name), o.verdict, std::nullopt};
  if (o.witness) e.witness = named(q, *o.witness);
  return e;
}

}  // namespace

ParseError::ParseError(std::string where, const std::string& what)
    : std::invalid_argument(where + ": " + what), where_(std::move(where)) {}

std::string_view side_code(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "right") return Side::Right;
  if (text == "left") return Side::Left;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + std::string(text) + "'");
}

std::vector<RelationSpec> ProblemSpec::relation_specs(Field f) const {
  std::vector<RelationSpec> out;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    RelationSpec spec;
    for (std::size_t k = 0; k < relations[r].size(); ++k) {
      try {
        spec.terms.push_back(RelationTerm{Scalar::parse(f, relations[r][k].coeff), relations[r][k].path});
      } catch (const std::exception& e) {
        throw ParseError(ptr(ptr("/relations", r), k) + "/coeff", e.what());
      }
    }
    out.push_back(std::move(spec));
  }
  return out;
}

// ---------------------------------------------------------------- parsing

ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("/", "top level must be an object");
  for (const auto& [k, v] : doc.items())
    if (!kTopLevelKeys.count(k)) throw ParseError("/" + k, "unknown key");

  ProblemSpec spec;
  if (doc.contains("field")) spec.field = parse_field(doc.at("field"), "/field");

  std::vector<std::string> vertices = string_list(require(doc, "vertices", "/"), "/vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    try {
      spec.quiver.add_vertex(vertices[i]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ptr("/vertices", i), e.what());
    }
  }

  if (doc.contains("arrows")) {
    const json& arrows = doc.at("arrows");
    if (!arrows.is_array()) throw ParseError("/arrows", "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string at = ptr("/arrows", i);
      if (!arrows[i].is_object()) throw ParseError(at, "expected {name, from, to}");
      std::string name = as_string(require(arrows[i], "name", at), at + "/name");
      std::string from = as_string(require(arrows[i], "from", at), at + "/from");
      std::string to = as_string(require(arrows[i], "to", at), at + "/to");
      try {
        spec.quiver.add_arrow(name, from, to);
      } catch (const std::invalid_argument& e) {
        throw ParseError(at, e.what());
      }
    }
  }

  if (doc.contains("relations")) {
    const json& rels = doc.at("relations");
    if (!rels.is_array()) throw ParseError("/relations", "expected an array of relations");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const std::string at = ptr("/relations", r);
      if (!rels[r].is_array() || rels[r].empty()) throw ParseError(at, "a relation is a non-empty array of terms");
      std::vector<RawTerm> terms;
      for (std::size_t k = 0; k < rels[r].size(); ++k) {
        const std::string tat = ptr(at, k);
        if (!rels[r][k].is_object()) throw ParseError(tat, "expected {coeff, path}");
        RawTerm t{as_literal(require(rels[r][k], "coeff", tat), tat + "/coeff"),
                  string_list(require(rels[r][k], "path", tat), tat + "/path")};
        try {
          Scalar::parse(Field::rationals(), t.coeff);
        } catch (const std::invalid_argument& e) {
          throw ParseError(tat + "/coeff", e.what());
        }
        terms.push_back(std::move(t));
      }
      spec.relations.push_back(std::move(terms));
    }
    // Resolve names, composability, parallelism and admissibility now; a
    // bound failure only means the ideal needs a longer search, decided later.
    const std::vector<RelationSpec> specs = spec.relation_specs(Field::rationals());
    for (std::size_t r = 0; r < specs.size(); ++r) {
      try {
        build_algebra(spec.quiver, {specs[r]}, Field::rationals(), 1);
      } catch (const NotAdmissible& e) {
        const std::string msg = e.what();
        if (msg.find("within bound") == std::string::npos)
          throw ParseError(ptr("/relations", r), std::string("not admissible: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw ParseError(ptr("/relations", r), e.what());
      }
    }
  }

  const json& partition = require(doc, "partition", "/");
  if (!partition.is_array()) throw ParseError("/partition", "expected an array of strata");
  for (std::size_t i = 0; i < partition.size(); ++i)
    spec.partition.push_back(string_list(partition[i], ptr("/partition", i)));
  try {
    StratPlan::from_names(spec.quiver, spec.partition);
  } catch (const InvalidPlan& e) {
    throw ParseError("/partition", std::string("not a partition: ") + e.what());
  }

  if (doc.contains("side")) {
    try {
      spec.side = parse_side(as_string(doc.at("side"), "/side"));
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError("/side", e.what());
    }
  }

  if (doc.contains("max_path_length")) {
    const json& m = doc.at("max_path_length");
    if (!m.is_number_unsigned() || m.get<std::size_t>() == 0)
      throw ParseError("/max_path_length", "expected a positive integer");
    spec.max_path_length = m.get<std::size_t>();
  }

  if (doc.contains("modules")) {
    const json& mods = doc.at("modules");
    if (!mods.is_object()) throw ParseError("/modules", "expected an object keyed by module name");
    for (const auto& [k, v] : mods.items()) spec.modules[k] = parse_module(v, spec.quiver, "/modules/" + k);
  }

  if (doc.contains("boundary")) {
    spec.boundary = string_list(doc.at("boundary"), "/boundary");
    for (std::size_t i = 0; i < spec.boundary.size(); ++i)
      if (!spec.quiver.find_vertex(spec.boundary[i])) throw ParseError(ptr("/boundary", i), "unknown vertex");
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::set<std::string> parse_checks(const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const std::string& n : names) {
    if (n == "all") {
      out.insert(known_checks().begin(), known_checks().end());
    } else if (std::find(known_checks().begin(), known_checks().end(), n) != known_checks().end()) {
      out.insert(n);
    } else {
      throw ParseError("--check", "unknown check '" + n + "'");
    }
  }
  return out;
}

RightModule build_module(const AlgebraPtr& algebra, const ModuleSpec& m, const std::string& name) {
  const BoundAlgebra& a = *algebra;
  const Field f = a.field();
  const std::string where = "/modules/" + name;
  if (m.dims.size() != a.vertex_count()) throw ParseError(where + "/dims", "wrong number of dimensions");
  std::vector<Mat> actions;
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const Arrow& arr = a.quiver().arrow(x);
    Mat mat(f, m.dims[arr.source], m.dims[arr.target]);
    auto it = m.arrows.find(arr.name);
    if (it != m.arrows.end()) {
      const auto& rows = it->second;
      const std::size_t cols = rows.empty() ? 0 : rows.front().size();
      const bool empty_ok = mat.rows() * mat.cols() == 0 && (rows.empty() || cols == 0);
      if (!empty_ok && (rows.size() != mat.rows() || cols != mat.cols()))
        throw ParseError(where + "/arrows/" + arr.name, "expected a " + std::to_string(mat.rows()) + "x" +
                                                             std::to_string(mat.cols()) + " matrix");
      for (std::size_t r = 0; r < rows.size() && r < mat.rows(); ++r)
        for (std::size_t c = 0; c < cols && c < mat.cols(); ++c) {
          try {
            mat(r, c) = Scalar::parse(f, rows[r][c]);
          } catch (const std::exception& e) {
            throw ParseError(where + "/arrows/" + arr.name, e.what());
          }
        }
    }
    actions.push_back(std::move(mat));
  }
  try {
    return RightModule(algebra, m.dims, std::move(actions));
  } catch (const InvalidModule& e) {
    throw ParseError(where, e.what());
  }
}

// ---------------------------------------------------------------- run

int Report::exit_code() const {
  for (const CheckEntry& c : checks)
    if (c.verdict != Verdict::True) return 1;
  for (const ModuleEntry& m : modules)
    if (m.member != Verdict::True) return 1;
  return 0;
}

Report run(const ProblemSpec& spec, const RunOptions& opts) {
  using clock = std::chrono::steady_clock;
  const Field f = spec.field;
  AlgebraPtr base = build_algebra(spec.quiver, spec.relation_specs(f), f, spec.max_path_length);
  AlgebraPtr alg = spec.side == Side::Left ? opposite(*base) : base;
  const Quiver& q = alg->quiver();

  std::vector<VertexId> boundary;
  for (const std::string& b : spec.boundary) boundary.push_back(q.vertex(b));
  Stratification ctx(alg, StratPlan::from_names(q, spec.partition),
                     opts.boundary_guard ? boundary : std::vector<VertexId>{});
  const CheckOptions co{opts.parallel, opts.boundary_guard};

  Report r;
  r.field = f.name();
  r.side = spec.side;
  r.partition = spec.partition;
  r.algebra_dimension = alg->dimension();
  r.nilpotency_bound = alg->nilpotency_bound();
  if (!f.is_rational() && f.characteristic() <= alg->dimension())
    r.warnings.push_back("characteristic " + std::to_string(f.characteristic()) +
                         " does not exceed the algebra dimension " + std::to_string(alg->dimension()) +
                         "; results are exact over this field but may differ from characteristic zero");
  for (VertexId v : ctx.unsafe_vertices()) r.unsafe_vertices.push_back(q.vertex_name(v));

  for (std::size_t i = 0; i < ctx.size(); ++i)
    for (VertexId e : ctx.plan().stratum(i))
      r.standard_modules.push_back({i, q.vertex_name(e), standard_module(ctx, i, e).delta.dims()});

  std::map<std::string, double> timing;
  auto timed = [&](const std::string& name, auto&& fn) {
    auto start = clock::now();
    fn();
    timing[name] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };
  for (const std::string& c : known_checks()) {
    if (!opts.checks.count(c) || c == "membership" || c == "multiplicities") continue;
    timed(c, [&] {
      if (c == "ss") r.checks.push_back(entry(q, c, is_standardly_stratified(ctx, co)));
      if (c == "qh") r.checks.push_back(entry(q, c, is_quasi_hereditary(ctx, co)));
      if (c == "ideally-ss") r.checks.push_back(entry(q, c, is_ideally_ss(ctx, co)));
      if (c == "ideally-qh") r.checks.push_back(entry(q, c, is_ideally_qh(ctx, co)));
      if (c == "within-stratum-hom") r.checks.push_back(entry(q, c, within_stratum_hom_vanishing(ctx, co)));
      if (c == "noetherian") {
        NoetherianReport nr = is_noetherian_partition(ctx, co);
        r.checks.push_back(entry(q, c, nr.outcome));
        for (const NoetherianVertex& v : nr.vertices)
          r.noetherian.push_back({q.vertex_name(v.vertex), v.support, v.stabilizes, v.boundary_unsafe});
      }
    });
  }

  const bool membership = opts.checks.count("membership") > 0;
  const bool multiplicities = opts.checks.count("multiplicities") > 0;
  if (opts.module && !spec.modules.count(*opts.module))
    throw ParseError("--module", "no module named '" + *opts.module + "'");
  if (membership || multiplicities) {
    timed("membership", [&] {
      for (const auto& [name, ms] : spec.modules) {
        if (opts.module && name != *opts.module) continue;
        RightModule m = build_module(alg, ms, name);
        Membership mem = in_Ff_delta(ctx, m);
        ModuleEntry me;
        me.name = name;
        if (!mem.member) {
          const bool unsafe = opts.boundary_guard && ctx.stratum_unsafe(mem.witness->stratum);
          me.member = unsafe ? Verdict::InconclusiveAtBoundary : Verdict::False;
          me.witness = named(q, *mem.witness);
        } else {
          me.layer_strata = canonical_filtration(ctx, m).strata;
          if (multiplicities) {
            std::map<std::string, std::size_t> table;
            for (VertexId v = 0; v < q.vertex_count(); ++v)
              if (mem.multiplicities[v] > 0) table[q.vertex_name(v)] = mem.multiplicities[v];
            me.multiplicities = std::move(table);
          }
        }
        r.modules.push_back(std::move(me));
      }
    });
  }
  if (opts.timing) r.timing_ms = std::move(timing);
  return r;
}

// ---------------------------------------------------------------- emitters

json report_to_json(const Report& r) {
  json j;
  j["field"] = r.field;
  j["side"] = std::string(side_code(r.side));
  j["partition"] = r.partition;
  j["algebra"] = {{"dimension", r.algebra_dimension}, {"nilpotency_bound", r.nilpotency_bound}};
  j["standard_modules"] = json::array();
  for (const DeltaEntry& d : r.standard_modules)
    j["standard_modules"].push_back({{"stratum", d.stratum}, {"vertex", d.vertex}, {"dims", d.dims}});
  j["checks"] = json::array();
  for (const CheckEntry& c : r.checks) {
    json e{{"check", c.check}, {"verdict", std::string(verdict_code(c.verdict))}};
    if (c.witness) e["witness"] = witness_json(*c.witness);
    j["checks"].push_back(std::move(e));
  }
  j["modules"] = json::array();
  for (const ModuleEntry& m : r.modules) {
    json e{{"name", m.name}, {"member", std::string(verdict_code(m.member))}, {"layer_strata", m.layer_strata}};
    if (m.witness) e["witness"] = witness_json(*m.witness);
    if (m.multiplicities) e["multiplicities"] = *m.multiplicities;
    j["modules"].push_back(std::move(e));
  }
  j["noetherian"] = json::array();
  for (const NoetherianEntry& n : r.noetherian)
    j["noetherian"].push_back({{"vertex", n.vertex},
                               {"support", n.support},
                               {"stabilizes", n.stabilizes},
                               {"boundary_unsafe", n.boundary_unsafe}});
  j["boundary_unsafe_vertices"] = r.unsafe_vertices;
  j["warnings"] = r.warnings;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.field = j.at("field").get<std::string>();
  r.side = parse_side(j.at("side").get<std::string>());
  r.partition = j.at("partition").get<std::vector<std::vector<std::string>>>();
  r.algebra_dimension = j.at("algebra").at("dimension").get<std::size_t>();
  r.nilpotency_bound = j.at("algebra").at("nilpotency_bound").get<std::size_t>();
  for (const json& d : j.at("standard_modules"))
    r.standard_modules.push_back({d.at("stratum").get<std::size_t>(), d.at("vertex").get<std::string>(),
                                  d.at("dims").get<std::vector<std::size_t>>()});
  for (const json& c : j.at("checks")) {
    CheckEntry e{c.at("check").get<std::string>(), parse_verdict(c.at("verdict").get<std::string>()), std::nullopt};
    if (c.contains("witness")) e.witness = witness_from_json(c.at("witness"));
    r.checks.push_back(std::move(e));
  }
  for (const json& m : j.at("modules")) {
    ModuleEntry e;
    e.name = m.at("name").get<std::string>();
    e.member = parse_verdict(m.at("member").get<std::string>());
    e.layer_strata = m.at("layer_strata").get<std::vector<std::size_t>>();
    if (m.contains("witness")) e.witness = witness_from_json(m.at("witness"));
    if (m.contains("multiplicities")) e.multiplicities = m.at("multiplicities").get<std::map<std::string, std::size_t>>();
    r.modules.push_back(std::move(e));
  }
  for (const json& n : j.at("noetherian"))
    r.noetherian.push_back({n.at("vertex").get<std::string>(), n.at("support").get<std::vector<std::size_t>>(),
                            n.at("stabilizes").get<bool>(), n.at("boundary_unsafe").get<bool>()});
  r.unsafe_vertices = j.at("boundary_unsafe_vertices").get<std::vector<std::string>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
  return r;
}

std::string emit_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string emit_text(const Report& r) {
  std::ostringstream out;
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  auto witness = [](const ReportWitness& w) {
    return "stratum " + std::to_string(w.stratum) + ", vertex " + w.vertex + ": " + std::string(reason_code(w.reason)) +
           " (" + w.detail + ")";
  };
  out << "field " << r.field << ", side " << side_code(r.side) << ", dim " << r.algebra_dimension
      << ", nilpotency bound " << r.nilpotency_bound << "\n";
  out << "partition:";
  for (std::size_t i = 0; i < r.partition.size(); ++i) {
    out << " " << i << ":{";
    for (std::size_t k = 0; k < r.partition[i].size(); ++k) out << (k ? "," : "") << r.partition[i][k];
    out << "}";
  }
  out << "\nstandard modules:\n";
  for (const DeltaEntry& d : r.standard_modules)
    out << "  Delta_" << d.vertex << "(" << d.stratum << ") dims " << list(d.dims) << "\n";
  if (!r.checks.empty()) out << "checks:\n";
  for (const CheckEntry& c : r.checks) {
    out << "  " << c.check << ": " << verdict_code(c.verdict);
    if (c.witness) out << "  at " << witness(*c.witness);
    out << "\n";
  }
  if (!r.modules.empty()) out << "modules:\n";
  for (const ModuleEntry& m : r.modules) {
    out << "  " << m.name << ": " << verdict_code(m.member);
    if (m.witness) out << "  at " << witness(*m.witness);
    if (m.multiplicities) {
      out << "  multiplicities";
      for (const auto& [v, k] : *m.multiplicities) out << " " << v << ":" << k;
      out << "  layers " << list(m.layer_strata);
    }
    out << "\n";
  }
  for (const NoetherianEntry& n : r.noetherian)
    out << "  noetherian " << n.vertex << ": support " << list(n.support) << (n.stabilizes ? "" : " not stabilizing")
        << (n.boundary_unsafe ? " (boundary-unsafe)" : "") << "\n";
  if (!r.unsafe_vertices.empty()) {
    out << "boundary-unsafe vertices:";
    for (const std::string& v : r.unsafe_vertices) out << " " << v;
    out << "\n";
  }
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  if (r.timing_ms)
    for (const auto& [k, v] : *r.timing_ms) out << "time " << k << ": " << v << " ms\n";
  return out.str();
}

}  // namespace qstrat
