#include <doctest.h>

#include "qstrat/problem.hpp"

using namespace qstrat;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(QSTRAT_TEST_DATA) + "/" + name; }

RunOptions checks(std::initializer_list<std::string> names) {
  RunOptions o;
  o.checks = parse_checks(names);
  return o;
}

const CheckEntry& find(const Report& r, const std::string& name) {
  for (const CheckEntry& c : r.checks)
    if (c.check == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

std::string error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

json a2_doc() {
  return json::parse(R"({"vertices": ["1", "2"], "arrows": [{"name": "a", "from": "1", "to": "2"}],
                         "relations": [], "partition": [["1"], ["2"]]})");
}

}  // namespace

TEST_CASE("minimal documents parse") {
  const ProblemSpec one = parse_problem(R"({"vertices": ["v"], "partition": [["v"]]})");
  CHECK(one.quiver.vertex_count() == 1);
  CHECK(one.field == Field::rationals());
  CHECK(one.side == Side::Right);

  const ProblemSpec a2 = parse_problem(a2_doc().dump());
  CHECK(a2.quiver.arrow_count() == 1);
  CHECK(a2.partition.size() == 2);

  json fp = a2_doc();
  fp["field"] = {{"Fp", 7}};
  CHECK(parse_problem(fp.dump()).field == Field::prime(7));
  fp["field"] = "Fp:5";
  CHECK(parse_problem(fp.dump()).field == Field::prime(5));
}

TEST_CASE("input errors carry their location") {
  json bad = a2_doc();
  bad["relations"] = json::parse(R"([[{"coeff": "1", "path": ["a"]}]])");
  CHECK(error_of(bad.dump()).find("not admissible") != std::string::npos);
  CHECK(error_of(bad.dump()).find("/relations/0") != std::string::npos);

  bad = a2_doc();
  bad["vertices"] = {"1", "1"};
  CHECK(error_of(bad.dump()).find("/vertices/1") != std::string::npos);

  bad = a2_doc();
  bad["arrows"][0]["to"] = "9";
  CHECK(error_of(bad.dump()).find("/arrows/0") != std::string::npos);

  bad = a2_doc();
  bad["partition"] = json::parse(R"([["1"], ["1", "2"]])");
  CHECK(error_of(bad.dump()).find("/partition") != std::string::npos);
  bad["partition"] = json::parse(R"([["1"]])");
  CHECK(error_of(bad.dump()).find("/partition") != std::string::npos);

  bad = a2_doc();
  bad["arrows"].push_back({{"name", "b"}, {"from", "2"}, {"to", "2"}});
  bad["relations"] = json::parse(R"([[{"coeff": "1/0", "path": ["b", "b"]}]])");
  CHECK(error_of(bad.dump()).find("/relations/0/0/coeff") != std::string::npos);
  bad["relations"] = json::parse(R"([[{"coeff": "one", "path": ["b", "b"]}]])");
  CHECK(error_of(bad.dump()).find("/relations/0/0/coeff") != std::string::npos);
  bad["relations"] = json::parse(R"([[{"coeff": 2, "path": ["b", "b"]}]])");
  CHECK(error_of(bad.dump()).empty());

  bad = a2_doc();
  bad["colour"] = "red";
  CHECK(error_of(bad.dump()).find("/colour") != std::string::npos);

  bad = a2_doc();
  bad["side"] = "up";
  CHECK(error_of(bad.dump()).find("/side") != std::string::npos);

  CHECK(error_of("{\n  \"vertices\": [\"1\" \"2\"]\n}").find("line 2") != std::string::npos);
  CHECK_THROWS_AS(load_problem(data("does-not-exist.json")), ParseError);
  CHECK_THROWS_AS(parse_checks({"ss", "bogus"}), ParseError);
  CHECK(parse_checks({"all"}).size() == known_checks().size());
}

TEST_CASE("loop chain regression through the report") {
  const Report r1 = run(load_problem(data("loops_partition1.json")), checks({"ss", "qh"}));
  CHECK(find(r1, "ss").verdict == Verdict::True);
  const CheckEntry& qh = find(r1, "qh");
  CHECK(qh.verdict == Verdict::False);
  REQUIRE(qh.witness);
  CHECK(qh.witness->stratum == 0);
  CHECK(qh.witness->vertex == "0");
  CHECK(qh.witness->reason == Reason::EndoNotDivision);
  CHECK(r1.exit_code() == 1);
  CHECK(r1.unsafe_vertices == std::vector<std::string>{"2", "3"});

  for (const char* name : {"loops_partition2.json", "loops_partition3.json"}) {
    const Report r = run(load_problem(data(name)), checks({"ss"}));
    const CheckEntry& ss = find(r, "ss");
    CHECK(ss.verdict == Verdict::False);
    REQUIRE(ss.witness);
    CHECK(ss.witness->stratum == 1);
    CHECK(ss.witness->vertex == "0");
  }

  const Report r2 = run(load_problem(data("loops_partition2.json")), checks({"membership"}));
  REQUIRE(r2.modules.size() == 2);
  CHECK(r2.modules[0].name == "P0");
  CHECK(r2.modules[0].member == Verdict::False);
}

TEST_CASE("empty check sets report only the standard modules") {
  const Report r = run(parse_problem(a2_doc().dump()), RunOptions{});
  CHECK(r.checks.empty());
  CHECK(r.modules.empty());
  REQUIRE(r.standard_modules.size() == 2);
  CHECK(r.standard_modules[1].dims == std::vector<std::size_t>{0, 1});
  CHECK(r.exit_code() == 0);
}

TEST_CASE("modules, multiplicities and selection") {
  const ProblemSpec spec = load_problem(data("a2.json"));
  RunOptions o = checks({"multiplicities"});
  const Report r = run(spec, o);
  REQUIRE(r.modules.size() == 1);
  CHECK(r.modules[0].member == Verdict::True);
  REQUIRE(r.modules[0].multiplicities);
  CHECK(*r.modules[0].multiplicities == std::map<std::string, std::size_t>{{"1", 1}, {"2", 1}});
  CHECK(r.modules[0].layer_strata == std::vector<std::size_t>{0, 1});

  o.module = "nope";
  CHECK_THROWS_AS(run(spec, o), ParseError);

  json doc = a2_doc();
  doc["modules"] = json::parse(R"({"S": {"dims": {"2": 1}}, "bad": {"dims": [1, 1], "arrows": {"a": [["1", "0"]]}}})");
  o = checks({"membership"});
  o.module = "S";
  const Report s = run(parse_problem(doc.dump()), o);
  REQUIRE(s.modules.size() == 1);
  CHECK(s.modules[0].member == Verdict::True);
  CHECK(s.modules[0].layer_strata == std::vector<std::size_t>{1});
  CHECK_FALSE(s.modules[0].multiplicities);
  o.module = "bad";
  CHECK_THROWS_AS(run(parse_problem(doc.dump()), o), ParseError);
}

TEST_CASE("reports round-trip and are deterministic") {
  const ProblemSpec spec = load_problem(data("loops_partition2.json"));
  RunOptions o = checks({"all"});
  const Report r = run(spec, o);
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK(report_from_json(json::parse(emit_json(r))) == r);
  CHECK(emit_json(run(spec, o)) == emit_json(r));
  o.parallel = true;
  CHECK(emit_json(run(spec, o)) == emit_json(r));

  o.timing = true;
  const Report timed = run(spec, o);
  REQUIRE(timed.timing_ms);
  CHECK(report_from_json(report_to_json(timed)) == timed);
  CHECK_FALSE(emit_text(timed).empty());
}

TEST_CASE("left side equals the right side of a hand-written opposite") {
  json left = json::parse(R"({"vertices": ["1", "2", "3"],
    "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "2", "to": "3"},
               {"name": "c", "from": "2", "to": "2"}],
    "relations": [[{"coeff": "1", "path": ["a", "b"]}], [{"coeff": "1", "path": ["c", "c"]}]],
    "partition": [["2"], ["1", "3"]], "side": "left"})");
  json right = left;
  right["side"] = "right";
  right["arrows"] = json::parse(R"([{"name": "a", "from": "2", "to": "1"}, {"name": "b", "from": "3", "to": "2"},
                                    {"name": "c", "from": "2", "to": "2"}])");
  right["relations"] = json::parse(R"([[{"coeff": "1", "path": ["b", "a"]}], [{"coeff": "1", "path": ["c", "c"]}]])");
  const RunOptions o = checks({"all"});
  const Report l = run(parse_problem(left.dump()), o), r = run(parse_problem(right.dump()), o);
  REQUIRE(l.checks.size() == r.checks.size());
  for (std::size_t k = 0; k < l.checks.size(); ++k) {
    CHECK(l.checks[k].check == r.checks[k].check);
    CHECK(l.checks[k].verdict == r.checks[k].verdict);
  }
  CHECK(l.standard_modules == r.standard_modules);
}

TEST_CASE("small characteristic produces a warning") {
  json doc = a2_doc();
  doc["field"] = "Fp:2";
  const Report r = run(parse_problem(doc.dump()), checks({"qh"}));
  CHECK(r.warnings.size() == 1);
  doc["field"] = "Fp:5";
  CHECK(run(parse_problem(doc.dump()), checks({"qh"})).warnings.empty());
}
