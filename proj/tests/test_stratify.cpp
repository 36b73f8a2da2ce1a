#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "qstrat/stratify.hpp"

using namespace qstrat;
using namespace qstrat::testing;

namespace {

using Dims = std::vector<std::size_t>;

// The truncated loop chain read on the left, as in the CLI fixtures.
AlgebraPtr left_chain() { return opposite(*loop_chain_algebra(4)); }

StratPlan plan(const AlgebraPtr& a, const std::vector<std::vector<std::string>>& names) {
  return StratPlan::from_names(a->quiver(), names);
}

const std::vector<std::vector<std::string>> kPartition1{{"0"}, {"1"}, {"2"}, {"3"}};
const std::vector<std::vector<std::string>> kPartition2{{"1"}, {"0"}, {"2", "3"}};
const std::vector<std::vector<std::string>> kPartition3{{"1"}, {"0"}, {"2"}, {"3"}};

Dims dims_of(const Submodule& s) {
  Dims out;
  for (const Subspace& p : s.parts) out.push_back(p.dim());
  return out;
}

}  // namespace

TEST_CASE("plans must partition the vertices") {
  AlgebraPtr a = linear_algebra(3);
  CHECK_THROWS_AS(plan(a, {{"1"}, {"2"}}), InvalidPlan);
  CHECK_THROWS_AS(plan(a, {{"1", "2"}, {"2", "3"}}), InvalidPlan);
  CHECK_THROWS_AS(plan(a, {{"1"}, {}, {"2", "3"}}), InvalidPlan);
  CHECK_THROWS_AS(plan(a, {{"1", "2", "9"}}), InvalidPlan);
  const StratPlan p = plan(a, {{"3", "1"}, {"2"}});
  CHECK(p.stratum(0) == std::vector<VertexId>{0, 2});
  CHECK(p.stratum_of(1) == 1);
  CHECK(p.below(1) == std::vector<VertexId>{0, 2});
  CHECK(p.up_to(1).size() == 3);
  CHECK(p.max_index() == 2);
}

TEST_CASE("standard modules") {
  AlgebraPtr a2 = linear_algebra(2);
  Stratification natural(a2, plan(a2, {{"1"}, {"2"}}));
  const StandardModule d1 = standard_module(natural, 0, 0);
  CHECK(d1.delta == free_right_module(a2, 0));
  const StandardModule d2 = standard_module(natural, 1, 1);
  CHECK(d2.delta == simple_module(a2, 1));
  CHECK(dims_of(d2.kernel) == Dims{1, 0});
  CHECK_THROWS_AS(standard_module(natural, 0, 1), InvalidPlan);

  AlgebraPtr left = left_chain();
  Stratification p2(left, plan(left, kPartition2));
  const StandardModule d0 = standard_module(p2, 1, 0);
  CHECK(d0.delta.dims() == Dims{2, 0, 0, 0});
  CHECK(d0.projective.dims() == Dims{2, 1, 0, 0});

  Stratification p1(left, plan(left, kPartition1));
  for (VertexId e = 0; e < 4; ++e) {
    const StandardModule d = standard_module(p1, e, e);
    CHECK(d.delta == free_right_module(left, e));
    CHECK(d.delta.dim(e) > 0);
  }
}

TEST_CASE("trace filtrations") {
  AlgebraPtr left = left_chain();
  Stratification p2(left, plan(left, kPartition2));
  const RightModule e0 = free_right_module(left, 0);
  const TraceFiltration tf = trace_filtration(p2, e0);
  CHECK(dims_of(tf.tau[0]) == Dims{0, 1, 0, 0});
  CHECK(tf.sections[0].dims() == Dims{0, 1, 0, 0});
  CHECK(tf.stabilized);

  const RightModule e1 = free_right_module(left, 1);
  const TraceFiltration top = trace_filtration(p2, e1);
  CHECK(top.tau[0] == full_submodule(e1));
  for (std::size_t t = 1; t < top.sections.size(); ++t) CHECK(top.sections[t].is_zero());

  const StandardModule d = standard_module(p2, 1, 0);
  const TraceFiltration own = trace_filtration(p2, d.delta);
  CHECK(own.sections[0].is_zero());
  CHECK(own.sections[1].dims() == d.delta.dims());
  CHECK(own.support == Dims{1});
}

TEST_CASE("membership in F(Delta)") {
  AlgebraPtr left = left_chain();
  Stratification p2(left, plan(left, kPartition2));
  const Membership zero = in_Ff_delta(p2, RightModule::zero(left));
  CHECK(zero.member);
  CHECK(zero.multiplicities == Dims{0, 0, 0, 0});

  const RightModule d1 = standard_module(p2, 0, 1).delta;
  const Membership twice = in_Ff_delta(p2, direct_sum(d1, d1));
  CHECK(twice.member);
  CHECK(twice.multiplicities == Dims{0, 2, 0, 0});

  const Membership e0 = in_Ff_delta(p2, free_right_module(left, 0));
  CHECK_FALSE(e0.member);
  REQUIRE(e0.witness);
  CHECK(e0.witness->stratum == 0);
  CHECK(e0.witness->reason == Reason::SectionNotProjective);
  CHECK_THROWS_AS(canonical_filtration(p2, free_right_module(left, 0)), MembershipFailure);

  const RightModule other = free_right_module(linear_algebra(2), 0);
  CHECK_THROWS_AS(in_Ff_delta(p2, other), AlgebraMismatch);
}

TEST_CASE("explicit filtrations") {
  AlgebraPtr a2 = linear_algebra(2);
  Stratification natural(a2, plan(a2, {{"1"}, {"2"}}));
  const RightModule p2 = free_right_module(a2, 1);
  const LayerCheck lc = verify_filtration(natural, p2, {zero_submodule(p2), radical_of_module(p2), full_submodule(p2)});
  CHECK(lc.valid);
  CHECK(lc.labels == std::vector<std::optional<std::size_t>>{0, 1});
  CHECK(lc.multiplicities == Dims{1, 1});

  const CanonicalFiltration cf = canonical_filtration(natural, p2);
  CHECK(cf.strata == Dims{0, 1});
  CHECK(cf.chain.size() == 3);
  CHECK(cf.chain[1] == radical_of_module(p2));

  const RightModule s2 = simple_module(a2, 1);
  const LayerCheck single = verify_filtration(natural, s2, {zero_submodule(s2), full_submodule(s2)});
  CHECK(single.valid);
  CHECK(single.labels == std::vector<std::optional<std::size_t>>{1});
  CHECK(canonical_filtration(natural, s2).strata == Dims{1});

  // Wrong order: the simple top first is not a submodule; a decreasing chain is rejected.
  CHECK_THROWS_AS(verify_filtration(natural, p2, {full_submodule(p2), zero_submodule(p2)}), InvalidFiltration);
  CHECK_THROWS_AS(verify_filtration(natural, p2, {zero_submodule(p2), full_submodule(p2), radical_of_module(p2),
                                                  full_submodule(p2)}),
                  InvalidFiltration);
  CHECK_THROWS_AS(verify_filtration(natural, p2, {zero_submodule(p2)}), InvalidFiltration);

  // A single layer holding standards of two strata is not a valid layer.
  const LayerCheck lumped = verify_filtration(natural, p2, {zero_submodule(p2), full_submodule(p2)});
  CHECK_FALSE(lumped.valid);
  REQUIRE(lumped.witness);

  AlgebraPtr a3 = linear_algebra(3);
  Stratification s3(a3, plan(a3, {{"1"}, {"2"}, {"3"}}));
  const RightModule sum = direct_sum(standard_module(s3, 0, 0).delta, standard_module(s3, 2, 2).delta);
  CHECK(canonical_filtration(s3, sum).strata == Dims{0, 2});
}

TEST_CASE("standardly stratified and quasi-hereditary verdicts on the loop chain") {
  AlgebraPtr left = left_chain();
  Stratification p1(left, plan(left, kPartition1));
  CHECK(is_standardly_stratified(p1).verdict == Verdict::True);
  CHECK(is_standardly_stratified(p1, {}, SsRoute::Definitional).verdict == Verdict::True);
  const CheckOutcome qh = is_quasi_hereditary(p1);
  CHECK(qh.verdict == Verdict::False);
  REQUIRE(qh.witness);
  CHECK(qh.witness->stratum == 0);
  CHECK(qh.witness->vertex == 0);
  CHECK(qh.witness->reason == Reason::EndoNotDivision);

  for (const auto& names : {kPartition2, kPartition3}) {
    Stratification s(left, plan(left, names));
    for (SsRoute route : {SsRoute::Ideal, SsRoute::Definitional}) {
      const CheckOutcome ss = is_standardly_stratified(s, {}, route);
      CHECK(ss.verdict == Verdict::False);
      REQUIRE(ss.witness);
      CHECK(ss.witness->stratum == 1);
      CHECK(ss.witness->vertex == 0);
    }
    const CheckOutcome iss = is_ideally_ss(s);
    CHECK(iss.verdict == Verdict::False);
    REQUIRE(iss.witness);
    CHECK(iss.witness->stratum == 0);
    CHECK(iss.witness->vertex == 0);
    CHECK(iss.witness->reason == Reason::SectionNotProjective);
  }
}

TEST_CASE("small verdicts") {
  AlgebraPtr a2 = linear_algebra(2);
  for (const auto& names : std::vector<std::vector<std::vector<std::string>>>{{{"1"}, {"2"}}, {{"2"}, {"1"}}}) {
    Stratification s(a2, plan(a2, names));
    CHECK(is_quasi_hereditary(s).verdict == Verdict::True);
    CHECK(is_ideally_qh(s).verdict == Verdict::True);
  }
  Stratification whole(a2, plan(a2, {{"1", "2"}}));
  CHECK(is_standardly_stratified(whole).verdict == Verdict::True);
  CHECK(is_ideally_ss(whole).verdict == Verdict::True);
  const auto pairs = hom_vanishing_within_stratum(whole, 0);
  CHECK(std::any_of(pairs.begin(), pairs.end(), [](const HomWithinStratum& h) { return !h.vanishes; }));
  const CheckOutcome within = within_stratum_hom_vanishing(whole);
  CHECK(within.verdict == Verdict::False);
  REQUIRE(within.witness);
  CHECK(within.witness->reason == Reason::HomWithinStratumNonzero);

  Stratification singleton(a2, plan(a2, {{"1"}, {"2"}}));
  CHECK(hom_vanishing_within_stratum(singleton, 0).empty());

  Quiver two;
  two.add_vertex("x");
  two.add_vertex("y");
  AlgebraPtr disjoint = build_algebra(two, {}, Field::rationals(), 2);
  Stratification both(disjoint, plan(disjoint, {{"x", "y"}}));
  CHECK(within_stratum_hom_vanishing(both).verdict == Verdict::True);
  CHECK(is_quasi_hereditary(both).verdict == Verdict::True);

  Quiver one;
  one.add_vertex("v");
  AlgebraPtr k = build_algebra(one, {}, Field::rationals(), 2);
  Stratification single(k, plan(k, {{"v"}}));
  CHECK(is_quasi_hereditary(single).verdict == Verdict::True);

  AlgebraPtr empty = build_algebra(Quiver{}, {}, Field::rationals(), 2);
  Stratification nothing(empty, StratPlan({}, 0));
  CHECK(is_noetherian_partition(nothing).outcome.verdict == Verdict::True);
  CHECK(is_standardly_stratified(nothing).verdict == Verdict::True);
}

TEST_CASE("noetherian reports and the boundary guard") {
  AlgebraPtr left = left_chain();
  const VertexId boundary = left->quiver().vertex("3");
  Stratification p3(left, plan(left, kPartition3), {boundary});
  CHECK(p3.unsafe_vertices() == std::vector<VertexId>{2, 3});
  CHECK_FALSE(p3.stratum_unsafe(0));
  CHECK(p3.stratum_unsafe(2));
  const NoetherianReport nr = is_noetherian_partition(p3);
  CHECK(nr.outcome.verdict == Verdict::True);
  REQUIRE(nr.vertices.size() == 4);
  CHECK(nr.vertices[0].support == Dims{0, 1});
  CHECK(nr.vertices[1].support == Dims{0});
  CHECK_FALSE(nr.vertices[1].boundary_unsafe);
  CHECK(nr.vertices[3].boundary_unsafe);

  // Stratum {2, 3} fails Hom vanishing only at the truncation edge.
  Stratification p2(left, plan(left, kPartition2), {boundary});
  CHECK(within_stratum_hom_vanishing(p2).verdict == Verdict::InconclusiveAtBoundary);
  CHECK(within_stratum_hom_vanishing(p2, {false, false}).verdict == Verdict::False);
  // Failures in safe strata stay hard.
  CHECK(is_standardly_stratified(p2).verdict == Verdict::False);
}

TEST_CASE("ideal sections") {
  AlgebraPtr a2 = linear_algebra(2);
  Stratification s(a2, plan(a2, {{"1"}, {"2"}}));
  CHECK(ideal_section(s, 0, 1).dims() == Dims{1, 0});
  CHECK(ideal_section(s, 1, 1).dims() == Dims{0, 1});
  CHECK(ideal_section(s, 1, 0).is_zero());
}

TEST_CASE("property: laws of the trace filtration and of standard modules") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RandomFixture fx = random_fixture(rng, trial % 3 ? Field::rationals() : Field::prime(5));
    Stratification s(fx.algebra, fx.plan);
    const FilteredModule fm = random_filtered_module(rng, s, 3);
    const RightModule& m = fm.module;

    const TraceFiltration tf = trace_filtration(s, m);
    for (std::size_t i = 0; i < s.size(); ++i) {
      Submodule below = zero_submodule(m);
      for (std::size_t j = 0; j < i; ++j) below = sum(below, tf.tau[j]);
      CHECK(tf.tau_bar[i] == below);
      if (i > 0) CHECK(tf.tau[i].total_dim() >= tf.tau[i - 1].total_dim());
      // tau_j(tau_i(M)) = tau_min(i, j)(M)
      const SubmoduleModule ti = submodule_as_module(m, tf.tau[i]);
      const TraceFiltration inner = trace_filtration(s, ti.module);
      for (std::size_t j = 0; j < s.size(); ++j)
        CHECK(map_submodule(m, ti.inclusion, inner.tau[j]) == tf.tau[std::min(i, j)]);
    }

    // Extension closure and multiplicities.
    const Membership mem = in_Ff_delta(s, m);
    CHECK(mem.member);
    CHECK(mem.multiplicities == fm.counts);
    const LayerCheck lc = verify_filtration(s, m, fm.chain);
    CHECK(lc.valid);
    CHECK(lc.multiplicities == fm.counts);
    const CanonicalFiltration cf = canonical_filtration(s, m);
    CHECK(std::is_sorted(cf.strata.begin(), cf.strata.end()));
    CHECK(std::adjacent_find(cf.strata.begin(), cf.strata.end()) == cf.strata.end());
    CHECK(verify_filtration(s, m, cf.chain).multiplicities == fm.counts);

    // Standard modules are nonzero, local and satisfy the vanishing laws.
    for (std::size_t i = 0; i < s.size(); ++i)
      for (VertexId e : s.plan().stratum(i)) {
        const StandardModule d = standard_module(s, i, e);
        CHECK(d.delta.dim(e) > 0);
        Dims top = top_dims(d.delta), expected(d.delta.vertex_count(), 0);
        expected[e] = 1;
        CHECK(top == expected);
        for (std::size_t j = i; j < s.size(); ++j)
          for (VertexId f : s.plan().stratum(j)) {
            const RightModule other = standard_module(s, j, f).delta;
            if (j > i) CHECK(hom_space(d.delta, other).empty());
            CHECK(ext1_dim(d.delta, other) == 0);
          }
      }
  }
}

TEST_CASE("property: parallel evaluation and both routes agree") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    RandomFixture fx = random_fixture(rng);
    Stratification s(fx.algebra, fx.plan);
    const CheckOptions seq{false, true}, par{true, true};
    CHECK(is_standardly_stratified(s, seq) == is_standardly_stratified(s, par));
    CHECK(is_quasi_hereditary(s, seq) == is_quasi_hereditary(s, par));
    CHECK(is_ideally_ss(s, seq) == is_ideally_ss(s, par));
    CHECK(is_ideally_qh(s, seq) == is_ideally_qh(s, par));
    CHECK(within_stratum_hom_vanishing(s, seq) == within_stratum_hom_vanishing(s, par));
    const bool ideal = is_standardly_stratified(s).verdict == Verdict::True;
    CHECK(ideal == (is_standardly_stratified(s, {}, SsRoute::Definitional).verdict == Verdict::True));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (const HomWithinStratum& h : hom_vanishing_within_stratum(s, i))
        CHECK(h.vanishes == hom_space(standard_module(s, i, h.from).delta, standard_module(s, i, h.to).delta).empty());
  }
}
