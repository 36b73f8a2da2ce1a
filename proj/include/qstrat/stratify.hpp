#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qstrat/algebra.hpp"
#include "qstrat/repmod.hpp"

namespace qstrat {

class InvalidPlan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidFiltration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Reason {
  SectionNotProjective,
  TopOutsideStratum,
  TraceNotStabilizing,
  SupportInfiniteFlag,
  EndoNotDivision,
  HomWithinStratumNonzero,
  RadSandwichNonzero,
};

std::string_view reason_code(Reason r);
Reason parse_reason(std::string_view code);

enum class Verdict { True, False, InconclusiveAtBoundary };

std::string_view verdict_code(Verdict v);
Verdict parse_verdict(std::string_view code);

struct Witness {
  std::size_t stratum = 0;
  VertexId vertex = 0;
  Reason reason = Reason::SectionNotProjective;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckOutcome {
  Verdict verdict = Verdict::True;
  /// Present whenever the verdict is not true.
  std::optional<Witness> witness;

  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

class MembershipFailure : public std::runtime_error {
 public:
  explicit MembershipFailure(Witness w);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Ordered partition of the vertex set into strata 0, 1, ..., size()-1.
/// Vertices inside a stratum are kept in ascending id order.
class StratPlan {
 public:
  StratPlan() = default;
  StratPlan(std::vector<std::vector<VertexId>> strata, std::size_t vertex_count);
  static StratPlan from_names(const Quiver& q, const std::vector<std::vector<std::string>>& strata);

  std::size_t size() const { return strata_.size(); }
  /// Strata are indexed by naturals; this is one past the last index.
  std::size_t max_index() const { return strata_.size(); }
  const std::vector<VertexId>& stratum(std::size_t i) const { return strata_.at(i); }
  const std::vector<std::vector<VertexId>>& strata() const { return strata_; }
  std::size_t stratum_of(VertexId v) const { return stratum_of_.at(v); }
  /// Union of the strata j < i.
  std::vector<VertexId> below(std::size_t i) const;
  /// Union of the strata j <= i.
  std::vector<VertexId> up_to(std::size_t i) const;

 private:
  std::vector<std::vector<VertexId>> strata_;
  std::vector<std::size_t> stratum_of_;
};

/// An algebra with a plan, plus the quotients Γ_t = A / <F_{<t}> and the ideal
/// chain I_t = <F_{<=t}>, I'_t = <F_{<t}> computed once.
class Stratification {
 public:
  /// Boundary vertices and their arrow neighbours are marked unsafe.
  Stratification(AlgebraPtr algebra, StratPlan plan, const std::vector<VertexId>& boundary = {});

  const BoundAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const StratPlan& plan() const { return plan_; }
  std::size_t size() const { return plan_.size(); }

  const AlgebraPtr& gamma(std::size_t t) const { return gamma_.at(t); }
  const HomSubspaces& ideal_up_to(std::size_t t) const { return ideal_up_to_.at(t); }
  const HomSubspaces& ideal_below(std::size_t t) const { return ideal_below_.at(t); }
  const HomSubspaces& radical() const { return radical_; }

  bool vertex_unsafe(VertexId v) const { return unsafe_.at(v); }
  bool stratum_unsafe(std::size_t t) const;
  std::vector<VertexId> unsafe_vertices() const;

 private:
  AlgebraPtr algebra_;
  StratPlan plan_;
  std::vector<AlgebraPtr> gamma_;
  std::vector<HomSubspaces> ideal_up_to_;
  std::vector<HomSubspaces> ideal_below_;
  HomSubspaces radical_;
  std::vector<bool> unsafe_;
};

struct CheckOptions {
  bool parallel = false;
  bool boundary_guard = true;
};

struct StandardModule {
  std::size_t stratum = 0;
  VertexId vertex = 0;
  RightModule projective;  // eΛ
  Submodule kernel;        // U_e(i) inside eΛ
  RightModule delta;       // eΛ / U_e(i)
  ModuleMap projection;
};

/// Δ_e(i) = eΛ / I'_i(-, e).
StandardModule standard_module(const Stratification& s, std::size_t i, VertexId e);

constexpr std::size_t all_strata = std::numeric_limits<std::size_t>::max();

struct TraceFiltration {
  std::vector<Submodule> tau;      // τ_t(M)
  std::vector<Submodule> tau_bar;  // τ̄_t(M)
  std::vector<RightModule> sections;  // τ_t / τ̄_t over Γ_t
  std::vector<std::size_t> support;   // t with a nonzero section
  bool stabilized = false;            // τ at the last considered stratum is all of M
};

/// Trace filtration over the strata t < limit.
TraceFiltration trace_filtration(const Stratification& s, const RightModule& m, std::size_t limit = all_strata);

struct Membership {
  bool member = false;
  /// Multiplicity of Δ_h(stratum(h)) for each vertex h.
  std::vector<std::size_t> multiplicities;
  std::optional<Witness> witness;
};

/// Whether M has a finite filtration by sums of standards from the strata t < limit.
Membership in_Ff_delta(const Stratification& s, const RightModule& m, std::size_t limit = all_strata);

struct LayerCheck {
  bool valid = false;
  /// Stratum of each layer chain[k+1]/chain[k]; empty for zero layers.
  std::vector<std::optional<std::size_t>> labels;
  std::vector<std::size_t> multiplicities;
  std::optional<Witness> witness;
};

/// Tests whether each layer of 0 = chain[0] ⊆ ... ⊆ chain.back() = M is a sum
/// of standards of a single stratum. Throws InvalidFiltration when the chain is
/// not an increasing chain of submodules from 0 to M.
LayerCheck verify_filtration(const Stratification& s, const RightModule& m, const std::vector<Submodule>& chain);

struct CanonicalFiltration {
  std::vector<Submodule> chain;       // strictly increasing, 0 first, M last
  std::vector<std::size_t> strata;    // stratum of each layer, strictly increasing
};

/// Chain of distinct trace-filtration terms; throws MembershipFailure when M is not filtered.
CanonicalFiltration canonical_filtration(const Stratification& s, const RightModule& m);

enum class SsRoute { Ideal, Definitional };

CheckOutcome is_standardly_stratified(const Stratification& s, const CheckOptions& opts = {},
                                      SsRoute route = SsRoute::Ideal);
CheckOutcome is_quasi_hereditary(const Stratification& s, const CheckOptions& opts = {});

struct HomWithinStratum {
  std::size_t stratum = 0;
  VertexId from = 0;
  VertexId to = 0;
  bool vanishes = true;
};

/// Whether Hom(Δ_e(i), Δ_e'(i)) = 0 for each ordered pair e != e' of stratum i.
std::vector<HomWithinStratum> hom_vanishing_within_stratum(const Stratification& s, std::size_t i);
CheckOutcome within_stratum_hom_vanishing(const Stratification& s, const CheckOptions& opts = {});

/// The section I_t(-, a) / I'_t(-, a) of aΛ as a module over Γ_t.
RightModule ideal_section(const Stratification& s, std::size_t t, VertexId a);

CheckOutcome is_ideally_ss(const Stratification& s, const CheckOptions& opts = {});
CheckOutcome is_ideally_qh(const Stratification& s, const CheckOptions& opts = {});

struct NoetherianVertex {
  VertexId vertex = 0;
  std::vector<std::size_t> support;  // t with e·I_t != e·I'_t
  bool stabilizes = true;
  bool boundary_unsafe = false;
};

struct NoetherianReport {
  CheckOutcome outcome;
  std::vector<NoetherianVertex> vertices;
};

NoetherianReport is_noetherian_partition(const Stratification& s, const CheckOptions& opts = {});

}  // namespace qstrat
