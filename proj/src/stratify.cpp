#include "qstrat/stratify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <utility>

namespace qstrat {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 7> kReasons{{
    {Reason::SectionNotProjective, "section-not-projective"},
    {Reason::TopOutsideStratum, "top-outside-stratum"},
    {Reason::TraceNotStabilizing, "trace-not-stabilizing"},
    {Reason::SupportInfiniteFlag, "support-infinite-flag"},
    {Reason::EndoNotDivision, "endo-not-division"},
    {Reason::HomWithinStratumNonzero, "hom-within-stratum-nonzero"},
    {Reason::RadSandwichNonzero, "rad-sandwich-nonzero"},
}};

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + "]";
}

const std::string& name(const Stratification& s, VertexId v) { return s.algebra().quiver().vertex_name(v); }

void require_own_module(const Stratification& s, const RightModule& m) {
  if (m.algebra_ptr() != s.algebra_ptr()) throw AlgebraMismatch("module is not over the stratified algebra");
}

// Inner expressed in the coordinates of the basis of outer.
Submodule relative(const Submodule& outer, const Submodule& inner) {
  Submodule r;
  for (std::size_t v = 0; v < outer.parts.size(); ++v) {
    std::vector<Vec> gens;
    for (const Vec& b : inner.parts[v].basis()) gens.push_back(outer.parts[v].coordinates(b));
    r.parts.push_back(Subspace::span(outer.parts[v].field(), outer.parts[v].dim(), gens));
  }
  return r;
}

// outer / inner as a module over the algebra of m.
RightModule layer(const RightModule& m, const Submodule& outer, const Submodule& inner) {
  SubmoduleModule o = submodule_as_module(m, outer);
  return quotient_module(o.module, relative(outer, inner)).module;
}

Submodule column_submodule(const RightModule& p, const HomSubspaces& ideal, VertexId e) {
  Submodule s;
  for (VertexId v = 0; v < p.vertex_count(); ++v) s.parts.push_back(ideal[v][e]);
  return s;
}

struct Item {
  std::size_t stratum;
  VertexId vertex;
};

std::vector<Item> stratum_items(const Stratification& s) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (VertexId e : s.plan().stratum(i)) items.push_back({i, e});
  return items;
}

std::vector<Item> chain_items(const Stratification& s) {
  std::vector<Item> items;
  for (std::size_t t = 0; t < s.size(); ++t)
    for (VertexId a = 0; a < s.algebra().vertex_count(); ++a) items.push_back({t, a});
  return items;
}

template <class F>
std::vector<std::optional<Witness>> run_items(const std::vector<Item>& items, bool parallel, F f) {
  std::vector<std::optional<Witness>> out(items.size());
  if (!parallel) {
    for (std::size_t k = 0; k < items.size(); ++k) out[k] = f(items[k]);
    return out;
  }
  std::vector<std::future<std::optional<Witness>>> futures;
  futures.reserve(items.size());
  for (const Item& it : items) futures.push_back(std::async(std::launch::async, f, it));
  for (std::size_t k = 0; k < items.size(); ++k) out[k] = futures[k].get();
  return out;
}

// A failure in a safe stratum decides the verdict; failures confined to
// boundary-unsafe strata only make it inconclusive.
CheckOutcome aggregate(const Stratification& s, const std::vector<std::optional<Witness>>& failures,
                       const CheckOptions& opts) {
  const std::optional<Witness>* first_unsafe = nullptr;
  for (const auto& f : failures) {
    if (!f) continue;
    if (!opts.boundary_guard || !s.stratum_unsafe(f->stratum)) return {Verdict::False, f};
    if (!first_unsafe) first_unsafe = &f;
  }
  if (first_unsafe) return {Verdict::InconclusiveAtBoundary, *first_unsafe};
  return {};
}

std::optional<Witness> ss_ideal_item(const Stratification& s, Item it) {
  for (std::size_t t = 0; t < it.stratum; ++t) {
    RightModule sec = ideal_section(s, t, it.vertex);
    if (sec.is_zero() || is_projective(sec)) continue;
    return Witness{it.stratum, it.vertex, Reason::SectionNotProjective,
                   "U_" + name(s, it.vertex) + "(" + std::to_string(it.stratum) + "): section at stratum " +
                       std::to_string(t) + " with dims " + dims_string(sec.dims()) +
                       " is not projective over the quotient by strata < " + std::to_string(t)};
  }
  return std::nullopt;
}

std::optional<Witness> ss_definitional_item(const Stratification& s, Item it) {
  StandardModule sm = standard_module(s, it.stratum, it.vertex);
  RightModule u = submodule_as_module(sm.projective, sm.kernel).module;
  Membership mem = in_Ff_delta(s, u, it.stratum);
  if (mem.member) return std::nullopt;
  Witness w = *mem.witness;
  return Witness{it.stratum, it.vertex, w.reason,
                 "U_" + name(s, it.vertex) + "(" + std::to_string(it.stratum) + "): " + w.detail};
}

std::optional<Witness> endo_item(const Stratification& s, Item it) {
  const VertexId e = it.vertex;
  if (s.ideal_below(it.stratum)[e][e].contains(s.radical()[e][e])) return std::nullopt;
  return Witness{it.stratum, e, Reason::EndoNotDivision,
                 "e_" + name(s, e) + " rad e_" + name(s, e) + " is not inside the ideal of strata < " +
                     std::to_string(it.stratum) + "; End(Delta) is not a division ring"};
}

std::optional<Witness> within_item(const Stratification& s, Item it) {
  const VertexId e = it.vertex;
  for (VertexId f : s.plan().stratum(it.stratum)) {
    if (f == e) continue;
    if (s.ideal_below(it.stratum)[e][f].dim() == s.algebra().hom_dim(e, f)) continue;
    return Witness{it.stratum, e, Reason::HomWithinStratumNonzero,
                   "Hom(Delta_" + name(s, e) + ", Delta_" + name(s, f) + ") is nonzero"};
  }
  return std::nullopt;
}

std::optional<Witness> ideal_ss_item(const Stratification& s, Item it) {
  RightModule sec = ideal_section(s, it.stratum, it.vertex);
  if (sec.is_zero() || is_projective(sec)) return std::nullopt;
  return Witness{it.stratum, it.vertex, Reason::SectionNotProjective,
                 "e_" + name(s, it.vertex) + " I_" + std::to_string(it.stratum) + " / e_" + name(s, it.vertex) +
                     " I'_" + std::to_string(it.stratum) + " with dims " + dims_string(sec.dims()) +
                     " is not projective"};
}

}  // namespace

// ---------------------------------------------------------------- codes

std::string_view reason_code(Reason r) {
  for (const auto& [k, v] : kReasons)
    if (k == r) return v;
  return "unknown";
}

Reason parse_reason(std::string_view code) {
  for (const auto& [k, v] : kReasons)
    if (v == code) return k;
  throw std::invalid_argument("unknown reason code '" + std::string(code) + "'");
}

std::string_view verdict_code(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::InconclusiveAtBoundary:
      return "inconclusive-at-boundary";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view code) {
  if (code == "true") return Verdict::True;
  if (code == "false") return Verdict::False;
  if (code == "inconclusive-at-boundary") return Verdict::InconclusiveAtBoundary;
  throw std::invalid_argument("unknown verdict '" + std::string(code) + "'");
}

MembershipFailure::MembershipFailure(Witness w)
    : std::runtime_error("module is not filtered by standard modules: " + std::string(reason_code(w.reason)) +
                         " at stratum " + std::to_string(w.stratum) + " (" + w.detail + ")"),
      witness_(std::move(w)) {}

// ---------------------------------------------------------------- plans

StratPlan::StratPlan(std::vector<std::vector<VertexId>> strata, std::size_t vertex_count)
    : strata_(std::move(strata)), stratum_of_(vertex_count, all_strata) {
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (strata_[i].empty()) throw InvalidPlan("stratum " + std::to_string(i) + " is empty");
    std::sort(strata_[i].begin(), strata_[i].end());
    for (VertexId v : strata_[i]) {
      if (v >= vertex_count) throw InvalidPlan("stratum " + std::to_string(i) + " names a vertex outside the quiver");
      if (stratum_of_[v] != all_strata)
        throw InvalidPlan("vertex " + std::to_string(v) + " appears in more than one stratum");
      stratum_of_[v] = i;
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v)
    if (stratum_of_[v] == all_strata) throw InvalidPlan("vertex " + std::to_string(v) + " is in no stratum");
}

StratPlan StratPlan::from_names(const Quiver& q, const std::vector<std::vector<std::string>>& strata) {
  std::vector<std::vector<VertexId>> ids;
  std::vector<bool> seen(q.vertex_count(), false);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    ids.emplace_back();
    for (const std::string& n : strata[i]) {
      auto v = q.find_vertex(n);
      if (!v) throw InvalidPlan("partition names unknown vertex '" + n + "'");
      if (seen[*v]) throw InvalidPlan("vertex '" + n + "' appears more than once in the partition");
      seen[*v] = true;
      ids.back().push_back(*v);
    }
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (!seen[v]) throw InvalidPlan("vertex '" + q.vertex_name(v) + "' is missing from the partition");
  return StratPlan(std::move(ids), q.vertex_count());
}

std::vector<VertexId> StratPlan::below(std::size_t i) const {
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < i && j < strata_.size(); ++j) out.insert(out.end(), strata_[j].begin(), strata_[j].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> StratPlan::up_to(std::size_t i) const { return below(i + 1); }

// ---------------------------------------------------------------- context

Stratification::Stratification(AlgebraPtr algebra, StratPlan plan, const std::vector<VertexId>& boundary)
    : algebra_(std::move(algebra)), plan_(std::move(plan)) {
  const BoundAlgebra& a = *algebra_;
  std::size_t covered = 0;
  for (const auto& st : plan_.strata()) covered += st.size();
  if (covered != a.vertex_count()) throw InvalidPlan("plan does not partition the vertices of the algebra");

  radical_ = radical_basis(a);
  for (std::size_t t = 0; t < plan_.size(); ++t) {
    gamma_.push_back(t == 0 ? algebra_ : quotient_by_vertices(a, plan_.below(t)));
    ideal_below_.push_back(t == 0 ? zero_hom_subspaces(a) : ideal_up_to_.back());
    ideal_up_to_.push_back(ideal_span(a, plan_.up_to(t)));
  }

  unsafe_.assign(a.vertex_count(), false);
  for (VertexId b : boundary) {
    if (b >= a.vertex_count()) throw InvalidPlan("boundary vertex outside the quiver");
    unsafe_[b] = true;
    for (const Arrow& arr : a.quiver().arrows()) {
      if (arr.source == b) unsafe_[arr.target] = true;
      if (arr.target == b) unsafe_[arr.source] = true;
    }
  }
}

bool Stratification::stratum_unsafe(std::size_t t) const {
  for (VertexId v : plan_.stratum(t))
    if (unsafe_[v]) return true;
  return false;
}

std::vector<VertexId> Stratification::unsafe_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < unsafe_.size(); ++v)
    if (unsafe_[v]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- modules

StandardModule standard_module(const Stratification& s, std::size_t i, VertexId e) {
  if (i >= s.size() || s.plan().stratum_of(e) != i)
    throw InvalidPlan("vertex '" + name(s, e) + "' is not in stratum " + std::to_string(i));
  StandardModule sm;
  sm.stratum = i;
  sm.vertex = e;
  sm.projective = free_right_module(s.algebra_ptr(), e);
  sm.kernel = column_submodule(sm.projective, s.ideal_below(i), e);
  QuotientModule q = quotient_module(sm.projective, sm.kernel);
  sm.delta = std::move(q.module);
  sm.projection = std::move(q.projection);
  if (sm.delta.dim(e) == 0) throw std::logic_error("standard module lost its top generator");
  return sm;
}

RightModule ideal_section(const Stratification& s, std::size_t t, VertexId a) {
  RightModule p = free_right_module(s.algebra_ptr(), a);
  RightModule sec = layer(p, column_submodule(p, s.ideal_up_to(t), a), column_submodule(p, s.ideal_below(t), a));
  return sec.rehome(s.gamma(t));
}

TraceFiltration trace_filtration(const Stratification& s, const RightModule& m, std::size_t limit) {
  require_own_module(s, m);
  const std::size_t count = std::min(limit, s.size());
  TraceFiltration tf;
  for (std::size_t t = 0; t < count; ++t) {
    tf.tau.push_back(trace_of_vertices(m, s.plan().up_to(t)));
    tf.tau_bar.push_back(trace_of_vertices(m, s.plan().below(t)));
    RightModule sec = layer(m, tf.tau.back(), tf.tau_bar.back()).rehome(s.gamma(t));
    if (!sec.is_zero()) tf.support.push_back(t);
    tf.sections.push_back(std::move(sec));
  }
  tf.stabilized = count == 0 ? m.is_zero() : tf.tau.back().total_dim() == m.total_dim();
  return tf;
}

Membership in_Ff_delta(const Stratification& s, const RightModule& m, std::size_t limit) {
  const std::size_t n = m.vertex_count();
  TraceFiltration tf = trace_filtration(s, m, limit);
  Membership out;
  out.multiplicities.assign(n, 0);
  if (!tf.stabilized) {
    const std::size_t last = tf.tau.empty() ? 0 : tf.tau.size() - 1;
    VertexId v = 0;
    while (v + 1 < n && m.dim(v) == (tf.tau.empty() ? 0 : tf.tau.back().parts[v].dim())) ++v;
    out.witness = Witness{last, v, Reason::TraceNotStabilizing,
                          "trace of strata <= " + std::to_string(last) + " does not exhaust the module"};
    return out;
  }
  for (std::size_t t : tf.support) {
    const RightModule& sec = tf.sections[t];
    Projectivity pr = projectivity(sec);
    for (VertexId v = 0; v < n; ++v)
      if (pr.multiplicities[v] > 0 && s.plan().stratum_of(v) != t) {
        out.witness = Witness{t, v, Reason::TopOutsideStratum,
                              "section at stratum " + std::to_string(t) + " has top at vertex '" + name(s, v) +
                                  "' of stratum " + std::to_string(s.plan().stratum_of(v))};
        return out;
      }
    if (!pr.projective) {
      VertexId v = 0;
      while (v + 1 < n && pr.multiplicities[v] == 0) ++v;
      out.witness = Witness{t, v, Reason::SectionNotProjective,
                            "section at stratum " + std::to_string(t) + " with dims " + dims_string(sec.dims()) +
                                " is not projective over the quotient by strata < " + std::to_string(t)};
      return out;
    }
    for (VertexId v = 0; v < n; ++v) out.multiplicities[v] += pr.multiplicities[v];
  }
  out.member = true;
  return out;
}

LayerCheck verify_filtration(const Stratification& s, const RightModule& m, const std::vector<Submodule>& chain) {
  require_own_module(s, m);
  const std::size_t n = m.vertex_count();
  if (chain.empty()) throw InvalidFiltration("empty chain");
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (!is_submodule(m, chain[k])) throw InvalidFiltration("chain term " + std::to_string(k) + " is not a submodule");
  if (chain.front().total_dim() != 0) throw InvalidFiltration("chain does not start at 0");
  if (chain.back().total_dim() != m.total_dim()) throw InvalidFiltration("chain does not end at the module");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    for (VertexId v = 0; v < n; ++v)
      if (!chain[k + 1].parts[v].contains(chain[k].parts[v]))
        throw InvalidFiltration("chain is not increasing at term " + std::to_string(k + 1));

  LayerCheck out;
  out.multiplicities.assign(n, 0);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    RightModule l = layer(m, chain[k + 1], chain[k]);
    if (l.is_zero()) {
      out.labels.push_back(std::nullopt);
      continue;
    }
    std::vector<std::size_t> top = top_dims(l);
    std::size_t st = all_strata;
    for (VertexId v = 0; v < n; ++v)
      if (top[v] > 0) st = std::min(st, s.plan().stratum_of(v));
    const std::string where = "layer " + std::to_string(k + 1);
    for (VertexId v = 0; v < n; ++v)
      if (top[v] > 0 && s.plan().stratum_of(v) != st) {
        out.witness = Witness{st, v, Reason::TopOutsideStratum, where + " has top in more than one stratum"};
        return out;
      }
    for (VertexId v : s.plan().below(st))
      if (l.dim(v) != 0) {
        out.witness = Witness{st, v, Reason::SectionNotProjective,
                              where + " is nonzero at vertex '" + name(s, v) + "' below its top stratum"};
        return out;
      }
    Projectivity pr = projectivity(l.rehome(s.gamma(st)));
    if (!pr.projective) {
      out.witness = Witness{st, s.plan().stratum(st).front(), Reason::SectionNotProjective,
                            where + " with dims " + dims_string(l.dims()) + " is not a sum of standards"};
      return out;
    }
    for (VertexId v = 0; v < n; ++v) out.multiplicities[v] += pr.multiplicities[v];
    out.labels.push_back(st);
  }
  out.valid = true;
  return out;
}

CanonicalFiltration canonical_filtration(const Stratification& s, const RightModule& m) {
  Membership mem = in_Ff_delta(s, m);
  if (!mem.member) throw MembershipFailure(*mem.witness);
  TraceFiltration tf = trace_filtration(s, m);
  CanonicalFiltration out;
  out.chain.push_back(zero_submodule(m));
  for (std::size_t t : tf.support) {
    out.chain.push_back(tf.tau[t]);
    out.strata.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------- verdicts

CheckOutcome is_standardly_stratified(const Stratification& s, const CheckOptions& opts, SsRoute route) {
  auto failures = run_items(stratum_items(s), opts.parallel, [&s, route](Item it) {
    return route == SsRoute::Ideal ? ss_ideal_item(s, it) : ss_definitional_item(s, it);
  });
  return aggregate(s, failures, opts);
}

CheckOutcome is_quasi_hereditary(const Stratification& s, const CheckOptions& opts) {
  auto failures = run_items(stratum_items(s), opts.parallel, [&s](Item it) {
    if (auto w = ss_ideal_item(s, it)) return w;
    return endo_item(s, it);
  });
  return aggregate(s, failures, opts);
}

std::vector<HomWithinStratum> hom_vanishing_within_stratum(const Stratification& s, std::size_t i) {
  std::vector<HomWithinStratum> out;
  for (VertexId e : s.plan().stratum(i))
    for (VertexId f : s.plan().stratum(i)) {
      if (e == f) continue;
      out.push_back({i, e, f, s.ideal_below(i)[e][f].dim() == s.algebra().hom_dim(e, f)});
    }
  return out;
}

CheckOutcome within_stratum_hom_vanishing(const Stratification& s, const CheckOptions& opts) {
  auto failures = run_items(stratum_items(s), opts.parallel, [&s](Item it) { return within_item(s, it); });
  return aggregate(s, failures, opts);
}

CheckOutcome is_ideally_ss(const Stratification& s, const CheckOptions& opts) {
  auto failures = run_items(chain_items(s), opts.parallel, [&s](Item it) { return ideal_ss_item(s, it); });
  return aggregate(s, failures, opts);
}

CheckOutcome is_ideally_qh(const Stratification& s, const CheckOptions& opts) {
  const BoundAlgebra& a = s.algebra();
  std::vector<HomSubspaces> sandwich;
  for (std::size_t t = 0; t < s.size(); ++t)
    sandwich.push_back(product_span(a, product_span(a, s.ideal_up_to(t), s.radical()), s.ideal_up_to(t)));
  auto failures = run_items(chain_items(s), opts.parallel, [&s, &a, &sandwich](Item it) -> std::optional<Witness> {
    if (auto w = ideal_ss_item(s, it)) return w;
    const VertexId d = it.vertex;
    for (VertexId c = 0; c < a.vertex_count(); ++c)
      if (!s.ideal_below(it.stratum)[c][d].contains(sandwich[it.stratum][c][d]))
        return Witness{it.stratum, d, Reason::RadSandwichNonzero,
                       "I_" + std::to_string(it.stratum) + " rad I_" + std::to_string(it.stratum) +
                           " is not inside I'_" + std::to_string(it.stratum) + " on Hom(" + name(s, c) + ", " +
                           name(s, d) + ")"};
    return std::nullopt;
  });
  return aggregate(s, failures, opts);
}

NoetherianReport is_noetherian_partition(const Stratification& s, const CheckOptions& opts) {
  const BoundAlgebra& a = s.algebra();
  NoetherianReport out;
  std::vector<std::optional<Witness>> failures;
  for (VertexId e = 0; e < a.vertex_count(); ++e) {
    NoetherianVertex nv;
    nv.vertex = e;
    nv.boundary_unsafe = s.vertex_unsafe(e);
    for (std::size_t t = 0; t < s.size(); ++t)
      for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (s.ideal_up_to(t)[v][e].dim() != s.ideal_below(t)[v][e].dim()) {
          nv.support.push_back(t);
          break;
        }
    if (s.size() > 0)
      for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (s.ideal_up_to(s.size() - 1)[v][e].dim() != a.hom_dim(v, e)) nv.stabilizes = false;
    if (!nv.stabilizes)
      failures.push_back(Witness{s.plan().stratum_of(e), e, Reason::TraceNotStabilizing,
                                 "e_" + name(s, e) + " I_t never reaches e_" + name(s, e) + " Lambda"});
    out.vertices.push_back(std::move(nv));
  }
  out.outcome = aggregate(s, failures, opts);
  return out;
}

}  // namespace qstrat
