#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace qstrat::testing {

namespace {

std::vector<RelationSpec> monomials(const std::vector<std::vector<std::string>>& zero_paths, Field f) {
  std::vector<RelationSpec> rels;
  for (const auto& p : zero_paths) rels.push_back(RelationSpec{{RelationTerm{Scalar(f, 1), p}}});
  return rels;
}

}  // namespace

AlgebraPtr monomial_algebra(const Quiver& q, const std::vector<std::vector<std::string>>& zero_paths, Field f,
                            std::size_t max_length) {
  return build_algebra(q, monomials(zero_paths, f), f, max_length);
}

AlgebraPtr linear_algebra(std::size_t n, const std::vector<std::vector<std::string>>& zero_paths, Field f) {
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return monomial_algebra(q, zero_paths, f, n + 1);
}

AlgebraPtr loop_chain_algebra(std::size_t n, Field f) {
  Quiver q;
  for (std::size_t i = 0; i < n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    q.add_arrow("b" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  std::vector<std::vector<std::string>> zero;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    zero.push_back({a, a});
    if (i + 1 < n) {
      zero.push_back({a, b});
      zero.push_back({b, "a" + std::to_string(i + 1)});
    }
    if (i + 2 < n) zero.push_back({b, "b" + std::to_string(i + 1)});
  }
  return monomial_algebra(q, zero, f, 4);
}

AlgebraPtr truncated_polynomial(std::size_t k, Field f) {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("x", "v", "v");
  return monomial_algebra(q, {std::vector<std::string>(k, "x")}, f, k + 1);
}

StratPlan random_plan(std::mt19937& rng, std::size_t vertex_count) {
  std::vector<VertexId> order(vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<VertexId>> strata;
  std::bernoulli_distribution cut(0.5);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || cut(rng)) strata.emplace_back();
    strata.back().push_back(order[k]);
  }
  return StratPlan(std::move(strata), vertex_count);
}

RandomFixture random_fixture(std::mt19937& rng, Field f, std::size_t max_vertices, std::size_t max_arrows) {
  RandomFixture fx;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_arrows)(rng);
  for (std::size_t i = 0; i < n; ++i) fx.quiver.add_vertex(std::to_string(i));
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  for (std::size_t k = 0; k < m; ++k) fx.quiver.add_arrow("x" + std::to_string(k), vertex(rng), vertex(rng));

  const auto& arrows = fx.quiver.arrows();
  std::bernoulli_distribution keep(0.5);
  for (const Arrow& x : arrows)
    for (const Arrow& y : arrows)
      if (x.target == y.source) {
        if (keep(rng)) fx.zero_paths.push_back({x.name, y.name});
        for (const Arrow& z : arrows)
          if (y.target == z.source) fx.zero_paths.push_back({x.name, y.name, z.name});
      }
  fx.algebra = monomial_algebra(fx.quiver, fx.zero_paths, f, 4);
  fx.plan = random_plan(rng, n);
  return fx;
}

Scalar random_scalar(std::mt19937& rng, Field f, long lo, long hi) {
  return Scalar(f, std::uniform_int_distribution<long>(lo, hi)(rng));
}

Mat random_mat(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols, long lo, long hi) {
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, f, lo, hi);
  return m;
}

ModuleMap random_map(std::mt19937& rng, const RightModule& m, const RightModule& n,
                     const std::vector<ModuleMap>& basis) {
  ModuleMap out = zero_map(m, n);
  for (const ModuleMap& b : basis) {
    const Scalar c = random_scalar(rng, m.field());
    for (std::size_t v = 0; v < out.components.size(); ++v)
      out.components[v] = out.components[v] + c * b.components[v];
  }
  return out;
}

Submodule map_submodule(const RightModule& n, const ModuleMap& f, const Submodule& s) {
  Submodule out;
  for (VertexId v = 0; v < n.vertex_count(); ++v) out.parts.push_back(image(f.components[v], s.parts[v]));
  return out;
}

FilteredModule random_filtered_module(std::mt19937& rng, const Stratification& s, std::size_t layers) {
  const AlgebraPtr& a = s.algebra_ptr();
  FilteredModule fm{RightModule::zero(a), {}, std::vector<std::size_t>(a->vertex_count(), 0)};
  fm.chain.push_back(zero_submodule(fm.module));
  std::uniform_int_distribution<VertexId> vertex(0, a->vertex_count() - 1);
  for (std::size_t step = 0; step < layers; ++step) {
    const VertexId h = vertex(rng);
    StandardModule d = standard_module(s, s.plan().stratum_of(h), h);
    SubmoduleModule u = submodule_as_module(d.projective, d.kernel);
    ModuleMap g = random_map(rng, u.module, fm.module, hom_space(u.module, fm.module));
    Pushout po = pushout(u.module, fm.module, d.projective, g, u.inclusion);
    std::vector<Submodule> chain;
    for (const Submodule& c : fm.chain) chain.push_back(map_submodule(po.module, po.from_k, c));
    chain.push_back(full_submodule(po.module));
    fm.module = po.module;
    fm.chain = std::move(chain);
    ++fm.counts[h];
  }
  return fm;
}

std::optional<RightModule> random_module(std::mt19937& rng, const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                                         std::size_t attempts) {
  const Field f = a->field();
  for (std::size_t k = 0; k < attempts; ++k) {
    std::vector<Mat> actions;
    for (const Arrow& x : a->quiver().arrows()) actions.push_back(random_mat(rng, f, dims[x.source], dims[x.target], 0, 1));
    try {
      return RightModule(a, dims, std::move(actions));
    } catch (const InvalidModule&) {
    }
  }
  return std::nullopt;
}

}  // namespace qstrat::testing
