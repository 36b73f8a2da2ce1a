#include "qstrat/repmod.hpp"

#include <string>
#include <utility>

namespace qstrat {

namespace {

std::string arrow_label(const BoundAlgebra& a, ArrowId x) { return "arrow '" + a.quiver().arrow(x).name + "'"; }

Mat zero_mat(Field f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

void same_algebra(const RightModule& m, const RightModule& n, const char* what) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

void require_submodule(const RightModule& m, const Submodule& s, const char* what) {
  if (!is_submodule(m, s)) throw InvalidModule(std::string(what) + ": subspaces are not closed under the action");
}

Vec flatten(const ModuleMap& f) {
  Vec out;
  for (const Mat& c : f.components)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c(r, k));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RightModule

RightModule::RightModule(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> actions)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(actions)) {
  if (!algebra_) throw InvalidModule("module without an algebra");
  const BoundAlgebra& a = *algebra_;
  if (dims_.size() != a.vertex_count())
    throw InvalidModule("expected " + std::to_string(a.vertex_count()) + " dimensions, got " +
                        std::to_string(dims_.size()));
  if (actions_.size() != a.quiver().arrow_count())
    throw InvalidModule("expected " + std::to_string(a.quiver().arrow_count()) + " arrow matrices, got " +
                        std::to_string(actions_.size()));
  for (ArrowId x = 0; x < actions_.size(); ++x) {
    const Arrow& arr = a.quiver().arrow(x);
    if (actions_[x].rows() != dims_[arr.source] || actions_[x].cols() != dims_[arr.target])
      throw InvalidModule(arrow_label(a, x) + " needs a " + std::to_string(dims_[arr.source]) + "x" +
                          std::to_string(dims_[arr.target]) + " matrix");
    if (!(actions_[x].field() == a.field()) && actions_[x].rows() * actions_[x].cols() > 0)
      throw FieldMismatch(arrow_label(a, x) + " matrix is over " + actions_[x].field().name());
  }
  for (VertexId v = 0; v < dims_.size(); ++v)
    if (a.is_killed(v) && dims_[v] != 0)
      throw InvalidModule("vertex '" + a.quiver().vertex_name(v) + "' is factored out but has dimension " +
                          std::to_string(dims_[v]));
  build_basis_actions();
  validate();
}

RightModule RightModule::unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> actions) {
  RightModule m;
  m.algebra_ = std::move(algebra);
  m.dims_ = std::move(dims);
  m.actions_ = std::move(actions);
  m.build_basis_actions();
  return m;
}

RightModule RightModule::zero(AlgebraPtr algebra) {
  std::vector<Mat> actions;
  for (std::size_t x = 0; x < algebra->quiver().arrow_count(); ++x) actions.emplace_back(algebra->field(), 0, 0);
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  return unchecked(std::move(algebra), std::move(dims), std::move(actions));
}

std::size_t RightModule::total_dim() const {
  std::size_t d = 0;
  for (auto x : dims_) d += x;
  return d;
}

void RightModule::build_basis_actions() {
  const BoundAlgebra& a = *algebra_;
  const std::size_t n = a.vertex_count();
  const Field f = a.field();
  basis_actions_.assign(n, std::vector<std::vector<Mat>>(n));
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = 0; t < n; ++t) {
      auto& out = basis_actions_[s][t];
      out.reserve(a.hom_dim(s, t));
      for (const Path& p : a.hom_basis(s, t)) {
        Mat m = Mat::identity(f, dims_[s]);
        for (ArrowId x : p.arrows) m = m * actions_[x];
        out.push_back(std::move(m));
      }
    }
}

void RightModule::validate() const {
  const BoundAlgebra& a = *algebra_;
  const std::size_t n = a.vertex_count();
  for (ArrowId x = 0; x < actions_.size(); ++x) {
    const Arrow& arr = a.quiver().arrow(x);
    const VertexId s = arr.source, t = arr.target;
    if (a.hom_dim(s, t) == 0) {
      if (!actions_[x].is_zero()) throw InvalidModule(arrow_label(a, x) + " vanishes in the algebra but acts nonzero");
      continue;
    }
    const Vec& xe = a.arrow_element(x);
    for (VertexId b = 0; b < n; ++b)
      for (std::size_t j = 0; j < a.hom_dim(t, b); ++j) {
        Mat lhs = actions_[x] * basis_actions_[t][b][j];
        Vec c = a.compose(s, t, b, xe, unit_vec(a.field(), a.hom_dim(t, b), j));
        Mat rhs = element_action(s, b, c);
        if (!(lhs == rhs))
          throw InvalidModule("matrices violate a relation: " + arrow_label(a, x) + " followed by '" +
                              path_to_string(a.quiver(), a.hom_basis(t, b)[j]) + "'");
      }
  }
}

Mat RightModule::element_action(VertexId a, VertexId b, const Vec& z) const {
  if (z.size() != algebra_->hom_dim(a, b)) throw DimensionMismatch("element_action: element size");
  Mat out(field(), dims_[a], dims_[b]);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (!z[i].is_zero()) out = out + z[i] * basis_actions_[a][b][i];
  return out;
}

RightModule RightModule::rehome(AlgebraPtr other) const {
  if (other->vertex_count() != vertex_count() || other->quiver().arrow_count() != actions_.size())
    throw InvalidModule("rehome: algebras have different quivers");
  return RightModule(std::move(other), dims_, actions_);
}

bool operator==(const RightModule& x, const RightModule& y) {
  return x.field() == y.field() && x.dims_ == y.dims_ && x.actions_ == y.actions_;
}

bool ModuleMap::is_zero() const {
  for (const Mat& m : components)
    if (!m.is_zero()) return false;
  return true;
}

std::size_t Submodule::total_dim() const {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.dim();
  return d;
}

// ---------------------------------------------------------------- constructions

RightModule free_right_module(const AlgebraPtr& algebra, VertexId e) {
  if (e >= algebra->vertex_count()) throw UnknownName("free_right_module: no vertex " + std::to_string(e));
  const BoundAlgebra& a = *algebra;
  std::vector<std::size_t> dims(a.vertex_count());
  for (VertexId v = 0; v < dims.size(); ++v) dims[v] = a.hom_dim(v, e);
  std::vector<Mat> actions;
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const VertexId s = a.quiver().arrow(x).source, t = a.quiver().arrow(x).target;
    Mat m(a.field(), dims[s], dims[t]);
    if (a.hom_dim(s, t) > 0)
      for (std::size_t j = 0; j < dims[t]; ++j) {
        Vec col = a.compose(s, t, e, a.arrow_element(x), unit_vec(a.field(), dims[t], j));
        for (std::size_t r = 0; r < dims[s]; ++r) m(r, j) = col[r];
      }
    actions.push_back(std::move(m));
  }
  return RightModule::unchecked(algebra, std::move(dims), std::move(actions));
}

RightModule simple_module(const AlgebraPtr& algebra, VertexId v) {
  const BoundAlgebra& a = *algebra;
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<Mat> actions;
  for (const Arrow& arr : a.quiver().arrows()) actions.emplace_back(a.field(), dims[arr.source], dims[arr.target]);
  return RightModule(algebra, std::move(dims), std::move(actions));
}

RightModule direct_sum(const RightModule& m, const RightModule& n) {
  same_algebra(m, n, "direct_sum");
  const BoundAlgebra& a = m.algebra();
  std::vector<std::size_t> dims(m.vertex_count());
  for (VertexId v = 0; v < dims.size(); ++v) dims[v] = m.dim(v) + n.dim(v);
  std::vector<Mat> actions;
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const VertexId s = a.quiver().arrow(x).source, t = a.quiver().arrow(x).target;
    actions.push_back(block2x2(m.action(x), zero_mat(a.field(), m.dim(s), n.dim(t)),
                               zero_mat(a.field(), n.dim(s), m.dim(t)), n.action(x)));
  }
  return RightModule::unchecked(m.algebra_ptr(), std::move(dims), std::move(actions));
}

// ---------------------------------------------------------------- maps

bool is_module_map(const RightModule& m, const RightModule& n, const ModuleMap& f) {
  if (f.components.size() != m.vertex_count()) return false;
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    if (f.components[v].rows() != n.dim(v) || f.components[v].cols() != m.dim(v)) return false;
  for (ArrowId x = 0; x < m.algebra().quiver().arrow_count(); ++x) {
    const Arrow& arr = m.algebra().quiver().arrow(x);
    if (!(f.components[arr.source] * m.action(x) == n.action(x) * f.components[arr.target])) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  if (first.components.size() != second.components.size()) throw DimensionMismatch("compose: vertex counts");
  ModuleMap out;
  for (std::size_t v = 0; v < first.components.size(); ++v)
    out.components.push_back(second.components[v] * first.components[v]);
  return out;
}

ModuleMap zero_map(const RightModule& m, const RightModule& n) {
  ModuleMap out;
  for (VertexId v = 0; v < m.vertex_count(); ++v) out.components.emplace_back(m.field(), n.dim(v), m.dim(v));
  return out;
}

ModuleMap identity_map(const RightModule& m) {
  ModuleMap out;
  for (VertexId v = 0; v < m.vertex_count(); ++v) out.components.push_back(Mat::identity(m.field(), m.dim(v)));
  return out;
}

namespace {

// Inverse of a square invertible matrix via [B | I] -> [I | B^-1].
Mat invert(const Mat& b) {
  const std::size_t d = b.rows();
  const Field f = b.field();
  Mat aug(f, d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = b(r, c);
    aug(r, d + r) = Scalar(f, 1);
  }
  const Mat red = rref(aug).reduced;
  Mat out(f, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = red(r, d + c);
  return out;
}

}  // namespace

// A map out of M is fixed by the images of top generators g_j in N(v_j), subject
// to the relations of M among the elements g_j z.
std::vector<ModuleMap> hom_space(const RightModule& m, const RightModule& n) {
  same_algebra(m, n, "hom_space");
  const BoundAlgebra& a = m.algebra();
  const Field f = m.field();
  const std::size_t nv = m.vertex_count();

  struct Generator {
    VertexId v;
    Vec g;
    std::size_t offset;  // of its image among the unknowns
  };
  std::vector<Generator> gens;
  std::size_t unknowns = 0;
  const Submodule rad = radical_of_module(m);
  for (VertexId v = 0; v < nv; ++v)
    for (std::size_t pos : rad.parts[v].complement_positions()) {
      gens.push_back({v, unit_vec(f, m.dim(v), pos), unknowns});
      unknowns += n.dim(v);
    }

  // pi_u sends the pair (g_j, basis element i of Hom(u, v_j)) to g_j z_i in M(u).
  std::vector<Mat> pi(nv);
  std::vector<Vec> equations;
  for (VertexId u = 0; u < nv; ++u) {
    std::vector<Vec> cols;
    for (const Generator& g : gens)
      for (std::size_t i = 0; i < a.hom_dim(u, g.v); ++i) cols.push_back(m.basis_action(u, g.v, i).apply(g.g));
    pi[u] = Mat::from_columns(f, m.dim(u), cols);
    for (const Vec& k : kernel_basis(pi[u])) {
      Mat eq(f, n.dim(u), unknowns);
      std::size_t c = 0;
      for (const Generator& g : gens)
        for (std::size_t i = 0; i < a.hom_dim(u, g.v); ++i, ++c) {
          if (k[c].is_zero()) continue;
          const Mat& act = n.basis_action(u, g.v, i);
          for (std::size_t r = 0; r < n.dim(u); ++r)
            for (std::size_t q = 0; q < n.dim(g.v); ++q)
              if (!act(r, q).is_zero()) eq(r, g.offset + q) += k[c] * act(r, q);
        }
      for (std::size_t r = 0; r < n.dim(u); ++r) {
        Vec row = eq.row(r);
        if (!is_zero(row)) equations.push_back(std::move(row));
      }
    }
  }
  std::vector<Vec> solutions;
  if (equations.empty()) {
    for (std::size_t i = 0; i < unknowns; ++i) solutions.push_back(unit_vec(f, unknowns, i));
  } else {
    solutions = kernel_basis(Mat::from_rows(f, unknowns, equations));
  }

  // f_u = phi_u restricted to independent columns S of pi_u, times pi_u[S]^-1.
  std::vector<std::vector<std::size_t>> chosen(nv);
  std::vector<Mat> inv(nv);
  for (VertexId u = 0; u < nv; ++u) {
    chosen[u] = rref(pi[u]).pivots;
    std::vector<Vec> cols;
    for (std::size_t c : chosen[u]) cols.push_back(pi[u].column(c));
    inv[u] = invert(Mat::from_columns(f, m.dim(u), cols));
  }
  std::vector<ModuleMap> out;
  for (const Vec& sol : solutions) {
    ModuleMap g;
    for (VertexId u = 0; u < nv; ++u) {
      std::vector<Vec> phi;
      std::size_t c = 0, next = 0;
      for (const Generator& gen : gens) {
        Vec image(sol.begin() + static_cast<std::ptrdiff_t>(gen.offset),
                  sol.begin() + static_cast<std::ptrdiff_t>(gen.offset + n.dim(gen.v)));
        for (std::size_t i = 0; i < a.hom_dim(u, gen.v); ++i, ++c)
          if (next < chosen[u].size() && chosen[u][next] == c) {
            phi.push_back(n.basis_action(u, gen.v, i).apply(image));
            ++next;
          }
      }
      g.components.push_back(Mat::from_columns(f, n.dim(u), phi) * inv[u]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------- submodules

Submodule zero_submodule(const RightModule& m) {
  Submodule s;
  for (VertexId v = 0; v < m.vertex_count(); ++v) s.parts.emplace_back(m.field(), m.dim(v));
  return s;
}

Submodule full_submodule(const RightModule& m) {
  Submodule s;
  for (VertexId v = 0; v < m.vertex_count(); ++v) s.parts.push_back(Subspace::full(m.field(), m.dim(v)));
  return s;
}

bool is_submodule(const RightModule& m, const Submodule& s) {
  if (s.parts.size() != m.vertex_count()) return false;
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    if (s.parts[v].ambient() != m.dim(v)) return false;
  for (ArrowId x = 0; x < m.algebra().quiver().arrow_count(); ++x) {
    const Arrow& arr = m.algebra().quiver().arrow(x);
    if (!s.parts[arr.source].contains(image(m.action(x), s.parts[arr.target]))) return false;
  }
  return true;
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.parts.size() != b.parts.size()) throw DimensionMismatch("sum of submodules: vertex counts");
  Submodule s;
  for (std::size_t v = 0; v < a.parts.size(); ++v) s.parts.push_back(sum(a.parts[v], b.parts[v]));
  return s;
}

Submodule submodule_generated(const RightModule& m, const std::vector<std::vector<Vec>>& generators) {
  const BoundAlgebra& a = m.algebra();
  const std::size_t n = m.vertex_count();
  if (generators.size() != n) throw DimensionMismatch("submodule_generated: one generator list per vertex");
  Submodule s;
  for (VertexId u = 0; u < n; ++u) {
    std::vector<Vec> gens;
    for (VertexId f = 0; f < n; ++f)
      for (const Vec& g : generators[f]) {
        if (g.size() != m.dim(f)) throw DimensionMismatch("submodule_generated: generator size");
        for (std::size_t i = 0; i < a.hom_dim(u, f); ++i) {
          Vec y = m.basis_action(u, f, i).apply(g);
          if (!is_zero(y)) gens.push_back(std::move(y));
        }
      }
    s.parts.push_back(Subspace::span(m.field(), m.dim(u), gens));
  }
  return s;
}

Submodule trace(const std::vector<RightModule>& sources, const RightModule& m) {
  Submodule s = zero_submodule(m);
  for (const RightModule& p : sources)
    for (const ModuleMap& f : hom_space(p, m)) s = sum(s, image(m, f));
  return s;
}

Submodule trace_of_vertices(const RightModule& m, const std::vector<VertexId>& vertices) {
  const BoundAlgebra& a = m.algebra();
  const std::size_t n = m.vertex_count();
  Submodule s;
  for (VertexId u = 0; u < n; ++u) {
    std::vector<Vec> gens;
    for (VertexId f : vertices)
      for (std::size_t i = 0; i < a.hom_dim(u, f); ++i) {
        const Mat& z = m.basis_action(u, f, i);
        for (std::size_t c = 0; c < z.cols(); ++c) {
          Vec col = z.column(c);
          if (!is_zero(col)) gens.push_back(std::move(col));
        }
      }
    s.parts.push_back(Subspace::span(m.field(), m.dim(u), gens));
  }
  return s;
}

Submodule radical_of_module(const RightModule& m) {
  const BoundAlgebra& a = m.algebra();
  std::vector<std::vector<Vec>> gens(m.vertex_count());
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const Mat& mx = m.action(x);
    for (std::size_t c = 0; c < mx.cols(); ++c) {
      Vec col = mx.column(c);
      if (!is_zero(col)) gens[a.quiver().arrow(x).source].push_back(std::move(col));
    }
  }
  Submodule s;
  for (VertexId v = 0; v < m.vertex_count(); ++v) s.parts.push_back(Subspace::span(m.field(), m.dim(v), gens[v]));
  return s;
}

Submodule kernel(const RightModule& m, const RightModule& n, const ModuleMap& f) {
  if (!is_module_map(m, n, f)) throw InvalidModule("kernel: not a module map");
  Submodule s;
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    s.parts.push_back(Subspace::span(m.field(), m.dim(v), kernel_basis(f.components[v])));
  return s;
}

Submodule image(const RightModule& n, const ModuleMap& f) {
  Submodule s;
  for (VertexId v = 0; v < n.vertex_count(); ++v) {
    if (f.components[v].rows() != n.dim(v)) throw DimensionMismatch("image: codomain mismatch");
    s.parts.push_back(column_space(f.components[v]));
  }
  return s;
}

SubmoduleModule submodule_as_module(const RightModule& m, const Submodule& s) {
  require_submodule(m, s, "submodule_as_module");
  const BoundAlgebra& a = m.algebra();
  const Field f = m.field();
  std::vector<std::size_t> dims;
  ModuleMap inclusion;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    dims.push_back(s.parts[v].dim());
    inclusion.components.push_back(s.parts[v].basis_columns());
  }
  std::vector<Mat> actions;
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const VertexId src = a.quiver().arrow(x).source, tgt = a.quiver().arrow(x).target;
    Mat act(f, dims[src], dims[tgt]);
    for (std::size_t j = 0; j < dims[tgt]; ++j) {
      Vec c = s.parts[src].coordinates(m.action(x).apply(s.parts[tgt].basis()[j]));
      for (std::size_t r = 0; r < dims[src]; ++r) act(r, j) = c[r];
    }
    actions.push_back(std::move(act));
  }
  return {RightModule::unchecked(m.algebra_ptr(), std::move(dims), std::move(actions)), std::move(inclusion)};
}

QuotientModule quotient_module(const RightModule& m, const Submodule& s) {
  require_submodule(m, s, "quotient_module");
  const BoundAlgebra& a = m.algebra();
  const Field f = m.field();
  const std::size_t n = m.vertex_count();
  std::vector<std::size_t> dims(n);
  ModuleMap projection;
  std::vector<Mat> lifts;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::size_t> keep = s.parts[v].complement_positions();
    dims[v] = keep.size();
    Mat proj(f, keep.size(), m.dim(v));
    for (std::size_t j = 0; j < m.dim(v); ++j) {
      Vec r = s.parts[v].reduce(unit_vec(f, m.dim(v), j));
      for (std::size_t i = 0; i < keep.size(); ++i) proj(i, j) = r[keep[i]];
    }
    Mat lift(f, m.dim(v), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) lift(keep[i], i) = Scalar(f, 1);
    projection.components.push_back(std::move(proj));
    lifts.push_back(std::move(lift));
  }
  std::vector<Mat> actions;
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    const VertexId src = a.quiver().arrow(x).source, tgt = a.quiver().arrow(x).target;
    actions.push_back(projection.components[src] * m.action(x) * lifts[tgt]);
  }
  return {RightModule::unchecked(m.algebra_ptr(), std::move(dims), std::move(actions)), std::move(projection)};
}

// ---------------------------------------------------------------- invariants

std::vector<std::size_t> top_dims(const RightModule& m) {
  Submodule rad = radical_of_module(m);
  std::vector<std::size_t> out;
  for (VertexId v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - rad.parts[v].dim());
  return out;
}

Projectivity projectivity(const RightModule& m) {
  Projectivity out;
  out.multiplicities = top_dims(m);
  std::size_t cover = 0;
  for (VertexId v = 0; v < m.vertex_count(); ++v) cover += out.multiplicities[v] * m.algebra().projective_dim(v);
  out.projective = cover == m.total_dim();
  return out;
}

bool is_projective(const RightModule& m) { return projectivity(m).projective; }

bool is_surjective(const RightModule& n, const ModuleMap& f) {
  Submodule im = image(n, f);
  for (VertexId v = 0; v < n.vertex_count(); ++v)
    if (im.parts[v].dim() != n.dim(v)) return false;
  return true;
}

ProjectiveCover projective_cover(const RightModule& m) {
  const AlgebraPtr& alg = m.algebra_ptr();
  const BoundAlgebra& a = *alg;
  const Field f = m.field();
  const std::size_t n = m.vertex_count();
  Submodule rad = radical_of_module(m);
  ProjectiveCover out{RightModule::zero(alg), {}, {}};
  std::vector<std::vector<Vec>> columns(n);
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t pos : rad.parts[v].complement_positions()) {
      const Vec g = unit_vec(f, m.dim(v), pos);
      out.cover = direct_sum(out.cover, free_right_module(alg, v));
      out.summands.push_back(v);
      for (VertexId u = 0; u < n; ++u)
        for (std::size_t i = 0; i < a.hom_dim(u, v); ++i) columns[u].push_back(m.basis_action(u, v, i).apply(g));
    }
  for (VertexId u = 0; u < n; ++u) out.map.components.push_back(Mat::from_columns(f, m.dim(u), columns[u]));
  return out;
}

Presentation presentation_of(const RightModule& m) {
  ProjectiveCover pc = projective_cover(m);
  Submodule k = kernel(pc.cover, m, pc.map);
  return {std::move(pc.cover), std::move(k)};
}

std::size_t ext1(const Presentation& p, const RightModule& n) {
  same_algebra(p.projective, n, "ext1");
  SubmoduleModule u = submodule_as_module(p.projective, p.relations);
  const std::size_t hom_un = hom_space(u.module, n).size();
  std::vector<Vec> restricted;
  for (const ModuleMap& psi : hom_space(p.projective, n)) restricted.push_back(flatten(compose(u.inclusion, psi)));
  std::size_t width = 0;
  for (VertexId v = 0; v < n.vertex_count(); ++v) width += n.dim(v) * u.module.dim(v);
  return hom_un - Subspace::span(n.field(), width, restricted).dim();
}

std::size_t ext1_dim(const RightModule& m, const RightModule& n) { return ext1(presentation_of(m), n); }

Pushout pushout(const RightModule& u, const RightModule& k, const RightModule& p, const ModuleMap& g,
                const ModuleMap& i) {
  if (!is_module_map(u, k, g) || !is_module_map(u, p, i)) throw InvalidModule("pushout: maps are not module maps");
  RightModule d = direct_sum(k, p);
  ModuleMap h;
  for (VertexId v = 0; v < u.vertex_count(); ++v)
    h.components.push_back(block2x2(g.components[v], Mat(u.field(), k.dim(v), 0),
                                    Scalar(u.field(), -1) * i.components[v], Mat(u.field(), p.dim(v), 0)));
  QuotientModule q = quotient_module(d, image(d, h));
  const Field f = u.field();
  ModuleMap into_k, into_p;
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    into_k.components.push_back(block2x2(Mat::identity(f, k.dim(v)), Mat(f, k.dim(v), 0), Mat(f, p.dim(v), k.dim(v)),
                                         Mat(f, p.dim(v), 0)));
    into_p.components.push_back(block2x2(Mat(f, k.dim(v), p.dim(v)), Mat(f, k.dim(v), 0), Mat::identity(f, p.dim(v)),
                                         Mat(f, p.dim(v), 0)));
  }
  return {q.module, compose(into_k, q.projection), compose(into_p, q.projection)};
}

}  // namespace qstrat
