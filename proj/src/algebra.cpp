#include "qstrat/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace qstrat {

// ---------------------------------------------------------------- Quiver

VertexId Quiver::add_vertex(std::string name) {
  if (name.empty()) throw std::invalid_argument("vertex name must be non-empty");
  if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  vertex_index_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (name.empty()) throw std::invalid_argument("arrow name must be non-empty");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw UnknownName("arrow '" + name + "' has an endpoint outside the quiver");
  if (arrow_index_.count(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
  arrow_index_.emplace(name, arrows_.size());
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

ArrowId Quiver::add_arrow(std::string name, std::string_view source, std::string_view target) {
  return add_arrow(std::move(name), vertex(source), vertex(target));
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownName("unknown vertex '" + std::string(name) + "'");
}

ArrowId Quiver::arrow_id(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) throw UnknownName("unknown arrow '" + std::string(name) + "'");
  return it->second;
}

Quiver Quiver::opposite() const {
  Quiver op = *this;
  for (auto& a : op.arrows_) std::swap(a.source, a.target);
  return op;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

// ---------------------------------------------------------------- compilation

namespace {

struct CompiledTerm {
  Scalar coeff;
  std::vector<ArrowId> arrows;
};

struct CompiledRelation {
  VertexId source = 0;
  VertexId target = 0;
  std::size_t min_length = 0;
  std::vector<CompiledTerm> terms;
};

Path resolve_path(const Quiver& q, const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("empty path in relation");
  Path p;
  for (std::size_t i = 0; i < names.size(); ++i) {
    ArrowId x = q.arrow_id(names[i]);
    const Arrow& a = q.arrow(x);
    if (i == 0)
      p.source = a.source;
    else if (a.source != p.target)
      throw std::invalid_argument("path is not composable at arrow '" + names[i] + "'");
    p.target = a.target;
    p.arrows.push_back(x);
  }
  return p;
}

std::vector<CompiledRelation> compile_relations(const Quiver& q, const std::vector<RelationSpec>& rels, Field f) {
  std::vector<CompiledRelation> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string where = "relation " + std::to_string(r);
    if (rels[r].terms.empty()) throw std::invalid_argument(where + " has no terms");
    CompiledRelation c;
    c.min_length = SIZE_MAX;
    for (std::size_t k = 0; k < rels[r].terms.size(); ++k) {
      const RelationTerm& t = rels[r].terms[k];
      if (!(t.coeff.field() == f)) throw FieldMismatch(where + " has a coefficient over " + t.coeff.field().name());
      Path p = resolve_path(q, t.path);
      if (p.length() < 2)
        throw NotAdmissible(where + " contains the path '" + path_to_string(q, p) + "' of length " +
                            std::to_string(p.length()) + "; relations must lie in paths of length >= 2");
      if (k == 0) {
        c.source = p.source;
        c.target = p.target;
      } else if (p.source != c.source || p.target != c.target) {
        throw std::invalid_argument(where + " mixes paths with different endpoints");
      }
      c.min_length = std::min(c.min_length, p.length());
      c.terms.push_back(CompiledTerm{t.coeff, std::move(p.arrows)});
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Column order inside a truncated path space: longest first, then lexicographic.
bool column_before(const Path& x, const Path& y) {
  if (x.length() != y.length()) return x.length() > y.length();
  return x.arrows < y.arrows;
}

bool basis_before(const Path& x, const Path& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  return x.arrows < y.arrows;
}

// Truncated path space K Q_{<= L} split into vertex pairs, together with the
// span of the relation consequences truncated to the same length.
class TruncatedSpace {
 public:
  TruncatedSpace(const Quiver& q, Field f, const std::vector<std::vector<Path>>& by_length, std::size_t limit,
                 const std::vector<CompiledRelation>& rels)
      : n_(q.vertex_count()), field_(f), columns_(n_ * n_), index_(n_ * n_), span_(n_ * n_) {
    for (std::size_t len = 0; len <= limit; ++len)
      for (const Path& p : by_length[len]) columns_[pair(p.source, p.target)].push_back(p);
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      std::sort(columns_[k].begin(), columns_[k].end(), column_before);
      for (std::size_t c = 0; c < columns_[k].size(); ++c) index_[k].emplace(columns_[k][c].arrows, c);
    }

    std::vector<std::vector<Vec>> gens(n_ * n_);
    for (const CompiledRelation& r : rels) {
      if (r.min_length > limit) continue;
      const std::size_t slack = limit - r.min_length;
      for (std::size_t lu = 0; lu <= slack; ++lu)
        for (const Path& u : by_length[lu]) {
          if (u.target != r.source) continue;
          for (std::size_t lw = 0; lu + lw <= slack; ++lw)
            for (const Path& w : by_length[lw]) {
              if (w.source != r.target) continue;
              const std::size_t k = pair(u.source, w.target);
              Vec g = zero_vec(f, columns_[k].size());
              for (const CompiledTerm& t : r.terms) {
                if (lu + lw + t.arrows.size() > limit) continue;
                std::vector<ArrowId> word = u.arrows;
                word.insert(word.end(), t.arrows.begin(), t.arrows.end());
                word.insert(word.end(), w.arrows.begin(), w.arrows.end());
                g[index_[k].at(word)] += t.coeff;
              }
              if (!is_zero(g)) gens[k].push_back(std::move(g));
            }
        }
    }
    for (std::size_t k = 0; k < gens.size(); ++k) span_[k] = Subspace::span(f, columns_[k].size(), gens[k]);
  }

  std::size_t pair(VertexId a, VertexId b) const { return a * n_ + b; }
  const std::vector<Path>& columns(VertexId a, VertexId b) const { return columns_[pair(a, b)]; }
  const Subspace& relations(VertexId a, VertexId b) const { return span_[pair(a, b)]; }
  std::size_t column(VertexId a, VertexId b, const std::vector<ArrowId>& word) const {
    return index_[pair(a, b)].at(word);
  }
  Field field() const { return field_; }

 private:
  std::size_t n_;
  Field field_;
  std::vector<std::vector<Path>> columns_;
  std::vector<std::map<std::vector<ArrowId>, std::size_t>> index_;
  std::vector<Subspace> span_;
};

}  // namespace

// ---------------------------------------------------------------- BoundAlgebra

std::size_t BoundAlgebra::dimension() const {
  std::size_t d = 0;
  for (VertexId a = 0; a < vertex_count(); ++a)
    for (VertexId b = 0; b < vertex_count(); ++b) d += hom_dim(a, b);
  return d;
}

std::size_t BoundAlgebra::projective_dim(VertexId v) const {
  std::size_t d = 0;
  for (VertexId u = 0; u < vertex_count(); ++u) d += hom_dim(u, v);
  return d;
}

Vec BoundAlgebra::identity(VertexId a) const {
  const auto& basis = basis_[a][a];
  Vec v = zero_vec(field_, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].length() == 0) v[i] = Scalar(field_, 1);
  return v;
}

const Vec& BoundAlgebra::basis_product(VertexId a, VertexId b, VertexId c, std::size_t i, std::size_t j) const {
  return products_[triple(a, b, c)][i * hom_dim(b, c) + j];
}

Vec BoundAlgebra::compose(VertexId a, VertexId b, VertexId c, const Vec& x, const Vec& y) const {
  if (x.size() != hom_dim(a, b) || y.size() != hom_dim(b, c)) throw DimensionMismatch("compose: operand sizes");
  Vec out = zero_vec(field_, hom_dim(a, c));
  const auto& table = products_[triple(a, b, c)];
  const std::size_t dc = hom_dim(b, c);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], table[i * dc + j]);
    }
  }
  return out;
}

Vec BoundAlgebra::path_element(const Path& p) const {
  VertexId at = p.source;
  Vec acc = identity(at);
  for (ArrowId x : p.arrows) {
    const Arrow& arr = quiver_.arrow(x);
    if (arr.source != at) throw std::invalid_argument("path_element: arrows are not composable");
    acc = compose(p.source, at, arr.target, acc, arrow_elements_[x]);
    at = arr.target;
  }
  if (at != p.target) throw std::invalid_argument("path_element: target does not match");
  return acc;
}

Vec BoundAlgebra::relation_element(const RelationSpec& r) const {
  if (r.terms.empty()) throw std::invalid_argument("relation_element: empty relation");
  Path first = resolve_path(quiver_, r.terms.front().path);
  Vec out = zero_vec(field_, hom_dim(first.source, first.target));
  for (const RelationTerm& t : r.terms) {
    Path p = resolve_path(quiver_, t.path);
    if (p.source != first.source || p.target != first.target)
      throw std::invalid_argument("relation_element: terms are not parallel");
    axpy(out, t.coeff, path_element(p));
  }
  return out;
}

// ---------------------------------------------------------------- constructions

AlgebraPtr build_algebra(const Quiver& q, const std::vector<RelationSpec>& rels, Field field,
                         std::size_t max_length) {
  if (max_length == 0) throw std::invalid_argument("max_path_length must be at least 1");
  const std::size_t n = q.vertex_count();
  std::vector<CompiledRelation> compiled = compile_relations(q, rels, field);

  std::vector<std::vector<Path>> by_length(1);
  for (VertexId v = 0; v < n; ++v) by_length[0].push_back(Path{v, v, {}});
  auto extend = [&] {
    std::vector<Path> next;
    for (const Path& p : by_length.back())
      for (ArrowId x = 0; x < q.arrow_count(); ++x)
        if (q.arrow(x).source == p.target) {
          Path e = p;
          e.arrows.push_back(x);
          e.target = q.arrow(x).target;
          next.push_back(std::move(e));
        }
    by_length.push_back(std::move(next));
  };

  std::size_t bound = 0;
  std::string survivor;
  for (std::size_t len = 1; len <= max_length && bound == 0; ++len) {
    extend();
    TruncatedSpace space(q, field, by_length, len, compiled);
    bool all_inside = true;
    for (const Path& p : by_length[len]) {
      const std::size_t c = space.column(p.source, p.target, p.arrows);
      if (!space.relations(p.source, p.target).contains(unit_vec(field, space.columns(p.source, p.target).size(), c))) {
        all_inside = false;
        survivor = path_to_string(q, p);
        break;
      }
    }
    if (all_inside) bound = len;
  }
  if (bound == 0)
    throw NotAdmissible("ideal not admissible within bound " + std::to_string(max_length) + ": path '" + survivor +
                        "' is not reduced to longer paths modulo the relations");

  auto alg = std::shared_ptr<BoundAlgebra>(new BoundAlgebra());
  alg->quiver_ = q;
  alg->field_ = field;
  alg->nilpotency_ = bound;
  alg->relations_ = rels;
  alg->killed_.assign(n, false);

  TruncatedSpace space(q, field, by_length, bound - 1, compiled);
  // For each pair: basis paths, and the map column -> basis index (SIZE_MAX for pivots).
  std::vector<std::vector<std::size_t>> column_to_basis(n * n);
  alg->basis_.assign(n, std::vector<std::vector<Path>>(n));
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b) {
      const auto& cols = space.columns(a, b);
      std::vector<std::size_t> free = space.relations(a, b).complement_positions();
      std::vector<Path> chosen;
      for (std::size_t c : free) chosen.push_back(cols[c]);
      std::sort(chosen.begin(), chosen.end(), basis_before);
      auto& map = column_to_basis[a * n + b];
      map.assign(cols.size(), SIZE_MAX);
      for (std::size_t i = 0; i < chosen.size(); ++i) map[space.column(a, b, chosen[i].arrows)] = i;
      alg->basis_[a][b] = std::move(chosen);
    }

  auto reduce_word = [&](VertexId a, VertexId b, const std::vector<ArrowId>& word) {
    Vec out = zero_vec(field, alg->basis_[a][b].size());
    if (word.size() >= bound) return out;
    const auto& cols = space.columns(a, b);
    Vec v = space.relations(a, b).reduce(unit_vec(field, cols.size(), space.column(a, b, word)));
    const auto& map = column_to_basis[a * n + b];
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) out[map[c]] = v[c];
    return out;
  };

  alg->products_.assign(n * n * n, {});
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b)
      for (VertexId c = 0; c < n; ++c) {
        const auto& xs = alg->basis_[a][b];
        const auto& ys = alg->basis_[b][c];
        auto& table = alg->products_[alg->triple(a, b, c)];
        table.reserve(xs.size() * ys.size());
        for (const Path& x : xs)
          for (const Path& y : ys) {
            std::vector<ArrowId> word = x.arrows;
            word.insert(word.end(), y.arrows.begin(), y.arrows.end());
            table.push_back(reduce_word(a, c, word));
          }
      }

  for (ArrowId x = 0; x < q.arrow_count(); ++x)
    alg->arrow_elements_.push_back(reduce_word(q.arrow(x).source, q.arrow(x).target, {x}));
  return alg;
}

AlgebraPtr opposite(const BoundAlgebra& a) {
  const std::size_t n = a.vertex_count();
  auto op = std::shared_ptr<BoundAlgebra>(new BoundAlgebra());
  op->quiver_ = a.quiver_.opposite();
  op->field_ = a.field_;
  op->nilpotency_ = a.nilpotency_;
  op->killed_ = a.killed_;
  op->arrow_elements_ = a.arrow_elements_;
  op->basis_.assign(n, std::vector<std::vector<Path>>(n));
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = 0; t < n; ++t)
      for (const Path& p : a.basis_[s][t]) {
        Path r{t, s, std::vector<ArrowId>(p.arrows.rbegin(), p.arrows.rend())};
        op->basis_[t][s].push_back(std::move(r));
      }
  op->products_.assign(n * n * n, {});
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y)
      for (VertexId z = 0; z < n; ++z) {
        const std::size_t dxy = a.hom_dim(y, x);
        const std::size_t dyz = a.hom_dim(z, y);
        auto& table = op->products_[op->triple(x, y, z)];
        table.reserve(dxy * dyz);
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t j = 0; j < dyz; ++j) table.push_back(a.basis_product(z, y, x, j, i));
      }
  for (const RelationSpec& r : a.relations_) {
    RelationSpec rev;
    for (const RelationTerm& t : r.terms)
      rev.terms.push_back(RelationTerm{t.coeff, std::vector<std::string>(t.path.rbegin(), t.path.rend())});
    op->relations_.push_back(std::move(rev));
  }
  return op;
}

HomSubspaces zero_hom_subspaces(const BoundAlgebra& a) {
  const std::size_t n = a.vertex_count();
  HomSubspaces out(n, std::vector<Subspace>(n));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) out[x][y] = Subspace(a.field(), a.hom_dim(x, y));
  return out;
}

HomSubspaces ideal_span(const BoundAlgebra& a, const std::vector<VertexId>& vertices) {
  const std::size_t n = a.vertex_count();
  HomSubspaces out(n, std::vector<Subspace>(n));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      std::vector<Vec> gens;
      for (VertexId f : vertices) {
        if (f >= n) throw std::out_of_range("ideal_span: vertex out of range");
        for (std::size_t i = 0; i < a.hom_dim(x, f); ++i)
          for (std::size_t j = 0; j < a.hom_dim(f, y); ++j) {
            const Vec& g = a.basis_product(x, f, y, i, j);
            if (!is_zero(g)) gens.push_back(g);
          }
      }
      out[x][y] = Subspace::span(a.field(), a.hom_dim(x, y), gens);
    }
  return out;
}

HomSubspaces radical_basis(const BoundAlgebra& a) {
  const std::size_t n = a.vertex_count();
  HomSubspaces out(n, std::vector<Subspace>(n));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < a.hom_dim(x, y); ++i)
        if (a.is_radical_element(x, y, i)) gens.push_back(unit_vec(a.field(), a.hom_dim(x, y), i));
      out[x][y] = Subspace::span(a.field(), a.hom_dim(x, y), gens);
    }
  return out;
}

HomSubspaces product_span(const BoundAlgebra& a, const HomSubspaces& first, const HomSubspaces& second) {
  const std::size_t n = a.vertex_count();
  HomSubspaces out(n, std::vector<Subspace>(n));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId z = 0; z < n; ++z) {
      std::vector<Vec> gens;
      for (VertexId y = 0; y < n; ++y)
        for (const Vec& u : first[x][y].basis())
          for (const Vec& v : second[y][z].basis()) {
            Vec g = a.compose(x, y, z, u, v);
            if (!is_zero(g)) gens.push_back(std::move(g));
          }
      out[x][z] = Subspace::span(a.field(), a.hom_dim(x, z), gens);
    }
  return out;
}

AlgebraPtr quotient_by_vertices(const BoundAlgebra& a, const std::vector<VertexId>& vertices) {
  const std::size_t n = a.vertex_count();
  HomSubspaces ideal = ideal_span(a, vertices);
  auto q = std::shared_ptr<BoundAlgebra>(new BoundAlgebra());
  q->quiver_ = a.quiver_;
  q->field_ = a.field_;
  q->nilpotency_ = a.nilpotency_;
  q->relations_ = a.relations_;
  q->killed_ = a.killed_;
  for (VertexId v : vertices) q->killed_.at(v) = true;

  std::vector<std::vector<std::vector<std::size_t>>> kept(n, std::vector<std::vector<std::size_t>>(n));
  q->basis_.assign(n, std::vector<std::vector<Path>>(n));
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      kept[x][y] = ideal[x][y].complement_positions();
      for (std::size_t i : kept[x][y]) q->basis_[x][y].push_back(a.basis_[x][y][i]);
    }
  auto project = [&](VertexId x, VertexId y, const Vec& v) {
    Vec r = ideal[x][y].reduce(v);
    Vec out;
    out.reserve(kept[x][y].size());
    for (std::size_t i : kept[x][y]) out.push_back(r[i]);
    return out;
  };

  q->products_.assign(n * n * n, {});
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y)
      for (VertexId z = 0; z < n; ++z) {
        auto& table = q->products_[q->triple(x, y, z)];
        table.reserve(kept[x][y].size() * kept[y][z].size());
        for (std::size_t i : kept[x][y])
          for (std::size_t j : kept[y][z]) table.push_back(project(x, z, a.basis_product(x, y, z, i, j)));
      }
  for (ArrowId x = 0; x < a.quiver_.arrow_count(); ++x) {
    const Arrow& arr = a.quiver_.arrow(x);
    q->arrow_elements_.push_back(project(arr.source, arr.target, a.arrow_elements_[x]));
  }
  return q;
}

}  // namespace qstrat
