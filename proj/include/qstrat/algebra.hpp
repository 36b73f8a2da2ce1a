#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qstrat/exactlin.hpp"

namespace qstrat {

using VertexId = std::size_t;
using ArrowId = std::size_t;

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAdmissible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

class Quiver {
 public:
  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);
  ArrowId add_arrow(std::string name, std::string_view source, std::string_view target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;
  ArrowId arrow_id(std::string_view name) const;

  /// Same vertices, every arrow reversed; arrow ids and names are kept.
  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// Path written first-to-last: arrows[0] is traversed first. As a morphism it
/// lies in Hom(source, target). Length zero is the idempotent at source.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

std::string path_to_string(const Quiver& q, const Path& p);

struct RelationTerm {
  Scalar coeff;
  std::vector<std::string> path;
};

/// Linear combination of parallel paths of length >= 2.
struct RelationSpec {
  std::vector<RelationTerm> terms;
};

/// Per ordered vertex pair (source, target), a subspace of Hom(source, target)
/// in basis coordinates.
using HomSubspaces = std::vector<std::vector<Subspace>>;

/// Finite-dimensional quotient of a path algebra. Hom(a, b) has a basis of
/// path classes a -> b; products are compiled into structure constants.
class BoundAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  Field field() const { return field_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::size_t nilpotency_bound() const { return nilpotency_; }
  std::size_t dimension() const;

  std::size_t hom_dim(VertexId a, VertexId b) const { return basis_[a][b].size(); }
  const std::vector<Path>& hom_basis(VertexId a, VertexId b) const { return basis_[a][b]; }
  bool is_radical_element(VertexId a, VertexId b, std::size_t i) const { return basis_[a][b][i].length() > 0; }
  /// dim of the indecomposable projective at v, i.e. sum over u of dim Hom(u, v).
  std::size_t projective_dim(VertexId v) const;

  /// Vertices whose idempotent was factored out; all their hom spaces are zero.
  bool is_killed(VertexId v) const { return killed_[v]; }
  const std::vector<bool>& killed() const { return killed_; }
  const std::vector<RelationSpec>& relations() const { return relations_; }

  Vec identity(VertexId a) const;
  Vec arrow_element(ArrowId x) const { return arrow_elements_[x]; }
  Vec path_element(const Path& p) const;
  Vec relation_element(const RelationSpec& r) const;

  /// Product of basis elements: first x_i in Hom(a, b), then y_j in Hom(b, c).
  const Vec& basis_product(VertexId a, VertexId b, VertexId c, std::size_t i, std::size_t j) const;
  /// Bilinear extension of basis_product.
  Vec compose(VertexId a, VertexId b, VertexId c, const Vec& x, const Vec& y) const;

  friend std::shared_ptr<const BoundAlgebra> build_algebra(const Quiver&, const std::vector<RelationSpec>&, Field,
                                                           std::size_t);
  friend std::shared_ptr<const BoundAlgebra> opposite(const BoundAlgebra&);
  friend std::shared_ptr<const BoundAlgebra> quotient_by_vertices(const BoundAlgebra&, const std::vector<VertexId>&);

 private:
  BoundAlgebra() = default;
  std::size_t triple(VertexId a, VertexId b, VertexId c) const { return (a * vertex_count() + b) * vertex_count() + c; }

  Quiver quiver_;
  Field field_;
  std::size_t nilpotency_ = 1;
  std::vector<std::vector<std::vector<Path>>> basis_;
  std::vector<std::vector<Vec>> products_;
  std::vector<Vec> arrow_elements_;
  std::vector<bool> killed_;
  std::vector<RelationSpec> relations_;
};

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

/// Compiles K Q / I. The nilpotency bound N is the least L <= max_length such
/// that every path of length L lies in I + J^{L+1}; the result is K Q / (I + J^N).
AlgebraPtr build_algebra(const Quiver& q, const std::vector<RelationSpec>& rels, Field field,
                         std::size_t max_length);

AlgebraPtr opposite(const BoundAlgebra& a);

/// Quotient by the two-sided ideal generated by the idempotents of `vertices`.
AlgebraPtr quotient_by_vertices(const BoundAlgebra& a, const std::vector<VertexId>& vertices);

/// Componentwise span of the ideal generated by the idempotents of `vertices`.
HomSubspaces ideal_span(const BoundAlgebra& a, const std::vector<VertexId>& vertices);

/// Span of the basis classes of positive length (the arrow ideal).
HomSubspaces radical_basis(const BoundAlgebra& a);

/// Componentwise span of all products "first x in X, then y in Y".
HomSubspaces product_span(const BoundAlgebra& a, const HomSubspaces& first, const HomSubspaces& second);

HomSubspaces zero_hom_subspaces(const BoundAlgebra& a);

}  // namespace qstrat
