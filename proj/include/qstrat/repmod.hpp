#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qstrat/algebra.hpp"
#include "qstrat/exactlin.hpp"

namespace qstrat {

class InvalidModule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Right module over a bound algebra, given as a representation: a space
/// M(v) = K^{dims[v]} per vertex and, for each arrow x : s -> t, a
/// dims[s] x dims[t] matrix for the action M(t) -> M(s). A basis element z of
/// Hom(a, b) then acts by a dims[a] x dims[b] matrix, the product of the arrow
/// matrices along its path.
class RightModule {
 public:
  RightModule() = default;
  /// Validates the relations and vanishing at killed vertices; throws InvalidModule.
  RightModule(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> actions);

  static RightModule unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> actions);
  static RightModule zero(AlgebraPtr algebra);

  const BoundAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Field field() const { return algebra_->field(); }
  std::size_t vertex_count() const { return dims_.size(); }
  std::size_t dim(VertexId v) const { return dims_[v]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Mat& action(ArrowId x) const { return actions_[x]; }
  const std::vector<Mat>& actions() const { return actions_; }
  /// Action of the i-th basis element of Hom(a, b), as a map M(b) -> M(a).
  const Mat& basis_action(VertexId a, VertexId b, std::size_t i) const { return basis_actions_[a][b][i]; }
  Mat element_action(VertexId a, VertexId b, const Vec& z) const;

  /// Same data over another algebra on the same quiver, validated again.
  RightModule rehome(AlgebraPtr other) const;

  friend bool operator==(const RightModule& x, const RightModule& y);

 private:
  void build_basis_actions();
  void validate() const;

  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> actions_;
  std::vector<std::vector<std::vector<Mat>>> basis_actions_;
};

/// Family of linear maps f_v : M(v) -> N(v); component v is dims_N[v] x dims_M[v].
struct ModuleMap {
  std::vector<Mat> components;

  bool is_zero() const;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

/// Per-vertex subspaces M'(v) of M(v), closed under the action.
struct Submodule {
  std::vector<Subspace> parts;

  std::size_t total_dim() const;
  friend bool operator==(const Submodule&, const Submodule&) = default;
};

struct SubmoduleModule {
  RightModule module;
  ModuleMap inclusion;
};

struct QuotientModule {
  RightModule module;
  ModuleMap projection;
};

/// The right ideal e Λ as a module: M(v) = Hom(v, e), arrow x acting by p -> x p.
RightModule free_right_module(const AlgebraPtr& algebra, VertexId e);
/// The simple module at v.
RightModule simple_module(const AlgebraPtr& algebra, VertexId v);
RightModule direct_sum(const RightModule& m, const RightModule& n);

bool is_module_map(const RightModule& m, const RightModule& n, const ModuleMap& f);
ModuleMap compose(const ModuleMap& first, const ModuleMap& second);
ModuleMap zero_map(const RightModule& m, const RightModule& n);
ModuleMap identity_map(const RightModule& m);
/// Basis of Hom(M, N).
std::vector<ModuleMap> hom_space(const RightModule& m, const RightModule& n);

Submodule zero_submodule(const RightModule& m);
Submodule full_submodule(const RightModule& m);
bool is_submodule(const RightModule& m, const Submodule& s);
Submodule sum(const Submodule& a, const Submodule& b);
/// Smallest submodule containing the given vectors; generators[v] lie in M(v).
Submodule submodule_generated(const RightModule& m, const std::vector<std::vector<Vec>>& generators);
/// Sum of the images of all maps from the given modules into M.
Submodule trace(const std::vector<RightModule>& sources, const RightModule& m);
/// Trace of the projectives fΛ, f in `vertices`: the submodule generated by the M(f).
Submodule trace_of_vertices(const RightModule& m, const std::vector<VertexId>& vertices);
/// M · rad: the sum of the images of all arrow actions.
Submodule radical_of_module(const RightModule& m);
Submodule kernel(const RightModule& m, const RightModule& n, const ModuleMap& f);
Submodule image(const RightModule& n, const ModuleMap& f);

SubmoduleModule submodule_as_module(const RightModule& m, const Submodule& s);
QuotientModule quotient_module(const RightModule& m, const Submodule& s);

/// dim of M / M·rad at each vertex.
std::vector<std::size_t> top_dims(const RightModule& m);
struct Projectivity {
  bool projective = false;
  /// Multiplicity of each vertex projective in a projective cover (the top dims).
  std::vector<std::size_t> multiplicities;
};
Projectivity projectivity(const RightModule& m);
bool is_projective(const RightModule& m);
bool is_surjective(const RightModule& n, const ModuleMap& f);

struct ProjectiveCover {
  RightModule cover;
  ModuleMap map;
  /// Vertex of each indecomposable summand of the cover, in order.
  std::vector<VertexId> summands;
};
ProjectiveCover projective_cover(const RightModule& m);

/// The module projective / relations, with `projective` a projective module.
struct Presentation {
  RightModule projective;
  Submodule relations;
};
Presentation presentation_of(const RightModule& m);
std::size_t ext1(const Presentation& p, const RightModule& n);
std::size_t ext1_dim(const RightModule& m, const RightModule& n);

struct Pushout {
  RightModule module;
  ModuleMap from_k;  // K -> pushout
  ModuleMap from_p;  // P -> pushout
};

/// (K ⊕ P) / {(g(u), -i(u))} for g : U -> K and i : U -> P.
Pushout pushout(const RightModule& u, const RightModule& k, const RightModule& p, const ModuleMap& g,
                    const ModuleMap& i);

}  // namespace qstrat
