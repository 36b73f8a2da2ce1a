#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "qstrat/algebra.hpp"
#include "qstrat/repmod.hpp"
#include "qstrat/stratify.hpp"

namespace qstrat::testing {

/// Linear quiver 1 -> 2 -> ... -> n with arrows a1, a2, ...; `zero_paths`
/// lists monomial relations as arrow-name paths.
AlgebraPtr linear_algebra(std::size_t n, const std::vector<std::vector<std::string>>& zero_paths = {},
                          Field f = Field::rationals());

/// Vertices 0..n-1, a loop a<i> at each vertex and b<i> : i -> i+1, every
/// path of length two zero.
AlgebraPtr loop_chain_algebra(std::size_t n, Field f = Field::rationals());

/// K[x]/(x^k) on a single vertex.
AlgebraPtr truncated_polynomial(std::size_t k, Field f = Field::rationals());

AlgebraPtr monomial_algebra(const Quiver& q, const std::vector<std::vector<std::string>>& zero_paths, Field f,
                            std::size_t max_length = 8);

/// Random bound quiver algebra with monomial relations: every path of length
/// three is zero and each path of length two is zero with probability 1/2.
struct RandomFixture {
  Quiver quiver;
  std::vector<std::vector<std::string>> zero_paths;
  AlgebraPtr algebra;
  StratPlan plan;
};
RandomFixture random_fixture(std::mt19937& rng, Field f = Field::rationals(), std::size_t max_vertices = 4,
                             std::size_t max_arrows = 5);

StratPlan random_plan(std::mt19937& rng, std::size_t vertex_count);

Scalar random_scalar(std::mt19937& rng, Field f, long lo = -2, long hi = 2);
Mat random_mat(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols, long lo = -2, long hi = 2);
/// Random linear combination of a basis of maps M -> N (zero when the basis is empty).
ModuleMap random_map(std::mt19937& rng, const RightModule& m, const RightModule& n,
                     const std::vector<ModuleMap>& basis);

/// f(S) for a module map f : M -> N and a submodule S of M.
Submodule map_submodule(const RightModule& n, const ModuleMap& f, const Submodule& s);

/// A module built as an iterated extension of standard modules, together with
/// the chain of submodules it came from (one standard per layer) and the
/// number of standards used at each vertex.
struct FilteredModule {
  RightModule module;
  std::vector<Submodule> chain;
  std::vector<std::size_t> counts;
};
FilteredModule random_filtered_module(std::mt19937& rng, const Stratification& s, std::size_t layers);

/// Random representation over the algebra's field with the given dimension
/// vector, found by rejection sampling on entries in {0, 1}; nullopt when
/// the attempt budget runs out.
std::optional<RightModule> random_module(std::mt19937& rng, const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                                         std::size_t attempts = 64);

}  // namespace qstrat::testing
