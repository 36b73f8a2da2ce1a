#pragma once

// Independent reference computations used to cross-check the library. None of
// them call into exactlin; they work on plain integers.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qstrat/repmod.hpp"

namespace qstrat::testing {

using IntMatrix = std::vector<std::vector<long>>;

/// Rank by textbook Gaussian elimination; p = 0 means the rationals.
std::size_t oracle_rank(const IntMatrix& rows, std::uint32_t p);

/// A representation written out in integers, read off a RightModule over F_p.
struct PlainQuiver {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
  std::vector<std::vector<std::size_t>> zero_paths;          // arrow ids, first to last
};
struct PlainRep {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> actions;  // arrow s -> t: dims[s] x dims[t]
};
PlainRep to_plain(const RightModule& m);

/// dim Hom(M, N) over F_p from the commuting-square equations f_s M(x) = N(x) f_t.
std::size_t plain_hom_dim(const PlainQuiver& q, const PlainRep& m, const PlainRep& n, std::uint32_t p);

/// dim Ext^1(M, N) over F_p by listing every extension 0 -> N -> E -> M -> 0
/// with E(v) = N(v) + M(v), keeping those satisfying the zero relations, and
/// dividing out the ones equivalent to the split extension. Throws when the
/// enumeration would exceed `budget` candidates.
std::size_t brute_force_ext1(const PlainQuiver& q, const PlainRep& m, const PlainRep& n, std::uint32_t p,
                             std::size_t budget = 1u << 22);

/// Classical verdicts for the linear quiver 0 -> 1 -> ... -> n-1 with monomial
/// relations, each given as a vertex interval [from, to] whose path is zero.
/// `order[k]` is the vertex in the k-th one-point stratum. Every module
/// involved is thin (dimension at most one per vertex) and everything is
/// decided over F_2 by enumerating maps, submodules and submodule chains.
struct ClassicalVerdict {
  bool standardly_stratified = false;
  bool quasi_hereditary = false;
};
ClassicalVerdict classical_linear_verdict(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& zero,
                                          const std::vector<std::size_t>& order);

}  // namespace qstrat::testing
