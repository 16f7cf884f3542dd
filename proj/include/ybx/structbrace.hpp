#pragma once

// The structure brace on Z^(X): additive group free abelian on X, product
// v w = v + lambda_v(w), and lambda_v a permutation of X acting on
// coordinates. lambda is never looked up in a table; it is computed by
// peeling one signed unit vector e off v at a time,
//
//     lambda_{e + w} = lambda_e  lambda_{lambda_e^{-1}(w)},
//
// with lambda_{+y} = sigma_y and lambda_{-T(x)} = sigma_x^{-1}, where T is
// the diagonal map x -> sigma_x^{-1}(x).

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ybx/lattice.hpp"
#include "ybx/perm.hpp"
#include "ybx/retraction.hpp"
#include "ybx/solution.hpp"

namespace ybx {

class StructureBrace {
 public:
  explicit StructureBrace(const Solution& s);

  const Solution& solution() const { return solution_; }
  std::size_t size() const { return solution_.size(); }
  const Perm& diagonal() const { return diagonal_; }

  /// lambda_v, peeling the lowest nonzero coordinate first.
  Perm lambda(const IntVec& v) const;
  /// lambda_v, peeling coordinates in a random order drawn from rng.
  Perm lambda(const IntVec& v, std::mt19937_64& rng) const;

  /// v + lambda_v(w).
  IntVec mul(const IntVec& v, const IntVec& w) const;
  /// -lambda_v^{-1}(v). Throws InternalCheckFailure unless v inv(v) = 0.
  IntVec inv(const IntVec& v) const;
  bool in_socle(const IntVec& v) const { return lambda(v).is_identity(); }

 private:
  template <class Choose>
  Perm peel(IntVec v, Choose&& choose) const;

  Solution solution_;
  std::vector<Perm> sigma_inv_;
  Perm diagonal_;
  Perm diagonal_inv_;
};

/// The series G^(m) of the structure brace, tracked through its image
/// P_m = lambda(G^(m)) in the permutation group.
struct SeriesReport {
  /// G^(2), G^(3), ..., one past the last listed P_m.
  std::vector<Lattice> lattices;
  /// P_1 = G(X,r), P_2, ..., up to the first m with P_{m+1} = P_m.
  std::vector<FiniteGroup> perm_images;
  /// Orbits of X under P_1, P_2, ...
  std::vector<Partition> orbit_history;
  bool multipermutation = false;
  /// First m with P_{m+1} = P_m.
  std::size_t stabilization_index = 1;
};

/// Throws GroupTooLarge past max_order.
SeriesReport series_lattices(const Solution& s,
                             std::size_t max_order = FiniteGroup::kDefaultMaxOrder);

struct PiCrossCheck {
  bool ok = false;
  /// |P_m| from the lattice pipeline and |G^(m)| from the permutation brace.
  std::vector<std::size_t> lattice_side;
  std::vector<std::size_t> brace_side;
  std::string detail;
};

/// Compares lambda(G^(m)) with the permutation brace series term by term,
/// as element sets.
PiCrossCheck pi_cross_check(const Solution& s,
                            std::size_t max_order = FiniteGroup::kDefaultMaxOrder);

struct MpOutcome {
  bool multipermutation = false;
  /// From the retraction tower.
  std::optional<std::size_t> level;
  MpVerdict tower;
  SeriesReport series;
};

/// Series verdict, with the level taken from the retraction tower. Throws
/// InternalCheckFailure when the two disagree.
MpOutcome mp_verdict(const Solution& s,
                     std::size_t max_order = FiniteGroup::kDefaultMaxOrder);

}  // namespace ybx
