#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/perm.hpp"

namespace ybx {

/// A map r on X x X, stored in full.
class RTable {
 public:
  using Pair = std::pair<Point, Point>;

  /// entries[x * n + y] = r(x, y).
  RTable(std::size_t n, std::vector<Pair> entries);

  std::size_t size() const { return n_; }
  Pair operator()(Point x, Point y) const { return entries_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<Pair> entries_;
};

enum class Check { Bijective, Braid, Involutive, NonDegenerate };

std::string to_string(Check c);

/// A failed check together with the points that witness the failure.
///   Bijective:     {x1, y1, x2, y2} with r(x1,y1) = r(x2,y2)
///   Braid:         {x, y, z}
///   Involutive:    {x, y} with r(r(x,y)) != (x,y)
///   NonDegenerate: {x}; `message` says whether sigma_x or gamma_x fails
struct Violation {
  Check check;
  std::vector<Point> points;
  std::string message;
};

std::optional<Violation> find_bijectivity_violation(const RTable& r);
std::optional<Violation> find_braid_violation(const RTable& r);
std::optional<Violation> find_involutivity_violation(const RTable& r);
std::optional<Violation> find_nondegeneracy_violation(const RTable& r);

inline bool check_braid(const RTable& r) { return !find_braid_violation(r); }
inline bool check_involutive(const RTable& r) {
  return !find_involutivity_violation(r);
}
inline bool check_nondegenerate(const RTable& r) {
  return !find_nondegeneracy_violation(r);
}

struct ValidationReport {
  std::optional<Violation> bijective;
  std::optional<Violation> braid;
  std::optional<Violation> involutive;
  std::optional<Violation> nondegenerate;

  bool ok() const { return !bijective && !braid && !involutive && !nondegenerate; }
  /// Failed checks in a fixed order.
  std::vector<Violation> failures() const;
};

ValidationReport validate(const RTable& r);

/// r(x, y) = (sigma_x(y), sigma^{-1}_{sigma_x(y)}(x)).
RTable rtable_from_sigmas(std::span<const Perm> sigmas);

class InvalidSolution : public Error {
 public:
  explicit InvalidSolution(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A finite involutive non-degenerate solution, stored as its sigma table.
/// Instances are only ever constructed from tables that pass validation.
class Solution {
 public:
  /// Throws InvalidSolution (all failed checks attached) or
  /// std::invalid_argument when the table shape is wrong.
  static Solution from_sigma_table(PointSet points, std::vector<Perm> sigmas);

  /// r(x, y) = (y, x).
  static Solution flip(std::size_t n);
  /// sigma_x = c for every x.
  static Solution permutation_solution(const Perm& c);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return sigmas_.size(); }
  const Perm& sigma(Point x) const { return sigmas_[x]; }
  const Perm& gamma(Point y) const { return gammas_[y]; }
  const std::vector<Perm>& sigmas() const { return sigmas_; }
  RTable::Pair operator()(Point x, Point y) const {
    const Point u = sigmas_[x](y);
    return {u, gammas_[y](x)};
  }
  RTable rtable() const { return rtable_from_sigmas(sigmas_); }

  bool involutive() const { return true; }
  bool nondegenerate() const { return true; }

  /// Same points relabeled by phi: sigma'_{phi(x)} = phi sigma_x phi^{-1}.
  Solution relabeled(const Perm& phi) const;

  bool operator==(const Solution& other) const {
    return points_ == other.points_ && sigmas_ == other.sigmas_;
  }

 private:
  Solution(PointSet points, std::vector<Perm> sigmas, std::vector<Perm> gammas)
      : points_(std::move(points)),
        sigmas_(std::move(sigmas)),
        gammas_(std::move(gammas)) {}

  PointSet points_;
  std::vector<Perm> sigmas_;
  std::vector<Perm> gammas_;
};

/// The diagonal map x -> sigma_x^{-1}(x). Throws InternalCheckFailure when
/// it is not a bijection.
Perm diagonal_map(const Solution& s);

/// Rack solution r(x, y) = (x y x^{-1}, x) on the conjugacy class of a
/// group element. Points are the class members in the group's element order.
struct ConjugationSolution {
  std::vector<Perm> members;
  PointSet points;
  RTable table;
  /// False when the class generates an abelian subgroup (then r is the flip
  /// and involutive).
  bool generates_nonabelian;
};

/// Throws std::invalid_argument when class_rep is not in g.
ConjugationSolution conjugation_solution(const FiniteGroup& g,
                                         const Perm& class_rep);

/// Lexicographically least relabeled sigma table.
std::vector<Perm> canonical_form(const Solution& s);

/// Every involutive non-degenerate solution on n <= 4 points (labels
/// "1".."n"), in lexicographic sigma-table order. With dedup, one
/// representative per relabeling class: its canonical form, sorted.
/// Throws std::invalid_argument when n is outside [1, 4].
std::vector<Solution> enumerate_solutions(std::size_t n, bool dedup = false);

}  // namespace ybx
