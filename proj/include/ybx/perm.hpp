#pragma once

// Permutations of a finite labeled point set and the small amount of finite
// group theory the rest of the library needs: closure, orbits, normality,
// index-two subgroups, subgroup enumeration and isomorphism testing.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ybx {

using Point = std::uint32_t;

/// Ordered set of distinct single-character labels. Points are the 0-based
/// indices; labels only matter for input and output.
class PointSet {
 public:
  explicit PointSet(std::string labels);

  /// "123456789abc...zABC...Z" truncated to n labels.
  static PointSet standard(std::size_t n);
  static constexpr std::size_t kMaxStandard = 61;

  std::size_t size() const { return labels_.size(); }
  const std::string& labels() const { return labels_; }
  char label(Point p) const { return labels_.at(p); }
  std::optional<Point> find(char label) const;

  bool operator==(const PointSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::string labels_;
  std::array<std::int16_t, 256> lookup_{};
};

/// A bijection of {0, ..., n-1}.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Multiplicative order (lcm of the cycle lengths).
  std::size_t order() const;
  /// Nontrivial cycles, each starting at its smallest point, ordered by
  /// that point.
  std::vector<std::vector<Point>> cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

/// Apply q, then p. Throws std::invalid_argument on a degree mismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }
inline Perm inverse(const Perm& p) { return p.inverse(); }
inline Point act(const Perm& p, Point i) { return p(i); }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Parses a product of disjoint cycles such as "(37)(48)(bf)(cg)".
/// Whitespace is ignored and commas may separate labels inside a cycle;
/// "" and "()" denote the identity. Throws CycleParseError.
Perm parse_cycles(std::string_view text, const PointSet& points);

/// Canonical cycle notation: fixed points omitted, identity prints as "".
std::string format_cycles(const Perm& p, const PointSet& points);

using Partition = std::vector<std::vector<Point>>;

/// Orbits of the group generated by `gens` on n points, each sorted, ordered
/// by smallest point.
Partition orbits(std::span<const Perm> gens, std::size_t n);

/// A finite permutation group, stored as its full element list. Element 0
/// is always the identity. Elements are discovered breadth-first, and every
/// non-identity element records the generator and parent it came from, so
/// each element has a generator word.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 5000;

  /// Breadth-first closure of `gens` acting on `degree` points. Throws
  /// GroupTooLarge once more than `max_order` elements appear.
  static FiniteGroup closure(std::span<const Perm> gens, std::size_t degree,
                             std::size_t max_order = kDefaultMaxOrder);

  /// Subgroup whose element set is exactly `elements`. Throws
  /// std::invalid_argument when the set is not closed under composition.
  static FiniteGroup from_elements(std::span<const Perm> elements,
                                   std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  /// Generator indices g1..gk with element(i) = gen[g1] * ... * gen[gk].
  std::vector<std::size_t> word(std::size_t i) const;

  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_profile() const;
  /// Element set equality.
  bool same_elements(const FiniteGroup& other) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Greedy irredundant generating set of g (element indices), preferring
/// elements of large order.
std::vector<std::size_t> small_generating_set(const FiniteGroup& g);

/// Throws std::invalid_argument when sub is not contained in g.
bool is_normal(const FiniteGroup& sub, const FiniteGroup& g);

/// All subgroups of index two, as kernels of surjections onto Z/2.
std::vector<FiniteGroup> index2_subgroups(const FiniteGroup& g);

/// All subgroups of g by cyclic extension, each given as a sorted list of
/// element indices of g. Throws GroupTooLarge when |g| > bound.
std::vector<std::vector<std::size_t>> enumerate_subgroups(
    const FiniteGroup& g, std::size_t bound = 100);

/// Isomorphism test by generator-image backtracking. Throws GroupTooLarge
/// when either order exceeds `bound`.
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                   std::size_t bound = 100);

/// Cyclic, dihedral, symmetric groups and their direct products.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Product };
  Kind kind = Kind::Cyclic;
  /// Cyclic: n. Dihedral: the group order 2n. Symmetric: degree n.
  std::size_t param = 1;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(std::size_t n) { return {Kind::Cyclic, n, {}}; }
  static GroupSpec dihedral(std::size_t order) {
    return {Kind::Dihedral, order, {}};
  }
  static GroupSpec symmetric(std::size_t n) {
    return {Kind::Symmetric, n, {}};
  }
  static GroupSpec product(std::vector<GroupSpec> factors) {
    return {Kind::Product, 0, std::move(factors)};
  }

  std::size_t order() const;
  /// "Z/2", "D8", "Sym4", "Z/2 x D8".
  std::string name() const;
};

/// Inverse of GroupSpec::name. Throws std::invalid_argument.
GroupSpec parse_group_spec(std::string_view text);

/// Concrete permutation realization. Throws std::invalid_argument for
/// unsupported parameters and GroupTooLarge past `max_order`.
FiniteGroup named_group(const GroupSpec& spec,
                        std::size_t max_order = FiniteGroup::kDefaultMaxOrder);

/// First catalogue name (fewest factors first) isomorphic to g, searching
/// products of up to three cyclic, dihedral and symmetric factors. Returns
/// nothing when |g| > bound or no catalogue entry matches.
std::optional<GroupSpec> identify_group(const FiniteGroup& g,
                                        std::size_t bound = 100);

}  // namespace ybx
