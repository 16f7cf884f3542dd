#pragma once

// The left brace on the permutation group G(X,r) generated by the sigma_x.
//
// Elements are indices into the group's element list. Multiplication is
// composition. Addition is never tabulated from outside data: every element
// u = sigma_{x1} ... sigma_{xk} is written as a sum of generators
// sigma_{z1} + ... + sigma_{zk} with z_i = (sigma_{x1} ... sigma_{x_{i-1}})(x_i),
// and sums are folded in one generator at a time using
//
//     a + sigma_z = a * sigma_{a^{-1}(z)},
//
// which is a + b = a lambda_a^{-1}(b) together with lambda_a(sigma_y) =
// sigma_{a(y)}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ybx/perm.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct BraceOptions {
  std::size_t max_order = FiniteGroup::kDefaultMaxOrder;
  /// Brace axiom checked on all triples up to this order, sampled above.
  std::size_t exhaustive_axiom_limit = 64;
  std::size_t sampled_triples = 10000;
  std::uint64_t seed = 20170520;
  /// Addition is tabulated up to this order.
  std::size_t addition_table_limit = 1024;
};

class PermBrace {
 public:
  using Element = std::size_t;

  /// Throws GroupTooLarge, or InternalCheckFailure when a build-time
  /// consistency check (cocycle, commutativity, brace axiom) fails.
  static PermBrace build(const Solution& s, const BraceOptions& options = {});

  const Solution& solution() const { return solution_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  static constexpr Element identity() { return 0; }

  /// sigma_x.
  Element generator(Point x) const { return gen_[x]; }
  const Perm& perm(Element u) const { return group_.element(u); }
  std::optional<Element> find(const Perm& p) const { return group_.index_of(p); }

  Element mul(Element u, Element v) const;
  Element mul_inverse(Element u) const { return mul_inv_[u]; }

  /// Points z with u = sum of sigma_z.
  const std::vector<Point>& additive_decomposition(Element u) const {
    return decomp_[u];
  }
  /// sigma_{z1} + ... + sigma_{zk}.
  Element sum_of_generators(std::span<const Point> z) const;

  Element add(Element u, Element v) const;
  Element neg(Element u) const { return neg_[u]; }
  Element sub(Element u, Element v) const { return add(u, neg(v)); }

  /// lambda_u(v) = uv - u, computed on generators and re-summed.
  Element lambda(Element u, Element v) const;
  /// u * v = uv - u - v.
  Element star(Element u, Element v) const;

 private:
  PermBrace(Solution s, FiniteGroup g)
      : solution_(std::move(s)), group_(std::move(g)) {}

  Element fold(Element acc, std::span<const Point> z) const;
  void verify(const BraceOptions& options) const;

  Solution solution_;
  FiniteGroup group_;
  std::vector<Element> gen_;
  std::vector<Element> mul_inv_;
  std::vector<Element> neg_;
  std::vector<std::vector<Point>> decomp_;
  std::vector<Perm> inverse_perm_;
  // right_gen_[u * n + x] = u * sigma_x
  std::vector<Element> right_gen_;
  // empty when the order exceeds the table limit
  std::vector<Element> add_table_;
};

/// A subgroup of a brace with the ideal properties that were checked.
struct BraceIdeal {
  /// Sorted element indices.
  std::vector<PermBrace::Element> members;
  FiniteGroup subgroup;
  bool is_ideal = false;
  bool is_socle = false;

  std::size_t order() const { return members.size(); }
  bool is_trivial() const { return members.size() == 1; }
};

/// Addition-closed, normal in the multiplicative group and lambda-invariant.
/// Throws std::invalid_argument when `members` is not a subgroup of the
/// multiplicative group.
bool is_ideal(const PermBrace& b, std::span<const PermBrace::Element> members);
/// Throws std::invalid_argument when sub is not contained in the brace.
bool is_ideal(const PermBrace& b, const FiniteGroup& sub);

/// {u : lambda_u = id}, i.e. sigma_{u(y)} = sigma_y for every y.
BraceIdeal socle(const PermBrace& b);

/// All ideals, found among all subgroups. Throws GroupTooLarge above bound.
std::vector<BraceIdeal> ideals(const PermBrace& b, std::size_t bound = 100);

/// A brace of order > 1 whose only ideals are 0 and itself.
bool is_simple(const PermBrace& b, std::size_t bound = 100);

/// Additive subgroup generated by `gens`, sorted.
std::vector<PermBrace::Element> additive_closure(
    const PermBrace& b, std::span<const PermBrace::Element> gens);

/// B^(1) = B, B^(m+1) = <u * v : u in B^(m), v in B>_+, up to the first
/// repeat (which is not listed again).
std::vector<BraceIdeal> series(const PermBrace& b);

}  // namespace ybx
