#include "ybx/permbrace.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "ybx/errors.hpp"

namespace ybx {

using Element = PermBrace::Element;

PermBrace PermBrace::build(const Solution& s, const BraceOptions& options) {
  const std::size_t n = s.size();
  PermBrace b(s, FiniteGroup::closure(s.sigmas(), n, options.max_order));
  const std::size_t order = b.group_.order();

  b.gen_.resize(n);
  for (Point x = 0; x < n; ++x) b.gen_[x] = *b.group_.index_of(s.sigma(x));

  b.mul_inv_.resize(order);
  b.inverse_perm_.resize(order);
  for (Element u = 0; u < order; ++u) {
    b.inverse_perm_[u] = b.perm(u).inverse();
    b.mul_inv_[u] = *b.group_.index_of(b.inverse_perm_[u]);
  }

  b.right_gen_.resize(order * n);
  for (Element u = 0; u < order; ++u)
    for (Point x = 0; x < n; ++x)
      b.right_gen_[u * n + x] = *b.group_.index_of(compose(b.perm(u), s.sigma(x)));

  // u = sigma_{x1} ... sigma_{xk}  ->  z_i = (sigma_{x1} ... sigma_{x_{i-1}})(x_i)
  b.decomp_.resize(order);
  for (Element u = 0; u < order; ++u) {
    Perm prefix = Perm::identity(n);
    for (std::size_t x : b.group_.word(u)) {
      b.decomp_[u].push_back(prefix(static_cast<Point>(x)));
      prefix = compose(prefix, s.sigma(static_cast<Point>(x)));
    }
  }

  if (order <= options.addition_table_limit) {
    b.add_table_.resize(order * order);
    for (Element u = 0; u < order; ++u)
      for (Element v = 0; v < order; ++v)
        b.add_table_[u * order + v] = b.fold(u, b.decomp_[v]);
  }

  b.neg_.resize(order);
  for (Element u = 0; u < order; ++u) b.neg_[u] = b.lambda(u, b.mul_inv_[u]);

  b.verify(options);
  return b;
}

Element PermBrace::fold(Element acc, std::span<const Point> z) const {
  const std::size_t n = solution_.size();
  for (Point p : z) acc = right_gen_[acc * n + inverse_perm_[acc](p)];
  return acc;
}

Element PermBrace::mul(Element u, Element v) const {
  return *group_.index_of(compose(perm(u), perm(v)));
}

Element PermBrace::sum_of_generators(std::span<const Point> z) const {
  return fold(identity(), z);
}

Element PermBrace::add(Element u, Element v) const {
  if (!add_table_.empty()) return add_table_[u * order() + v];
  return fold(u, decomp_[v]);
}

Element PermBrace::lambda(Element u, Element v) const {
  std::vector<Point> moved(decomp_[v]);
  const Perm& pu = perm(u);
  for (Point& z : moved) z = pu(z);
  return sum_of_generators(moved);
}

Element PermBrace::star(Element u, Element v) const {
  const Element via_lambda = sub(lambda(u, v), v);
  const Element direct = sub(sub(mul(u, v), u), v);
  if (via_lambda != direct)
    throw InternalCheckFailure("star: uv - u - v differs from lambda_u(v) - v");
  return direct;
}

void PermBrace::verify(const BraceOptions& options) const {
  const std::size_t order = group_.order();
  const std::size_t n = solution_.size();
  auto fail = [](const std::string& what) {
    throw InternalCheckFailure("permutation brace: " + what);
  };

  for (Element u = 0; u < order; ++u) {
    if (sum_of_generators(decomp_[u]) != u)
      fail("additive decomposition does not fold back");
    if (add(u, neg_[u]) != identity() || add(neg_[u], u) != identity())
      fail("negation is not an additive inverse");
    // The sum for sigma_x u must not depend on which word produced it.
    for (Point x = 0; x < n; ++x) {
      const Element g = gen_[x];
      if (add(g, lambda(g, u)) != mul(g, u))
        fail("decomposition depends on the generator word");
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Element> pick(0, order - 1);

  if (!add_table_.empty()) {
    for (Element u = 0; u < order; ++u)
      for (Element v = u + 1; v < order; ++v)
        if (add(u, v) != add(v, u)) fail("addition is not commutative");
  } else {
    for (std::size_t i = 0; i < options.sampled_triples; ++i) {
      const Element u = pick(rng), v = pick(rng);
      if (add(u, v) != add(v, u)) fail("addition is not commutative");
    }
  }

  auto check_triple = [&](Element a, Element bb, Element c) {
    if (add(mul(a, add(bb, c)), a) != add(mul(a, bb), mul(a, c)))
      fail("brace axiom a(b+c)+a = ab+ac fails");
    if (add(add(a, bb), c) != add(a, add(bb, c)))
      fail("addition is not associative");
  };
  if (order <= options.exhaustive_axiom_limit) {
    for (Element a = 0; a < order; ++a)
      for (Element bb = 0; bb < order; ++bb)
        for (Element c = 0; c < order; ++c) check_triple(a, bb, c);
  } else {
    for (std::size_t i = 0; i < options.sampled_triples; ++i)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<bool> membership(const PermBrace& b,
                             std::span<const Element> members) {
  std::vector<bool> in(b.order(), false);
  for (Element e : members) {
    if (e >= b.order()) throw std::invalid_argument("element out of range");
    in[e] = true;
  }
  return in;
}

}  // namespace

bool is_ideal(const PermBrace& b, std::span<const Element> members) {
  const auto in = membership(b, members);
  if (!in[PermBrace::identity()])
    throw std::invalid_argument("not a subgroup: identity missing");
  for (Element u : members)
    for (Element v : members)
      if (!in[b.mul(u, v)]) throw std::invalid_argument("not a subgroup");

  for (Element u : members)
    for (Element v : members)
      if (!in[b.add(u, v)]) return false;
  for (const Perm& t : b.group().generators()) {
    const Element g = *b.find(t);
    const Element gi = b.mul_inverse(g);
    for (Element u : members) {
      if (!in[b.mul(g, b.mul(u, gi))]) return false;
      if (!in[b.lambda(g, u)]) return false;
    }
  }
  return true;
}

bool is_ideal(const PermBrace& b, const FiniteGroup& sub) {
  std::vector<Element> members;
  members.reserve(sub.order());
  for (const Perm& p : sub.elements()) {
    const auto e = b.find(p);
    if (!e) throw std::invalid_argument("subgroup is not contained in the brace");
    members.push_back(*e);
  }
  return is_ideal(b, members);
}

namespace {

BraceIdeal make_ideal(const PermBrace& b, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  std::vector<Perm> perms;
  perms.reserve(members.size());
  for (Element e : members) perms.push_back(b.perm(e));
  BraceIdeal out{std::move(members),
                 FiniteGroup::from_elements(perms, b.group().degree()), false,
                 false};
  out.is_ideal = is_ideal(b, out.members);
  return out;
}

}  // namespace

BraceIdeal socle(const PermBrace& b) {
  const std::size_t n = b.solution().size();
  std::vector<Element> members;
  for (Element u = 0; u < b.order(); ++u) {
    bool fixes = true;
    for (Point y = 0; y < n && fixes; ++y)
      fixes = b.generator(b.perm(u)(y)) == b.generator(y);
    if (fixes) members.push_back(u);
  }
  BraceIdeal out = make_ideal(b, std::move(members));
  out.is_socle = true;
  return out;
}

std::vector<BraceIdeal> ideals(const PermBrace& b, std::size_t bound) {
  std::vector<BraceIdeal> out;
  for (auto& members : enumerate_subgroups(b.group(), bound)) {
    if (is_ideal(b, members)) out.push_back(make_ideal(b, std::move(members)));
  }
  return out;
}

bool is_simple(const PermBrace& b, std::size_t bound) {
  if (b.order() == 1) return false;
  for (const auto& members : enumerate_subgroups(b.group(), bound)) {
    if (members.size() == 1 || members.size() == b.order()) continue;
    if (is_ideal(b, members)) return false;
  }
  return true;
}

std::vector<Element> additive_closure(const PermBrace& b,
                                      std::span<const Element> gens) {
  std::vector<bool> in(b.order(), false);
  std::vector<Element> distinct;
  for (Element g : gens) {
    if (g != PermBrace::identity() && !in[g]) {
      in[g] = true;
      distinct.push_back(g);
    }
  }
  std::fill(in.begin(), in.end(), false);
  std::vector<Element> members{PermBrace::identity()};
  in[PermBrace::identity()] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Element g : distinct) {
      const Element s = b.add(members[k], g);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<BraceIdeal> series(const PermBrace& b) {
  const std::size_t n = b.solution().size();
  std::vector<Element> current(b.order());
  for (Element u = 0; u < b.order(); ++u) current[u] = u;

  std::vector<BraceIdeal> out;
  out.push_back(make_ideal(b, current));
  while (true) {
    std::vector<bool> seen(b.order(), false);
    std::vector<Element> stars;
    for (Element u : current) {
      for (Point y = 0; y < n; ++y) {
        const Element s = b.star(u, b.generator(y));
        if (!seen[s]) {
          seen[s] = true;
          stars.push_back(s);
        }
      }
    }
    std::vector<Element> next = additive_closure(b, stars);
    if (next == current) break;
    current = std::move(next);
    out.push_back(make_ideal(b, current));
  }
  return out;
}

}  // namespace ybx
