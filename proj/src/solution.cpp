#include "ybx/solution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ybx {

RTable::RTable(std::size_t n, std::vector<Pair> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("r-table needs n*n entries");
  for (const auto& [u, v] : entries_)
    if (u >= n_ || v >= n_) throw std::invalid_argument("r-table entry out of range");
}

std::string to_string(Check c) {
  switch (c) {
    case Check::Bijective: return "bijective";
    case Check::Braid: return "braid";
    case Check::Involutive: return "involutive";
    case Check::NonDegenerate: return "nondegenerate";
  }
  return "?";
}

std::optional<Violation> find_bijectivity_violation(const RTable& r) {
  const std::size_t n = r.size();
  std::vector<long> preimage(n * n, -1);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const auto [u, v] = r(x, y);
      long& slot = preimage[u * n + v];
      if (slot >= 0) {
        const auto px = static_cast<Point>(slot / static_cast<long>(n));
        const auto py = static_cast<Point>(slot % static_cast<long>(n));
        return Violation{Check::Bijective, {px, py, x, y}, "r is not injective"};
      }
      slot = static_cast<long>(x * n + y);
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_braid_violation(const RTable& r) {
  const std::size_t n = r.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id), rightmost factor first
        auto [a, b] = r(x, y);
        auto [b2, c] = r(b, z);
        auto [a2, b3] = r(a, b2);
        // (id x r)(r x id)(id x r)
        auto [q, s] = r(y, z);
        auto [p, q2] = r(x, q);
        auto [q3, s2] = r(q2, s);
        if (a2 != p || b3 != q3 || c != s2)
          return Violation{Check::Braid, {x, y, z}, "braid relation fails"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_involutivity_violation(const RTable& r) {
  const std::size_t n = r.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const auto [u, v] = r(x, y);
      if (r(u, v) != RTable::Pair{x, y})
        return Violation{Check::Involutive, {x, y}, "r(r(x,y)) != (x,y)"};
    }
  }
  return std::nullopt;
}

std::optional<Violation> find_nondegeneracy_violation(const RTable& r) {
  const std::size_t n = r.size();
  std::vector<bool> hit(n);
  for (Point x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (Point y = 0; y < n; ++y) {
      const Point u = r(x, y).first;
      if (hit[u])
        return Violation{Check::NonDegenerate, {x}, "sigma is not a bijection"};
      hit[u] = true;
    }
  }
  for (Point y = 0; y < n; ++y) {
    std::fill(hit.begin(), hit.end(), false);
    for (Point x = 0; x < n; ++x) {
      const Point v = r(x, y).second;
      if (hit[v])
        return Violation{Check::NonDegenerate, {y}, "gamma is not a bijection"};
      hit[v] = true;
    }
  }
  return std::nullopt;
}

std::vector<Violation> ValidationReport::failures() const {
  std::vector<Violation> out;
  for (const auto* v : {&bijective, &braid, &involutive, &nondegenerate})
    if (*v) out.push_back(**v);
  return out;
}

ValidationReport validate(const RTable& r) {
  return {find_bijectivity_violation(r), find_braid_violation(r),
          find_involutivity_violation(r), find_nondegeneracy_violation(r)};
}

RTable rtable_from_sigmas(std::span<const Perm> sigmas) {
  const std::size_t n = sigmas.size();
  std::vector<Perm> inv;
  inv.reserve(n);
  for (const Perm& s : sigmas) {
    if (s.degree() != n)
      throw std::invalid_argument("sigma table needs one permutation of degree n per point");
    inv.push_back(s.inverse());
  }
  std::vector<RTable::Pair> entries(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const Point u = sigmas[x](y);
      entries[x * n + y] = {u, inv[u](x)};
    }
  }
  return RTable(n, std::move(entries));
}

namespace {

std::string describe(const ValidationReport& report) {
  std::string msg = "not a valid involutive non-degenerate solution:";
  for (const auto& v : report.failures()) msg += " " + to_string(v.check);
  return msg;
}

}  // namespace

InvalidSolution::InvalidSolution(ValidationReport report)
    : Error(describe(report)), report_(std::move(report)) {}

Solution Solution::from_sigma_table(PointSet points, std::vector<Perm> sigmas) {
  if (sigmas.size() != points.size())
    throw std::invalid_argument("sigma table size does not match the point set");
  const RTable r = rtable_from_sigmas(sigmas);
  ValidationReport report = validate(r);
  if (!report.ok()) throw InvalidSolution(std::move(report));

  const std::size_t n = sigmas.size();
  std::vector<Perm> gammas;
  gammas.reserve(n);
  for (Point y = 0; y < n; ++y) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = r(x, y).second;
    gammas.emplace_back(std::move(img));
  }
  return Solution(std::move(points), std::move(sigmas), std::move(gammas));
}

Solution Solution::flip(std::size_t n) {
  return from_sigma_table(PointSet::standard(n),
                          std::vector<Perm>(n, Perm::identity(n)));
}

Solution Solution::permutation_solution(const Perm& c) {
  return from_sigma_table(PointSet::standard(c.degree()),
                          std::vector<Perm>(c.degree(), c));
}

Solution Solution::relabeled(const Perm& phi) const {
  const Perm phi_inv = phi.inverse();
  std::vector<Perm> out(size());
  for (Point x = 0; x < size(); ++x)
    out[phi(x)] = compose(phi, compose(sigmas_[x], phi_inv));
  return from_sigma_table(points_, std::move(out));
}

Perm diagonal_map(const Solution& s) {
  std::vector<Point> img(s.size());
  for (Point x = 0; x < s.size(); ++x) img[x] = s.sigma(x).inverse()(x);
  try {
    return Perm(std::move(img));
  } catch (const std::invalid_argument&) {
    throw InternalCheckFailure("diagonal map is not a bijection");
  }
}

ConjugationSolution conjugation_solution(const FiniteGroup& g,
                                         const Perm& class_rep) {
  if (!g.contains(class_rep))
    throw std::invalid_argument("class representative is not in the group");

  std::set<std::size_t> indices;
  for (const Perm& t : g.elements())
    indices.insert(*g.index_of(compose(t, compose(class_rep, t.inverse()))));
  std::vector<Perm> members;
  for (std::size_t i : indices) members.push_back(g.element(i));

  const std::size_t k = members.size();
  std::vector<RTable::Pair> entries(k * k);
  for (Point x = 0; x < k; ++x) {
    const Perm xi = members[x].inverse();
    for (Point y = 0; y < k; ++y) {
      const Perm conj = compose(members[x], compose(members[y], xi));
      const auto it = std::find(members.begin(), members.end(), conj);
      entries[x * k + y] = {static_cast<Point>(it - members.begin()), x};
    }
  }
  const bool nonabelian = !FiniteGroup::closure(members, g.degree()).is_abelian();
  return {members, PointSet::standard(k), RTable(k, std::move(entries)),
          nonabelian};
}

std::vector<Perm> canonical_form(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<Point> phi_img(n);
  for (std::size_t i = 0; i < n; ++i) phi_img[i] = static_cast<Point>(i);
  std::vector<Perm> best;
  do {
    const Perm phi(phi_img);
    const Perm phi_inv = phi.inverse();
    std::vector<Perm> table(n);
    for (Point x = 0; x < n; ++x)
      table[phi(x)] = compose(phi, compose(s.sigma(x), phi_inv));
    if (best.empty() || table < best) best = std::move(table);
  } while (std::next_permutation(phi_img.begin(), phi_img.end()));
  return best;
}

std::vector<Solution> enumerate_solutions(std::size_t n, bool dedup) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("enumeration supports 1 <= n <= 4");

  std::vector<Perm> all;
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  do {
    all.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));

  const PointSet points = PointSet::standard(n);
  std::vector<Solution> found;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Perm> table(n, all[0]);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) table[i] = all[digit[i]];
    const RTable r = rtable_from_sigmas(table);
    if (!find_involutivity_violation(r) && !find_nondegeneracy_violation(r) &&
        !find_bijectivity_violation(r) && !find_braid_violation(r))
      found.push_back(Solution::from_sigma_table(points, table));

    std::size_t pos = n;
    while (pos > 0 && ++digit[pos - 1] == all.size()) digit[--pos] = 0;
    if (pos == 0) break;
  }
  if (!dedup) return found;

  std::set<std::vector<Perm>> classes;
  for (const Solution& s : found) classes.insert(canonical_form(s));
  std::vector<Solution> out;
  out.reserve(classes.size());
  for (const auto& t : classes) out.push_back(Solution::from_sigma_table(points, t));
  return out;
}

}  // namespace ybx
