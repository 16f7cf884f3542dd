#include "ybx/structbrace.hpp"

#include <algorithm>
#include <map>

#include "ybx/errors.hpp"
#include "ybx/permbrace.hpp"

namespace ybx {

StructureBrace::StructureBrace(const Solution& s)
    : solution_(s), diagonal_(diagonal_map(s)), diagonal_inv_(diagonal_.inverse()) {
  sigma_inv_.reserve(s.size());
  for (const Perm& p : s.sigmas()) sigma_inv_.push_back(p.inverse());
}

template <class Choose>
Perm StructureBrace::peel(IntVec v, Choose&& choose) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("vector has the wrong dimension");
  Perm result = Perm::identity(n);
  while (!v.is_zero()) {
    const Point i = choose(v);
    const bool positive = v[i] > 0;
    // lambda_e and lambda_e^{-1} for e = +e_i or -e_i
    const Perm& le = positive ? solution_.sigma(i) : sigma_inv_[diagonal_inv_(i)];
    const Perm& le_inv = positive ? sigma_inv_[i] : solution_.sigma(diagonal_inv_(i));
    v[i] += positive ? -1 : 1;
    result = compose(result, le);
    v = permuted(le_inv, v);
  }
  return result;
}

Perm StructureBrace::lambda(const IntVec& v) const {
  return peel(v, [](const IntVec& w) {
    Point i = 0;
    while (w[i] == 0) ++i;
    return i;
  });
}

Perm StructureBrace::lambda(const IntVec& v, std::mt19937_64& rng) const {
  return peel(v, [&rng](const IntVec& w) {
    std::vector<Point> support;
    for (Point i = 0; i < w.size(); ++i)
      if (w[i] != 0) support.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    return support[pick(rng)];
  });
}

IntVec StructureBrace::mul(const IntVec& v, const IntVec& w) const {
  return v + permuted(lambda(v), w);
}

IntVec StructureBrace::inv(const IntVec& v) const {
  IntVec r = -permuted(lambda(v).inverse(), v);
  if (!mul(v, r).is_zero())
    throw InternalCheckFailure("structure brace: v * inv(v) != 0");
  return r;
}

// ---------------------------------------------------------------------------

SeriesReport series_lattices(const Solution& s, std::size_t max_order) {
  const std::size_t n = s.size();
  const StructureBrace brace(s);
  std::map<IntVec, Perm> memo;  // per call; only short vectors
  auto lambda_of = [&](const IntVec& v) {
    if (v.norm1() > 6) return brace.lambda(v);
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, brace.lambda(v)).first;
    return it->second;
  };

  SeriesReport out;
  out.perm_images.push_back(FiniteGroup::closure(s.sigmas(), n, max_order));
  for (std::size_t m = 1;; ++m) {
    const FiniteGroup& current = out.perm_images.back();
    Partition orbs = orbits(current.generators(), n);

    std::vector<IntVec> diffs;
    for (const auto& orbit : orbs)
      for (Point x : orbit)
        for (Point y : orbit)
          if (x != y) diffs.push_back(IntVec::unit(n, y) - IntVec::unit(n, x));
    out.lattices.push_back(Lattice::hnf(diffs, n));

    std::vector<Perm> images;
    for (const IntVec& d : diffs) {
      Perm p = lambda_of(d);
      if (!p.is_identity() && std::find(images.begin(), images.end(), p) == images.end())
        images.push_back(std::move(p));
    }
    FiniteGroup next = FiniteGroup::closure(images, n, max_order);
    for (const Perm& p : next.elements())
      if (!current.contains(p))
        throw InternalCheckFailure("series: P_{m+1} is not inside P_m");

    out.orbit_history.push_back(std::move(orbs));
    if (next.order() == current.order()) {
      out.stabilization_index = m;
      break;
    }
    out.perm_images.push_back(std::move(next));
  }
  out.multipermutation = out.perm_images.back().is_trivial();
  return out;
}

PiCrossCheck pi_cross_check(const Solution& s, std::size_t max_order) {
  PiCrossCheck out;
  const SeriesReport lat = series_lattices(s, max_order);
  BraceOptions options;
  options.max_order = max_order;
  const PermBrace brace = PermBrace::build(s, options);
  const auto terms = series(brace);

  for (const auto& p : lat.perm_images) out.lattice_side.push_back(p.order());
  for (const auto& t : terms) out.brace_side.push_back(t.order());

  if (terms.size() != lat.perm_images.size()) {
    out.detail = "series lengths differ";
    return out;
  }
  for (std::size_t m = 0; m < terms.size(); ++m) {
    if (!lat.perm_images[m].same_elements(terms[m].subgroup)) {
      out.detail = "term " + std::to_string(m + 1) + " differs";
      return out;
    }
  }
  out.ok = true;
  return out;
}

MpOutcome mp_verdict(const Solution& s, std::size_t max_order) {
  MpOutcome out;
  out.series = series_lattices(s, max_order);
  out.tower = mp_level(s);
  out.multipermutation = out.series.multipermutation;
  out.level = out.tower.level;
  if (out.series.multipermutation != out.tower.is_multipermutation())
    throw InternalCheckFailure(
        "series verdict and retraction verdict disagree");
  return out;
}

}  // namespace ybx
