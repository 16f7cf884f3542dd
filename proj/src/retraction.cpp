#include "ybx/retraction.hpp"

#include <map>
#include <set>

namespace ybx {

RetractStep retract(const Solution& s) {
  const std::size_t n = s.size();
  std::map<Perm, std::size_t> first_of;
  Partition classes;
  std::vector<Point> class_of(n);
  for (Point x = 0; x < n; ++x) {
    const auto [it, fresh] = first_of.emplace(s.sigma(x), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(x);
    class_of[x] = static_cast<Point>(it->second);
  }
  // Points are scanned in increasing order, so classes come out ordered by
  // their smallest member.

  const std::size_t m = classes.size();
  std::string labels;
  for (const auto& c : classes) labels += s.points().label(c.front());

  std::vector<Perm> induced;
  induced.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Perm& sig = s.sigma(classes[k].front());
    std::vector<Point> img(m);
    for (std::size_t j = 0; j < m; ++j) {
      img[j] = class_of[sig(classes[j].front())];
      for (Point y : classes[j])
        if (class_of[sig(y)] != img[j])
          throw InternalCheckFailure("induced sigma is not well defined");
    }
    try {
      induced.emplace_back(std::move(img));
    } catch (const std::invalid_argument&) {
      throw InternalCheckFailure("induced sigma is not a permutation");
    }
  }
  try {
    return {std::move(classes), std::move(class_of),
            Solution::from_sigma_table(PointSet(labels), std::move(induced))};
  } catch (const InvalidSolution& e) {
    throw InternalCheckFailure(std::string("retraction is invalid: ") + e.what());
  }
}

RetractionTower retraction_tower(const Solution& s) {
  RetractionTower out;
  out.verdict.tower.push_back(s.size());
  // sizes strictly drop until the last step, so this bounds the step count
  // and keeps `current` valid across push_back
  out.steps.reserve(s.size());
  const Solution* current = &s;
  std::size_t level = 0;
  while (current->size() > 1) {
    RetractStep step = retract(*current);
    const std::size_t before = current->size();
    const std::size_t after = step.induced.size();
    out.verdict.tower.push_back(after);
    out.steps.push_back(std::move(step));
    if (after == before) return out;
    current = &out.steps.back().induced;
    ++level;
  }
  out.verdict.level = level;
  return out;
}

MpVerdict mp_level(const Solution& s) { return retraction_tower(s).verdict; }

bool is_irretractable(const Solution& s) {
  std::set<Perm> distinct(s.sigmas().begin(), s.sigmas().end());
  return distinct.size() == s.size();
}

}  // namespace ybx
