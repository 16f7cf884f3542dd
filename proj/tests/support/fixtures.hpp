#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string_view>
#include <vector>

#include "reference_tables.hpp"
#include "ybx/perm.hpp"
#include "ybx/solution.hpp"

namespace ybx::testing {

template <std::size_t N>
std::vector<Perm> parse_table(const std::array<std::string_view, N>& table,
                              const PointSet& points) {
  std::vector<Perm> out;
  for (auto line : table) out.push_back(parse_cycles(line, points));
  return out;
}

inline Solution example16a() {
  PointSet pts{std::string(kTable16aLabels)};
  return Solution::from_sigma_table(pts, parse_table(kTable16a, pts));
}

inline Solution example16b() {
  PointSet pts{std::string(kTable16bLabels)};
  return Solution::from_sigma_table(pts, parse_table(kTable16b, pts));
}

inline Solution example24() {
  PointSet pts{std::string(kTable24Labels)};
  return Solution::from_sigma_table(pts, parse_table(kTable24, pts));
}

inline std::vector<Solution> reference_examples() {
  return {example16a(), example16b(), example24()};
}

/// Every solution on up to four points (computed once).
inline const std::vector<Solution>& small_corpus() {
  static const std::vector<Solution> corpus = [] {
    std::vector<Solution> all;
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto& s : enumerate_solutions(n)) all.push_back(std::move(s));
    return all;
  }();
  return corpus;
}

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

/// Braid relation evaluated by composing the two maps on X^3 as whole
/// functions, independently of ybx::find_braid_violation.
inline bool braid_by_composition(const RTable& r) {
  const std::size_t n = r.size();
  using Triple = std::array<Point, 3>;
  std::vector<Triple> all;
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z) all.push_back({x, y, z});
  auto r12 = [&](Triple t) {
    const auto [a, b] = r(t[0], t[1]);
    return Triple{a, b, t[2]};
  };
  auto r23 = [&](Triple t) {
    const auto [b, c] = r(t[1], t[2]);
    return Triple{t[0], b, c};
  };
  for (const Triple& t : all)
    if (r12(r23(r12(t))) != r23(r12(r23(t)))) return false;
  return true;
}

}  // namespace ybx::testing
