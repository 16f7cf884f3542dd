#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ybx/perm.hpp"
#include "ybx/solution.hpp"

namespace ybx {

/// One retraction step: points with equal sigma are merged.
struct RetractStep {
  /// Classes ordered by smallest member, each sorted.
  Partition classes;
  std::vector<Point> class_of;
  /// Solution on the classes; class k carries the label of its smallest
  /// member.
  Solution induced;
};

/// Throws InternalCheckFailure when the induced sigma is ill-defined or the
/// induced table fails validation.
RetractStep retract(const Solution& s);

struct MpVerdict {
  /// Set for multipermutation solutions. A one-point solution has level 0.
  std::optional<std::size_t> level;
  /// |X|, |Ret X|, |Ret^2 X|, ...; for non-multipermutation solutions the
  /// last size repeats once (the step where nothing merged).
  std::vector<std::size_t> tower;

  bool is_multipermutation() const { return level.has_value(); }
};

MpVerdict mp_level(const Solution& s);

/// All retraction steps until a singleton or an irretractable stage.
struct RetractionTower {
  std::vector<RetractStep> steps;
  MpVerdict verdict;
};

RetractionTower retraction_tower(const Solution& s);

/// True iff x -> sigma_x is injective.
bool is_irretractable(const Solution& s);

}  // namespace ybx
