#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybx/perm.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct AnalyzeOptions {
  std::size_t max_group_order = FiniteGroup::kDefaultMaxOrder;
  std::size_t max_iso_order = 100;
};

/// Everything `ybx analyze` reports about one solution. Parts that need the
/// permutation group are skipped (status != "computed") when the group is
/// larger than max_group_order.
struct AnalysisReport {
  std::size_t size = 0;
  std::string labels;

  // A Solution only exists once all checks pass, so these are recorded
  // from the validation that built it.
  bool braid = false;
  bool involutive = false;
  bool nondegenerate = false;

  bool irretractable = false;
  std::vector<std::size_t> tower;
  bool multipermutation = false;
  std::optional<std::size_t> mp_level;

  struct Group {
    std::string status = "skipped";
    std::size_t order = 0;
    std::string fingerprint;
    /// "none" when nothing in the catalogue matches; "skipped" above the
    /// isomorphism bound.
    std::string named;
    bool equals_sigma_set = false;
  } group;

  struct Socle {
    std::string status = "skipped";
    std::size_t order = 0;
    bool trivial = false;
  } socle;

  struct Series {
    std::string status = "skipped";
    std::vector<std::size_t> lattice_ranks;
    std::vector<std::size_t> perm_orders;
    std::vector<std::size_t> brace_orders;
    std::size_t stabilization_index = 0;
    bool multipermutation = false;
  } series;

  // Orderability is inferred from the multipermutation verdict, not
  // constructed.
  bool left_orderable = false;
  bool poly_z = false;

  std::optional<bool> pi_cross_check;
  std::optional<bool> verdict_agreement;

  /// True when an internal cross-check failed.
  bool cross_check_failed() const {
    return pi_cross_check == false || verdict_agreement == false;
  }
};

/// "<order>|<element order>:<count>,..." e.g. "24|1:1,2:9,3:8,4:6".
std::string group_fingerprint(const FiniteGroup& g);

AnalysisReport analyze(const Solution& s, const AnalyzeOptions& options = {});

/// Keys are sorted, so the dump is byte-stable.
nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

}  // namespace ybx
