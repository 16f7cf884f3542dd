#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace ybx {

/// "paper-16-91", "paper-16-318", "paper-24-96": the three irretractable
/// solutions shipped with the tool (16, 16 and 24 points).
std::vector<std::string_view> bundled_example_names();

/// Exact solution-file text of a bundled example.
std::optional<std::string_view> bundled_example(std::string_view name);

}  // namespace ybx
