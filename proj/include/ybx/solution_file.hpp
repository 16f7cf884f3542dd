#pragma once

// Text format for solutions:
//
//   ybx v1 n=<size> labels=<labels>
//   <label>: <sigma_label in cycle notation>
//   ...
//
// one sigma line per point, in any order. Blank lines and '#' comments are
// ignored. gamma is never stored.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/perm.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct SolutionFile {
  PointSet points;
  std::vector<Perm> sigmas;
};

/// A sigma line that repeats a label cannot describe a bijection; reported
/// separately from syntax errors so callers can treat it as degeneracy.
class NonBijectiveSigma : public FileParseError {
 public:
  NonBijectiveSigma(std::size_t line, char point, char repeated)
      : FileParseError(line, std::string("sigma_") + point +
                                 " is not a bijection (label '" + repeated +
                                 "' repeated)"),
        point_(point) {}

  char point() const { return point_; }

 private:
  char point_;
};

/// Throws FileParseError (or NonBijectiveSigma).
SolutionFile parse_solution_file(std::string_view text);

std::string format_solution_file(const PointSet& points,
                                 std::span<const Perm> sigmas);
inline std::string format_solution_file(const Solution& s) {
  return format_solution_file(s.points(), s.sigmas());
}

/// parse + validate. Throws FileParseError or InvalidSolution.
Solution load_solution(std::string_view text);

/// Reads a whole file. Throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace ybx
