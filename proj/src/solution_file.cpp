#include "ybx/solution_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace ybx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct Header {
  std::size_t n;
  std::string labels;
};

Header parse_header(std::string_view line, std::size_t lineno) {
  const auto tokens = split_ws(line);
  if (tokens.size() != 4 || tokens[0] != "ybx")
    throw FileParseError(lineno, "expected header 'ybx v1 n=<size> labels=<labels>'");
  if (tokens[1] != "v1")
    throw FileParseError(lineno, "unsupported format version '" +
                                     std::string(tokens[1]) + "'");
  if (!tokens[2].starts_with("n=") || !tokens[3].starts_with("labels="))
    throw FileParseError(lineno, "expected header 'ybx v1 n=<size> labels=<labels>'");
  const std::string_view digits = tokens[2].substr(2);
  if (digits.empty() || digits.size() > 6)
    throw FileParseError(lineno, "bad size '" + std::string(digits) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw FileParseError(lineno, "bad size '" + std::string(digits) + "'");
  Header h{std::stoul(std::string(digits)), std::string(tokens[3].substr(7))};
  if (h.n == 0) throw FileParseError(lineno, "size must be positive");
  if (h.labels.size() != h.n)
    throw FileParseError(lineno, "labels string has " +
                                     std::to_string(h.labels.size()) +
                                     " characters but n=" + std::to_string(h.n));
  return h;
}

}  // namespace

SolutionFile parse_solution_file(std::string_view text) {
  std::optional<PointSet> points;
  std::vector<std::optional<Perm>> sigmas;
  std::size_t lineno = 0;
  std::size_t last = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    last = lineno;

    if (!points) {
      const Header h = parse_header(line, lineno);
      try {
        points.emplace(h.labels);
      } catch (const std::invalid_argument& e) {
        throw FileParseError(lineno, std::string("bad labels: ") + e.what());
      }
      sigmas.assign(h.n, std::nullopt);
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw FileParseError(lineno, "expected '<label>: <cycles>'");
    const std::string_view label = trim(line.substr(0, colon));
    if (label.size() != 1)
      throw FileParseError(lineno, "label must be a single character");
    const auto p = points->find(label[0]);
    if (!p)
      throw FileParseError(lineno, std::string("unknown label '") + label[0] + "'");
    if (sigmas[*p])
      throw FileParseError(lineno, std::string("second line for '") + label[0] + "'");
    try {
      sigmas[*p] = parse_cycles(line.substr(colon + 1), *points);
    } catch (const CycleParseError& e) {
      if (e.kind() == CycleParseError::Kind::RepeatedLabel)
        throw NonBijectiveSigma(lineno, label[0], e.label());
      throw FileParseError(lineno, e.what());
    }
  }

  if (!points) throw FileParseError(0, "empty file: missing header");
  SolutionFile out{*points, {}};
  out.sigmas.reserve(sigmas.size());
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!sigmas[i])
      throw FileParseError(last, std::string("missing sigma line for '") +
                                     points->label(static_cast<Point>(i)) + "'");
    out.sigmas.push_back(std::move(*sigmas[i]));
  }
  return out;
}

std::string format_solution_file(const PointSet& points,
                                 std::span<const Perm> sigmas) {
  std::ostringstream out;
  out << "ybx v1 n=" << points.size() << " labels=" << points.labels() << '\n';
  for (Point x = 0; x < sigmas.size(); ++x) {
    out << points.label(x) << ':';
    const std::string cycles = format_cycles(sigmas[x], points);
    if (!cycles.empty()) out << ' ' << cycles;
    out << '\n';
  }
  return out.str();
}

Solution load_solution(std::string_view text) {
  SolutionFile f = parse_solution_file(text);
  return Solution::from_sigma_table(std::move(f.points), std::move(f.sigmas));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ybx
