#include "ybx/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include "ybx/corpus.hpp"
#include "ybx/errors.hpp"
#include "ybx/report.hpp"
#include "ybx/retraction.hpp"
#include "ybx/solution_file.hpp"
#include "ybx/structbrace.hpp"

namespace ybx::cli {

namespace {

std::string describe(const Violation& v, const PointSet& points) {
  std::string pts;
  for (Point p : v.points) {
    if (!pts.empty()) pts += ',';
    pts += points.label(p);
  }
  return v.message + " at (" + pts + ")";
}

void print_validation(const ValidationReport& report, const PointSet& points,
                      std::ostream& out) {
  const std::pair<const char*, const std::optional<Violation>*> rows[] = {
      {"bijective", &report.bijective},
      {"braid", &report.braid},
      {"involutive", &report.involutive},
      {"nondegenerate", &report.nondegenerate}};
  for (const auto& [name, v] : rows) {
    out << name << ": ";
    if (*v)
      out << "FAIL: " << describe(**v, points) << '\n';
    else
      out << "ok\n";
  }
}

/// Reads and validates a solution file, printing diagnostics on failure.
std::optional<Solution> load(const std::string& path, std::ostream& out,
                             std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
  try {
    return load_solution(text);
  } catch (const NonBijectiveSigma& e) {
    out << "nondegenerate: FAIL: " << e.what() << '\n';
  } catch (const FileParseError& e) {
    err << path << ": " << e.what() << '\n';
  } catch (const InvalidSolution& e) {
    const SolutionFile f = parse_solution_file(text);
    print_validation(e.report(), f.points, out);
  }
  return std::nullopt;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  SolutionFile f{PointSet("1"), {}};
  try {
    f = parse_solution_file(text);
  } catch (const NonBijectiveSigma& e) {
    out << "nondegenerate: FAIL: " << e.what() << "\ninvalid\n";
    return kInvalidInput;
  } catch (const FileParseError& e) {
    err << path << ": " << e.what() << '\n';
    return kInvalidInput;
  }
  const ValidationReport report = validate(rtable_from_sigmas(f.sigmas));
  print_validation(report, f.points, out);
  out << (report.ok() ? "valid" : "invalid") << '\n';
  return report.ok() ? kOk : kInvalidInput;
}

int cmd_analyze(const std::string& path, bool json, const AnalyzeOptions& options,
                std::ostream& out, std::ostream& err) {
  const auto s = load(path, out, err);
  if (!s) return kInvalidInput;
  try {
    const AnalysisReport report = analyze(*s, options);
    if (json)
      out << to_json(report).dump(2) << '\n';
    else
      out << to_text(report);
    if (report.cross_check_failed()) {
      err << "error: internal cross-check failed\n";
      return kCrossCheckFailure;
    }
  } catch (const InternalCheckFailure& e) {
    err << "error: internal check failed: " << e.what() << '\n';
    return kCrossCheckFailure;
  }
  return kOk;
}

std::string format_classes(const Partition& classes, const PointSet& points) {
  std::string out;
  for (const auto& c : classes) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (Point p : c) out += points.label(p);
    out += '}';
  }
  return out;
}

int cmd_retract_tower(const std::string& path, std::ostream& out,
                      std::ostream& err) {
  const auto s = load(path, out, err);
  if (!s) return kInvalidInput;
  const RetractionTower tower = retraction_tower(*s);
  const auto& sizes = tower.verdict.tower;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out << (i ? " -> " : "") << sizes[i];
  if (!tower.verdict.is_multipermutation()) out << " (irretractable)";
  out << '\n';
  const Solution* stage = &*s;
  for (std::size_t i = 0; i < tower.steps.size(); ++i) {
    const RetractStep& step = tower.steps[i];
    if (step.induced.size() < stage->size())
      out << "step " << i + 1 << ": " << format_classes(step.classes, stage->points())
          << '\n';
    stage = &step.induced;
  }
  return kOk;
}

int cmd_enumerate(std::size_t n, bool dedup, const std::string& dump,
                  std::ostream& out, std::ostream& err) {
  if (n < 1 || n > 4) {
    err << "error: enumeration supports 1 <= n <= 4\n";
    return kInvalidInput;
  }
  const auto raw = enumerate_solutions(n, false);
  const auto classes = enumerate_solutions(n, true);
  out << "n=" << n << " solutions=" << raw.size()
      << " up_to_relabeling=" << classes.size() << '\n';

  const auto& chosen = dedup ? classes : raw;
  std::map<std::size_t, std::size_t> by_level;
  std::size_t not_mp = 0, irretractable = 0, agree = 0;
  for (const Solution& s : chosen) {
    const MpVerdict v = mp_level(s);
    if (v.level)
      ++by_level[*v.level];
    else
      ++not_mp;
    if (is_irretractable(s)) ++irretractable;
    if (series_lattices(s).multipermutation == v.is_multipermutation()) ++agree;
  }
  out << "statistics over " << chosen.size()
      << (dedup ? " relabeling classes" : " solutions") << ":\n";
  for (const auto& [level, count] : by_level)
    out << "  mp level " << level << ": " << count << '\n';
  out << "  not multipermutation: " << not_mp << '\n';
  out << "  irretractable: " << irretractable << '\n';
  out << "  verdict agreement (retraction vs series): " << agree << '/'
      << chosen.size() << '\n';

  if (!dump.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dump, ec);
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto file = std::filesystem::path(dump) /
                        ("n" + std::to_string(n) + "_" + std::to_string(k) + ".ybx");
      std::ofstream f(file);
      if (!f) {
        err << "error: cannot write '" << file.string() << "'\n";
        return kInvalidInput;
      }
      f << format_solution_file(chosen[k]);
    }
    out << "wrote " << chosen.size() << " files to " << dump << '\n';
  }
  return agree == chosen.size() ? kOk : kCrossCheckFailure;
}

int cmd_examples(const std::string& name, const std::string& output,
                 std::ostream& out, std::ostream& err) {
  const auto text = bundled_example(name);
  if (!text) {
    err << "error: unknown example '" << name << "'; available:";
    for (auto n : bundled_example_names()) err << ' ' << n;
    err << '\n';
    return kInvalidInput;
  }
  if (output.empty() || output == "-") {
    out << *text;
    return kOk;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << output << "'\n";
    return kInvalidInput;
  }
  f << *text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Analyze finite involutive non-degenerate solutions of the "
               "Yang-Baxter equation"};
  app.name("ybx");
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "check braid, involutivity and non-degeneracy");
  validate->add_option("file", path, "solution file")->required();

  bool json = false, text = false;
  AnalyzeOptions options;
  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  analyze_cmd->add_option("file", path, "solution file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", json, "JSON output");
  analyze_cmd->add_flag("--text", text, "text output (default)")->excludes(json_flag);
  analyze_cmd->add_option("--max-group-order", options.max_group_order,
                          "largest permutation group to build")
      ->capture_default_str();
  analyze_cmd->add_option("--max-iso-order", options.max_iso_order,
                          "largest group to match against named groups")
      ->capture_default_str();

  auto* tower = app.add_subcommand("retract-tower", "print the retraction tower");
  tower->add_option("file", path, "solution file")->required();

  std::size_t n = 0;
  bool dedup = false;
  std::string dump;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate all solutions on n <= 4 points");
  enumerate->add_option("n", n, "number of points")->required();
  enumerate->add_flag("--dedup", dedup, "one solution per relabeling class");
  enumerate->add_option("--dump", dump, "write each solution to this directory");

  std::string name, output;
  auto* examples = app.add_subcommand("examples", "emit a bundled solution file");
  examples->add_option("name", name, "paper-16-91 | paper-16-318 | paper-24-96")->required();
  examples->add_option("-o,--output", output, "output file (default stdout)");

  std::vector<std::string> storage{"ybx"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (validate->parsed()) return cmd_validate(path, out, err);
  if (analyze_cmd->parsed()) return cmd_analyze(path, json, options, out, err);
  if (tower->parsed()) return cmd_retract_tower(path, out, err);
  if (enumerate->parsed()) return cmd_enumerate(n, dedup, dump, out, err);
  if (examples->parsed()) return cmd_examples(name, output, out, err);
  return kInvalidInput;
}

}  // namespace ybx::cli
