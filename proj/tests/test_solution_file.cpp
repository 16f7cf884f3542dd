#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "ybx/corpus.hpp"
#include "ybx/errors.hpp"
#include "ybx/solution_file.hpp"

using namespace ybx;
using ybx::testing::example16a;
using ybx::testing::example16b;
using ybx::testing::example24;
using ybx::testing::small_corpus;

namespace {

std::string data_file(const std::string& name) {
  return read_text_file(std::string(YBX_DATA_DIR) + "/" + name);
}

std::size_t error_line(std::string_view text) {
  try {
    parse_solution_file(text);
  } catch (const FileParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

}  // namespace

TEST(Golden, DataFilesMatchEmbeddedCorpus) {
  const std::pair<const char*, const char*> files[] = {
      {"paper-16-91", "example2.ybx"},
      {"paper-16-318", "example3.ybx"},
      {"paper-24-96", "example4.ybx"}};
  ASSERT_EQ(bundled_example_names().size(), 3u);
  for (const auto& [name, file] : files) {
    const auto text = bundled_example(name);
    ASSERT_TRUE(text) << name;
    EXPECT_EQ(*text, data_file(file)) << name;
  }
  EXPECT_FALSE(bundled_example("paper-16-92"));
}

TEST(Golden, BundledFilesEqualReferenceTables) {
  const std::pair<const char*, Solution> cases[] = {
      {"paper-16-91", example16a()}, {"paper-16-318", example16b()},
      {"paper-24-96", example24()}};
  for (const auto& [name, expected] : cases) {
    const Solution s = load_solution(*bundled_example(name));
    EXPECT_EQ(s, expected) << name;
    // canonical formatting reproduces the bundled text exactly
    EXPECT_EQ(format_solution_file(s), *bundled_example(name)) << name;
  }
}

TEST(Golden, KnownLines) {
  const std::string text(*bundled_example("paper-16-91"));
  EXPECT_NE(text.find("\n2: (37)(48)(bf)(cg)\n"), std::string::npos);
  EXPECT_NE(text.find("\n1:\n"), std::string::npos);
  const std::string text24(*bundled_example("paper-24-96"));
  EXPECT_EQ(text24.substr(0, text24.find('\n')),
            "ybx v1 n=24 labels=123456789abcdefghijklmno");
}

TEST(RoundTrip, CorpusAndExamples) {
  std::vector<Solution> all{example16a(), example16b(), example24()};
  for (const Solution& s : small_corpus()) all.push_back(s);
  for (const Solution& s : all) {
    const std::string text = format_solution_file(s);
    const SolutionFile f = parse_solution_file(text);
    EXPECT_EQ(f.points, s.points());
    EXPECT_EQ(f.sigmas, s.sigmas());
    EXPECT_EQ(load_solution(text), s);
  }
}

TEST(Parse, CommentsBlankLinesAnyOrder) {
  const std::string text =
      "# two points\n"
      "\n"
      "ybx v1 n=2 labels=ab   # header\n"
      "b: (ab)\n"
      "   \n"
      "a: (a b)  # spaced\n";
  const SolutionFile f = parse_solution_file(text);
  EXPECT_EQ(f.points.labels(), "ab");
  EXPECT_EQ(f.sigmas[0], Perm({1, 0}));
  EXPECT_EQ(f.sigmas[1], Perm({1, 0}));
  EXPECT_NO_THROW(load_solution(text));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_solution_file(""), FileParseError);
  EXPECT_EQ(error_line(""), 0u);
  EXPECT_EQ(error_line("# nothing\n\n"), 0u);
  EXPECT_EQ(error_line("ybx v2 n=1 labels=1\n1:\n"), 1u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=123\n"), 1u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=11\n"), 1u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n3: (12)\n"), 3u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n1: (12)\n"), 3u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n2 (12)\n"), 3u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n2: (13)\n"), 3u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n2: (12\n"), 3u);
  EXPECT_EQ(error_line("ybx v1 n=2 labels=12\n1:\n"), 2u);
}

TEST(Parse, RepeatedLabelIsNonBijective) {
  try {
    parse_solution_file("ybx v1 n=3 labels=123\n1:\n2: (121)\n3:\n");
    FAIL() << "no error";
  } catch (const NonBijectiveSigma& e) {
    EXPECT_EQ(e.point(), '2');
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("sigma_2"), std::string::npos);
  }
}

TEST(Load, InvalidSolutionReported) {
  std::string text(*bundled_example("paper-16-91"));
  const auto a = text.find("\n2:"), b = text.find("\n3:");
  text[a + 1] = '3';
  text[b + 1] = '2';
  EXPECT_THROW(load_solution(text), InvalidSolution);
}

TEST(ReadFile, Missing) {
  EXPECT_THROW(read_text_file("/nonexistent/file.ybx"), Error);
}
