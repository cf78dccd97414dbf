#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixedweak/errors.hpp"
#include "mixedweak/grid.hpp"
#include "mixedweak/io.hpp"

namespace {

using namespace mixedweak;

TEST(FormatDouble, RoundTripsThroughStrtod) {
  const double values[] = {0.0,     1.0,        0.5,         1.0 / 3.0,
                           -2.75,   1e300,      1e-300,      3.141592653589793,
                           4097.1,  -1.0 / 7.0, 6.02214076e23};
  for (double x : values) {
    const std::string s = format_double(x);
    char* end = nullptr;
    const double back = std::strtod(s.c_str(), &end);
    EXPECT_EQ(back, x) << s;
    EXPECT_EQ(*end, '\0');
  }
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Fnv1a, MatchesPublishedVectors) {
  EXPECT_EQ(fnv1a64(""), 14695981039346656037ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(CsvRow, QuotesOnlyWhenNeeded) {
  const std::vector<std::string> plain{"k", "v", "1.5"};
  EXPECT_EQ(csv_row(plain), "k,v,1.5\n");
  const std::vector<std::string> tricky{"a,b", "q\"x", "line\nbreak", "ok"};
  EXPECT_EQ(csv_row(tricky), "\"a,b\",\"q\"\"x\",\"line\nbreak\",ok\n");
  const std::vector<std::string> empty;
  EXPECT_EQ(csv_row(empty), "\n");
}

TEST(PlotData, TwoColumnFormat) {
  const std::vector<double> xs{1.0, 0.5};
  const std::vector<double> ys{2.0, 0.25};
  EXPECT_EQ(plot_data(xs, ys), "1 2\n0.5 0.25\n");
  const std::vector<double> short_ys{2.0};
  EXPECT_THROW(plot_data(xs, short_ys), ValidationError);
}

TEST(JsonText, GridSerializesAllFieldsDeterministically) {
  const Grid g = Grid::symmetric(2.0, 0.25, 0.25);
  const std::string a = to_json_text(g);
  const std::string b = to_json_text(g);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
  const nlohmann::json j = nlohmann::json::parse(a);
  EXPECT_DOUBLE_EQ(j.at("left").get<double>(), -2.0);
  EXPECT_DOUBLE_EQ(j.at("dx").get<double>(), 0.25);
  EXPECT_EQ(j.at("n_cells").get<std::size_t>(), g.n_cells);
  EXPECT_DOUBLE_EQ(j.at("origin_gap").get<double>(), 0.25);
}

TEST(JsonText, IterationRecordParsesBack) {
  RubioIteration it;
  it.term_norms = {1.0, 0.5, 0.25};
  it.decay_rho = 0.5;
  const nlohmann::json j = nlohmann::json::parse(to_json_text(it));
  EXPECT_EQ(j.at("term_norms").size(), 3u);
  EXPECT_DOUBLE_EQ(j.at("decay_rho").get<double>(), 0.5);
}

TEST(WriteTextFile, WritesBytesAndRejectsBadPaths) {
  const auto dir = std::filesystem::temp_directory_path() / "mixedweak_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "blob.txt").string();
  const std::string payload = "alpha \"beta\"\n1 2 3\n";
  write_text_file(path, payload);
  std::ifstream in(path, std::ios::binary);
  std::stringstream got;
  got << in.rdbuf();
  EXPECT_EQ(got.str(), payload);
  EXPECT_THROW(
      write_text_file((dir / "missing" / "blob.txt").string(), payload),
      ValidationError);
  std::filesystem::remove_all(dir);
}

}  // namespace
