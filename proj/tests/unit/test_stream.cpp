#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "pdng/generators.hpp"
#include "pdng/stream.hpp"

using namespace pdng;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pdng_test_" + name);
}

} // namespace

TEST(Stream, RecoversFromBadLine) {
  std::istringstream in("A_\nC~\nD?{\nD??x\n");
  auto reader = Graph6Reader::from_stream(in);
  const auto graphs = read_stream(reader);
  EXPECT_EQ(graphs.size(), 3U);
  ASSERT_EQ(reader.errors().size(), 1U);
  EXPECT_EQ(reader.errors()[0].line, 4U);
  EXPECT_FALSE(reader.errors()[0].message.empty());
}

TEST(Stream, BadLineInTheMiddle) {
  std::istringstream in("A_\n\nzz\r\nC~\r\n");
  auto reader = Graph6Reader::from_stream(in);
  auto r1 = reader.next_record();
  ASSERT_TRUE(r1 && r1->graph);
  auto r2 = reader.next_record();
  ASSERT_TRUE(r2);
  EXPECT_FALSE(r2->graph);
  EXPECT_EQ(r2->line, 3U);
  auto r3 = reader.next_record();
  ASSERT_TRUE(r3 && r3->graph);
  EXPECT_EQ(*r3->graph, complete(4));
  EXPECT_FALSE(reader.next_record());
}

TEST(Stream, PlainFile) {
  const auto path = temp_file("plain.g6");
  {
    std::ofstream out(path);
    out << ">>graph6<<A_\nC~\n";
  }
  auto reader = Graph6Reader::open(path);
  const auto graphs = read_stream(reader);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[1], complete(4));
  std::filesystem::remove(path);
}

TEST(Stream, GzipFile) {
  const auto path = temp_file("zipped.g6.gz");
  {
    gzFile gz = gzopen(path.c_str(), "wb");
    ASSERT_NE(gz, nullptr);
    const std::string text = "A_\nC~\nI?h]Kq@w?\n";
    gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
    gzclose(gz);
  }
  auto reader = Graph6Reader::open(path);
  const auto graphs = read_stream(reader);
  EXPECT_EQ(graphs.size(), 3U);
  EXPECT_TRUE(reader.errors().empty());
  std::filesystem::remove(path);
}

TEST(Stream, MissingFile) {
  EXPECT_THROW(Graph6Reader::open("/nonexistent/graphs.g6"), IoError);
}

TEST(Stream, StrictPaddingIsConfigurable) {
  std::istringstream strict_in("A`\n");
  auto strict = Graph6Reader::from_stream(strict_in);
  EXPECT_TRUE(read_stream(strict).empty());
  std::istringstream loose_in("A`\n");
  auto loose = Graph6Reader::from_stream(loose_in, Graph6Options{.strict_padding = false});
  EXPECT_EQ(read_stream(loose).size(), 1U);
}
