#include <doctest.h>

#include <filesystem>

#include "wildcat/space_file.hpp"
#include "wildcat/wild.hpp"

using namespace wildcat;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> fixtures() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(WILDCAT_FIXTURES)) {
    if (entry.path().extension() == ".space") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParseError parse_failure(std::string_view text) {
  try {
    parse_space_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE("space-file") {

TEST_CASE("there are twenty fixtures") { CHECK(fixtures().size() == 20); }

TEST_CASE("parse, print, parse gives the same document") {
  for (const auto& path : fixtures()) {
    INFO(path.filename().string());
    const SpaceFile a = read_space_file(path);
    const std::string text = print_space_file(a);
    const SpaceFile b = parse_space_file(text);
    CHECK(structurally_equal(a, b));
    CHECK(print_space_file(b) == text);
  }
}

TEST_CASE("a bare graph file is the graph main") {
  const SpaceFile f = parse_space_file("vertex a\nvertex b\nedge e a b  # an arc\n");
  REQUIRE(f.graphs.size() == 1);
  CHECK(f.main == "main");
  CHECK(f.plain_graph("main")->edge_count() == 1);
  CHECK(f.main_expr()->node()->base_name == "main");
}

TEST_CASE("expressions may span lines") {
  const SpaceFile f = parse_space_file(
      "graph P\nvertex v\nend\ngraph C\nvertex a\nedge c a a\nend\n"
      "expr e (node (base P)\n   (seqfam (v)\n  (graph C) (vertex a)))\nmain e\n");
  CHECK(f.find_expr("e")->node()->seq.size() == 1);
  CHECK_THROWS_AS(f.plain_graph("e"), Error);
  CHECK(f.plain_graph("C")->edge_count() == 1);
}

TEST_CASE("errors carry line and column") {
  const auto e1 = parse_failure("graph G\nvertex a\nedge e a b\nend\nmain G\n");
  CHECK(e1.line() == 3);
  const auto e2 = parse_failure("graph G\nvertex a\nend\nexpr x (node (base H))\nmain x\n");
  CHECK(e2.line() == 4);
  CHECK(e2.column() == 20);
  const auto e3 = parse_failure("graph G\nvertex a\nend\nexpr x (node (base G)\nmain x\n");
  CHECK(e3.line() == 4);
  const auto e4 = parse_failure("graph G\nvertex a\nend\n");
  CHECK(e4.line() == 4);
  const auto e5 = parse_failure("graph G\nvertex a\nend\nmain G\nmain G\n");
  CHECK(e5.line() == 5);
  const auto e6 = parse_failure("graph G\nvertex a\nend\ngraph G\nvertex b\nend\nmain G\n");
  CHECK(e6.line() == 4);
  const auto e7 = parse_failure("graph G\nvertex a\nend\nexpr x (node (base G) (seqfam (zz) (graph G) (vertex a)))\nmain x\n");
  CHECK(e7.line() == 4);
  const auto e8 = parse_failure(
      "graph G\nvertex a\nedge c a a\nend\nexpr x (node (base G) (attach (edge c 0.5) (graph G) (vertex a)))\nmain x\n");
  CHECK(e8.line() == 5);
  const auto e9 = parse_failure("graph G\nvertex a\nend\nmain nowhere\n");
  CHECK(e9.line() == 4);
  CHECK_THROWS_AS(parse_space_file("teleport x\n"), ParseError);
  CHECK_THROWS_AS(parse_space_file("graph G\nvertex a\n"), ParseError);
}

TEST_CASE("printed expressions read back") {
  const SpaceFile f = read_space_file(fs::path(WILDCAT_FIXTURES) / "attachments.space");
  const std::string text = print_expr(*f.main_expr());
  CHECK(text.find("(attach (edge pq 1/3) (graph C) (vertex a))") != std::string::npos);
  CHECK(text.find("(seqfam (p) (graph C) (edge c 1/2))") != std::string::npos);
}

}  // TEST_SUITE
