#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"
#include "treecolor/constructions.hpp"
#include "treecolor/hypertree.hpp"
#include "treecolor/io.hpp"

using namespace treecolor;

TEST_CASE("[io] hypergraph serialization round-trips") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Hypergraph h = testing::random_hypergraph(3 + seed % 7, 2 + seed % 3, 50,
                                              seed * 41 + 3);
    std::string text = serialize_hypergraph(h);
    Hypergraph back = parse_hypergraph(text);
    CHECK(back == h);
    CHECK(serialize_hypergraph(back) == text);
  }
}

TEST_CASE("[io] comments and blank lines are ignored") {
  Hypergraph h = parse_hypergraph(
      "# a loose path\n"
      "\n"
      "5 2 3\n"
      "# first edge\n"
      "0 1 2\n"
      "\n"
      "2 3 4\n");
  CHECK(h == tree_path(3, 2).tree);
}

TEST_CASE("[io] parser rejections") {
  CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("5 2\n0 1 2\n2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("5 2 3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("5 1 3\n0 1 2\n2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("5 1 3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("5 1 3\n0 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3 2 3\n0 1 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3 1 3\n0 1 7\n"), ParseError);
}

TEST_CASE("[io] coloring certificates round-trip") {
  Certificate cert{Coloring{{1, 2, 1, 3}, 3}};
  std::string text = serialize_certificate(cert);
  CHECK(text == "COLORING 3\n1 2 1 3\n");
  Certificate back = parse_certificate(text);
  REQUIRE(back.is_coloring());
  CHECK(back.coloring().colors == cert.coloring().colors);
  CHECK(back.coloring().palette == 3);
  CHECK(serialize_certificate(back) == text);
}

TEST_CASE("[io] embedding certificates round-trip") {
  Certificate cert{Embedding{{2, 3, 4, 0, 1}, {9, 2}}};
  std::string text = serialize_certificate(cert);
  Certificate back = parse_certificate(text);
  REQUIRE_FALSE(back.is_coloring());
  CHECK(back.embedding().vertex_map == cert.embedding().vertex_map);
  CHECK(back.embedding().edge_map == cert.embedding().edge_map);
  CHECK(serialize_certificate(back) == text);
}

TEST_CASE("[io] certificate rejections") {
  CHECK_THROWS_AS(parse_certificate(""), ParseError);
  CHECK_THROWS_AS(parse_certificate("WITNESS\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("COLORING\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("COLORING 2\n1 2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("EMBEDDING\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("EMBEDDING\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("EMBEDDING\n0 4\n"), ParseError);
}

TEST_CASE("[io] file helpers") {
  CHECK_THROWS_AS(load_hypergraph("/nonexistent/path.txt"), ParseError);
  const std::string path = "/tmp/treecolor_io_test.txt";
  Hypergraph h = star_example(5);
  write_file(path, serialize_hypergraph(h));
  CHECK(load_hypergraph(path) == h);
}
