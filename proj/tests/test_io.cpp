#include "circgraph/io.hpp"
#include "doctest.h"

using namespace circgraph;

namespace {

std::size_t count_lines(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("bigraph round trip") {
  for (const auto& g : {star(4), triangular(4), triangular(6)}) {
    const auto text = dump(to_json(g));
    const auto back = to_bipartite(parse_document(text));
    CHECK(back.labeled_edges() == g.labeled_edges());
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("graph and design documents") {
  const auto simple = parse_document(R"({"format":"graph-v1","vertices":["a","b","c"],"edges":[["b","a"],["b","c"]]})");
  REQUIRE(std::holds_alternative<SimpleGraph>(simple));
  CHECK(to_simple(simple).edge_count() == 2);
  CHECK_THROWS_AS(to_bipartite(simple), InputError);
  CHECK(dump(to_json(parse_document(dump(to_json(simple))))) == dump(to_json(simple)));

  const auto design = parse_document(R"({"format":"design-v1","points":["a","b","c","d"],
      "blocks":[["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]]})");
  REQUIRE(std::holds_alternative<Design>(design));
  CHECK(to_bipartite(design).w_count() == 4);
  CHECK(to_simple(design).order() == 8);
}

TEST_CASE("parse errors name the problem") {
  CHECK_THROWS_WITH_AS(parse_document("{\"format\": \"bigraph-v1\",\n \"u\": [}"), doctest::Contains("malformed JSON"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_document("graph G { a -- b; }"), doctest::Contains("export-only"), InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"bigraph-v1","u":["a"],"w":["x"],"edges":[["a"]]})"),
                       doctest::Contains("edges[0]"), InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"bigraph-v1","u":["a"],"w":["x"],"edges":[],"extra":1})"),
                       doctest::Contains("'extra'"), InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"bigraph-v1","u":["a"],"edges":[]})"), doctest::Contains("'w'"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"bigraph-v1","u":["a","b"],"w":["x"],"edges":[["a","b"]]})"),
                       doctest::Contains("(a, b)"), InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"bigraph-v9"})"), doctest::Contains("bigraph-v9"), InputError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"format":"design-v1","points":["a","b","c"],"blocks":[["a","b"]]})"),
                       doctest::Contains("at least three"), InputError);
  CHECK_THROWS_AS(parse_document("[1,2]"), InputError);
}

TEST_CASE("DOT export") {
  const auto s4 = export_dot(star(4));
  CHECK(s4.rfind("graph G {", 0) == 0);
  CHECK(count_lines(s4, "[shape=") == 4);
  CHECK(count_lines(s4, " -- ") == 3);
  CHECK(count_lines(s4, "[shape=box]") == 3);
  CHECK(count_lines(s4, "[shape=circle]") == 1);

  const auto t4 = export_dot(triangular(4));
  CHECK(count_lines(t4, "[shape=") == 8);
  CHECK(count_lines(t4, " -- ") == 12);
  CHECK(t4.find("\"b{1,2,3}\"") != std::string::npos);

  const auto plain = export_dot(SimpleGraph({"a", "b"}, {{"a", "b"}}));
  CHECK(count_lines(plain, "[shape=ellipse]") == 2);
}

TEST_CASE("report header") {
  const auto input = to_json(triangular(4));
  const auto h = report_header("check", input);
  CHECK(h["tool"] == "circgraph");
  CHECK(h["version"] == std::string(kToolVersion));
  CHECK(h["command"] == "check");
  const std::string digest = h["input_digest"];
  CHECK(digest.rfind("sha256:", 0) == 0);
  CHECK(digest.size() == 7 + 64);
  CHECK(report_header("check", input)["input_digest"] == digest);
  CHECK(report_header("check", to_json(star(4)))["input_digest"] != digest);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
