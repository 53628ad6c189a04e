#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "latstack/chain_count.hpp"
#include "latstack/hypercube.hpp"
#include "latstack/io.hpp"
#include "latstack/lax.hpp"
#include "latstack/verify.hpp"

using namespace latstack;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("poset documents round-trip") {
  const Poset one = fixtures::chain(0);
  CHECK(read_poset(write_poset(one)).same_order(one));

  const auto d = power(1, 2);
  const PosetDocument doc = to_document(*d.poset, {{"axis", "column"}});
  CHECK(doc.size == 4);
  CHECK(doc.covers.size() == 4);
  CHECK(doc.labels[3] == "(1,1)");
  const Poset back = from_document(document_from_json(document_to_json(doc)));
  CHECK(back.same_order(*d.poset));
  CHECK(back.name(3) == "(1,1)");
  CHECK(document_from_json(document_to_json(doc)).meta.at("axis") == "column");

  const auto stacked = stacked_column(1, 2, 1);
  CHECK(count_maximal_chains(read_poset(write_poset(*stacked))) == 3);

  std::vector<Poset> samples{fixtures::m3(), fixtures::n5(), fixtures::antichain(3),
                             Poset::from_relation(0, {})};
  for (const Params& p : column_window(300, 3, 2, 5)) samples.push_back(*star_sublattice(p.k, p.n, p.m).poset);
  for (const Params& p : row_window(300, 2, 2, 3)) samples.push_back(*stacked_row(p.n, p.k, p.m));
  for (const Poset& p : samples) {
    const Poset q = read_poset(write_poset(p));
    CHECK(q.same_order(p));
    CHECK(q.has_labels() == p.has_labels());
    for (Id x = 0; x < p.size(); ++x) CHECK(q.name(x) == p.name(x));
  }
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(read_poset("{\"version\": \"1\",\n  \"size\": 2,\n  oops }"), ParseError);
  try {
    read_poset("{\n\"version\": \"1\",\n\"size\": ]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  const std::string base = R"({"version": "1", "size": 2, "labels": [], "covers": [[0, 1]], "meta": {}})";
  CHECK(read_poset(base).size() == 2);
  CHECK_THROWS_AS(read_poset(R"({"version": "1", "size": 2, "labels": [], "covers": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(
      read_poset(R"({"version": "1", "size": 2, "labels": [], "covers": [[0, 1]], "meta": {}, "extra": 1})"),
      ParseError);
  CHECK_THROWS_AS(read_poset(R"({"version": "2", "size": 2, "labels": [], "covers": [], "meta": {}})"),
                  ParseError);
  CHECK_THROWS_AS(read_poset(R"({"version": "1", "size": "2", "labels": [], "covers": [], "meta": {}})"),
                  ParseError);
  CHECK_THROWS_AS(read_poset(R"({"version": "1", "size": 2, "labels": [], "covers": [[0]], "meta": {}})"),
                  ParseError);
  CHECK_THROWS_AS(read_poset(R"({"version": "1", "size": 2, "labels": [], "covers": [[0, 7]], "meta": {}})"),
                  ParseError);
  CHECK_THROWS_AS(read_poset(R"({"version": "1", "size": 2, "labels": ["a"], "covers": [], "meta": {}})"),
                  ParseError);
  CHECK_THROWS_AS(
      read_poset(R"({"version": "1", "size": 2, "labels": [], "covers": [[0, 1], [1, 0]], "meta": {}})"),
      CycleError);
}

TEST_CASE("export_dot") {
  const std::string c = export_dot(fixtures::chain(2));
  CHECK(count_of(c, " -> ") == 2);
  CHECK(c.rfind("digraph", 0) == 0);
  CHECK(count_of(export_dot(fixtures::diamond()), " -> ") == 4);

  const auto s = star_sublattice(2, 2, 0);
  const std::string dot = export_dot(*s.poset);
  CHECK(count_of(dot, "[label=") == 6);
  for (const char* edge : {"0 -> 1;", "1 -> 2;", "1 -> 3;", "2 -> 4;", "3 -> 4;", "4 -> 5;"}) {
    CHECK(dot.find(edge) != std::string::npos);
  }
  CHECK(count_of(dot, " -> ") == 6);
  CHECK(dot.find("label=\"(1,1)\"") != std::string::npos);
  CHECK(export_dot(*s.poset) == dot);
  CHECK(export_dot(*star_sublattice(2, 2, 0).poset) == dot);
}

TEST_CASE("render_grid table") {
  const auto b = grid(Axis::column, {1, 1}, {0, 5}, {1, 1});
  const auto t = lines(render_grid(b, GridFormat::table));
  REQUIRE(t.size() == 3);
  CHECK(t[0] == "      n=0,1,2,3,4,5");
  CHECK(t[1] == "m=1:");
  CHECK(t[2] == "k=1   1, 1, 3, 15, 105, 945");

  const auto c = grid(Axis::row, {0, 0}, {2, 2}, {0, 5});
  const auto rows = lines(render_grid(c, GridFormat::table));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "      m=0,1,2,3,4,5");
  CHECK(rows[1] == "n=2:");
  CHECK(rows[2].substr(6) == "1, 2, 6, 20, 70, 252");

  SequenceGrid empty;
  empty.m = {1, 0};
  CHECK(lines(render_grid(empty, GridFormat::table)).size() == 1);
  CHECK(lines(render_grid(empty, GridFormat::csv)) == std::vector<std::string>{"axis,k,n,m,count"});
}

TEST_CASE("render_grid table labels k by its value") {
  const auto g = grid(Axis::column, {2, 3}, {0, 3}, {0, 0});
  const auto t = lines(render_grid(g, GridFormat::table));
  REQUIRE(t.size() == 4);
  CHECK(t[2] == "k=2   1, 1, 2, 5");
  CHECK(t[3] == "k=3   1, 1, 5, 42");
}

TEST_CASE("render_grid bfile, csv and json") {
  const auto c = grid(Axis::row, {0, 0}, {2, 2}, {0, 5});
  CHECK(render_grid(c, GridFormat::bfile) == "0 1\n1 2\n2 6\n3 20\n4 70\n5 252\n");

  const auto two = grid(Axis::row, {0, 1}, {2, 2}, {0, 1});
  const auto b = lines(render_grid(two, GridFormat::bfile));
  CHECK(b == std::vector<std::string>{"# n=2 k=0", "0 1", "1 2", "# n=2 k=1", "0 1", "1 2"});

  const auto csv = lines(render_grid(two, GridFormat::csv));
  CHECK(csv.size() == 5);
  CHECK(csv[4] == "row,1,2,1,2");

  const auto over = grid(Axis::column, {1, 1}, {0, 2}, {3, 3}, 20);
  const std::string json = render_grid(over, GridFormat::json);
  CHECK(json.find("null") != std::string::npos);
  CHECK(json.find("\"1\"") != std::string::npos);
  CHECK(lines(render_grid(over, GridFormat::table))[2].find(kOverBudget) != std::string::npos);
  CHECK(lines(render_grid(over, GridFormat::csv))[3] == std::string("column,1,2,3,") + kOverBudget);
  CHECK(lines(render_grid(over, GridFormat::bfile)).size() == 2);

  CHECK(parse_grid_format("csv") == GridFormat::csv);
  CHECK_THROWS_AS(parse_grid_format("xml"), ParseError);
}
