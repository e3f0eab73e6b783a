#include <doctest.h>

#include <sstream>

#include "minctrl/error.hpp"
#include "minctrl/generators.hpp"
#include "minctrl/io.hpp"

using namespace minctrl;

namespace {

std::vector<Edge> edges_of(const SparseDigraph& g) { return {g.edges().begin(), g.edges().end()}; }

SparseDigraph edge_list(const std::string& text) {
  std::istringstream in(text);
  return io::read_edge_list(in);
}

SparseDigraph mm(const std::string& text, double tol = 0.0) {
  std::istringstream in(text);
  return io::read_matrix_market(in, tol);
}

int parse_error_line(const std::string& text) {
  try {
    edge_list(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("edge list: basic file") {
  const auto g = edge_list("n 2\n0 0\n1 0\n");
  CHECK(g.num_vertices() == 2);
  CHECK(edges_of(g) == std::vector<Edge>{{0, 0}, {1, 0}});
}

TEST_CASE("edge list: comments, blank lines and duplicates") {
  const auto g = edge_list("# header\n\nn 3  # three\n0 1\n# mid\n0 1\n  2 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(edges_of(g) == std::vector<Edge>{{0, 1}, {2, 2}});
}

TEST_CASE("edge list: errors carry the line number") {
  CHECK(parse_error_line("n 2\n0\n") == 2);
  CHECK(parse_error_line("n 2\n0 1 2\n") == 2);
  CHECK(parse_error_line("2\n") == 1);
  CHECK(parse_error_line("# c\nn x\n") == 2);
  CHECK_THROWS_AS(edge_list(""), ParseError);
  CHECK_THROWS_AS(edge_list("n 2\n0 -1\n"), IndexOutOfRange);
  CHECK_THROWS_AS(edge_list("n 2\n0 2\n"), IndexOutOfRange);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(71);
  const auto g = random_digraph(9, 0.3, rng);
  std::ostringstream out;
  io::write_edge_list(out, g);
  CHECK(edge_list(out.str()) == g);
}

TEST_CASE("matrix market: transposed entries") {
  const auto g = mm("%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 1 3.0\n1 2 -1.5\n");
  CHECK(edges_of(g) == std::vector<Edge>{{0, 0}, {1, 0}});
}

TEST_CASE("matrix market: stored zeros and tolerance") {
  const std::string text = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 0.0\n2 1 1e-9\n";
  CHECK(mm(text).num_edges() == 1);
  CHECK(mm(text, 1e-6).num_edges() == 0);
}

TEST_CASE("matrix market: pattern, integer and symmetric storage") {
  CHECK(edges_of(mm("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n2 1\n")) == std::vector<Edge>{{0, 1}});
  CHECK(mm("%%MatrixMarket matrix coordinate integer general\n2 2 1\n2 1 0\n").num_edges() == 0);
  CHECK(edges_of(mm("%%MatrixMarket matrix coordinate real symmetric\n3 3 2\n2 1 1\n3 3 1\n")) ==
        std::vector<Edge>{{0, 1}, {1, 0}, {2, 2}});
  CHECK(edges_of(mm("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 4\n")) ==
        std::vector<Edge>{{0, 1}, {1, 0}});
}

TEST_CASE("matrix market: errors") {
  CHECK_THROWS_AS(mm("%%MatrixMarket matrix coordinate real general\n2 3 0\n"), NotSquare);
  CHECK_THROWS_AS(mm("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"), ParseError);
  CHECK_THROWS_AS(mm("%%MatrixMarket matrix coordinate complex general\n2 2 0\n"), ParseError);
  CHECK_THROWS_AS(mm("not a banner\n"), ParseError);
  CHECK_THROWS_AS(mm("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n"), ParseError);
  CHECK_THROWS_AS(mm("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"), IndexOutOfRange);
}

TEST_CASE("vertex list") {
  std::istringstream in("# forbidden\n3\n1\n\n3\n");
  CHECK(io::read_vertex_list(in, 4) == std::vector<Vertex>{3, 1, 3});
  std::istringstream bad("5\n");
  CHECK_THROWS_AS(io::read_vertex_list(bad, 4), IndexOutOfRange);
  std::istringstream junk("1 2\n");
  CHECK_THROWS_AS(io::read_vertex_list(junk, 4), ParseError);
}

TEST_CASE("outcome_to_json") {
  const auto solved = io::outcome_to_json(solve(Problem(chain_graph(3))));
  CHECK(solved["solvable"] == true);
  CHECK(solved["input_set"] == nlohmann::json::array({0}));
  CHECK(solved["cost"] == 1);
  CHECK(solved["iterations"].is_number());
  CHECK(solved["per_iteration"].is_array());
  CHECK_FALSE(solved.contains("reason"));

  const std::vector<Vertex> all{0, 1, 2};
  const auto unsolved = io::outcome_to_json(solve(Problem(chain_graph(3), ForbiddenSet(3, all))));
  CHECK(unsolved["solvable"] == false);
  CHECK(unsolved["reason"].is_string());
  CHECK(unsolved["cost"].is_null());
}
