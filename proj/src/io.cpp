#include "minctrl/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "minctrl/error.hpp"

namespace minctrl::io {

namespace {

std::string_view strip_comment(std::string_view line, char marker) {
  if (auto pos = line.find(marker); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + std::string(tok) + "'", line_no);
  return value;
}

double parse_double(std::string_view tok, std::size_t line_no) {
  // std::from_chars for floating point is missing from older libstdc++.
  std::string s(tok);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("expected a number, got '" + s + "'", line_no);
  return value;
}

Vertex checked_vertex(long long value, Vertex n) {
  if (value < 0 || value >= n) {
    throw IndexOutOfRange("vertex " + std::to_string(value) + " outside [0, " + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(value);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return in;
}

}  // namespace

SparseDigraph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  Vertex n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokens(strip_comment(raw, '#'));
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "n") throw ParseError("expected header 'n <count>'", line_no);
      const long long count = parse_int(toks[1], line_no);
      if (count < 0 || count > std::numeric_limits<Vertex>::max() / 2 - 2) {
        throw ParseError("vertex count out of range", line_no);
      }
      n = static_cast<Vertex>(count);
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected an edge 'from to'", line_no);
    const Vertex from = checked_vertex(parse_int(toks[0], line_no), n);
    const Vertex to = checked_vertex(parse_int(toks[1], line_no), n);
    edges.push_back({from, to});
  }
  if (n < 0) throw ParseError("missing header 'n <count>'", line_no);
  return SparseDigraph::from_edges(n, edges);
}

SparseDigraph load_edge_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SparseDigraph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

SparseDigraph read_matrix_market(std::istream& in, double zero_tol) {
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw)) throw ParseError("empty Matrix Market file", 0);
  ++line_no;
  std::string lowered;
  for (char ch : raw) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  const auto header = tokens(lowered);
  if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
    throw ParseError("expected '%%MatrixMarket matrix coordinate <field> <symmetry>'", line_no);
  }
  if (header[2] != "coordinate") throw ParseError("only coordinate format is supported", line_no);
  const std::string_view field = header[3];
  if (field != "real" && field != "integer" && field != "pattern" && field != "double") {
    throw ParseError("unsupported field '" + std::string(field) + "'", line_no);
  }
  const std::string_view symmetry = header[4];
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric") {
    throw ParseError("unsupported symmetry '" + std::string(symmetry) + "'", line_no);
  }
  const bool pattern = field == "pattern";
  const bool mirrored = symmetry != "general";

  long long rows = -1, cols = -1, nnz = -1, seen = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokens(strip_comment(raw, '%'));
    if (toks.empty()) continue;
    if (rows < 0) {
      if (toks.size() != 3) throw ParseError("expected size line 'rows cols entries'", line_no);
      rows = parse_int(toks[0], line_no);
      cols = parse_int(toks[1], line_no);
      nnz = parse_int(toks[2], line_no);
      if (rows < 0 || cols < 0 || nnz < 0) throw ParseError("negative size", line_no);
      if (rows != cols) {
        throw NotSquare("matrix is " + std::to_string(rows) + " x " + std::to_string(cols));
      }
      if (rows > std::numeric_limits<Vertex>::max() / 2 - 2) throw ParseError("matrix too large", line_no);
      edges.reserve(static_cast<std::size_t>(nnz));
      continue;
    }
    if (toks.size() != (pattern ? 2u : 3u)) throw ParseError("wrong number of fields in entry", line_no);
    if (++seen > nnz) throw ParseError("more entries than the size line declares", line_no);
    const long long r = parse_int(toks[0], line_no);
    const long long c = parse_int(toks[1], line_no);
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw IndexOutOfRange("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside the matrix");
    }
    const double v = pattern ? 1.0 : parse_double(toks[2], line_no);
    if (!(std::fabs(v) > zero_tol)) continue;
    const auto row = static_cast<Vertex>(r - 1);
    const auto col = static_cast<Vertex>(c - 1);
    edges.push_back({col, row});
    if (mirrored && row != col) edges.push_back({row, col});
  }
  if (rows < 0) throw ParseError("missing size line", line_no);
  if (seen != nnz) throw ParseError("fewer entries than the size line declares", line_no);
  return SparseDigraph::from_edges(static_cast<Vertex>(rows), edges);
}

SparseDigraph load_matrix_market(const std::filesystem::path& path, double zero_tol) {
  auto in = open(path);
  return read_matrix_market(in, zero_tol);
}

std::vector<Vertex> read_vertex_list(std::istream& in, Vertex n) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Vertex> out;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = tokens(strip_comment(raw, '#'));
    if (toks.empty()) continue;
    if (toks.size() != 1) throw ParseError("expected one vertex id per line", line_no);
    out.push_back(checked_vertex(parse_int(toks[0], line_no), n));
  }
  return out;
}

std::vector<Vertex> load_vertex_list(const std::filesystem::path& path, Vertex n) {
  auto in = open(path);
  return read_vertex_list(in, n);
}

nlohmann::ordered_json outcome_to_json(const SolveOutcome& outcome) {
  nlohmann::ordered_json j;
  if (const auto* bad = std::get_if<Unsolvable>(&outcome)) {
    j["solvable"] = false;
    j["reason"] = std::string(to_string(bad->reason));
    j["input_set"] = nlohmann::ordered_json::array();
    j["cost"] = nullptr;
    j["iterations"] = 0;
    j["per_iteration"] = nlohmann::ordered_json::array();
    return j;
  }
  const auto& sol = std::get<Solution>(outcome);
  j["solvable"] = true;
  j["input_set"] = sol.input_set;
  j["cost"] = sol.cost;
  j["iterations"] = sol.diagnostics.iterations;
  auto per = nlohmann::ordered_json::array();
  for (const auto& rec : sol.diagnostics.per_iteration) {
    per.push_back({{"dist", rec.distance}, {"paths", rec.paths}, {"cost", rec.cost}});
  }
  j["per_iteration"] = std::move(per);
  return j;
}

}  // namespace minctrl::io
