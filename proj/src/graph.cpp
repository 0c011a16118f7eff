#include "findex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace findex {

const char* errc_name(errc code) {
  switch (code) {
  case errc::self_loop: return "self_loop";
  case errc::duplicate_edge: return "duplicate_edge";
  case errc::out_of_range: return "out_of_range";
  case errc::parse_error: return "parse_error";
  case errc::bad_param: return "bad_param";
  case errc::bad_exponent: return "bad_exponent";
  case errc::overflow: return "overflow";
  case errc::empty_subset: return "empty_subset";
  case errc::disconnected: return "disconnected";
  case errc::too_small: return "too_small";
  case errc::generation_failure: return "generation_failure";
  }
  return "unknown";
}

Graph::Graph(int n) {
  if (n < 0)
    raise(errc::bad_param, "vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v, const char* op) const {
  if (v < 0 || v >= vertex_count())
    raise(errc::out_of_range, std::string(op) + ": vertex " + std::to_string(v) +
                                  " not in [0, " + std::to_string(vertex_count()) + ")");
}

int Graph::degree(int v) const {
  check_vertex(v, "degree");
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, "has_edge");
  check_vertex(v, "has_edge");
  // scan the shorter list
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int needle = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(list.begin(), list.end(), needle) != list.end();
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v)
    raise(errc::self_loop, "add_edge: self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    raise(errc::duplicate_edge, "add_edge: edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} already present");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v)
        es.emplace_back(u, v);
  std::sort(es.begin(), es.end());
  return es;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.m_ == b.m_ && a.edges() == b.edges();
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1)
    return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

namespace {

bool content_line(const std::string& line) {
  for (char c : line) {
    if (c == '#')
      return false;
    if (!std::isspace(static_cast<unsigned char>(c)))
      return true;
  }
  return false; // blank
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  raise(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

// Parses exactly `count` nonnegative integers and nothing else.
void parse_ints(const std::string& line, int line_no, long long* out, int count) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i) {
    if (!(ss >> out[i]))
      parse_fail(line_no, "expected " + std::to_string(count) + " integers in '" + line + "'");
    if (out[i] < 0)
      parse_fail(line_no, "negative value in '" + line + "'");
  }
  std::string rest;
  if (ss >> rest)
    parse_fail(line_no, "trailing content '" + rest + "'");
}

} // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int header_line = 0;
  long long n = -1, m = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line))
      continue;
    long long header[2];
    parse_ints(line, line_no, header, 2);
    n = header[0];
    m = header[1];
    header_line = line_no;
    break;
  }
  if (n < 0)
    parse_fail(line_no + 1, "missing 'n m' header");
  if (n > (1LL << 30))
    parse_fail(header_line, "vertex count too large");

  Graph g(static_cast<int>(n));
  long long read = 0;
  while (read < m && std::getline(in, line)) {
    ++line_no;
    if (!content_line(line))
      continue;
    long long uv[2];
    parse_ints(line, line_no, uv, 2);
    if (uv[0] >= n || uv[1] >= n)
      raise(errc::out_of_range, "line " + std::to_string(line_no) + ": vertex id out of range in '" + line + "'");
    try {
      g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    } catch (const error& e) {
      throw error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    ++read;
  }
  if (read < m)
    parse_fail(line_no + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(read));
  while (std::getline(in, line)) {
    ++line_no;
    if (content_line(line))
      parse_fail(line_no, "unexpected content after " + std::to_string(m) + " edges");
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  serialize_edge_list(g, out);
  return out.str();
}

std::vector<int> normalize_subset(const Graph& g, std::span<const int> u) {
  std::vector<int> out(u.begin(), u.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out)
    if (v < 0 || v >= g.vertex_count())
      raise(errc::out_of_range, "subset member " + std::to_string(v) + " not a vertex");
  return out;
}

} // namespace findex
