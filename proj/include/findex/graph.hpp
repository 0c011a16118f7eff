#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "findex/error.hpp"

namespace findex {

/// Unordered edge, always stored with first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex ids 0..n-1. No self-loops, no
/// multi-edges. Build it with add_edge, then treat it as immutable: every
/// query is const and the canonical edge order (sorted pairs) is what fixes
/// edge ids in line graphs, subdivisions and serialization.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);

  /// Edges sorted lexicographically with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
  void check_vertex(int v, const char* op) const;

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

/// True iff the graph has exactly one connected component; graphs on at most
/// one vertex count as connected.
bool is_connected(const Graph& g);

/// Edge-list text format: optional '#' comment lines, a "n m" header, then
/// exactly m lines "u v" with 0-based ids. Blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Canonical form: "n m" header, then edges ascending with u < v.
void serialize_edge_list(const Graph& g, std::ostream& out);
std::string serialize_edge_list(const Graph& g);

/// Sorted, deduplicated copy of a vertex subset; every member must be a
/// vertex of g.
std::vector<int> normalize_subset(const Graph& g, std::span<const int> u);

} // namespace findex
