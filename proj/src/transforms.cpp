#include "findex/transforms.hpp"

#include <cstdint>

namespace findex {

const char* subdivision_op_name(subdivision_op op) {
  switch (op) {
  case subdivision_op::S: return "S";
  case subdivision_op::R: return "R";
  case subdivision_op::Q: return "Q";
  case subdivision_op::T: return "T";
  }
  return "?";
}

namespace {

// Edge ids incident to each vertex, in canonical edge order.
std::vector<std::vector<int>> incidence_by_vertex(const Graph& g, const std::vector<Edge>& es) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    inc[es[i].first].push_back(i);
    inc[es[i].second].push_back(i);
  }
  return inc;
}

// Common builder behind S/R/Q/T: subdivision skeleton, optionally the kept
// original edges (R, T) and the line-graph edges between new vertices (Q, T).
transformed_graph build_subdivision_like(const Graph& g, bool keep_original_edges,
                                         bool join_adjacent_edge_vertices) {
  const auto es = g.edges();
  const int n = g.vertex_count();
  const int m = static_cast<int>(es.size());

  transformed_graph out;
  out.graph = Graph(n + m);
  for (int i = 0; i < m; ++i) {
    out.graph.add_edge(es[i].first, n + i);
    out.graph.add_edge(es[i].second, n + i);
  }
  if (keep_original_edges)
    for (const auto& [u, v] : es)
      out.graph.add_edge(u, v);
  if (join_adjacent_edge_vertices) {
    const auto inc = incidence_by_vertex(g, es);
    for (const auto& ids : inc)
      for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
          out.graph.add_edge(n + ids[a], n + ids[b]);
  }

  out.original_vertices.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    out.original_vertices[static_cast<std::size_t>(v)] = v;
  out.edge_vertices.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    out.edge_vertices[static_cast<std::size_t>(i)] = n + i;
  return out;
}

} // namespace

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  Graph lg(static_cast<int>(es.size()));
  const auto inc = incidence_by_vertex(g, es);
  // two distinct edges of a simple graph share at most one endpoint, so
  // every adjacent pair is seen exactly once
  for (const auto& ids : inc)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        lg.add_edge(ids[a], ids[b]);
  return lg;
}

transformed_graph subdivision(const Graph& g) {
  return build_subdivision_like(g, false, false);
}

transformed_graph triangle_parallel(const Graph& g) {
  return build_subdivision_like(g, true, false);
}

transformed_graph line_superposition(const Graph& g) {
  return build_subdivision_like(g, false, true);
}

transformed_graph total_graph(const Graph& g) {
  return build_subdivision_like(g, true, true);
}

transformed_graph apply_subdivision_op(const Graph& g, subdivision_op op) {
  switch (op) {
  case subdivision_op::S: return subdivision(g);
  case subdivision_op::R: return triangle_parallel(g);
  case subdivision_op::Q: return line_superposition(g);
  case subdivision_op::T: return total_graph(g);
  }
  raise(errc::bad_param, "unknown subdivision op");
}

Graph hierarchical_product(const Graph& g, std::span<const int> u, const Graph& h,
                           bool allow_disconnected) {
  const auto subset = normalize_subset(g, u);
  if (subset.empty())
    raise(errc::empty_subset, "hierarchical_product: U must be non-empty");
  if (!allow_disconnected && (!is_connected(g) || !is_connected(h)))
    raise(errc::disconnected, "hierarchical_product: factors must be connected");

  const int gn = g.vertex_count();
  const int hn = h.vertex_count();
  if (static_cast<std::int64_t>(gn) * hn > (1LL << 30))
    raise(errc::overflow, "hierarchical_product: product order too large");

  Graph p(gn * hn);
  // v = v' and uu' in E(G): one copy of G per H-vertex
  for (const auto& [a, b] : g.edges())
    for (int j = 0; j < hn; ++j)
      p.add_edge(product_vertex_id(a, hn, j), product_vertex_id(b, hn, j));
  // u = u' in U and vv' in E(H): one copy of H above each subset vertex
  const auto h_edges = h.edges();
  for (int s : subset)
    for (const auto& [a, b] : h_edges)
      p.add_edge(product_vertex_id(s, hn, a), product_vertex_id(s, hn, b));
  return p;
}

Graph f_sum(const Graph& g, const Graph& h, subdivision_op op, bool allow_disconnected) {
  if (g.vertex_count() < 2)
    raise(errc::too_small, "f_sum: left factor must have at least 2 vertices");
  if (!allow_disconnected && (!is_connected(g) || !is_connected(h)))
    raise(errc::disconnected, "f_sum: factors must be connected");
  const auto t = apply_subdivision_op(g, op);
  // op(G) of a connected G is connected, so the inner check is already done
  return hierarchical_product(t.graph, t.original_vertices, h, true);
}

} // namespace findex
