#pragma once

#include <span>
#include <vector>

#include "findex/graph.hpp"

namespace findex {

/// The four subdivision-based operations.
enum class subdivision_op { S, R, Q, T };

const char* subdivision_op_name(subdivision_op op);

/// Result of S/R/Q/T. Original vertices keep their ids 0..n-1; the new
/// vertex for canonical edge i sits at id n+i. The two id ranges partition
/// the vertex set.
struct transformed_graph {
  Graph graph;
  std::vector<int> original_vertices;
  std::vector<int> edge_vertices;
};

/// L(G): vertex i is canonical edge i of g, adjacent when the edges share an
/// endpoint.
Graph line_graph(const Graph& g);

transformed_graph subdivision(const Graph& g);        // S: edge -> path of length 2
transformed_graph triangle_parallel(const Graph& g);  // R: edge -> triangle
transformed_graph line_superposition(const Graph& g); // Q: S plus edges between new vertices of adjacent edges
transformed_graph total_graph(const Graph& g);        // T: adjacency or incidence

transformed_graph apply_subdivision_op(const Graph& g, subdivision_op op);

/// Flat id of the product vertex (g_part, h_part); g_part-major.
inline int product_vertex_id(int g_part, int h_order, int h_part) {
  return g_part * h_order + h_part;
}

/// Generalized hierarchical product G(U)PiH on V(G) x V(H): (u,v)~(u',v')
/// iff [u = u' in U and vv' in E(H)] or [v = v' and uu' in E(G)]. Both
/// factors must be connected unless allow_disconnected is set; U must be a
/// non-empty subset of V(G).
Graph hierarchical_product(const Graph& g, std::span<const int> u, const Graph& h,
                           bool allow_disconnected = false);

/// F-sum G +_op H = op(G)(V(G)) Pi H, with vertex set (V(G) u E(G)) x V(H)
/// laid out exactly as hierarchical_product of the transformed graph.
/// Requires |V(G)| >= 2 and, unless allow_disconnected, connected factors.
Graph f_sum(const Graph& g, const Graph& h, subdivision_op op,
            bool allow_disconnected = false);

} // namespace findex
