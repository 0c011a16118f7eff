#pragma once

#include <span>

#include "findex/checked.hpp"
#include "findex/graph.hpp"

namespace findex {

/// First Zagreb index M1 = sum of squared degrees. Also computed in its
/// edge form sum_{uv in E}[d(u)+d(v)] and both are asserted equal.
index_t first_zagreb(const Graph& g);

/// Second Zagreb index M2 = sum over edges of d(u)*d(v).
index_t second_zagreb(const Graph& g);

/// F-index: sum of cubed degrees.
index_t f_index(const Graph& g);

/// F-index in edge form, sum_{uv in E}[d(u)^2 + d(v)^2]. Equals f_index on
/// every graph.
index_t f_index_edge_form(const Graph& g);

/// General first Zagreb index: sum of degrees raised to `exponent`.
/// Exponents 0 and 1 are excluded by definition and negative exponents are
/// rejected (undefined on isolated vertices), so exponent >= 2.
index_t general_first_zagreb(const Graph& g, int exponent);

/// Redefined Zagreb index: sum over edges of d(u)*d(v)*(d(u)+d(v)).
index_t redefined_zagreb(const Graph& g);

/// Every right-hand-side quantity the closed forms need, for a (graph,
/// subset) pair. With u = V(G): sum_deg_u = 2*n_edges, sum_deg2_u = m1 and
/// u_size = n_vertices.
struct invariant_bundle_t {
  index_t n_vertices = 0;
  index_t n_edges = 0;
  index_t m1 = 0;
  index_t m2 = 0;
  index_t f = 0;
  index_t xi4 = 0;
  index_t rezm = 0;
  index_t u_size = 0;
  index_t sum_deg_u = 0;
  index_t sum_deg2_u = 0;
};

invariant_bundle_t invariant_bundle(const Graph& g, std::span<const int> u);
invariant_bundle_t invariant_bundle(const Graph& g); // u = V(G)

} // namespace findex
