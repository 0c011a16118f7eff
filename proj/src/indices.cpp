#include "findex/indices.hpp"

#include <cassert>

namespace findex {

index_t first_zagreb(const Graph& g) {
  index_t vertex_form = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const index_t d = g.degree(v);
    vertex_form = checked::add(vertex_form, checked::mul(d, d));
  }
  index_t edge_form = 0;
  for (const auto& [u, v] : g.edges())
    edge_form = checked::add(edge_form, checked::add(g.degree(u), g.degree(v)));
  assert(vertex_form == edge_form);
  (void)edge_form;
  return vertex_form;
}

index_t second_zagreb(const Graph& g) {
  index_t total = 0;
  for (const auto& [u, v] : g.edges())
    total = checked::add(total, checked::mul(g.degree(u), g.degree(v)));
  return total;
}

index_t f_index(const Graph& g) {
  index_t total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    total = checked::add(total, checked::pow(g.degree(v), 3));
  return total;
}

index_t f_index_edge_form(const Graph& g) {
  index_t total = 0;
  for (const auto& [u, v] : g.edges()) {
    const index_t du = g.degree(u), dv = g.degree(v);
    total = checked::add(total, checked::add(checked::mul(du, du), checked::mul(dv, dv)));
  }
  return total;
}

index_t general_first_zagreb(const Graph& g, int exponent) {
  if (exponent < 2)
    raise(errc::bad_exponent,
          "general_first_zagreb: exponent must be an integer >= 2, got " +
              std::to_string(exponent));
  index_t total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    total = checked::add(total, checked::pow(g.degree(v), exponent));
  return total;
}

index_t redefined_zagreb(const Graph& g) {
  index_t total = 0;
  for (const auto& [u, v] : g.edges()) {
    const index_t du = g.degree(u), dv = g.degree(v);
    total = checked::add(total, checked::mul(checked::mul(du, dv), checked::add(du, dv)));
  }
  return total;
}

invariant_bundle_t invariant_bundle(const Graph& g, std::span<const int> u) {
  const std::vector<int> subset = normalize_subset(g, u);
  invariant_bundle_t b;
  b.n_vertices = g.vertex_count();
  b.n_edges = g.edge_count();
  b.m1 = first_zagreb(g);
  b.m2 = second_zagreb(g);
  b.f = f_index(g);
  b.xi4 = general_first_zagreb(g, 4);
  b.rezm = redefined_zagreb(g);
  b.u_size = static_cast<index_t>(subset.size());
  for (int v : subset) {
    const index_t d = g.degree(v);
    b.sum_deg_u = checked::add(b.sum_deg_u, d);
    b.sum_deg2_u = checked::add(b.sum_deg2_u, checked::mul(d, d));
  }
  return b;
}

invariant_bundle_t invariant_bundle(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    all[static_cast<std::size_t>(v)] = v;
  return invariant_bundle(g, all);
}

} // namespace findex
