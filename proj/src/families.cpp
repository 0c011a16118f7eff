#include "findex/families.hpp"

#include <algorithm>
#include <cctype>

#include "findex/rng.hpp"
#include "findex/transforms.hpp"

namespace findex {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    raise(errc::bad_param, what);
}

} // namespace

Graph path_graph(int n) {
  require(n >= 1, "path: order must be >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: order must be >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: order must be >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star: leaf count must be >= 1");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i)
    g.add_edge(0, i);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: both parts must be >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      g.add_edge(u, a + v);
  return g;
}

Graph nanotube_tuhc6(int n) {
  require(n >= 3, "nanotube_TUHC6: n must be >= 3");
  return f_sum(cycle_graph(n), path_graph(2), subdivision_op::S);
}

Graph hexagonal_chain(int n) {
  require(n >= 1, "hexagonal_chain: n must be >= 1");
  return f_sum(path_graph(n + 1), path_graph(2), subdivision_op::S);
}

Graph build_family(const family_spec& spec) {
  switch (spec.family) {
  case family_kind::path: return path_graph(spec.n);
  case family_kind::cycle: return cycle_graph(spec.n);
  case family_kind::complete: return complete_graph(spec.n);
  case family_kind::star: return star_graph(spec.n);
  case family_kind::complete_bipartite: return complete_bipartite_graph(spec.n, spec.m);
  case family_kind::nanotube_tuhc6: return nanotube_tuhc6(spec.n);
  case family_kind::hexagonal_chain: return hexagonal_chain(spec.n);
  }
  raise(errc::bad_param, "unknown family");
}

std::optional<family_kind> family_from_name(const std::string& name) {
  std::string k;
  k.reserve(name.size());
  for (char c : name)
    k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (k == "path") return family_kind::path;
  if (k == "cycle") return family_kind::cycle;
  if (k == "complete") return family_kind::complete;
  if (k == "star") return family_kind::star;
  if (k == "complete_bipartite") return family_kind::complete_bipartite;
  if (k == "nanotube_tuhc6") return family_kind::nanotube_tuhc6;
  if (k == "hexagonal_chain") return family_kind::hexagonal_chain;
  return std::nullopt;
}

const char* family_name(family_kind kind) {
  switch (kind) {
  case family_kind::path: return "path";
  case family_kind::cycle: return "cycle";
  case family_kind::complete: return "complete";
  case family_kind::star: return "star";
  case family_kind::complete_bipartite: return "complete_bipartite";
  case family_kind::nanotube_tuhc6: return "nanotube_TUHC6";
  case family_kind::hexagonal_chain: return "hexagonal_chain";
  }
  return "?";
}

namespace {

// Uniform labeled tree on n >= 2 vertices by Prufer decode.
Graph random_spanning_tree(int n, rng& r) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int& s : seq) {
    s = r.uniform_int(0, n - 1);
    ++deg[s];
  }
  // attach each sequence entry to the smallest current leaf
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (!used[v] && deg[v] == 1) {
        leaf = v;
        break;
      }
    }
    g.add_edge(leaf, s);
    used[leaf] = 1;
    --deg[s];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[v] && deg[v] == 1) {
      if (a < 0)
        a = v;
      else
        b = v;
    }
  }
  g.add_edge(a, b);
  return g;
}

} // namespace

Graph random_connected_graph(int n, double p, std::uint64_t seed, int budget) {
  require(n >= 2, "random_connected_graph: n must be >= 2");
  require(p > 0.0 && p <= 1.0, "random_connected_graph: p must be in (0, 1]");
  require(budget >= 0, "random_connected_graph: negative budget");

  rng r(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (r.bernoulli(p))
          g.add_edge(u, v);
    if (is_connected(g))
      return g;
  }
  // rejection budget exhausted: spanning tree plus independent extras
  Graph g = random_spanning_tree(n, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && r.bernoulli(p))
        g.add_edge(u, v);
  return g;
}

} // namespace findex
