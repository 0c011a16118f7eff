#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "findex/graph.hpp"

namespace findex {

enum class family_kind {
  path,
  cycle,
  complete,
  star,
  complete_bipartite,
  nanotube_tuhc6,
  hexagonal_chain,
};

struct family_spec {
  family_kind family;
  int n = 0; // primary parameter
  int m = 0; // second parameter (complete_bipartite only)
};

Graph path_graph(int n);    // P_n, n >= 1
Graph cycle_graph(int n);   // C_n, n >= 3
Graph complete_graph(int n);            // K_n, n >= 1
Graph star_graph(int leaves);           // K_{1,k}, center is vertex 0, k >= 1
Graph complete_bipartite_graph(int a, int b); // parts 0..a-1 and a..a+b-1

/// Zigzag polyhex nanotube TUHC6[2n,2], built as C_n +_S P_2; n >= 3.
Graph nanotube_tuhc6(int n);

/// Linear chain of n hexagons, built as P_{n+1} +_S P_2; n >= 1.
Graph hexagonal_chain(int n);

Graph build_family(const family_spec& spec);

std::optional<family_kind> family_from_name(const std::string& name);
const char* family_name(family_kind kind);

/// Connected G(n,p): independent edge inclusion with probability p, redrawn
/// until connected. After `budget` rejections falls back to a uniform random
/// spanning tree (Prufer decode) plus independent extra edges. Deterministic
/// in (n, p, seed).
Graph random_connected_graph(int n, double p, std::uint64_t seed, int budget = 100);

} // namespace findex
