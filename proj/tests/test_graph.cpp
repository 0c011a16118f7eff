#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"

#include "findex/families.hpp"
#include "findex/graph.hpp"
#include "findex/rng.hpp"
#include "test_support.hpp"

using namespace findex;

namespace {

Graph two_disjoint_edges() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  return g;
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::bad_param;
}

} // namespace

TEST_CASE("empty and edgeless graphs") {
  CHECK(Graph(0).vertex_count() == 0);
  CHECK(Graph(0).edge_count() == 0);
  Graph g(3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 0);
  for (int v = 0; v < 5; ++v)
    CHECK(Graph(5).degree(v) == 0);
  CHECK_THROWS_AS(Graph(-1), error);
}

TEST_CASE("add_edge grows degrees and rejects bad edges") {
  Graph g(2);
  g.add_edge(0, 1);
  CHECK(g == path_graph(2));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  CHECK(code_of([&] { g.add_edge(0, 1); }) == errc::duplicate_edge);
  CHECK(code_of([&] { g.add_edge(1, 0); }) == errc::duplicate_edge);
  CHECK(code_of([&] { Graph(2).add_edge(1, 1); }) == errc::self_loop);
  CHECK(code_of([&] { Graph(2).add_edge(0, 2); }) == errc::out_of_range);
  CHECK(code_of([&] { g.degree(7); }) == errc::out_of_range);
}

TEST_CASE("degrees of named families") {
  const Graph c5 = cycle_graph(5);
  for (int v = 0; v < 5; ++v)
    CHECK(c5.degree(v) == 2);
  CHECK(path_graph(4).degree(0) == 1);
  CHECK(path_graph(4).degree(3) == 1);
  CHECK(star_graph(4).degree(0) == 4);
  for (int leaf = 1; leaf <= 4; ++leaf)
    CHECK(star_graph(4).degree(leaf) == 1);
}

TEST_CASE("family structure") {
  for (int n = 2; n <= 9; ++n) {
    const Graph p = path_graph(n);
    CHECK(p.edge_count() == n - 1);
    auto deg = brute::degree_multiset(p);
    CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
    CHECK(std::count(deg.begin(), deg.end(), 2) == n - 2);
  }
  for (int n = 3; n <= 9; ++n) {
    const Graph c = cycle_graph(n);
    CHECK(c.edge_count() == n);
    for (int v = 0; v < n; ++v)
      CHECK(c.degree(v) == 2);
  }
  const Graph b = complete_bipartite_graph(2, 3);
  CHECK(b.vertex_count() == 5);
  CHECK(b.edge_count() == 6);
  CHECK(complete_graph(4).edge_count() == 6);

  const Graph f = build_family({family_kind::cycle, 4});
  CHECK(f.vertex_count() == 4);
  CHECK(f.edge_count() == 4);
}

TEST_CASE("composite families") {
  const Graph nano = build_family({family_kind::nanotube_tuhc6, 3});
  CHECK(nano.vertex_count() == 12);
  CHECK(nano.edge_count() == 15);
  CHECK(brute::power_sum(nano, 3) == 210); // 70n at n=3
  CHECK(is_connected(nano));

  const Graph chain = build_family({family_kind::hexagonal_chain, 2});
  CHECK(chain.vertex_count() == 10);
  CHECK(chain.edge_count() == 11);
  CHECK(brute::power_sum(chain, 3) == 118); // 70n - 22 at n=2
  CHECK(is_connected(chain));
}

TEST_CASE("family parameter validation") {
  CHECK(code_of([] { path_graph(0); }) == errc::bad_param);
  CHECK(code_of([] { cycle_graph(2); }) == errc::bad_param);
  CHECK(code_of([] { star_graph(0); }) == errc::bad_param);
  CHECK(code_of([] { complete_bipartite_graph(0, 2); }) == errc::bad_param);
  CHECK(code_of([] { nanotube_tuhc6(2); }) == errc::bad_param);
  CHECK(code_of([] { hexagonal_chain(0); }) == errc::bad_param);
  CHECK(path_graph(1).vertex_count() == 1);
  CHECK(hexagonal_chain(1).vertex_count() == 6); // single hexagon
}

TEST_CASE("family names round-trip") {
  for (family_kind k : {family_kind::path, family_kind::cycle, family_kind::complete,
                        family_kind::star, family_kind::complete_bipartite,
                        family_kind::nanotube_tuhc6, family_kind::hexagonal_chain})
    CHECK(family_from_name(family_name(k)) == k);
  CHECK(family_from_name("NANOTUBE_tuhc6") == family_kind::nanotube_tuhc6);
  CHECK(!family_from_name("petersen").has_value());
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(7)));
  CHECK(!is_connected(two_disjoint_edges()));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
  CHECK(!is_connected(Graph(2)));
}

TEST_CASE("handshake lemma on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    rng r(seed);
    const Graph g = random_connected_graph(r.uniform_int(2, 12), 0.1 + 0.8 * r.unit(), r.next());
    const auto deg = brute::degrees(g);
    CHECK(std::accumulate(deg.begin(), deg.end(), 0LL) == 2LL * g.edge_count());
  }
}

TEST_CASE("random_connected_graph contract") {
  for (std::uint64_t s : {1ULL, 7ULL, 99ULL})
    CHECK(random_connected_graph(2, 1.0, s) == path_graph(2));
  for (std::uint64_t s : {2ULL, 11ULL})
    CHECK(random_connected_graph(5, 1.0, s) == complete_graph(5));

  const Graph a = random_connected_graph(8, 0.4, 12345);
  const Graph b = random_connected_graph(8, 0.4, 12345);
  CHECK(a == b);
  CHECK(a.edges() == b.edges());

  // stays connected across the sparse regime where the tree fallback kicks in
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    rng r(seed * 31);
    const int n = r.uniform_int(2, 14);
    const double p = 0.02 + 0.5 * r.unit();
    CHECK(is_connected(random_connected_graph(n, p, seed)));
  }
  // a tiny budget forces the spanning-tree fallback deterministically
  const Graph fallback = random_connected_graph(10, 0.05, 4, 0);
  CHECK(is_connected(fallback));
  CHECK(fallback.edge_count() >= 9);

  CHECK(code_of([] { random_connected_graph(1, 0.5, 1); }) == errc::bad_param);
  CHECK(code_of([] { random_connected_graph(4, 0.0, 1); }) == errc::bad_param);
  CHECK(code_of([] { random_connected_graph(4, 1.5, 1); }) == errc::bad_param);
}

TEST_CASE("parse_edge_list accepts the documented format") {
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == path_graph(3));
  CHECK(parse_edge_list("# comment\n\n3 2\n0 1\n# mid comment\n1 2\n\n") == path_graph(3));
  CHECK(parse_edge_list("2 1\n1 0\n") == path_graph(2)); // order-insensitive
  CHECK(parse_edge_list("3 0\n").vertex_count() == 3);
  CHECK(parse_edge_list("0 0\n").vertex_count() == 0);
}

TEST_CASE("parse_edge_list rejects malformed input") {
  CHECK(code_of([] { parse_edge_list("2 1\n0 2\n"); }) == errc::out_of_range);
  CHECK(code_of([] { parse_edge_list("2 1\n0 0\n"); }) == errc::self_loop);
  CHECK(code_of([] { parse_edge_list("2 2\n0 1\n1 0\n"); }) == errc::duplicate_edge);
  CHECK(code_of([] { parse_edge_list(""); }) == errc::parse_error);
  CHECK(code_of([] { parse_edge_list("x y\n"); }) == errc::parse_error);
  CHECK(code_of([] { parse_edge_list("3\n"); }) == errc::parse_error);
  CHECK(code_of([] { parse_edge_list("-3 0\n"); }) == errc::parse_error);
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == errc::parse_error);       // missing edge
  CHECK(code_of([] { parse_edge_list("2 1\n0 1\n0 1\n"); }) == errc::parse_error);  // extra line
  CHECK(code_of([] { parse_edge_list("2 1\n0 1 9\n"); }) == errc::parse_error);     // trailing token

  try {
    parse_edge_list("3 2\n0 1\nbad line\n");
    FAIL("expected parse_error");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize_edge_list(path_graph(2)) == "2 1\n0 1\n");
  CHECK(serialize_edge_list(Graph(3)) == "3 0\n");

  Graph g(4);
  g.add_edge(3, 0);
  g.add_edge(2, 1);
  g.add_edge(0, 1);
  CHECK(serialize_edge_list(g) == "4 3\n0 1\n0 3\n1 2\n");
}

TEST_CASE("parse and serialize are inverse on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    rng r(seed * 977);
    const Graph g = random_connected_graph(r.uniform_int(2, 11), 0.1 + 0.8 * r.unit(), r.next());
    const std::string text = serialize_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(serialize_edge_list(parse_edge_list(text)) == text);
  }
}
