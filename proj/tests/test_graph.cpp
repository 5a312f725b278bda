#include <doctest.h>

#include <map>
#include <set>

#include "slp/fp.hpp"
#include "slp/graph.hpp"
#include "slp/rng.hpp"

using namespace slp;

namespace {

Graph triangle() {
  return Graph{3, {{1, 2}, {1, 3}, {2, 3}}};
}

Graph k4() {
  return Graph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
}

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> s;
  for (auto [u, v] : g.edges) s.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
  return s;
}

// brute-force count of acyclic (vertex_count-1)-subsets, as the
// independent oracle for tree counts and weighted sums
mpz_class brute_tree_sum(const Graph& g, const std::vector<mpz_class>& w) {
  int n = g.edge_count(), need = g.vertex_count - 1;
  mpz_class total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if (__builtin_popcountll(mask) != need) continue;
    EdgeSet s{mask};
    if (!is_acyclic(g, s)) continue;
    mpz_class prod = 1;
    for (int e : s.indices()) prod *= w[e - 1];
    total += prod;
  }
  return total;
}

Graph random_connected_graph(CounterRng& rng, int max_vertices, int max_extra_edges) {
  while (true) {
    int n = 2 + static_cast<int>(rng.below(max_vertices - 1));
    Graph g;
    g.vertex_count = n;
    // random spanning tree first, then extra edges
    for (int v = 2; v <= n; ++v) g.edges.emplace_back(1 + static_cast<int>(rng.below(v - 1)), v);
    int extra = static_cast<int>(rng.below(max_extra_edges + 1));
    for (int t = 0; t < extra && g.edge_count() < 10; ++t) {
      int u = 1 + static_cast<int>(rng.below(n)), v = 1 + static_cast<int>(rng.below(n));
      if (u != v) g.edges.emplace_back(u, v);
    }
    if (g.edge_count() <= 10) return g;
  }
}

}  // namespace

TEST_CASE("graph6 parse: examples") {
  Graph t = parse_graph6("Bw");
  CHECK(t.vertex_count == 3);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  Graph e = parse_graph6("A_");
  CHECK(e.vertex_count == 2);
  CHECK(e.edges == std::vector<std::pair<int, int>>{{1, 2}});

  Graph z = parse_graph6("B?");
  CHECK(z.vertex_count == 3);
  CHECK(z.edges.empty());
}

TEST_CASE("graph6 parse: errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);    // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError);  // non-printable byte
  CHECK_THROWS_AS(parse_graph6("~??"), ParseError);    // long form
  try {
    parse_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("graph6 emit: examples and errors") {
  CHECK(emit_graph6(triangle()) == "Bw");
  CHECK(emit_graph6(Graph{2, {{1, 2}}}) == "A_");
  CHECK(emit_graph6(Graph{3, {}}) == "B?");
  CHECK_THROWS_AS(emit_graph6(Graph{2, {{1, 1}}}), UnsupportedError);
  CHECK_THROWS_AS(emit_graph6(Graph{2, {{1, 2}, {1, 2}}}), UnsupportedError);
}

TEST_CASE("graph6 round-trip on random simple graphs") {
  CounterRng rng(2024);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.below(11));
    Graph g;
    g.vertex_count = n;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.below(2)) g.edges.emplace_back(i, j);
    Graph back = parse_graph6(emit_graph6(g));
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(edge_set(back) == edge_set(g));  // equality up to edge renumbering
  }
}

TEST_CASE("edge-bit strings: the 13-edge example") {
  Graph g = parse_edge_bits("0001111001 1110010100 11001000", 8);
  std::vector<std::pair<int, int>> want = {{1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5}, {2, 6},
                                           {2, 7}, {2, 8}, {3, 6}, {3, 8}, {4, 7}, {4, 8},
                                           {5, 8}};
  CHECK(g.edges == want);
  CHECK(emit_edge_bits(g) == "0001111001 1110010100 11001000");
}

TEST_CASE("edge-bit strings: small cases and errors") {
  CHECK(parse_edge_bits("111", 3).edges == triangle().edges);
  CHECK(parse_edge_bits("000000", 4).edges.empty());
  CHECK(parse_edge_bits("000000", 4).vertex_count == 4);
  CHECK(emit_edge_bits(triangle()) == "111");
  // path 1-2-3-4
  Graph p4{4, {{1, 2}, {2, 3}, {3, 4}}};
  CHECK(emit_edge_bits(p4) == "100101");
  CHECK_THROWS_AS(parse_edge_bits("11", 3), ParseError);
  CHECK_THROWS_AS(parse_edge_bits("1111", 3), ParseError);
  CHECK_THROWS_AS(parse_edge_bits("1x1", 3), ParseError);
}

TEST_CASE("edge-bit round-trip") {
  CounterRng rng(7);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng.below(8));
    Graph g;
    g.vertex_count = n;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.below(2)) g.edges.emplace_back(i, j);
    Graph back = parse_edge_bits(emit_edge_bits(g), n);
    CHECK(back.edges == g.edges);  // lex numbering is already canonical here
  }
}

TEST_CASE("biconnected components") {
  // two triangles sharing vertex 3
  Graph bowtie{5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}};
  auto pieces = biconnected_components(bowtie);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].graph.edge_count() == 3);
  CHECK(pieces[1].graph.edge_count() == 3);
  CHECK(pieces[0].edge_map == std::vector<int>{1, 2, 3});
  CHECK(pieces[1].edge_map == std::vector<int>{4, 5, 6});

  auto k4_pieces = biconnected_components(k4());
  REQUIRE(k4_pieces.size() == 1);
  CHECK(k4_pieces[0].graph.edge_count() == 6);
  CHECK(k4_pieces[0].graph.vertex_count == 4);

  Graph path{4, {{1, 2}, {2, 3}, {3, 4}}};
  auto path_pieces = biconnected_components(path);
  CHECK(path_pieces.size() == 3);
  for (const auto& p : path_pieces) CHECK(p.graph.edge_count() == 1);

  CHECK_THROWS(biconnected_components(Graph{4, {{1, 2}, {3, 4}}}));
}

TEST_CASE("biconnected components partition the edges; pieces are 2-connected") {
  CounterRng rng(99);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_connected_graph(rng, 7, 5);
    auto pieces = biconnected_components(g);
    std::set<int> covered;
    for (const auto& p : pieces)
      for (int e : p.edge_map) CHECK(covered.insert(e).second);
    CHECK(static_cast<int>(covered.size()) == g.edge_count());
    for (const auto& p : pieces) {
      if (p.graph.vertex_count < 3) continue;
      CHECK(is_biconnected(p.graph));
    }
  }
}

TEST_CASE("contraction") {
  auto c1 = contract_edges(triangle(), EdgeSet::of({1}));
  CHECK(c1.graph.vertex_count == 2);
  CHECK(c1.graph.edge_count() == 2);
  CHECK(c1.edge_map == std::vector<int>{2, 3});

  auto c2 = contract_edges(triangle(), EdgeSet::of({1, 2}));
  CHECK(c2.graph.vertex_count == 1);
  REQUIRE(c2.graph.edge_count() == 1);
  CHECK(c2.graph.edges[0].first == c2.graph.edges[0].second);  // loop retained
  CHECK(c2.edge_map == std::vector<int>{3});

  auto c3 = contract_edges(k4(), EdgeSet{});
  CHECK(c3.graph == k4());

  CHECK_THROWS(contract_edges(triangle(), EdgeSet::of({1, 2, 3})));
}

TEST_CASE("is_acyclic") {
  CHECK(!is_acyclic(triangle(), EdgeSet::of({1, 2, 3})));
  CHECK(is_acyclic(triangle(), EdgeSet::of({1, 2})));
  CHECK(is_acyclic(triangle(), EdgeSet{}));
  CHECK(!is_acyclic(Graph{2, {{1, 1}}}, EdgeSet::of({1})));  // loop is a cycle
}

TEST_CASE("weighted_tree_value: examples") {
  std::vector<mpz_class> ones(6, 1);
  CHECK(weighted_tree_value(k4(), std::span<const mpz_class>(ones)) == 16);
  std::vector<mpz_class> w = {2, 3, 5};
  CHECK(weighted_tree_value(triangle(), w) == 31);
  std::vector<mpz_class> w7 = {7};
  CHECK(weighted_tree_value(Graph{2, {{1, 2}}}, w7) == 7);
  // disconnected -> 0
  std::vector<mpz_class> w1 = {1};
  CHECK(weighted_tree_value(Graph{3, {{1, 2}}}, w1) == 0);
}

TEST_CASE("spanning tree enumeration: examples") {
  CHECK(spanning_trees(triangle()).size() == 3);
  CHECK(spanning_trees(k4()).size() == 16);
  Graph tree{4, {{1, 2}, {2, 3}, {2, 4}}};
  auto ts = spanning_trees(tree);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0] == EdgeSet::of({1, 2, 3}));
}

TEST_CASE("matrix-tree value equals enumeration oracle") {
  CounterRng rng(5);
  for (int t = 0; t < 100; ++t) {
    Graph g = random_connected_graph(rng, 6, 4);
    std::vector<mpz_class> w;
    for (int e = 0; e < g.edge_count(); ++e) w.emplace_back(rng.below(7));
    mpz_class fast = weighted_tree_value(g, w);
    mpz_class slow = brute_tree_sum(g, w);
    CHECK(fast == slow);
    // enumeration agrees too
    mpz_class via_enum = 0;
    for_each_spanning_tree(g, [&](EdgeSet s) {
      mpz_class prod = 1;
      for (int e : s.indices()) prod *= w[e - 1];
      via_enum += prod;
    });
    CHECK(via_enum == fast);
  }
}

TEST_CASE("contraction preserves the tree correspondence") {
  CounterRng rng(17);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_connected_graph(rng, 6, 4);
    std::vector<mpz_class> w;
    for (int e = 0; e < g.edge_count(); ++e) w.emplace_back(1 + rng.below(5));
    // pick a random acyclic subset
    EdgeSet I;
    for (int e = 1; e <= g.edge_count(); ++e) {
      if (rng.below(3)) continue;
      EdgeSet trial = I;
      trial.add(e);
      if (is_acyclic(g, trial)) I = trial;
    }
    auto piece = contract_edges(g, I);
    std::vector<mpz_class> wc;
    for (int e : piece.edge_map) wc.push_back(w[e - 1]);
    mpz_class contracted = weighted_tree_value(piece.graph, wc);
    mpz_class direct = 0;
    for_each_spanning_tree(g, [&](EdgeSet s) {
      if ((s & I) != I) return;
      mpz_class prod = 1;
      for (int e : s.indices())
        if (!I.contains(e)) prod *= w[e - 1];
      direct += prod;
    });
    CHECK(contracted == direct);
  }
}

TEST_CASE("weighted_tree_value_mod matches the exact value") {
  CounterRng rng(31);
  std::uint64_t p = kPrimes[0];
  for (int t = 0; t < 50; ++t) {
    Graph g = random_connected_graph(rng, 6, 4);
    std::vector<mpz_class> w;
    std::vector<std::uint64_t> wm;
    for (int e = 0; e < g.edge_count(); ++e) {
      std::uint64_t x = rng.below(1000000000ULL);
      w.emplace_back(static_cast<unsigned long>(x));
      wm.push_back(x);
    }
    mpz_class exact = weighted_tree_value(g, w);
    std::uint64_t expect = mpz_fdiv_ui(exact.get_mpz_t(), p);
    CHECK(weighted_tree_value_mod(g, wm, p) == expect);
  }
}
