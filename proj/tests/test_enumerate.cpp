#include <doctest.h>

#include <algorithm>
#include <set>

#include "slp/graph.hpp"

using namespace slp;

namespace {

// brute-force class counting for the small-n oracle: canonical form by
// minimum over all vertex permutations
std::uint32_t brute_min_mask(int n, std::uint32_t mask) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto bit = [n](int i, int j) {  // 0-based pair in lex order
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  std::uint32_t best = ~0u;
  do {
    std::uint32_t m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask >> bit(perm[i], perm[j]) & 1) m |= std::uint32_t(1) << bit(i, j);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int brute_count(int n, bool connected_only) {
  int npairs = n * (n - 1) / 2;
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << npairs); ++mask) {
    std::uint32_t canon = brute_min_mask(n, mask);
    if (!classes.insert(canon).second) continue;
  }
  if (!connected_only) return static_cast<int>(classes.size());
  int count = 0;
  for (std::uint32_t canon : classes) {
    Graph g;
    g.vertex_count = n;
    int t = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++t)
        if (canon >> t & 1) g.edges.emplace_back(i, j);
    if (g.is_connected()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration matches brute force for n <= 5") {
  CHECK(enumerate_nonisomorphic(1, GraphFilter::kConnected).size() == 1);
  CHECK(enumerate_nonisomorphic(2, GraphFilter::kConnected).size() == 1);
  CHECK(enumerate_nonisomorphic(3, GraphFilter::kConnected).size() == 2);
  CHECK(enumerate_nonisomorphic(4, GraphFilter::kConnected).size() == 6);
  CHECK(static_cast<int>(enumerate_nonisomorphic(4, GraphFilter::kConnected).size()) ==
        brute_count(4, true));
  CHECK(static_cast<int>(enumerate_nonisomorphic(5, GraphFilter::kConnected).size()) ==
        brute_count(5, true));
}

TEST_CASE("known class counts") {
  CHECK(enumerate_nonisomorphic(6, GraphFilter::kConnected).size() == 112);
  CHECK(enumerate_nonisomorphic(3, GraphFilter::kBiconnected).size() == 1);
  CHECK(enumerate_nonisomorphic(4, GraphFilter::kBiconnected).size() == 3);
  CHECK(enumerate_nonisomorphic(5, GraphFilter::kBiconnected).size() == 10);
  CHECK(enumerate_nonisomorphic(6, GraphFilter::kBiconnected).size() == 56);
}

TEST_CASE("representatives are pairwise non-isomorphic and well-formed") {
  for (int n : {4, 5, 6}) {
    auto graphs = enumerate_nonisomorphic(n, GraphFilter::kConnected);
    std::set<std::uint32_t> canon;
    for (const auto& g : graphs) {
      CHECK(g.vertex_count == n);
      CHECK(g.is_simple());
      CHECK(g.is_connected());
      CHECK(canon.insert(canonical_edge_mask(g)).second);
    }
  }
}

TEST_CASE("canonical form is permutation invariant") {
  Graph g{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}};
  std::uint32_t base = canonical_edge_mask(g);
  // relabel by a fixed permutation
  std::vector<int> perm = {3, 5, 1, 2, 4};
  Graph h;
  h.vertex_count = 5;
  for (auto [u, v] : g.edges) h.edges.emplace_back(perm[u - 1], perm[v - 1]);
  CHECK(canonical_edge_mask(h) == base);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_nonisomorphic(9, GraphFilter::kConnected), UnsupportedError);
  CHECK_THROWS_AS(canonical_edge_mask(Graph{2, {{1, 2}, {1, 2}}}), UnsupportedError);
}
