#include <algorithm>
#include <unordered_set>

#include "slp/graph.hpp"

namespace slp {

namespace {

// Pair (i,j), 1 <= i < j <= n, to its position in lexicographic order.
int pair_bit(int i, int j, int n) {
  // pairs (1,2),(1,3),...,(1,n),(2,3),...
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

// Lexicographically maximal column-major adjacency string.  At every
// position only the candidates with the maximal one-step code are
// explored; the global maximum takes a per-step maximal branch at each of
// its own nodes, so it is among the surviving leaves.
struct CanonSearch {
  int n;
  const std::vector<std::uint8_t>& adj;  // neighbor bitmask per vertex (0-based)
  std::vector<int> perm, best_perm;
  std::vector<std::uint8_t> code, best_code;  // one code per position >= 1
  bool have_best = false;

  CanonSearch(int nn, const std::vector<std::uint8_t>& a) : n(nn), adj(a) {}

  void run(int pos, std::uint16_t used) {
    if (pos == n) {
      if (!have_best || code > best_code) {
        best_code = code;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    std::uint8_t cmax = 0;
    std::uint8_t cand_code[8];
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) { cand_code[v] = 0; continue; }
      std::uint8_t c = 0;
      for (int i = 0; i < pos; ++i)
        c = static_cast<std::uint8_t>(c << 1 | (adj[perm[i]] >> v & 1));
      cand_code[v] = c;
      if (c > cmax) cmax = c;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      if (pos > 0 && cand_code[v] != cmax) continue;
      perm.push_back(v);
      if (pos > 0) code.push_back(cand_code[v]);
      run(pos + 1, used | static_cast<std::uint16_t>(1 << v));
      perm.pop_back();
      if (pos > 0) code.pop_back();
    }
  }
};

std::vector<std::uint8_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint8_t> adj(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    adj[u - 1] |= static_cast<std::uint8_t>(1 << (v - 1));
    adj[v - 1] |= static_cast<std::uint8_t>(1 << (u - 1));
  }
  return adj;
}

std::uint32_t mask_from_perm(int n, const std::vector<std::uint8_t>& adj,
                             const std::vector<int>& perm) {
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[perm[i]] >> perm[j] & 1)
        mask |= std::uint32_t(1) << pair_bit(i + 1, j + 1, n);
  return mask;
}

std::uint32_t canonical_mask_of(int n, const std::vector<std::uint8_t>& adj) {
  CanonSearch cs(n, adj);
  cs.run(0, 0);
  return mask_from_perm(n, adj, cs.best_perm);
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g;
  g.vertex_count = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (mask >> pair_bit(i, j, n) & 1) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace

std::uint32_t canonical_edge_mask(const Graph& g) {
  g.validate();
  if (!g.is_simple()) throw UnsupportedError("canonical form requires a simple graph");
  if (g.vertex_count > 8) throw UnsupportedError("canonical form limited to 8 vertices");
  return canonical_mask_of(g.vertex_count, adjacency_masks(g));
}

std::vector<Graph> enumerate_nonisomorphic(int vertex_count, GraphFilter filter) {
  if (vertex_count < 1) throw Error("vertex count must be positive");
  if (vertex_count > 8)
    throw UnsupportedError("isomorph-free enumeration limited to 8 vertices");
  int n = vertex_count;
  int npairs = n * (n - 1) / 2;
  // grow by single-edge augmentation, one canonical representative per class
  std::vector<std::uint32_t> all;
  std::unordered_set<std::uint32_t> level = {0u};
  all.push_back(0u);
  for (int m = 0; m < npairs; ++m) {
    std::unordered_set<std::uint32_t> next;
    for (std::uint32_t mask : level) {
      Graph g = graph_from_mask(n, mask);
      auto adj = adjacency_masks(g);
      for (int b = 0; b < npairs; ++b) {
        if (mask >> b & 1) continue;
        std::uint32_t ext = mask | (std::uint32_t(1) << b);
        Graph h = graph_from_mask(n, ext);
        std::uint32_t canon = canonical_mask_of(n, adjacency_masks(h));
        next.insert(canon);
      }
    }
    for (std::uint32_t mask : next) all.push_back(mask);
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Graph> out;
  for (std::uint32_t mask : all) {
    Graph g = graph_from_mask(n, mask);
    bool keep = filter == GraphFilter::kConnected ? g.is_connected() : is_biconnected(g);
    if (keep) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace slp
