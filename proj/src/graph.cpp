#include "slp/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "slp/fp.hpp"
#include "slp/linalg.hpp"

namespace slp {

void Graph::validate() const {
  if (vertex_count < 1) throw Error("graph needs at least one vertex");
  for (const auto& [u, v] : edges)
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
      throw Error("edge endpoint out of range");
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool Graph::is_connected() const {
  if (vertex_count <= 1) return true;
  UnionFind uf(vertex_count + 1);
  int parts = vertex_count;
  for (const auto& [u, v] : edges)
    if (uf.unite(u, v)) --parts;
  return parts == 1;
}

// ---- graph6 ----

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);
  unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126) throw ParseError("long-form graph6 (more than 62 vertices) not supported", 0);
  if (c0 < 63 || c0 > 126) throw ParseError("byte outside graph6 range", 0);
  int n = c0 - 63;
  int nbits = n * (n - 1) / 2;
  std::size_t need = 1 + (nbits + 5) / 6;
  if (text.size() < need) throw ParseError("truncated graph6 record", text.size());
  if (text.size() > need) throw ParseError("trailing garbage after graph6 record", need);
  Graph g;
  g.vertex_count = n;
  int t = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      std::size_t byte = 1 + t / 6;
      unsigned char c = static_cast<unsigned char>(text[byte]);
      if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", byte);
      int bit = (c - 63) >> (5 - t % 6) & 1;
      if (bit) g.edges.emplace_back(i, j);
      ++t;
    }
  // padding bits of the last byte must be zero
  for (; t < 6 * static_cast<int>(need - 1); ++t) {
    std::size_t byte = 1 + t / 6;
    unsigned char c = static_cast<unsigned char>(text[byte]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", byte);
    if ((c - 63) >> (5 - t % 6) & 1) throw ParseError("nonzero graph6 padding", byte);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  g.validate();
  if (!g.is_simple()) throw UnsupportedError("graph6 requires a simple graph");
  if (g.vertex_count > 62) throw UnsupportedError("graph6 short form limited to 62 vertices");
  int n = g.vertex_count;
  std::vector<bool> adj(static_cast<std::size_t>(n) * n, false);
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u - 1) * n + (v - 1)] = true;
    adj[static_cast<std::size_t>(v - 1) * n + (u - 1)] = true;
  }
  int nbits = n * (n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, '?');
  out[0] = static_cast<char>(63 + n);
  int t = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      if (adj[static_cast<std::size_t>(i - 1) * n + (j - 1)])
        out[1 + t / 6] = static_cast<char>(out[1 + t / 6] + (1 << (5 - t % 6)));
      ++t;
    }
  return out;
}

// ---- edge-bit strings ----

Graph parse_edge_bits(const std::string& text, int vertex_count) {
  if (vertex_count < 2) throw Error("edge-bit string needs at least two vertices");
  int want = vertex_count * (vertex_count - 1) / 2;
  Graph g;
  g.vertex_count = vertex_count;
  int i = 1, j = 2, seen = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw ParseError("edge-bit strings use only '0', '1' and spaces", pos);
    if (seen == want) throw ParseError("edge-bit string too long", pos);
    if (c == '1') g.edges.emplace_back(i, j);
    ++seen;
    if (++j > vertex_count) { ++i; j = i + 1; }
  }
  if (seen != want)
    throw ParseError("edge-bit string has " + std::to_string(seen) + " digits, expected " +
                         std::to_string(want), text.size());
  return g;
}

std::string emit_edge_bits(const Graph& g) {
  g.validate();
  if (!g.is_simple()) throw UnsupportedError("edge-bit strings require a simple graph");
  int n = g.vertex_count;
  std::set<std::pair<int, int>> present;
  for (auto [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
    present.insert({u, v});
  }
  std::string out;
  int emitted = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (emitted > 0 && emitted % 10 == 0) out.push_back(' ');
      out.push_back(present.count({i, j}) ? '1' : '0');
      ++emitted;
    }
  return out;
}

std::vector<Graph> parse_graph_file(const std::string& text, int edge_bits_vertices) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (edge_bits_vertices > 0)
      out.push_back(parse_edge_bits(line, edge_bits_vertices));
    else {
      std::size_t last = line.find_last_not_of(" \t");
      out.push_back(parse_graph6(line.substr(first, last - first + 1)));
    }
  }
  return out;
}

// ---- biconnected components ----

namespace {

struct BicompState {
  const Graph& g;
  std::vector<std::vector<std::pair<int, int>>> inc;  // vertex -> (neighbor, edge idx)
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> components;  // original edge numbers
  int timer = 1;

  explicit BicompState(const Graph& graph) : g(graph), inc(graph.vertex_count + 1),
      disc(graph.vertex_count + 1, 0), low(graph.vertex_count + 1, 0) {
    for (int e = 1; e <= g.edge_count(); ++e) {
      auto [u, v] = g.edges[e - 1];
      if (u == v) {
        components.push_back({e});  // a self-loop is its own piece
        continue;
      }
      inc[u].emplace_back(v, e);
      inc[v].emplace_back(u, e);
    }
  }

  void dfs(int u, int via_edge) {
    disc[u] = low[u] = timer++;
    for (auto [v, e] : inc[u]) {
      if (e == via_edge) continue;
      if (!disc[v]) {
        edge_stack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<int> comp;
          int top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(top);
          } while (top != e);
          components.push_back(std::move(comp));
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

GraphPiece subgraph_from_edges(const Graph& g, std::vector<int> edge_numbers) {
  std::sort(edge_numbers.begin(), edge_numbers.end());
  std::set<int> verts;
  for (int e : edge_numbers) {
    verts.insert(g.edges[e - 1].first);
    verts.insert(g.edges[e - 1].second);
  }
  std::map<int, int> relabel;
  int next = 1;
  for (int v : verts) relabel[v] = next++;
  GraphPiece piece;
  piece.graph.vertex_count = static_cast<int>(verts.size());
  for (int e : edge_numbers) {
    auto [u, v] = g.edges[e - 1];
    piece.graph.edges.emplace_back(relabel[u], relabel[v]);
    piece.edge_map.push_back(e);
  }
  return piece;
}

}  // namespace

std::vector<GraphPiece> biconnected_components(const Graph& g) {
  g.validate();
  if (!g.is_connected()) throw Error("biconnected decomposition needs a connected graph");
  BicompState st(g);
  st.dfs(1, 0);
  std::sort(st.components.begin(), st.components.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
            });
  std::vector<GraphPiece> out;
  for (auto& comp : st.components) out.push_back(subgraph_from_edges(g, std::move(comp)));
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.vertex_count < 3) return false;
  if (!g.is_connected()) return false;
  auto pieces = biconnected_components(g);
  return pieces.size() == 1 && pieces[0].graph.vertex_count == g.vertex_count;
}

// ---- contraction ----

bool is_acyclic(const Graph& g, EdgeSet I) {
  UnionFind uf(g.vertex_count + 1);
  for (int e : I.indices()) {
    if (e > g.edge_count()) throw Error("edge index out of range");
    auto [u, v] = g.edges[e - 1];
    if (!uf.unite(u, v)) return false;  // includes self-loops
  }
  return true;
}

GraphPiece contract_edges(const Graph& g, EdgeSet I) {
  g.validate();
  UnionFind uf(g.vertex_count + 1);
  for (int e : I.indices()) {
    if (e > g.edge_count()) throw Error("edge index out of range");
    auto [u, v] = g.edges[e - 1];
    if (!uf.unite(u, v)) throw Error("contraction set contains a cycle");
  }
  std::map<int, int> relabel;
  int next = 1;
  for (int v = 1; v <= g.vertex_count; ++v) {
    int r = uf.find(v);
    if (!relabel.count(r)) relabel[r] = next++;
  }
  GraphPiece piece;
  piece.graph.vertex_count = next - 1;
  for (int e = 1; e <= g.edge_count(); ++e) {
    if (I.contains(e)) continue;
    auto [u, v] = g.edges[e - 1];
    piece.graph.edges.emplace_back(relabel[uf.find(u)], relabel[uf.find(v)]);
    piece.edge_map.push_back(e);
  }
  return piece;
}

// ---- spanning-tree machinery ----

mpz_class weighted_tree_value(const Graph& g, std::span<const mpz_class> weights) {
  g.validate();
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw Error("weight vector length mismatch");
  int n = g.vertex_count;
  if (n == 1) return 1;
  IntMatrix lap(n - 1, n - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    const mpz_class& w = weights[e];
    if (u < n) lap(u - 1, u - 1) += w;
    if (v < n) lap(v - 1, v - 1) += w;
    if (u < n && v < n) {
      lap(u - 1, v - 1) -= w;
      lap(v - 1, u - 1) -= w;
    }
  }
  return determinant(lap);
}

std::uint64_t weighted_tree_value_mod(const Graph& g, std::span<const std::uint64_t> weights,
                                      std::uint64_t p) {
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw Error("weight vector length mismatch");
  int n = g.vertex_count;
  if (n == 1) return 1 % p;
  int m = n - 1;
  std::vector<std::uint64_t> lap(static_cast<std::size_t>(m) * m, 0);
  auto at = [&](int i, int j) -> std::uint64_t& { return lap[static_cast<std::size_t>(i) * m + j]; };
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    std::uint64_t w = weights[e] % p;
    if (u < n) at(u - 1, u - 1) = add_mod(at(u - 1, u - 1), w, p);
    if (v < n) at(v - 1, v - 1) = add_mod(at(v - 1, v - 1), w, p);
    if (u < n && v < n) {
      at(u - 1, v - 1) = sub_mod(at(u - 1, v - 1), w, p);
      at(v - 1, u - 1) = sub_mod(at(v - 1, u - 1), w, p);
    }
  }
  // determinant mod p by elimination
  std::uint64_t det = 1;
  for (int c = 0; c < m; ++c) {
    int sel = -1;
    for (int i = c; i < m; ++i)
      if (at(i, c)) { sel = i; break; }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = c; j < m; ++j) std::swap(at(sel, j), at(c, j));
      det = neg_mod(det, p);
    }
    det = mul_mod(det, at(c, c), p);
    std::uint64_t inv = inv_mod(at(c, c), p);
    for (int i = c + 1; i < m; ++i) {
      std::uint64_t f = mul_mod(at(i, c), inv, p);
      if (!f) continue;
      for (int j = c; j < m; ++j)
        if (at(c, j)) at(i, j) = sub_mod(at(i, j), mul_mod(f, at(c, j), p), p);
    }
  }
  return det;
}

namespace {

struct TreeEnum {
  const Graph& g;
  const std::function<void(EdgeSet)>& fn;
  std::vector<int> parent;  // no path compression: branches roll back
  std::vector<int> undo;    // vertices whose parent was overwritten

  TreeEnum(const Graph& graph, const std::function<void(EdgeSet)>& f)
      : g(graph), fn(f), parent(graph.vertex_count + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  bool unite_tracked(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    undo.push_back(b);
    parent[b] = a;
    return true;
  }

  void rollback(std::size_t mark) {
    while (undo.size() > mark) {
      parent[undo.back()] = undo.back();
      undo.pop_back();
    }
  }

  void rec(int next_edge, int picked, EdgeSet current) {
    int need = g.vertex_count - 1 - picked;
    if (need == 0) {
      fn(current);
      return;
    }
    if (g.edge_count() - next_edge + 1 < need) return;
    for (int e = next_edge; e <= g.edge_count() - need + 1; ++e) {
      auto [u, v] = g.edges[e - 1];
      if (u == v) continue;
      std::size_t mark = undo.size();
      if (!unite_tracked(u, v)) continue;
      EdgeSet with = current;
      with.add(e);
      rec(e + 1, picked + 1, with);
      rollback(mark);
    }
  }
};

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<void(EdgeSet)>& fn) {
  g.validate();
  if (g.edge_count() > 64) throw UnsupportedError("spanning-tree enumeration limited to 64 edges");
  if (g.vertex_count == 1) {
    fn(EdgeSet{});
    return;
  }
  TreeEnum te(g, fn);
  // union-find is rolled back between branches, so uf stays in sync
  te.rec(1, 0, EdgeSet{});
}

std::vector<EdgeSet> spanning_trees(const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](EdgeSet t) { out.push_back(t); });
  return out;
}

}  // namespace slp
