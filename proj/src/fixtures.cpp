#include "slp/fixtures.hpp"

#include <algorithm>

namespace slp {

namespace {

Graph make_m13() {
  return Graph{8, {{1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5}, {2, 6}, {2, 7},
                   {2, 8}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {5, 8}}};
}

Graph make_p17() {
  return Graph{8, {{1, 5}, {1, 6}, {1, 7}, {2, 5}, {2, 6}, {2, 8}, {3, 5}, {3, 7}, {3, 8},
                   {4, 6}, {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}}};
}

Graph make_s11() {
  return Graph{8, {{1, 6}, {1, 7}, {2, 6}, {2, 7}, {3, 6}, {3, 8}, {4, 7},
                   {4, 8}, {5, 7}, {5, 8}, {6, 8}}};
}

SparsePoly make_q54() { return parse_poly("x1^3 x2 x3 + x1 x2^3 x4 + x3^3 x4^2", 4); }

// ---- the m13 degree-3 kernel vector ----

struct M13Table {
  std::vector<std::vector<int>> tuples;
  std::vector<SparsePoly> F;
};

M13Table build_m13_table() {
  const int N = 13;
  auto x = [&](int i) { return SparsePoly::variable(N, i); };
  auto c = [&](long v) { return SparsePoly::constant(N, v); };

  // shared factors of the components
  SparsePoly L26 = x(2) + x(6);
  SparsePoly L37 = x(3) + x(7);
  SparsePoly L910 = x(9) + x(10);
  SparsePoly L1112 = x(11) + x(12);
  SparsePoly L1513 = x(1) + x(5) + x(13);
  SparsePoly Q1 = x(2) * x(9) + x(6) * x(9) + x(2) * x(10) + x(6) * x(10) + x(9) * x(10);
  SparsePoly Q2 = x(2) * x(9) + x(6) * x(9) - x(2) * x(10) - x(6) * x(10) + x(9) * x(10);
  SparsePoly Q3 = x(2) * x(9) + x(6) * x(9) - x(2) * x(10) - x(6) * x(10) - x(9) * x(10);
  SparsePoly Q4 = x(3) * x(11) + x(7) * x(11) + x(3) * x(12) + x(7) * x(12) + x(11) * x(12);
  SparsePoly Q5 = x(3) * x(11) + x(7) * x(11) - x(3) * x(12) - x(7) * x(12) + x(11) * x(12);
  SparsePoly Q6 = x(3) * x(11) + x(7) * x(11) - x(3) * x(12) - x(7) * x(12) - x(11) * x(12);
  SparsePoly C1 = x(2) * x(9) * x(9) + x(6) * x(9) * x(9) + x(9) * x(9) * x(10) +
                  x(2) * x(10) * x(10) + x(6) * x(10) * x(10) + x(9) * x(10) * x(10);
  SparsePoly C2 = x(2) * x(9) * x(9) + x(6) * x(9) * x(9) + x(9) * x(9) * x(10) -
                  x(2) * x(10) * x(10) - x(6) * x(10) * x(10) + x(9) * x(10) * x(10);
  SparsePoly C3 = x(2) * x(9) * x(9) + x(6) * x(9) * x(9) - x(9) * x(9) * x(10) -
                  x(2) * x(10) * x(10) - x(6) * x(10) * x(10) - x(9) * x(10) * x(10);
  SparsePoly C4 = x(3) * x(11) * x(11) + x(7) * x(11) * x(11) + x(11) * x(11) * x(12) +
                  x(3) * x(12) * x(12) + x(7) * x(12) * x(12) + x(11) * x(12) * x(12);
  SparsePoly C5 = x(3) * x(11) * x(11) + x(7) * x(11) * x(11) + x(11) * x(11) * x(12) -
                  x(3) * x(12) * x(12) - x(7) * x(12) * x(12) + x(11) * x(12) * x(12);
  SparsePoly C6 = x(3) * x(11) * x(11) + x(7) * x(11) * x(11) - x(11) * x(11) * x(12) -
                  x(3) * x(12) * x(12) - x(7) * x(12) * x(12) - x(11) * x(12) * x(12);

  M13Table t;
  t.tuples = {
      {1, 2, 3},   {1, 2, 4},   {1, 2, 5},   {1, 2, 7},   {1, 2, 8},   {1, 2, 9},
      {1, 2, 10},  {1, 2, 11},  {1, 2, 12},  {1, 3, 4},   {1, 3, 5},   {1, 3, 6},
      {1, 3, 8},   {1, 3, 9},   {1, 3, 10},  {1, 3, 11},  {1, 3, 12},  {1, 4, 5},
      {1, 4, 6},   {1, 4, 7},   {1, 4, 9},   {1, 4, 11},  {1, 5, 9},   {1, 5, 10},
      {1, 5, 11},  {1, 5, 12},  {1, 6, 7},   {1, 6, 8},   {1, 6, 9},   {1, 6, 10},
      {1, 6, 11},  {1, 6, 12},  {1, 7, 8},   {1, 7, 9},   {1, 7, 10},  {1, 7, 11},
      {1, 7, 12},  {1, 8, 9},   {1, 8, 11},  {1, 9, 10},  {1, 9, 11},  {1, 9, 12},
      {1, 10, 11}, {1, 10, 12}, {1, 11, 12}, {2, 3, 4},   {2, 3, 5},   {2, 3, 6},
      {2, 3, 8},   {2, 3, 9},   {2, 3, 10},  {2, 3, 11},  {2, 3, 12},  {2, 3, 13},
      {2, 4, 5},   {2, 4, 6},   {2, 4, 7},   {2, 4, 9},   {2, 4, 11},  {2, 5, 7},
      {2, 5, 8},   {2, 5, 9},   {2, 5, 10},  {2, 5, 11},  {2, 5, 12},  {2, 6, 9},
      {2, 6, 10},  {2, 6, 11},  {2, 6, 12},  {2, 7, 8},   {2, 7, 9},   {2, 7, 10},
      {2, 7, 11},  {2, 7, 12},  {2, 7, 13},  {2, 8, 9},   {2, 8, 11},  {2, 9, 11},
      {2, 9, 12},  {2, 9, 13},  {2, 10, 11}, {2, 10, 12}, {2, 11, 12}, {2, 11, 13},
      {2, 12, 13}, {3, 4, 5},   {3, 4, 6},   {3, 4, 7},   {3, 4, 9},   {3, 4, 11},
      {3, 5, 6},   {3, 5, 8},   {3, 5, 9},   {3, 5, 10},  {3, 5, 11},  {3, 5, 12},
      {3, 6, 8},   {3, 6, 9},   {3, 6, 10},  {3, 6, 11},  {3, 6, 12},  {3, 6, 13},
      {3, 7, 9},   {3, 7, 10},  {3, 7, 11},  {3, 7, 12},  {3, 8, 9},   {3, 8, 11},
      {3, 9, 10},  {3, 9, 11},  {3, 9, 12},  {3, 9, 13},  {3, 10, 11}, {3, 10, 13},
      {3, 11, 13}, {4, 5, 9},   {4, 5, 11},  {4, 6, 9},   {4, 6, 11},  {4, 7, 9},
      {4, 7, 11},  {4, 8, 9},   {4, 8, 11},  {4, 9, 11},  {5, 6, 9},   {5, 6, 11},
      {5, 6, 12},  {5, 7, 9},   {5, 7, 10},  {5, 7, 11},  {5, 8, 9},   {5, 8, 11},
      {5, 9, 10},  {5, 9, 11},  {5, 9, 12},  {5, 10, 11}, {5, 10, 12}, {5, 11, 12},
      {6, 7, 9},   {6, 7, 11},  {6, 8, 11},  {6, 9, 11},  {6, 9, 12},  {6, 10, 11},
      {6, 10, 12}, {6, 11, 12}, {6, 11, 13}, {6, 12, 13}, {7, 8, 9},   {7, 9, 10},
      {7, 9, 11},  {7, 9, 12},  {7, 9, 13},  {7, 10, 11}, {7, 10, 13}, {8, 9, 11},
      {9, 10, 11}, {9, 10, 12}, {9, 10, 13}, {9, 11, 12}, {9, 11, 13}, {9, 12, 13},
      {10, 11, 12}, {10, 11, 13}, {10, 12, 13}, {11, 12, 13}};

  t.F.assign(166, SparsePoly(N));
  auto set = [&](int row, SparsePoly p) { t.F[row - 1] = std::move(p); };
  set(1, L1513 * (Q1 * C4 - Q4 * C1));
  set(2, c(2) * x(12) * x(11) * L26 * L1513 * x(10) * x(10));
  set(4, L1513 * Q4 * C1);
  set(5, c(-2) * x(12) * x(11) * L26 * L1513 * x(10) * x(10));
  set(6, c(2) * x(12) * x(11) * L910 * L1513 * Q2);
  set(8, L1112 * L1513 * Q6 * Q1);
  set(9, c(-1) * L1513 * Q1 * C5);
  set(10, c(-2) * x(10) * x(9) * L37 * L1513 * x(12) * x(12));
  set(12, c(-1) * L1513 * Q1 * C4);
  set(13, c(2) * x(10) * x(9) * L37 * L1513 * x(12) * x(12));
  set(14, c(-1) * L1513 * Q4 * C3);
  set(15, L910 * L1513 * Q4 * Q2);
  set(16, c(-2) * L1112 * x(10) * x(9) * L1513 * Q5);
  set(21, c(-2) * x(12) * x(11) * x(10) * x(9) * L910 * L1513);
  set(22, c(2) * x(12) * x(11) * L1112 * x(10) * x(9) * L1513);
  set(29, c(-2) * x(12) * x(11) * L910 * L1513 * Q2);
  set(31, c(-1) * L1513 * Q1 * C6);
  set(32, L1112 * L1513 * Q5 * Q1);
  set(34, L910 * L1513 * Q4 * Q3);
  set(35, c(-1) * L1513 * Q4 * C2);
  set(36, c(2) * L1112 * x(10) * x(9) * L1513 * Q5);
  set(38, c(2) * x(12) * x(11) * x(10) * x(9) * L910 * L1513);
  set(39, c(-2) * x(12) * x(11) * L1112 * x(10) * x(9) * L1513);
  set(46, c(2) * x(13) * (L26 * x(10) * x(10) * Q4 - L37 * x(12) * x(12) * Q1));
  set(47, L1513 * (Q4 * C1 - Q1 * C4));
  set(49, c(2) * x(13) * (L37 * x(12) * x(12) * Q1 - L26 * x(10) * x(10) * Q4));
  set(50, c(2) * x(13) * L910 * Q4 * Q2);
  set(52, c(-2) * x(13) * L1112 * Q5 * Q1);
  set(55, c(-2) * x(12) * x(11) * L26 * L1513 * x(10) * x(10));
  set(56, c(2) * x(13) * x(12) * x(11) * C1);
  set(57, c(-2) * x(13) * L26 * x(10) * x(10) * Q4);
  set(59, c(2) * x(13) * x(12) * x(11) * L1112 * Q1);
  set(60, c(-1) * L1513 * Q4 * C1);
  set(61, c(2) * x(12) * x(11) * L26 * L1513 * x(10) * x(10));
  set(62, c(-2) * x(12) * x(11) * L910 * L1513 * Q2);
  set(64, c(-1) * L1513 * Q1 * C6);
  set(65, L1112 * L1513 * Q5 * Q1);
  set(66, c(2) * x(13) * x(12) * x(11) * L910 * Q2);
  set(67, c(-2) * x(13) * x(12) * x(11) * L910 * Q2);
  set(70, c(2) * x(13) * L26 * x(10) * x(10) * Q4);
  set(71, c(-2) * x(13) * L910 * Q4 * Q2);
  set(73, c(2) * x(13) * L1112 * Q5 * Q1);
  set(77, c(-2) * x(13) * x(12) * x(11) * L1112 * Q1);
  set(86, c(2) * x(10) * x(9) * L37 * L1513 * x(12) * x(12));
  set(87, c(2) * x(13) * L37 * x(12) * x(12) * Q1);
  set(88, c(-2) * x(13) * x(10) * x(9) * C4);
  set(89, c(-2) * x(13) * x(10) * x(9) * L910 * Q4);
  set(91, L1513 * Q1 * C4);
  set(92, c(-2) * x(10) * x(9) * L37 * L1513 * x(12) * x(12));
  set(93, L910 * L1513 * Q4 * Q3);
  set(94, c(-1) * L1513 * Q4 * C2);
  set(95, c(2) * L1112 * x(10) * x(9) * L1513 * Q5);
  set(97, c(-2) * x(13) * L37 * x(12) * x(12) * Q1);
  set(98, c(-2) * x(13) * L910 * Q4 * Q2);
  set(100, c(2) * x(13) * L1112 * Q5 * Q1);
  set(105, c(-2) * x(13) * L1112 * x(10) * x(9) * Q5);
  set(106, c(2) * x(13) * L1112 * x(10) * x(9) * Q5);
  set(107, c(2) * x(13) * x(10) * x(9) * L910 * Q4);
  set(116, c(2) * x(12) * x(11) * x(10) * x(9) * L910 * L1513);
  set(117, c(-2) * x(12) * x(11) * L1112 * x(10) * x(9) * L1513);
  set(119, c(-2) * x(13) * x(12) * x(11) * L1112 * Q1);
  set(120, c(2) * x(13) * x(10) * x(9) * L910 * Q4);
  set(122, c(-4) * x(13) * x(12) * x(11) * x(10) * x(9) * L910);
  set(123, c(4) * x(13) * x(12) * x(11) * L1112 * x(10) * x(9));
  set(125, c(2) * x(12) * x(11) * L910 * L1513 * Q2);
  set(126, L1112 * L1513 * Q6 * Q1);
  set(127, c(-1) * L1513 * Q1 * C5);
  set(128, c(-1) * L1513 * Q4 * C3);
  set(129, L910 * L1513 * Q4 * Q2);
  set(130, c(-2) * L1112 * x(10) * x(9) * L1513 * Q5);
  set(131, c(-2) * x(12) * x(11) * x(10) * x(9) * L910 * L1513);
  set(132, c(2) * x(12) * x(11) * L1112 * x(10) * x(9) * L1513);
  set(139, c(2) * x(13) * L910 * Q4 * Q2);
  set(140, c(-2) * x(13) * L1112 * Q5 * Q1);
  set(141, c(2) * x(13) * x(12) * x(11) * L1112 * Q1);
  set(149, c(-2) * x(13) * x(10) * x(9) * L910 * Q4);
  return t;
}

KernelCertificate make_m13_cert() {
  M13Table t = build_m13_table();
  KernelCertificate cert;
  cert.graph_id = "m13";
  cert.k = 3;
  cert.nvars = 13;
  for (const auto& tu : t.tuples) cert.basis.emplace_back(tu);
  cert.components = std::move(t.F);
  cert.degree_vector = {1, 1, 1, 0, 1, 1, 1, 0, 2, 2, 2, 2, 1};
  cert.i0 = 2;
  return cert;
}

KernelCertificate make_s11_cert() {
  KernelCertificate cert;
  cert.graph_id = "s11";
  cert.k = 2;
  cert.nvars = 11;
  // all index pairs in lexicographic order except the four the greedy
  // basis rejects
  std::vector<std::pair<int, int>> skip = {{2, 4}, {5, 11}, {6, 11}, {8, 10}};
  for (int i = 1; i <= 11; ++i)
    for (int j = i + 1; j <= 11; ++j) {
      if (std::find(skip.begin(), skip.end(), std::make_pair(i, j)) != skip.end()) continue;
      cert.basis.push_back(DiffMonomial({i, j}));
    }
  std::vector<std::pair<std::pair<int, int>, long>> nonzero = {
      {{1, 2}, 10},  {{1, 4}, -4},  {{1, 11}, -3}, {{2, 3}, -4},  {{2, 11}, -3},
      {{3, 4}, 10},  {{3, 11}, -3}, {{4, 11}, -3}, {{7, 8}, -10}, {{7, 10}, 4},
      {{7, 11}, 3},  {{8, 9}, 4},   {{8, 11}, 3},  {{9, 10}, -10}, {{9, 11}, 3},
      {{10, 11}, 3}};
  cert.components.assign(cert.basis.size(), SparsePoly(11));
  for (auto [pair, value] : nonzero) {
    DiffMonomial key({pair.first, pair.second});
    auto it = std::find(cert.basis.begin(), cert.basis.end(), key);
    cert.components[it - cert.basis.begin()] = SparsePoly::constant(11, value);
  }
  cert.degree_vector.assign(11, 0);
  cert.i0 = 1;
  cert.point.assign(11, mpz_class(1));
  return cert;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"m13", "p17", "s11", "q54"}; }

bool is_fixture_name(const std::string& name) {
  auto names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Graph fixture_graph(const std::string& name) {
  if (name == "m13") return make_m13();
  if (name == "p17") return make_p17();
  if (name == "s11") return make_s11();
  throw Error("unknown graph fixture: " + name);
}

SparsePoly fixture_poly(const std::string& name) {
  if (name == "q54") return make_q54();
  return basis_generating_poly(fixture_graph(name));
}

KernelCertificate fixture_certificate(const std::string& name) {
  if (name == "m13-k3") return make_m13_cert();
  if (name == "s11-k2-ones") return make_s11_cert();
  throw Error("unknown certificate fixture: " + name);
}

}  // namespace slp
