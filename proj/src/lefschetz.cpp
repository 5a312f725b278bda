#include "slp/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "slp/fp.hpp"
#include "slp/rng.hpp"

namespace slp {

std::size_t HessianSymbolic::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& e : entries)
    if (!e.is_zero()) ++c;
  return c;
}

HessianSymbolic hessian_symbolic(const SparsePoly& f, const GradedBasis& basis) {
  HessianSymbolic h;
  h.basis = basis;
  h.nvars = f.variable_count();
  int m = h.dim();
  h.entries.assign(static_cast<std::size_t>(m) * m, SparsePoly(h.nvars));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      SparsePoly e = diff(basis.elements[i].merged(basis.elements[j]), f);
      h.entries[static_cast<std::size_t>(i) * m + j] = e;
      h.entries[static_cast<std::size_t>(j) * m + i] = std::move(e);
    }
  return h;
}

namespace {

// (alpha_i alpha_j) f_G as a spanning-tree sum through the contracted
// graph; zero when the supports meet or their union has a cycle.
SparsePoly graph_hessian_entry(const Graph& g, const DiffMonomial& a, const DiffMonomial& b) {
  int n = g.edge_count();
  SparsePoly out(n);
  EdgeSet ea, eb;
  for (int e : a.indices()) ea.add(e);
  for (int e : b.indices()) eb.add(e);
  if ((ea & eb).bits) return out;  // shared index: repeated operator kills f_G
  EdgeSet u = ea | eb;
  if (!is_acyclic(g, u)) return out;
  GraphPiece piece = contract_edges(g, u);
  for_each_spanning_tree(piece.graph, [&](EdgeSet t) {
    EdgeSet orig;
    for (int e : t.indices()) orig.add(piece.edge_map[e - 1]);
    out.add_term(Monomial::squarefree(orig), 1);
  });
  return out;
}

}  // namespace

HessianSymbolic hessian_symbolic(const Graph& g, const GradedBasis& basis) {
  HessianSymbolic h;
  h.basis = basis;
  h.nvars = g.edge_count();
  int m = h.dim();
  h.entries.assign(static_cast<std::size_t>(m) * m, SparsePoly(h.nvars));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      SparsePoly e = graph_hessian_entry(g, basis.elements[i], basis.elements[j]);
      h.entries[static_cast<std::size_t>(i) * m + j] = e;
      h.entries[static_cast<std::size_t>(j) * m + i] = std::move(e);
    }
  return h;
}

IntMatrix hessian_eval(const HessianSymbolic& h, std::span<const mpz_class> point) {
  int m = h.dim();
  IntMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const SparsePoly& e = h.at(i, j);
      if (e.is_zero()) continue;
      mpz_class v = evaluate(e, point);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

ModMatrix hessian_eval_mod(const HessianSymbolic& h, std::span<const std::uint64_t> point,
                           std::uint64_t p) {
  int m = h.dim();
  ModMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const SparsePoly& e = h.at(i, j);
      if (e.is_zero()) continue;
      std::uint64_t v = evaluate_mod(e, point, p);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

IntMatrix hessian_eval_fast(const Graph& g, const GradedBasis& basis,
                            std::span<const mpz_class> point) {
  if (static_cast<int>(point.size()) != g.edge_count()) throw Error("point length mismatch");
  int m = static_cast<int>(basis.elements.size());
  IntMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      EdgeSet ea, eb;
      for (int e : basis.elements[i].indices()) ea.add(e);
      for (int e : basis.elements[j].indices()) eb.add(e);
      if ((ea & eb).bits) continue;
      EdgeSet u = ea | eb;
      if (!is_acyclic(g, u)) continue;
      GraphPiece piece = contract_edges(g, u);
      std::vector<mpz_class> w;
      w.reserve(piece.edge_map.size());
      for (int e : piece.edge_map) w.push_back(point[e - 1]);
      mpz_class v = weighted_tree_value(piece.graph, w);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

HessianInstance HessianInstance::for_graph(const Graph& g, int k) {
  g.validate();
  int d = g.vertex_count - 1;
  if (2 * k > d) throw Error("2k exceeds the socle degree");
  HessianInstance inst;
  inst.f_ = basis_generating_poly(g);
  inst.graph_ = g;
  inst.hessian_ = hessian_symbolic(g, select_basis(inst.f_, k));
  return inst;
}

HessianInstance HessianInstance::for_poly(const SparsePoly& f, int k) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("check needs a nonzero homogeneous polynomial");
  if (2 * k > d) throw Error("2k exceeds the socle degree");
  HessianInstance inst;
  inst.f_ = f;
  inst.hessian_ = hessian_symbolic(f, select_basis(f, k));
  return inst;
}

// ---- point checks ----

SlpPointCheck slp_check_at_point(const HessianInstance& inst, std::span<const mpz_class> point) {
  IntMatrix m = inst.eval(point);
  // nonsingular mod one prime already proves nonsingularity over Q
  ModMatrix mm(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) mm(i, j) = mpz_fdiv_ui(m(i, j).get_mpz_t(), kPrimes[0]);
  if (rank_mod_p(std::move(mm), kPrimes[0]) == m.rows()) return {true, 0};
  int nullity = certified_nullity(m);
  return {nullity == 0, nullity};
}

SlpPointCheck slp_check_at_point(const Graph& g, int k, std::span<const mpz_class> point) {
  return slp_check_at_point(HessianInstance::for_graph(g, k), point);
}

SlpPointCheck slp_check_at_point(const SparsePoly& f, int k, std::span<const mpz_class> point) {
  return slp_check_at_point(HessianInstance::for_poly(f, k), point);
}

// ---- modular apolarity for corpus screening ----

namespace {

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct TreePassResult {
  int rank = 0;
  std::vector<int> pivot_rows;
};

// rank mod p of the degree-j tree-incidence matrix (rows: j-subsets of
// edges, columns: (d-j)-subsets, entry 1 iff the union is a spanning
// tree), with columns taken verbatim when few and PRF-compressed when the
// column space is large.  Compression only ever underestimates the rank,
// and a saturated pass is widened and repeated.
TreePassResult tree_incidence_rank(const std::vector<EdgeSet>& trees, int nvars, int d, int j,
                                   const std::vector<DiffMonomial>& ops, std::uint64_t p,
                                   std::uint64_t salt, bool want_pivots) {
  long long cols_full = binomial_ll(nvars, d - j);
  int rows = static_cast<int>(ops.size());
  std::unordered_map<std::uint64_t, int> row_of;
  row_of.reserve(ops.size() * 2);
  for (int r = 0; r < rows; ++r) {
    EdgeSet s;
    for (int e : ops[r].indices()) s.add(e);
    row_of.emplace(s.bits, r);
  }
  // j-subsets of {0..d-1}: positions into each tree's edge list
  std::vector<std::vector<int>> picks;
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == j) {
        picks.push_back(cur);
        return;
      }
      for (int t = start; t <= d - (j - static_cast<int>(cur.size())); ++t) {
        cur.push_back(t);
        rec(t + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  bool direct = cols_full <= 640;
  int c = direct ? static_cast<int>(cols_full) : 600;
  while (true) {
    std::unordered_map<std::uint64_t, int> col_of;
    std::vector<std::vector<std::uint64_t>> acc(rows);
    for (const EdgeSet& tree : trees) {
      auto idx = tree.indices();
      for (const auto& pick : picks) {
        EdgeSet beta;
        for (int t : pick) beta.add(idx[t]);
        EdgeSet gamma{tree.bits & ~beta.bits};
        int r = row_of.at(beta.bits);
        auto& row = acc[r];
        if (row.empty()) row.assign(c, 0);
        if (direct) {
          auto [it, fresh] = col_of.try_emplace(gamma.bits, static_cast<int>(col_of.size()));
          row[it->second] = add_mod(row[it->second], 1, p);
        } else {
          std::uint64_t base = mix64(gamma.bits ^ salt);
          for (int t = 0; t < c; ++t) {
            std::uint64_t v =
                mix64(base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t)) % p;
            row[t] = add_mod(row[t], v, p);
          }
        }
      }
    }
    ModEchelon ech(c, p);
    TreePassResult res;
    for (int r = 0; r < rows; ++r) {
      if (acc[r].empty()) continue;  // operator contained in no tree
      if (ech.absorb(std::move(acc[r])) && want_pivots) res.pivot_rows.push_back(r);
    }
    res.rank = ech.rank();
    if (!direct && res.rank == c && c < cols_full) {
      c = static_cast<int>(std::min<long long>(cols_full, 2LL * c));
      continue;
    }
    return res;
  }
}

}  // namespace

ModularApolarity modular_apolarity(const Graph& g, int k, bool full_hilbert) {
  g.validate();
  if (!g.is_connected()) throw Error("modular apolarity needs a connected graph");
  int d = g.vertex_count - 1, n = g.edge_count();
  if (2 * k > d) throw Error("2k exceeds the socle degree");
  std::vector<EdgeSet> trees = spanning_trees(g);
  ModularApolarity out;
  out.hilbert.assign(d + 1, 0);
  out.hilbert[0] = 1;
  out.hilbert[d] = 1;
  if (k == 0) {
    out.pivot_basis.degree = 0;
    out.pivot_basis.elements.push_back(DiffMonomial(std::vector<int>{}));
  }
  std::vector<int> degrees;
  if (full_hilbert)
    for (int j = 1; j <= d / 2; ++j) degrees.push_back(j);
  else if (k >= 1)
    degrees.push_back(k);
  for (int j : degrees) {
    std::vector<DiffMonomial> ops = operator_monomials(n, j, true);
    TreePassResult r1, r2;
    bool agreed = false;
    for (int pi = 0; pi + 1 < kPrimeCount && !agreed; pi += 2) {
      r1 = tree_incidence_rank(trees, n, d, j, ops, kPrimes[pi],
                               hash_combine(0x5a17, static_cast<std::uint64_t>(pi)), j == k);
      r2 = tree_incidence_rank(trees, n, d, j, ops, kPrimes[pi + 1],
                               hash_combine(0xc0de, static_cast<std::uint64_t>(pi)), false);
      agreed = r1.rank == r2.rank;
    }
    if (!agreed) throw Error("modular rank disagreement persisted across primes");
    out.hilbert[j] = r1.rank;
    out.hilbert[d - j] = r1.rank;
    if (j == k) {
      out.pivot_basis.degree = k;
      for (int r : r1.pivot_rows) out.pivot_basis.elements.push_back(ops[r]);
    }
  }
  return out;
}

// ---- screening ----

std::uint64_t graph_screen_key(std::uint64_t seed, const Graph& g) {
  std::string content = "v" + std::to_string(g.vertex_count) + ":";
  for (auto [u, v] : g.edges)
    content += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  return hash_string(seed, content);
}

namespace {

int prob_bound_exp10(long long deg, std::uint64_t s_max, int reps) {
  if (deg <= 0) return -100000;  // a nonzero constant determinant never vanishes
  mpz_class num(static_cast<long>(deg));
  mpz_class den(static_cast<unsigned long>(s_max));
  if (num >= den) return 0;
  mpz_class npow, dpow;
  mpz_pow_ui(npow.get_mpz_t(), num.get_mpz_t(), reps);
  mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), reps);
  auto bounded_by = [&](long e) {  // npow/dpow <= 10^e ?
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? npow <= dpow * pow10 : npow * pow10 <= dpow;
  };
  long e = static_cast<long>(mpz_sizeinbase(npow.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(dpow.get_mpz_t(), 10)) - 1;
  while (!bounded_by(e)) ++e;
  while (bounded_by(e - 1)) --e;
  return static_cast<int>(e);
}

struct ScreenEngine {
  int nvars = 0;
  int dim = 0;
  int deg_entries = 0;  // degree of each Hessian entry
  std::function<ModMatrix(std::span<const std::uint64_t>, std::uint64_t)> eval_mod;
  std::function<IntMatrix(std::span<const mpz_class>)> eval_exact;
  std::function<bool(std::span<const mpz_class>, std::span<const mpz_class>)> orthogonal_to_all;
};

void run_screen(const ScreenEngine& eng, int hk, const ScreenOptions& opt, std::uint64_t key,
                ScreenReport& rep) {
  CounterRng rng(key);
  int m = eng.dim;
  std::vector<mpz_class> first_point;
  rep.nullities.clear();
  bool all_deficient = true;
  for (int r = 0; r < opt.reps; ++r) {
    std::vector<std::uint64_t> pt(eng.nvars);
    for (auto& x : pt) x = rng.uniform_1_to(opt.s_max);
    if (r == 0)
      for (auto x : pt) first_point.emplace_back(static_cast<unsigned long>(x));
    int r1 = rank_mod_p(eng.eval_mod(pt, kPrimes[0]), kPrimes[0]);
    int nullity;
    if (r1 == m) {
      nullity = 0;  // nonsingular mod p proves nonsingularity over Q
    } else {
      int r2 = rank_mod_p(eng.eval_mod(pt, kPrimes[1]), kPrimes[1]);
      nullity = m - std::max(r1, r2);
    }
    rep.nullities.push_back(nullity);
    if (nullity == 0) {
      all_deficient = false;
      if (opt.early_exit) break;
    }
  }
  rep.candidate = all_deficient && !rep.nullities.empty();
  rep.nullity_min =
      rep.nullities.empty() ? 0 : *std::min_element(rep.nullities.begin(), rep.nullities.end());
  rep.prob_bound_exp10 =
      prob_bound_exp10(static_cast<long long>(hk) * eng.deg_entries, opt.s_max, opt.reps);
  rep.confirmed = false;
  if (rep.candidate) {
    // exact confirmation at the first sampled point: a verified kernel
    // vector over a Q-independent operator set, orthogonal to every
    // degree-k generator, is a proof of failure at that element
    IntMatrix exact = eng.eval_exact(first_point);
    CertifiedKernel ck = certified_kernel(exact);
    if (ck.nullity == 0) {
      rep.candidate = false;
      rep.nullities[0] = 0;
      rep.nullity_min = 0;
    } else {
      rep.confirmed = eng.orthogonal_to_all(ck.basis[0], first_point);
    }
  }
}

}  // namespace

ScreenReport sz_screen(const Graph& g, int k, const ScreenOptions& opt,
                       const std::string& graph_id) {
  g.validate();
  int d = g.vertex_count - 1;
  if (2 * k > d) throw Error("2k exceeds the socle degree");
  if (!g.is_connected()) throw Error("screening needs a connected graph");
  ScreenReport rep;
  rep.graph_id = graph_id;
  rep.n_edges = g.edge_count();
  rep.k = k;
  rep.reps = opt.reps;
  rep.s_max = opt.s_max;
  rep.seed = opt.seed;
  if (g.is_simple() && g.vertex_count <= 62) rep.edge_bits = emit_edge_bits(g);

  ModularApolarity ma = modular_apolarity(g, k, opt.with_hilbert);
  rep.hilbert = ma.hilbert;
  HessianSymbolic hess = hessian_symbolic(g, ma.pivot_basis);

  ScreenEngine eng;
  eng.nvars = g.edge_count();
  eng.dim = static_cast<int>(ma.pivot_basis.elements.size());
  eng.deg_entries = d - 2 * k;
  eng.eval_mod = [&](std::span<const std::uint64_t> pt, std::uint64_t p) {
    return hessian_eval_mod(hess, pt, p);
  };
  eng.eval_exact = [&](std::span<const mpz_class> pt) { return hessian_eval(hess, pt); };
  eng.orthogonal_to_all = [&](std::span<const mpz_class> w, std::span<const mpz_class> pt) {
    std::vector<DiffMonomial> all = operator_monomials(g.edge_count(), k, true);
    for (const auto& beta : all) {
      mpz_class acc = 0;
      for (int i = 0; i < eng.dim; ++i) {
        if (w[i] == 0) continue;
        SparsePoly e = graph_hessian_entry(g, ma.pivot_basis.elements[i], beta);
        if (e.is_zero()) continue;
        acc += w[i] * evaluate(e, pt);
      }
      if (acc != 0) return false;
    }
    return true;
  };
  run_screen(eng, ma.hilbert[k], opt, graph_screen_key(opt.seed, g), rep);
  return rep;
}

ScreenReport sz_screen(const SparsePoly& f, int k, const ScreenOptions& opt,
                       const std::string& id) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("screening needs a nonzero homogeneous polynomial");
  if (2 * k > d) throw Error("2k exceeds the socle degree");
  ScreenReport rep;
  rep.graph_id = id;
  rep.n_edges = f.variable_count();
  rep.k = k;
  rep.reps = opt.reps;
  rep.s_max = opt.s_max;
  rep.seed = opt.seed;
  HilbertFunction h = hilbert_function(f);
  rep.hilbert = h;
  GradedBasis basis = select_basis(f, k);
  HessianSymbolic hess = hessian_symbolic(f, basis);
  bool sf = true;
  for (const auto& [m, c] : f.terms())
    if (!m.is_squarefree()) { sf = false; break; }

  ScreenEngine eng;
  eng.nvars = f.variable_count();
  eng.dim = hess.dim();
  eng.deg_entries = d - 2 * k;
  eng.eval_mod = [&](std::span<const std::uint64_t> pt, std::uint64_t p) {
    return hessian_eval_mod(hess, pt, p);
  };
  eng.eval_exact = [&](std::span<const mpz_class> pt) { return hessian_eval(hess, pt); };
  eng.orthogonal_to_all = [&](std::span<const mpz_class> w, std::span<const mpz_class> pt) {
    std::vector<DiffMonomial> all = operator_monomials(f.variable_count(), k, sf);
    for (const auto& beta : all) {
      mpz_class acc = 0;
      for (int i = 0; i < eng.dim; ++i) {
        if (w[i] == 0) continue;
        SparsePoly e = diff(basis.elements[i].merged(beta), f);
        if (e.is_zero()) continue;
        acc += w[i] * evaluate(e, pt);
      }
      if (acc != 0) return false;
    }
    return true;
  };
  run_screen(eng, h[k], opt, hash_string(opt.seed, "poly:" + to_text(f)), rep);
  return rep;
}

// ---- whole-property check ----

namespace {

FullCheckResult full_check_impl(
    const std::function<HessianInstance(int)>& make_inst, int d, int nvars, std::uint64_t key,
    std::uint64_t seed, const ScreenOptions& escalation,
    const std::function<ScreenReport(int, const ScreenOptions&)>& screen) {
  CounterRng rng(key);
  std::vector<mpz_class> point(nvars);
  for (auto& x : point) x = static_cast<unsigned long>(rng.uniform_1_to(1000000000ULL));
  FullCheckResult res;
  for (int k = 0; 2 * k <= d; ++k) {
    HessianInstance inst = make_inst(k);
    SlpPointCheck chk = slp_check_at_point(inst, point);
    if (!chk.holds) {
      res.failing_k = k;
      ScreenOptions opt = escalation;
      opt.seed = seed;
      res.screen = screen(k, opt);
      return res;
    }
  }
  res.has_slp = true;
  res.witness = std::move(point);
  return res;
}

}  // namespace

FullCheckResult slp_full_check(const Graph& g, std::uint64_t seed,
                               const ScreenOptions& escalation) {
  g.validate();
  int d = g.vertex_count - 1;
  return full_check_impl([&](int k) { return HessianInstance::for_graph(g, k); }, d,
                         g.edge_count(), hash_combine(graph_screen_key(seed, g), 0x9d1ce),
                         seed, escalation,
                         [&](int k, const ScreenOptions& opt) { return sz_screen(g, k, opt); });
}

FullCheckResult slp_full_check(const SparsePoly& f, std::uint64_t seed,
                               const ScreenOptions& escalation) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("full check needs a nonzero homogeneous polynomial");
  return full_check_impl([&](int k) { return HessianInstance::for_poly(f, k); }, d,
                         f.variable_count(),
                         hash_combine(hash_string(seed, "poly:" + to_text(f)), 0x9d1ce), seed,
                         escalation,
                         [&](int k, const ScreenOptions& opt) { return sz_screen(f, k, opt); });
}

}  // namespace slp
