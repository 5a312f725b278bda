#include "slp/apolarity.hpp"

#include <algorithm>
#include <map>

#include "slp/fp.hpp"

namespace slp {

namespace {

void gen_subsets(int nvars, int k, int start, std::vector<int>& cur,
                 std::vector<DiffMonomial>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(cur);
    return;
  }
  for (int v = start; v <= nvars - (k - static_cast<int>(cur.size())) + 1; ++v) {
    cur.push_back(v);
    gen_subsets(nvars, k, v + 1, cur, out);
    cur.pop_back();
  }
}

void gen_multisets(int nvars, int k, int start, std::vector<int>& cur,
                   std::vector<DiffMonomial>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(cur);
    return;
  }
  for (int v = start; v <= nvars; ++v) {
    cur.push_back(v);
    gen_multisets(nvars, k, v, cur, out);
    cur.pop_back();
  }
}

// descending lex over a fixed variable count, bound at dictionary build
thread_local int g_dict_nvars = 0;
bool lex_desc(const Monomial& a, const Monomial& b) {
  return Monomial::compare(a, b, g_dict_nvars) > 0;
}

}  // namespace

std::vector<DiffMonomial> operator_monomials(int nvars, int k, bool squarefree_only) {
  if (k < 0) throw Error("operator degree must be non-negative");
  std::vector<DiffMonomial> out;
  std::vector<int> cur;
  if (k == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  if (squarefree_only) {
    if (k > nvars) return out;
    gen_subsets(nvars, k, 1, cur, out);
  } else {
    gen_multisets(nvars, k, 1, cur, out);
  }
  return out;
}

Catalecticant catalecticant_matrix(const SparsePoly& f, int k) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("catalecticant needs a nonzero homogeneous polynomial");
  if (k < 0 || k > d) throw Error("catalecticant degree out of range");
  bool sf = true;
  for (const auto& [m, c] : f.terms())
    if (!m.is_squarefree()) { sf = false; break; }
  Catalecticant cat;
  cat.row_ops = operator_monomials(f.variable_count(), k, sf);
  std::vector<SparsePoly> images;
  images.reserve(cat.row_ops.size());
  // sparse column dictionary: only monomials that actually appear
  g_dict_nvars = f.variable_count();
  std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> dict(lex_desc);
  for (const auto& op : cat.row_ops) {
    images.push_back(diff(op, f));
    for (const auto& [m, c] : images.back().terms()) dict.emplace(m, 0);
  }
  int next = 0;
  for (auto& [m, idx] : dict) {
    idx = next++;
    cat.col_monos.push_back(m);
  }
  cat.matrix = IntMatrix(static_cast<int>(cat.row_ops.size()), next);
  for (int r = 0; r < static_cast<int>(images.size()); ++r)
    for (const auto& [m, c] : images[r].terms()) cat.matrix(r, dict.at(m)) = c;
  return cat;
}

HilbertFunction hilbert_function(const SparsePoly& f) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("Hilbert function needs a nonzero homogeneous polynomial");
  HilbertFunction h(d + 1);
  for (int k = 0; k <= d; ++k) h[k] = rank(catalecticant_matrix(f, k).matrix);
  return h;
}

GradedBasis select_basis(const SparsePoly& f, int k) {
  Catalecticant cat = catalecticant_matrix(f, k);
  GradedBasis basis;
  basis.degree = k;
  IntEchelon ech(cat.matrix.cols());
  std::vector<mpz_class> row(cat.matrix.cols());
  for (int r = 0; r < cat.matrix.rows(); ++r) {
    for (int j = 0; j < cat.matrix.cols(); ++j) row[j] = cat.matrix(r, j);
    if (ech.absorb(row)) basis.elements.push_back(cat.row_ops[r]);
    else basis.rejected.push_back(cat.row_ops[r]);
  }
  return basis;
}

ExactMatrix pairing_matrix(const SparsePoly& f, const GradedBasis& bi, const GradedBasis& bj) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("pairing needs a nonzero homogeneous polynomial");
  if (bi.degree + bj.degree > d) throw Error("pairing degrees exceed the socle degree");
  ExactMatrix m(static_cast<int>(bi.elements.size()), static_cast<int>(bj.elements.size()));
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b) {
      SparsePoly g = diff(bi.elements[a].merged(bj.elements[b]), f);
      m(a, b) = mpq_class(g.coefficient(Monomial::one()));
    }
  return m;
}

namespace {

// rank of integer row vectors, modular with two-prime agreement or exact
int span_rank(const std::vector<std::vector<mpz_class>>& rows, int cols, RankMode mode) {
  if (rows.empty() || cols == 0) return 0;
  if (mode == RankMode::kExact) {
    IntEchelon ech(cols);
    for (const auto& r : rows) ech.absorb(r);
    return ech.rank();
  }
  for (int pi = 0; pi + 1 < kPrimeCount; ++pi) {
    std::uint64_t p1 = kPrimes[pi], p2 = kPrimes[pi + 1];
    ModEchelon e1(cols, p1), e2(cols, p2);
    for (const auto& r : rows) {
      std::vector<std::uint64_t> m1(cols), m2(cols);
      for (int j = 0; j < cols; ++j) {
        m1[j] = mpz_fdiv_ui(r[j].get_mpz_t(), p1);
        m2[j] = mpz_fdiv_ui(r[j].get_mpz_t(), p2);
      }
      e1.absorb(std::move(m1));
      e2.absorb(std::move(m2));
    }
    if (e1.rank() == e2.rank()) return e1.rank();
  }
  IntEchelon ech(cols);
  for (const auto& r : rows) ech.absorb(r);
  return ech.rank();
}

}  // namespace

std::vector<std::pair<int, int>> minimal_generator_counts(const SparsePoly& f, int max_degree,
                                                          int budget, RankMode mode) {
  int d = 0;
  if (f.is_zero() || !f.is_homogeneous(&d))
    throw Error("generator counts need a nonzero homogeneous polynomial");
  if (max_degree > d + 1) throw Error("max_degree exceeds the socle degree plus one");
  int n = f.variable_count();

  std::vector<std::pair<int, int>> counts;
  std::vector<std::vector<mpz_class>> prev_kernel;  // basis of Ann_{j-1}
  std::vector<DiffMonomial> prev_ops;
  for (int j = 0; j <= max_degree; ++j) {
    std::vector<DiffMonomial> ops = operator_monomials(n, j, false);
    if (static_cast<double>(ops.size()) > budget)
      throw BudgetError("operator space of degree " + std::to_string(j) + " has dimension " +
                        std::to_string(ops.size()) + " > budget " + std::to_string(budget));
    // catalecticant over all (not just square-free) operators of degree j
    g_dict_nvars = n;
    std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> dict(lex_desc);
    std::vector<SparsePoly> images;
    images.reserve(ops.size());
    for (const auto& op : ops) {
      images.push_back(j <= d ? diff(op, f) : SparsePoly::zero(n));
      for (const auto& [m, c] : images.back().terms()) dict.emplace(m, 0);
    }
    int cols = 0;
    for (auto& [m, idx] : dict) idx = cols++;
    // annihilators are left-kernel vectors of the operator-rows matrix
    ExactMatrix catT(cols, static_cast<int>(ops.size()));
    for (int r = 0; r < static_cast<int>(images.size()); ++r)
      for (const auto& [m, c] : images[r].terms()) catT(dict.at(m), r) = mpq_class(c);
    auto ker = kernel_basis(catT);
    double kernel_cells = static_cast<double>(ker.size()) * static_cast<double>(ops.size());
    double product_cells =
        static_cast<double>(n) * static_cast<double>(prev_kernel.size()) * ops.size();
    if (kernel_cells > 4e6 || product_cells > 4e6)
      throw BudgetError("annihilator spaces of degree " + std::to_string(j) +
                        " are too large for the desk-scale generator count");
    std::vector<std::vector<mpz_class>> kernel;
    for (auto& v : ker) {
      int nz = 1;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) { nz = static_cast<int>(t) + 1; break; }
      kernel.push_back(normalize_integer_vector(v, nz));
    }
    // products Q_1 * Ann_{j-1}, expressed over the degree-j operator index
    std::map<DiffMonomial, int> op_index;
    for (std::size_t t = 0; t < ops.size(); ++t) op_index.emplace(ops[t], static_cast<int>(t));
    std::vector<std::vector<mpz_class>> products;
    for (const auto& v : prev_kernel) {
      for (int var = 1; var <= n; ++var) {
        std::vector<mpz_class> w(ops.size(), mpz_class(0));
        for (std::size_t t = 0; t < prev_ops.size(); ++t) {
          if (v[t] == 0) continue;
          w[op_index.at(prev_ops[t].merged(DiffMonomial({var})))] += v[t];
        }
        products.push_back(std::move(w));
      }
    }
    int span = span_rank(products, static_cast<int>(ops.size()), mode);
    int mu_j = static_cast<int>(kernel.size()) - span;
    if (mu_j > 0) counts.emplace_back(j, mu_j);
    prev_kernel = std::move(kernel);
    prev_ops = std::move(ops);
  }
  return counts;
}

}  // namespace slp
