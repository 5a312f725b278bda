#include "slp/linalg.hpp"

#include <algorithm>

#include "slp/error.hpp"
#include "slp/fp.hpp"

namespace slp {

namespace {

mpz_class row_content(const std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(std::vector<mpz_class>& row) {
  mpz_class g = row_content(row);
  if (g == 0) return;
  int first = -1;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) { first = static_cast<int>(j); break; }
  if (row[first] < 0) g = -g;
  if (g != 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators row by row: the rank and kernel are unchanged by
// row scaling.
IntMatrix clear_denominators(const ExactMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      mpq_class q = m(i, j) * l;
      z(i, j) = q.get_num();
    }
  }
  return z;
}

}  // namespace

bool IntEchelon::absorb(std::vector<mpz_class> row) {
  if (static_cast<int>(row.size()) != cols_) throw Error("echelon row length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    int c = lead_[k];
    if (row[c] == 0) continue;
    const auto& piv = rows_[k];
    mpz_class a = piv[c], b = row[c];
    for (int j = 0; j < cols_; ++j) row[j] = row[j] * a - piv[j] * b;
    make_primitive(row);
  }
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j] != 0) { lead = j; break; }
  if (lead < 0) return false;
  make_primitive(row);
  // keep rows_ sorted by pivot column so a single reduction pass suffices
  std::size_t pos = 0;
  while (pos < rows_.size() && lead_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  lead_.insert(lead_.begin() + pos, lead);
  return true;
}

bool ModEchelon::absorb(std::vector<std::uint64_t> row) {
  if (static_cast<int>(row.size()) != cols_) throw Error("echelon row length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    int c = lead_[k];
    std::uint64_t f = row[c];
    if (f == 0) continue;
    const auto& piv = rows_[k];
    for (int j = c; j < cols_; ++j)
      if (piv[j]) row[j] = sub_mod(row[j], mul_mod(f, piv[j], p_), p_);
  }
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j]) { lead = j; break; }
  if (lead < 0) return false;
  std::uint64_t inv = inv_mod(row[lead], p_);
  for (int j = lead; j < cols_; ++j)
    if (row[j]) row[j] = mul_mod(row[j], inv, p_);
  std::size_t pos = 0;
  while (pos < rows_.size() && lead_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  lead_.insert(lead_.begin() + pos, lead);
  return true;
}

int rank(const IntMatrix& m) {
  IntEchelon ech(m.cols());
  std::vector<mpz_class> row(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    ech.absorb(row);
  }
  return ech.rank();
}

int rank(const ExactMatrix& m) { return rank(clear_denominators(m)); }

namespace {

// Reduced row echelon form over the rationals with first-nonzero pivoting.
// Returns pivot columns; m is transformed in place.
std::vector<int> rref(ExactMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      mpq_class f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(m.cols(), mpq_class(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(static_cast<int>(k), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<mpq_class>> kernel_basis(const IntMatrix& m) {
  return kernel_basis(to_exact_matrix(m));
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int sel = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { sel = i; break; }
      if (sel < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(a(sel, j), a(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

mpq_class determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  // scale each row to integers, divide the scales back out at the end
  mpq_class scale = 1;
  IntMatrix z(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= mpq_class(l);
    for (int j = 0; j < m.cols(); ++j) {
      mpq_class q = m(i, j) * l;
      z(i, j) = q.get_num();
    }
  }
  mpq_class d(determinant(z));
  d /= scale;
  d.canonicalize();
  return d;
}

int rank_mod_p(ModMatrix m, std::uint64_t p) {
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c)) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    std::uint64_t inv = inv_mod(m(r, c), p);
    std::uint64_t* pr = m.row_ptr(r);
    for (int j = c; j < cols; ++j) pr[j] = mul_mod(pr[j], inv, p);
    for (int i = r + 1; i < rows; ++i) {
      std::uint64_t f = m(i, c);
      if (!f) continue;
      std::uint64_t* ri = m.row_ptr(i);
      for (int j = c; j < cols; ++j)
        if (pr[j]) ri[j] = sub_mod(ri[j], mul_mod(f, pr[j], p), p);
    }
    ++r;
  }
  return r;
}

namespace {

// Full reduced echelon mod p; returns pivot columns.
std::vector<int> rref_mod_p(ModMatrix& m, std::uint64_t p) {
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c)) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    std::uint64_t inv = inv_mod(m(r, c), p);
    std::uint64_t* pr = m.row_ptr(r);
    for (int j = c; j < cols; ++j) pr[j] = mul_mod(pr[j], inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = m(i, c);
      if (!f) continue;
      std::uint64_t* ri = m.row_ptr(i);
      for (int j = c; j < cols; ++j)
        if (pr[j]) ri[j] = sub_mod(ri[j], mul_mod(f, pr[j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix m, std::uint64_t p) {
  std::vector<int> pivots = rref_mod_p(m, p);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = neg_mod(m(static_cast<int>(k), c), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& residue,
                                              const mpz_class& modulus) {
  if (modulus <= 1) return std::nullopt;
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = modulus, r1 = ((residue % modulus) + modulus) % modulus;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  mpz_class num = r1, den = t1;
  if (den < 0) { den = -den; num = -num; }
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1,
                      const mpz_class& r2, const mpz_class& m2) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw Error("crt moduli not coprime");
  mpz_class diff = ((r2 - r1) % m2 + m2) % m2;
  return r1 + m1 * (diff * inv % m2);
}

std::vector<mpz_class> normalize_integer_vector(const std::vector<mpq_class>& v, int i0) {
  if (i0 < 1 || i0 > static_cast<int>(v.size())) throw Error("normalization index out of range");
  if (v[i0 - 1] == 0) throw NormalizationError("pinned component is zero");
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    mpq_class q = v[j] * l;
    w[j] = q.get_num();
  }
  mpz_class g = 0;
  for (const auto& x : w)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw NormalizationError("zero vector");
  if (w[i0 - 1] < 0) g = -g;
  for (auto& x : w)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return w;
}

namespace {

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t p) {
  ModMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      r(i, j) = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  return r;
}

bool is_exact_kernel_vector(const IntMatrix& m, const std::vector<mpz_class>& v) {
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class acc = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) acc += m(i, j) * v[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

CertifiedKernel certified_kernel(const IntMatrix& m) {
  int cols = m.cols();
  // residue kernels with a consistent pivot structure, combined by CRT
  std::vector<int> best_pivots;
  std::vector<int> free_cols;
  std::vector<std::vector<mpz_class>> residues;  // per kernel vector, per col
  mpz_class modulus = 1;
  for (int pi = 0; pi < kPrimeCount; ++pi) {
    std::uint64_t p = kPrimes[pi];
    ModMatrix mm = reduce_mod(m, p);
    std::vector<int> pivots = rref_mod_p(mm, p);
    if (static_cast<int>(pivots.size()) < static_cast<int>(best_pivots.size())) continue;  // unlucky prime
    if (static_cast<int>(pivots.size()) > static_cast<int>(best_pivots.size()) || pivots != best_pivots) {
      // higher certified rank (or different structure): restart collection
      best_pivots = pivots;
      residues.clear();
      modulus = 1;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : best_pivots) is_pivot[c] = true;
    std::vector<std::vector<mpz_class>> cur;
    free_cols.clear();
    for (int c = 0; c < cols; ++c) {
      if (is_pivot[c]) continue;
      std::vector<mpz_class> v(cols, mpz_class(0));
      v[c] = 1;
      for (std::size_t k = 0; k < best_pivots.size(); ++k)
        v[best_pivots[k]] = mpz_class(neg_mod(mm(static_cast<int>(k), c), p));
      cur.push_back(std::move(v));
      free_cols.push_back(c);
    }
    mpz_class pz(p);
    if (modulus == 1) {
      residues = std::move(cur);
      modulus = pz;
    } else {
      for (std::size_t k = 0; k < residues.size(); ++k)
        for (int j = 0; j < cols; ++j)
          residues[k][j] = crt_combine(residues[k][j], modulus, cur[k][j], pz);
      modulus *= pz;
    }
    // attempt reconstruction of every kernel vector
    CertifiedKernel out;
    bool ok = true;
    for (std::size_t k = 0; k < residues.size() && ok; ++k) {
      const auto& rv = residues[k];
      std::vector<mpq_class> q(cols);
      for (int j = 0; j < cols; ++j) {
        auto rec = rational_reconstruct(rv[j], modulus);
        if (!rec) { ok = false; break; }
        q[j] = *rec;
      }
      if (!ok) break;
      // pin on the vector's free column, whose value is 1 by construction
      std::vector<mpz_class> w = normalize_integer_vector(q, free_cols[k] + 1);
      if (!is_exact_kernel_vector(m, w)) { ok = false; break; }
      out.basis.push_back(std::move(w));
    }
    if (ok) {
      out.nullity = static_cast<int>(out.basis.size());
      // rank >= |pivots| holds exactly (nonzero minor mod p); the verified
      // kernel vectors give rank <= cols - nullity, so nullity is exact.
      return out;
    }
  }
  // modular path exhausted: fall back to fully exact elimination
  CertifiedKernel out;
  auto kb = kernel_basis(m);
  for (auto& v : kb) {
    int nz = 1;
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) { nz = j + 1; break; }
    out.basis.push_back(normalize_integer_vector(v, nz));
  }
  out.nullity = static_cast<int>(out.basis.size());
  return out;
}

int certified_nullity(const IntMatrix& m) { return certified_kernel(m).nullity; }

}  // namespace slp
