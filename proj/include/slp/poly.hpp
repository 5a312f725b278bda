#ifndef SLP_POLY_HPP
#define SLP_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "slp/error.hpp"
#include "slp/graph.hpp"
#include "slp/rng.hpp"

namespace slp {

// Exponent vector packed four bits per variable: up to 32 variables of
// degree at most 15 each, which covers every polynomial this library
// touches (edge counts stay <= 28 and per-variable degrees <= 8).
class Monomial {
 public:
  static constexpr int kMaxVars = 32;
  static constexpr int kMaxExp = 15;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial from_exponents(std::span<const int> exps) {
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v) m.set_exponent(static_cast<int>(v) + 1, exps[v]);
    return m;
  }

  static Monomial squarefree(EdgeSet s) {
    Monomial m;
    for (int e : s.indices()) m.set_exponent(e, 1);
    return m;
  }

  int exponent(int var) const {  // var is 1-based
    int i = var - 1;
    return static_cast<int>((i < 16 ? lo_ >> (4 * i) : hi_ >> (4 * (i - 16))) & 0xF);
  }

  void set_exponent(int var, int e) {
    if (var < 1 || var > kMaxVars) throw Error("variable index out of range");
    if (e < 0 || e > kMaxExp) throw Error("exponent out of range");
    int i = var - 1;
    if (i < 16) lo_ = (lo_ & ~(std::uint64_t(0xF) << (4 * i))) | (std::uint64_t(e) << (4 * i));
    else hi_ = (hi_ & ~(std::uint64_t(0xF) << (4 * (i - 16)))) | (std::uint64_t(e) << (4 * (i - 16)));
  }

  int total_degree() const {
    int d = 0;
    for (std::uint64_t w : {lo_, hi_})
      for (; w; w >>= 4) d += static_cast<int>(w & 0xF);
    return d;
  }

  bool is_squarefree() const {
    // no nibble may exceed 1
    auto bad = [](std::uint64_t w) {
      return w & 0xEEEEEEEEEEEEEEEEULL;
    };
    return !bad(lo_) && !bad(hi_);
  }

  bool is_one() const { return lo_ == 0 && hi_ == 0; }

  // product of monomials = exponent sum; throws if a nibble overflows
  Monomial times(const Monomial& o, int nvars) const {
    Monomial m;
    for (int v = 1; v <= nvars; ++v) {
      int e = exponent(v) + o.exponent(v);
      if (e > kMaxExp) throw Error("monomial degree overflow");
      m.set_exponent(v, e);
    }
    return m;
  }

  // lexicographic comparison of exponent vectors, variable 1 first
  static int compare(const Monomial& a, const Monomial& b, int nvars) {
    for (int v = 1; v <= nvars; ++v) {
      int d = a.exponent(v) - b.exponent(v);
      if (d) return d;
    }
    return 0;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::uint64_t hash() const { return mix64(lo_ ^ (hi_ * 0x9e3779b97f4a7c15ULL + 1)); }

 private:
  std::uint64_t lo_ = 0, hi_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// A monomial differential operator: sorted list of variable indices with
// repeats allowed (repeats only occur for non-square-free targets; graph
// pipelines build index sets).
class DiffMonomial {
 public:
  DiffMonomial() = default;
  explicit DiffMonomial(std::vector<int> indices);
  static DiffMonomial from_edges(EdgeSet s) { return DiffMonomial(s.indices()); }

  int degree() const { return static_cast<int>(idx_.size()); }
  bool is_squarefree() const;
  std::span<const int> indices() const { return idx_; }
  DiffMonomial merged(const DiffMonomial& o) const;  // operator product
  Monomial monomial() const;
  std::string to_text() const;  // "(1,2,3)"

  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
  friend auto operator<=>(const DiffMonomial& a, const DiffMonomial& b) { return a.idx_ <=> b.idx_; }

 private:
  std::vector<int> idx_;
};

DiffMonomial parse_diff_monomial(const std::string& text);

// Sparse multivariate polynomial with exact integer coefficients.
class SparsePoly {
 public:
  explicit SparsePoly(int nvars = 0);

  static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
  static SparsePoly constant(int nvars, mpz_class c);
  static SparsePoly variable(int nvars, int var);

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Monomial, mpz_class, MonomialHash>& terms() const { return terms_; }

  void add_term(const Monomial& m, const mpz_class& c);
  mpz_class coefficient(const Monomial& m) const;

  // max total degree over terms; -1 for the zero polynomial
  int total_degree() const;
  bool is_homogeneous(int* degree = nullptr) const;
  mpz_class content() const;  // gcd of coefficients, 0 for zero

  // terms sorted lexicographically descending: canonical order for output
  std::vector<std::pair<Monomial, mpz_class>> sorted_terms() const;

  bool operator==(const SparsePoly& o) const;

 private:
  int nvars_;
  std::unordered_map<Monomial, mpz_class, MonomialHash> terms_;
};

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const mpz_class& c, const SparsePoly& a);
SparsePoly operator-(const SparsePoly& a);

// Exact partial derivative by the operator monomial, with the multinomial
// factors that repeated indices require.
SparsePoly diff(const DiffMonomial& alpha, const SparsePoly& f);

mpz_class evaluate(const SparsePoly& f, std::span<const mpz_class> point);
std::uint64_t evaluate_mod(const SparsePoly& f, std::span<const std::uint64_t> point,
                           std::uint64_t p);

// Coefficients of f(1,...,x_var,...,1) as a univariate polynomial,
// ascending degree.
std::vector<mpz_class> restrict_to_line(const SparsePoly& f, int var);

// f_G: the spanning-tree generating polynomial of a connected graph.
SparsePoly basis_generating_poly(const Graph& g);

// Canonical text form, parseable by parse_poly.
std::string to_text(const SparsePoly& f);
// nvars < 0 infers the variable count from the largest index present.
SparsePoly parse_poly(const std::string& text, int nvars = -1);

}  // namespace slp

#endif
