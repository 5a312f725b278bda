#ifndef SLP_LINALG_HPP
#define SLP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "slp/matrix.hpp"

namespace slp {

// ---- exact algorithms (rationals / big integers) ----

// Exact rank over the rationals.  Fraction-free elimination on the
// denominator-cleared matrix; pivoting picks the first nonzero entry in
// column order, so the result is deterministic.
int rank(const ExactMatrix& m);
int rank(const IntMatrix& m);

// Basis of the right null space, empty iff the matrix is injective.
// Vectors follow the reduced-echelon free-column pattern.
std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& m);
std::vector<std::vector<mpq_class>> kernel_basis(const IntMatrix& m);

// Exact determinant (Bareiss).  Throws on non-square input.
mpq_class determinant(const ExactMatrix& m);
mpz_class determinant(const IntMatrix& m);

// ---- modular engine ----

int rank_mod_p(ModMatrix m, std::uint64_t p);  // by value: eliminates in place
std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix m, std::uint64_t p);

// Incremental row-echelon accumulator mod p.  absorb() reduces a row
// against the accepted pivots and keeps it iff it is independent.
class ModEchelon {
 public:
  ModEchelon(int cols, std::uint64_t p) : cols_(cols), p_(p) {}
  bool absorb(std::vector<std::uint64_t> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;  // lead coefficient 1
  std::vector<int> lead_;                         // pivot column per row
};

// Incremental fraction-free echelon accumulator over the integers.
// Rows are kept primitive (content 1, positive leading entry), so entry
// growth stays moderate on the 0/1 incidence matrices this is used for.
class IntEchelon {
 public:
  explicit IntEchelon(int cols) : cols_(cols) {}
  bool absorb(std::vector<mpz_class> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<int> lead_;
};

// ---- reconstruction helpers ----

// Unique rational a/b with |a|, b <= sqrt(modulus/2), b coprime to the
// modulus and a = residue * b (mod modulus); nullopt when none exists
// (caller adds more primes).
std::optional<mpq_class> rational_reconstruct(const mpz_class& residue,
                                              const mpz_class& modulus);

// Chinese remainders: value mod m1*m2 from residues mod coprime m1, m2.
mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1,
                      const mpz_class& r2, const mpz_class& m2);

// Scales v to the unique integer vector with content one whose component
// at `i0` (1-based) is positive.  Throws NormalizationError when v = 0 or
// v[i0] = 0.
std::vector<mpz_class> normalize_integer_vector(const std::vector<mpq_class>& v, int i0);

// ---- certified modular kernels ----

// Exact kernel of an integer matrix obtained through the modular engine:
// every returned vector is verified against the matrix in exact
// arithmetic, and the rank lower bound comes from a nonzero minor mod p,
// so `nullity` is exact.  Escalates through CRT over several primes before
// falling back to fully exact elimination.
struct CertifiedKernel {
  int nullity = 0;
  std::vector<std::vector<mpz_class>> basis;  // primitive integer vectors
};
CertifiedKernel certified_kernel(const IntMatrix& m);

// Exact nullity only (same certification).
int certified_nullity(const IntMatrix& m);

}  // namespace slp

#endif
