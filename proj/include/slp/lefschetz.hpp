#ifndef SLP_LEFSCHETZ_HPP
#define SLP_LEFSCHETZ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slp/apolarity.hpp"
#include "slp/graph.hpp"
#include "slp/linalg.hpp"
#include "slp/poly.hpp"

namespace slp {

// ---- Hessian matrices over a graded basis ----

struct HessianSymbolic {
  GradedBasis basis;
  int nvars = 0;
  std::vector<SparsePoly> entries;  // m*m row-major, symmetric

  int dim() const { return static_cast<int>(basis.elements.size()); }
  const SparsePoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim() + j]; }
  std::size_t nonzero_count() const;
};

HessianSymbolic hessian_symbolic(const SparsePoly& f, const GradedBasis& basis);
// Same matrix built from the graph: entry (i,j) sums the spanning trees
// through the union of the two operator supports, via edge contraction.
HessianSymbolic hessian_symbolic(const Graph& g, const GradedBasis& basis);

IntMatrix hessian_eval(const HessianSymbolic& h, std::span<const mpz_class> point);
ModMatrix hessian_eval_mod(const HessianSymbolic& h, std::span<const std::uint64_t> point,
                           std::uint64_t p);
// Direct per-point evaluation without the symbolic matrix.
IntMatrix hessian_eval_fast(const Graph& g, const GradedBasis& basis,
                            std::span<const mpz_class> point);

// A check instance: the polynomial, its graph when it has one (enables the
// contraction fast path), and the symbolic Hessian for one degree.
class HessianInstance {
 public:
  static HessianInstance for_graph(const Graph& g, int k);
  static HessianInstance for_poly(const SparsePoly& f, int k);

  int nvars() const { return hessian_.nvars; }
  int dim() const { return hessian_.dim(); }
  int k() const { return hessian_.basis.degree; }
  const GradedBasis& basis() const { return hessian_.basis; }
  const HessianSymbolic& hessian() const { return hessian_; }
  const SparsePoly& f() const { return f_; }
  const std::optional<Graph>& graph() const { return graph_; }

  IntMatrix eval(std::span<const mpz_class> point) const { return hessian_eval(hessian_, point); }

 private:
  SparsePoly f_;
  std::optional<Graph> graph_;
  HessianSymbolic hessian_;
};

// ---- point checks ----

struct SlpPointCheck {
  bool holds = false;
  int nullity = 0;  // exact
};
SlpPointCheck slp_check_at_point(const HessianInstance& inst, std::span<const mpz_class> point);
SlpPointCheck slp_check_at_point(const Graph& g, int k, std::span<const mpz_class> point);
SlpPointCheck slp_check_at_point(const SparsePoly& f, int k, std::span<const mpz_class> point);

// ---- randomized screening ----

struct ScreenOptions {
  int reps = 100;
  std::uint64_t s_max = 1000000000ULL;  // sample set {1,...,s_max}
  std::uint64_t seed = 0;               // global seed; per-graph keys are derived
  bool early_exit = true;               // stop after a nonsingular repetition
  bool with_hilbert = true;             // include the Hilbert function in the report
};

struct ScreenReport {
  std::string graph_id;
  std::string edge_bits;
  int n_edges = 0;
  std::vector<int> hilbert;
  int k = 0;
  int reps = 0;                 // requested repetitions
  std::uint64_t s_max = 0;
  std::uint64_t seed = 0;       // global seed the run was keyed from
  std::vector<int> nullities;   // per performed repetition
  int nullity_min = 0;
  bool candidate = false;
  bool confirmed = false;       // exact confirmation of the deficiency
  int prob_bound_exp10 = 0;     // bound <= 10^exp10 on a false candidate
};

ScreenReport sz_screen(const Graph& g, int k, const ScreenOptions& opt,
                       const std::string& graph_id = "");
ScreenReport sz_screen(const SparsePoly& f, int k, const ScreenOptions& opt,
                       const std::string& id = "");

// Content-derived key so corpus runs are order-independent.
std::uint64_t graph_screen_key(std::uint64_t seed, const Graph& g);

// ---- kernel certificates ----

struct KernelCertificate {
  std::string graph_id;
  int k = 0;
  int nvars = 0;
  std::vector<DiffMonomial> basis;
  std::vector<SparsePoly> components;  // F, one polynomial per basis element
  std::vector<int> degree_vector;      // D_i per variable
  int i0 = 0;                          // 1-based component index, pinned positive
  std::vector<mpz_class> point;        // nonempty: certificate for one point only

  bool is_point_certificate() const { return !point.empty(); }
  int nonzero_components() const;
};

// Per-variable maximum degrees of the normalized kernel vector along
// axis-parallel lines through the all-ones point.  Requires nullity one at
// every probe point.
std::vector<int> detect_max_degrees(const HessianInstance& inst, int i0,
                                    int samples_per_var = 8);

// Default i0: position of the largest-magnitude component of the
// normalized kernel vector at the all-ones point.
int default_pin_index(const HessianInstance& inst);

// Tensor-grid interpolation of the kernel vector, grid X_i =
// {offset_i + 1, ..., offset_i + D_i + 1}.  The result is
// content-normalized globally; callers verify it afterwards.
KernelCertificate interpolate_kernel(const HessianInstance& inst, const std::vector<int>& D,
                                     int i0, const std::vector<int>& grid_offsets = {});

struct VerifyReport {
  bool pass = false;
  bool symbolic_product_zero = false;   // H * F = 0 as polynomials
  bool pairing_sum_zero = false;        // sum F_i (alpha_i f) = 0
  bool random_points_in_kernel = false; // evaluated F in evaluated kernel
  bool basis_matches = true;            // certificate basis = recomputed basis
  bool point_product_zero = false;      // point certificates: H(a) F = 0
  std::string detail;                   // first offending component on failure

  // what the certificate proves once pass = true
  std::string conclusion;
};

VerifyReport verify_certificate(const SparsePoly& f, const KernelCertificate& cert,
                                std::uint64_t seed = 0, bool check_basis = true);

// detect + interpolate + verify; throws on nullity != 1 and normalization
// dead ends, per the documented failure modes.
KernelCertificate reconstruct_certificate(const HessianInstance& inst, int i0 = 0,
                                          std::uint64_t seed = 0,
                                          std::vector<int> grid_offsets = {});

// ---- whole-property check ----

struct FullCheckResult {
  bool has_slp = false;
  std::vector<mpz_class> witness;  // Lefschetz element coefficients when has_slp
  int failing_k = -1;
  std::optional<ScreenReport> screen;  // escalation for the failing degree
};

FullCheckResult slp_full_check(const Graph& g, std::uint64_t seed,
                               const ScreenOptions& escalation = {});
FullCheckResult slp_full_check(const SparsePoly& f, std::uint64_t seed,
                               const ScreenOptions& escalation = {});

// ---- corpus-speed modular apolarity (screening backend) ----

// h_j for j = 0..floor(d/2) (mirrored to d) agreed at two primes, plus a
// provably Q-independent operator set of size h_k found by the same
// echelon.  Tree-based; no exact catalecticant is materialized.
struct ModularApolarity {
  std::vector<int> hilbert;
  GradedBasis pivot_basis;  // at the requested degree k
};
ModularApolarity modular_apolarity(const Graph& g, int k, bool full_hilbert);

}  // namespace slp

#endif
