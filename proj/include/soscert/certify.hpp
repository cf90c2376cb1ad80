// Two-stage certificates for sums-of-squares length.
//
// Stage 1 finds a PSD moment matrix vanishing on every p_i * q; its kernel
// contains every SOS summand of g, so when the kernel equals span{p_i} all
// summands are combinations of the p_i ("pinned"). Stage 2 writes t squares
// in triangular shape over the p_i with unknown coefficients and asks a
// Gröbner basis whether the coefficient equations have a solution.
#pragma once

#include "soscert/exactla.hpp"
#include "soscert/gram.hpp"
#include "soscert/groebner.hpp"
#include "soscert/parser.hpp"
#include "soscert/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace soscert {

struct SosInstance {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> generators;
  Polynomial target;

  /// Degree of the generators (half the degree of g).
  std::uint32_t degree() const;
  std::size_t size() const { return generators.size(); }
};

/// Target defaults to the sum of the squared generators.
SosInstance make_instance(std::string name, InstanceText text);
SosInstance make_instance(std::string name, RingPtr ring, std::vector<Polynomial> generators,
                          std::optional<Polynomial> target = std::nullopt);

struct InstanceCheck {
  bool homogeneous = false;
  bool identity_holds = false;
  bool independent = false;
  std::size_t rank = 0;
  /// Largest (degrevlex) monomial where g and Σ p_i² differ.
  std::optional<Monomial> first_mismatch;
  Rational expected_coefficient;
  Rational actual_coefficient;

  bool valid() const { return homogeneous && identity_holds && independent; }
};

InstanceCheck check_instance(const SosInstance& inst);
bool verify_instance(const SosInstance& inst);

enum class Verdict {
  pinned,
  infeasible,
  feasible_complex,
  witness_found,
  inconclusive,
  budget_exhausted,
};

std::string_view verdict_name(Verdict v);

struct Stage1Result {
  MonomialBasis basis;
  MatrixSpace space;
  std::optional<PsdChoice> psd;
  KernelBasis kernel;
  bool span_matches = false;
  /// The p_i span every form of degree d, so every summand is already
  /// a combination of them even though nothing was pinned.
  bool full_span = false;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;

  bool allows_stage2() const { return verdict == Verdict::pinned || full_span; }
};

/// Requires a verified instance (throws std::invalid_argument otherwise).
Stage1Result stage1_pin_summands(const SosInstance& inst);

/// f_i = Σ_{j >= i} u_ij p_j for i = 1..t. Rows past s are empty.
class TriangularAnsatz {
 public:
  TriangularAnsatz(std::size_t s, std::size_t t);

  std::size_t basis_size() const { return s_; }
  std::size_t squares() const { return t_; }
  const RingPtr& unknowns() const { return ring_; }
  std::size_t unknown_count() const { return ring_ ? ring_->size() : 0; }
  /// 1-based (i, j) with i <= j <= s; absent outside the triangle.
  std::optional<std::size_t> unknown_index(std::size_t i, std::size_t j) const;
  /// Coefficient of p_j in f_i, as a polynomial in the unknowns.
  Polynomial coefficient(std::size_t i, std::size_t j) const;
  /// Human-readable f_i, e.g. "u77*p7 + u78*p8".
  std::string describe_row(std::size_t i) const;

 private:
  std::size_t s_;
  std::size_t t_;
  RingPtr ring_;
  std::vector<std::vector<std::optional<std::size_t>>> index_;
};

TriangularAnsatz build_ansatz(std::size_t s, std::size_t t);

struct AnsatzSystem {
  Ideal ideal;
  /// x-monomial each generator is the coefficient of.
  std::vector<Monomial> sources;
};

/// Coefficients of g - Σ f_i² in x, one per x-monomial with a nonzero
/// symbolic coefficient, ordered by decreasing degrevlex x-monomial. Each is
/// signed so its degrevlex leading coefficient is positive.
AnsatzSystem ansatz_system(const SosInstance& inst, const TriangularAnsatz& ansatz);
Ideal ansatz_equations(const SosInstance& inst, const TriangularAnsatz& ansatz);

struct Stage2Result {
  std::size_t squares = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  GroebnerResult groebner;
  Verdict verdict = Verdict::inconclusive;
  /// Values of the unknowns (row-major) solving the system, when found.
  std::optional<RationalVector> witness;
};

struct Stage2Options {
  OrderKind order = OrderKind::degrevlex;
  GroebnerBudget budget;
  /// Sign patterns tried on the diagonal unknowns when the basis is not {1}.
  std::size_t witness_patterns = 256;
};

/// Runs only when stage1.allows_stage2(); throws std::logic_error otherwise.
Stage2Result decide_t_squares(const SosInstance& inst, const Stage1Result& stage1, std::size_t t,
                              const Stage2Options& options = {});

struct TriangularDecomposition {
  RationalVector weights;
  std::vector<Polynomial> polys;
  /// polys[k] = Σ_j rows[k][j] p_j with rows[k][j] = 0 for j < pivot k.
  std::vector<RationalVector> rows;
  std::size_t rank = 0;
};

/// Rewrites Σ q_i² as Σ d_k q̃_k² with d_k > 0 and q̃_k triangular over p.
/// Throws std::invalid_argument when some q_i is not in span{p}.
TriangularDecomposition triangular_reduce(std::span<const Polynomial> q, std::span<const Polynomial> p);

/// 2(n-1) generators in n variables: the seed, lifted, followed by
/// x_1 x_n, ..., x_{n-1} x_n. The seed defaults to the built-in 4-variable
/// one for n = 5 and is required otherwise.
SosInstance generate_family_instance(std::size_t n, std::optional<std::vector<Polynomial>> seed = std::nullopt);

}  // namespace soscert
