// Buchberger's algorithm over Q with Gebauer–Möller pair pruning.
#pragma once

#include "soscert/ring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace soscert {

struct Ideal {
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  RingPtr ring;
  /// Nonzero; zero inputs are dropped on construction.
  std::vector<Polynomial> generators;
};

struct GroebnerBasis {
  OrderKind order = OrderKind::degrevlex;
  RingPtr ring;
  /// Monic, sorted by decreasing leading monomial.
  std::vector<Polynomial> elements;
  bool reduced = true;
};

struct GroebnerBudget {
  /// S-pairs that may be reduced.
  std::size_t max_pairs = 1'000'000;
  /// Bit size allowed for any integer coefficient of the primitive
  /// intermediate form.
  std::size_t max_coeff_bits = 65'536;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_pruned = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
  std::size_t max_coeff_bits_seen = 0;
};

enum class GroebnerStatus { complete, budget_exhausted };

struct GroebnerResult {
  GroebnerStatus status = GroebnerStatus::complete;
  /// Reduced basis on completion; the interreduced partial basis otherwise
  /// (with reduced = false).
  GroebnerBasis basis;
  GroebnerStats stats;
  std::string budget_reason;
};

/// Remainder of multivariate division by `divisors`, trying divisors in the
/// order given. Throws ContextMismatch on ring mismatch.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors, OrderKind order);

/// lcm/LT(f) * f - lcm/LT(g) * g. Throws std::invalid_argument on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, OrderKind order);

GroebnerResult buchberger(const Ideal& ideal, OrderKind order = OrderKind::degrevlex,
                          const GroebnerBudget& budget = {});

/// True iff the basis is {1}.
bool is_infeasible(const GroebnerBasis& basis);

}  // namespace soscert
