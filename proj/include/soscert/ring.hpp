// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace soscert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when two operands live in different polynomial rings.
class ContextMismatch : public std::invalid_argument {
 public:
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Variable names of a polynomial ring Q[v_1, ..., v_n]. Two contexts are
/// compatible iff their name lists are equal.
class RingContext {
 public:
  /// Ring with variables x1..xn.
  explicit RingContext(std::size_t n);
  explicit RingContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::size_t n);
RingPtr make_ring(std::vector<std::string> names);

/// Throws ContextMismatch unless both rings are the same object or have
/// identical variable names.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Ordering via operator<=> is plain lexicographic on the
/// exponents and is only used as a storage key; use compare() for the
/// algebraic monomial orders.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t n, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

enum class OrderKind { degrevlex, lex, deglex };

std::string_view order_name(OrderKind kind);
std::optional<OrderKind> parse_order_name(std::string_view name);

/// Compare under the given order; variable 1 is the largest. Both monomials
/// must have equal length (not checked).
std::strong_ordering compare(const Monomial& a, const Monomial& b, OrderKind kind);

struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  RingPtr ring;

  /// Context-checked comparison; throws ContextMismatch on length mismatch.
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const;
};

/// Comparison with the given order: a < b.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring);
  /// Builds from terms, dropping zero coefficients. Every monomial must have
  /// the ring's variable count.
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Largest term under the order; requires nonzero.
  const Monomial& leading_monomial(OrderKind kind) const;
  Rational leading_coefficient(OrderKind kind) const;
  /// Total degree; 0 for the zero polynomial.
  std::uint32_t total_degree() const;

  /// Evaluate at a point of Q^n.
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Exact equality; rings must be compatible (throws otherwise).
  bool operator==(const Polynomial& other) const;

 private:
  void add_scaled(const Polynomial& other, const Rational& scale);

  RingPtr ring_;
  TermMap terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, std::uint32_t exponent);

/// Sum of squares of the given polynomials, all in `ring`.
Polynomial expand_sos(const RingPtr& ring, std::span<const Polynomial> polys);

struct Homogeneity {
  bool zero = false;
  std::uint32_t degree = 0;
};

/// Common degree of all terms; the zero polynomial reports {zero = true}.
/// Absent when terms of different degrees are present.
std::optional<Homogeneity> is_homogeneous(const Polynomial& p);

/// Terms sorted by decreasing monomial under the order.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p, OrderKind kind);

/// Embed into a larger ring whose first variables match this one's.
Polynomial lift(const Polynomial& p, const RingPtr& target);

}  // namespace soscert
