// Text form of polynomials and of instance files.
//
// Polynomial grammar (whitespace-insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' digits)?
//   primary := digits ('/' digits)? | identifier | '(' expr ')'
//
// Products need an explicit '*'. A rational literal a/b is written without
// spaces around the slash.
//
// Instance files:
//
//   # comment
//   vars: n=5
//   p1 = x1^2 - x4^2
//   ...
//   g = <polynomial>        (optional; defaults to the sum of the p_i^2)
#pragma once

#include "soscert/ring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace soscert {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  /// 1-based; line is 1 for single-expression parses.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Terms in decreasing order, e.g. "x1^2 - 2*x1*x4 + 1/3*x4^2". Zero prints
/// as "0". The output parses back to the same polynomial.
std::string print_polynomial(const Polynomial& p, OrderKind order = OrderKind::degrevlex);

std::string print_monomial(const Monomial& m, const RingContext& ring);

std::string print_rational(const Rational& q);
/// Accepts "a", "-a", "a/b", "-a/b"; result is canonical.
Rational parse_rational(std::string_view text);

struct InstanceText {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<Polynomial> target;
};

InstanceText parse_instance(std::string_view text);

/// Inverse of parse_instance.
std::string print_instance(const InstanceText& inst);

}  // namespace soscert
