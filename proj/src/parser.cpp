#include "soscert/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace soscert {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t col0)
      : text_(text), ring_(ring), line_(line), col0_(col0) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + pos + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-') fail("exponent must be a nonnegative integer");
    if (!is_digit(peek())) fail("exponent must be a nonnegative integer");
    std::string_view digits = read_digits();
    if (peek() == '/' || peek() == '.') fail("exponent must be a nonnegative integer");
    std::uint32_t e = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (ec != std::errc() || e > kMaxExponent) fail_at(start, "exponent too large");
    return pow(base, e);
  }

  std::string_view read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (is_digit(c)) {
      Integer num{std::string(read_digits())};
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        if (!is_digit(peek())) fail("expected denominator digits after '/'");
        const std::size_t dstart = pos_;
        den = Integer(std::string(read_digits()));
        if (den == 0) fail_at(dstart, "zero denominator");
      }
      if (!at_end() && is_ident_start(peek())) fail("missing '*' between factors");
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail_at(start, "unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring, 1, 0).parse();
}

std::string print_rational(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(trim(text));
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') {
    neg = true;
    ++i;
  }
  const std::size_t slash = s.find('/', i);
  auto digits_ok = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t k = a; k < b; ++k) {
      if (!is_digit(s[k])) return false;
    }
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_ok(i, num_end) || (slash != std::string::npos && !digits_ok(slash + 1, s.size()))) {
    throw ParseError("malformed rational '" + s + "'", 1, 1);
  }
  Integer num(s.substr(i, num_end - i));
  Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator", 1, slash + 2);
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string print_monomial(const Monomial& m, const RingContext& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string print_polynomial(const Polynomial& p, OrderKind order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, order)) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += print_rational(mag);
    } else if (mag == 1) {
      out += print_monomial(m, *p.ring());
    } else {
      out += print_rational(mag) + "*" + print_monomial(m, *p.ring());
    }
  }
  return out;
}

InstanceText parse_instance(std::string_view text) {
  InstanceText inst;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::pair<std::size_t, Polynomial>> gens;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::size_t lead = static_cast<std::size_t>(line.data() - raw.data());

    if (line.starts_with("vars:")) {
      if (inst.ring) throw ParseError("duplicate 'vars:' header", line_no, lead + 1);
      std::string_view rest = trim(line.substr(5));
      if (!rest.starts_with("n=")) throw ParseError("expected 'n=<count>'", line_no, lead + 6);
      rest = trim(rest.substr(2));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || n == 0 || n > 64) {
        throw ParseError("variable count must be an integer in 1..64", line_no, lead + 8);
      }
      inst.ring = make_ring(n);
      if (eol == text.size()) break;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<name> = <polynomial>'", line_no, lead + 1);
    if (!inst.ring) throw ParseError("'vars: n=<k>' must precede polynomials", line_no, lead + 1);
    std::string_view lhs = trim(line.substr(0, eq));
    std::string_view rhs = line.substr(eq + 1);
    const std::size_t rhs_col = lead + eq + 1;
    Polynomial poly = ExprParser(rhs, inst.ring, line_no, rhs_col).parse();
    if (lhs == "g") {
      if (inst.target) throw ParseError("duplicate 'g' definition", line_no, lead + 1);
      inst.target = std::move(poly);
    } else if (lhs.size() >= 2 && lhs[0] == 'p' && is_digit(lhs[1])) {
      std::size_t idx = 0;
      auto [ptr, ec] = std::from_chars(lhs.data() + 1, lhs.data() + lhs.size(), idx);
      if (ec != std::errc() || ptr != lhs.data() + lhs.size() || idx == 0) {
        throw ParseError("malformed generator name '" + std::string(lhs) + "'", line_no, lead + 1);
      }
      if (idx != gens.size() + 1) {
        throw ParseError("generators must be numbered p1, p2, ... in order", line_no, lead + 1);
      }
      gens.emplace_back(idx, std::move(poly));
    } else {
      throw ParseError("unknown definition '" + std::string(lhs) + "'", line_no, lead + 1);
    }
    if (eol == text.size()) break;
  }
  if (!inst.ring) throw ParseError("missing 'vars: n=<k>' header", line_no, 1);
  if (gens.empty()) throw ParseError("no generators p1, p2, ...", line_no, 1);
  for (auto& [i, p] : gens) inst.generators.push_back(std::move(p));
  return inst;
}

std::string print_instance(const InstanceText& inst) {
  std::ostringstream out;
  out << "vars: n=" << inst.ring->size() << "\n";
  for (std::size_t i = 0; i < inst.generators.size(); ++i) {
    out << "p" << (i + 1) << " = " << print_polynomial(inst.generators[i]) << "\n";
  }
  if (inst.target) out << "g = " << print_polynomial(*inst.target) << "\n";
  return out.str();
}

}  // namespace soscert
