#include "soscert/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace soscert {

RingContext::RingContext(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ring needs at least one variable");
  names_.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
}

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::size_t n) { return std::make_shared<const RingContext>(n); }

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw ContextMismatch("polynomials belong to different rings");
}

// -- Monomial -------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t n, std::size_t i, std::uint32_t power) {
  std::vector<std::uint32_t> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

// -- Orders ---------------------------------------------------------------

std::string_view order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
  }
  return "?";
}

std::optional<OrderKind> parse_order_name(std::string_view name) {
  if (name == "degrevlex" || name == "grevlex") return OrderKind::degrevlex;
  if (name == "lex" || name == "plex") return OrderKind::lex;
  if (name == "deglex" || name == "grlex") return OrderKind::deglex;
  return std::nullopt;
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, OrderKind kind) {
  switch (kind) {
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::deglex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lex_compare(a, b);
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      // Larger monomial has the smaller exponent in the last differing variable.
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size() || (ring && a.size() != ring->size())) {
    throw ContextMismatch("monomials have different variable counts");
  }
  return compare(a, b, kind);
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  return order(a, b);
}

// -- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : Polynomial(std::move(ring)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ring_->size()) throw ContextMismatch("monomial length differs from ring size");
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Monomial(p.ring_->size()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Polynomial p(std::move(ring));
  p.terms_.emplace(Monomial::variable(p.ring_->size(), i), Rational(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->size()) throw ContextMismatch("monomial length differs from ring size");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial(OrderKind kind) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (compare(it->first, best->first, kind) > 0) best = it;
  }
  return best->first;
}

Rational Polynomial::leading_coefficient(OrderKind kind) const {
  return terms_.at(leading_monomial(kind));
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw ContextMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size() && v != 0; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scale) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += scale * c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, 0);
      it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return terms_ == other.terms_;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
  Polynomial result = Polynomial::constant(base.ring(), 1);
  Polynomial sq = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * sq;
    exponent >>= 1U;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

Polynomial expand_sos(const RingPtr& ring, std::span<const Polynomial> polys) {
  Polynomial sum(ring);
  for (const auto& p : polys) {
    require_same_ring(ring, p.ring());
    sum += p * p;
  }
  return sum;
}

std::optional<Homogeneity> is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return Homogeneity{true, 0};
  const std::uint32_t d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return std::nullopt;
  }
  return Homogeneity{false, d};
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p, OrderKind kind) {
  std::vector<std::pair<Monomial, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [kind](const auto& a, const auto& b) { return compare(a.first, b.first, kind) > 0; });
  return out;
}

Polynomial lift(const Polynomial& p, const RingPtr& target) {
  const auto& src = *p.ring();
  if (target->size() < src.size()) throw ContextMismatch("target ring is smaller");
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src.name(i) != target->name(i)) throw ContextMismatch("target ring does not extend source ring");
  }
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    auto e = m.exponents();
    e.resize(target->size(), 0);
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace soscert
