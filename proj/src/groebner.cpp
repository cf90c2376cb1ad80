#include "soscert/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace soscert {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

namespace {

// Dense-in-order term list: strictly decreasing monomials.
template <class Coeff>
struct TermT {
  Monomial mono;
  Coeff coeff;
};
template <class Coeff>
using TermsT = std::vector<TermT<Coeff>>;

using Terms = TermsT<Integer>;
using QTerms = TermsT<Rational>;

// a*A[from_a..] - b*q*B[from_b..], merged under `order`.
template <class Coeff>
TermsT<Coeff> combine(const Coeff& a, const TermsT<Coeff>& A, std::size_t from_a, const Coeff& b,
                      const Monomial& q, const TermsT<Coeff>& B, std::size_t from_b, OrderKind order) {
  TermsT<Coeff> out;
  out.reserve((A.size() - from_a) + (B.size() - from_b));
  std::size_t i = from_a;
  std::size_t j = from_b;
  const bool a_one = a == 1;
  const bool q_one = q.is_one();
  std::optional<Monomial> bm;
  auto bmono = [&](std::size_t k) -> const Monomial& {
    if (q_one) return B[k].mono;
    bm = q * B[k].mono;
    return *bm;
  };
  bool have_b = j < B.size();
  if (have_b) bmono(j);
  while (i < A.size() || have_b) {
    if (!have_b) {
      out.push_back({A[i].mono, a_one ? A[i].coeff : Coeff(a * A[i].coeff)});
      ++i;
      continue;
    }
    const Monomial& mb = q_one ? B[j].mono : *bm;
    auto cmp = i < A.size() ? compare(A[i].mono, mb, order) : std::strong_ordering::less;
    if (cmp > 0) {
      out.push_back({A[i].mono, a_one ? A[i].coeff : Coeff(a * A[i].coeff)});
      ++i;
    } else if (cmp < 0) {
      out.push_back({mb, Coeff(-b * B[j].coeff)});
      ++j;
      have_b = j < B.size();
      if (have_b) bmono(j);
    } else {
      Coeff c = a_one ? A[i].coeff : Coeff(a * A[i].coeff);
      c -= b * B[j].coeff;
      if (c != 0) out.push_back({A[i].mono, std::move(c)});
      ++i;
      ++j;
      have_b = j < B.size();
      if (have_b) bmono(j);
    }
  }
  return out;
}

void make_primitive(Terms& t) {
  if (t.empty()) return;
  Integer g = 0;
  for (const auto& term : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(t.front().coeff) < 0) g = -g;
  if (g != 1) {
    for (auto& term : t) mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), g.get_mpz_t());
  }
}

Terms primitive_terms(const Polynomial& p, OrderKind order) {
  auto sorted = sorted_terms(p, order);
  Integer den = 1;
  for (const auto& [m, c] : sorted) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Terms out;
  out.reserve(sorted.size());
  for (const auto& [m, c] : sorted) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back({m, std::move(v)});
  }
  make_primitive(out);
  return out;
}

Polynomial monic_polynomial(const Terms& t, const RingPtr& ring) {
  Polynomial::TermMap terms;
  if (t.empty()) return Polynomial(ring);
  const Integer& lead = t.front().coeff;
  for (const auto& term : t) {
    Rational q(term.coeff, lead);
    q.canonicalize();
    terms.emplace(term.mono, std::move(q));
  }
  return Polynomial(ring, std::move(terms));
}

std::size_t max_bits(const Terms& t) {
  std::size_t bits = 0;
  for (const auto& term : t) bits = std::max(bits, mpz_sizeinbase(term.coeff.get_mpz_t(), 2));
  return bits;
}

struct Element {
  Terms terms;
  const Monomial& lm() const { return terms.front().mono; }
  const Integer& lc() const { return terms.front().coeff; }
};

// Full fraction-free reduction: returns a primitive polynomial that is a
// positive rational multiple of the remainder.
Terms reduce_full(Terms h, const std::vector<Element>& basis, std::span<const std::size_t> reducers,
                  OrderKind order) {
  Terms r;
  std::size_t start = 0;
  std::size_t steps = 0;
  while (start < h.size()) {
    const Monomial& lead = h[start].mono;
    const Element* div = nullptr;
    for (std::size_t idx : reducers) {
      if (basis[idx].lm().divides(lead)) {
        div = &basis[idx];
        break;
      }
    }
    if (!div) {
      r.push_back(std::move(h[start]));
      ++start;
      continue;
    }
    Integer a = div->lc();
    Integer b = h[start].coeff;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    }
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    const Monomial q = lead.quotient(div->lm());
    h = combine<Integer>(a, h, start + 1, b, q, div->terms, 1, order);
    start = 0;
    if (a != 1) {
      for (auto& term : r) term.coeff *= a;
    }
    if (++steps % 8 == 0) {
      Integer c = 0;
      for (const auto& t : r) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      for (const auto& t : h) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      }
      if (c > 1) {
        for (auto& t : r) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
        for (auto& t : h) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  make_primitive(r);
  return r;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairLess {
  OrderKind order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (auto c = compare(a.lcm, b.lcm, order); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, OrderKind order, const GroebnerBudget& budget)
      : ring_(std::move(ring)), order_(order), budget_(budget), pairs_(PairLess{order}) {}

  GroebnerResult run(const std::vector<Polynomial>& generators) {
    GroebnerResult res;
    for (const auto& g : generators) {
      if (insert(reduce_full(primitive_terms(g, order_), basis_, live_, order_))) return finish(res);
      if (exhausted_) return finish(res);
    }
    while (!pairs_.empty()) {
      if (stats_.pairs_reduced >= budget_.max_pairs) {
        exhausted_ = true;
        reason_ = "pair budget of " + std::to_string(budget_.max_pairs) + " reduced S-pairs reached";
        break;
      }
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_reduced;
      Terms s = spoly(basis_[p.i], basis_[p.j], p.lcm);
      Terms h = reduce_full(std::move(s), basis_, live_, order_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (insert(std::move(h))) break;
      if (exhausted_) break;
    }
    return finish(res);
  }

 private:
  Terms spoly(const Element& f, const Element& g, const Monomial& lcm) const {
    Integer a = g.lc();
    Integer b = f.lc();
    Integer c;
    mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    // a*(lcm/lm f)*f - b*(lcm/lm g)*g with leading terms cancelling.
    const Monomial qf = lcm.quotient(f.lm());
    const Monomial qg = lcm.quotient(g.lm());
    Terms sf;
    sf.reserve(f.terms.size());
    for (std::size_t k = 1; k < f.terms.size(); ++k) sf.push_back({qf * f.terms[k].mono, f.terms[k].coeff});
    Terms out = combine<Integer>(a, sf, 0, b, qg, g.terms, 1, order_);
    make_primitive(out);
    return out;
  }

  // Returns true when the unit ideal was reached.
  bool insert(Terms h) {
    if (h.empty()) return false;
    const std::size_t bits = max_bits(h);
    stats_.max_coeff_bits_seen = std::max(stats_.max_coeff_bits_seen, bits);
    if (h.front().mono.is_one()) {
      unit_ = true;
      return true;
    }
    const std::size_t k = basis_.size();
    basis_.push_back(Element{std::move(h)});
    update(k);
    stats_.max_basis_size = std::max(stats_.max_basis_size, live_.size());
    if (bits > budget_.max_coeff_bits) {
      exhausted_ = true;
      reason_ = "coefficient of " + std::to_string(bits) + " bits exceeds the " +
                std::to_string(budget_.max_coeff_bits) + "-bit budget";
    }
    return false;
  }

  // Gebauer–Möller update for the new element k.
  void update(std::size_t k) {
    const Monomial& h = basis_[k].lm();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    cands.reserve(live_.size());
    for (std::size_t g : live_) {
      const Monomial& lg = basis_[g].lm();
      cands.push_back({g, lg.lcm(h), lg.coprime(h)});
    }
    stats_.pairs_created += cands.size();

    // Chain criterion on the new pairs: keep an lcm class only if no other
    // class properly divides it; drop a class containing a coprime pair.
    std::map<Monomial, std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < cands.size(); ++c) classes[cands[c].lcm].push_back(c);
    std::vector<Pair> fresh;
    for (const auto& [lcm, members] : classes) {
      bool dominated = false;
      for (const auto& [other, unused] : classes) {
        if (other != lcm && other.divides(lcm)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      const bool any_coprime = std::any_of(members.begin(), members.end(),
                                           [&](std::size_t c) { return cands[c].coprime; });
      if (any_coprime) continue;
      std::size_t best = members.front();
      for (std::size_t c : members) best = std::min(best, c);
      fresh.push_back({cands[best].g, k, lcm});
    }
    stats_.pairs_pruned += cands.size() - fresh.size();

    // Old pairs made redundant by the new leading monomial.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (h.divides(p.lcm) && basis_[p.i].lm().lcm(h) != p.lcm && basis_[p.j].lm().lcm(h) != p.lcm) {
        it = pairs_.erase(it);
        ++stats_.pairs_pruned;
      } else {
        ++it;
      }
    }

    std::erase_if(live_, [&](std::size_t g) { return h.divides(basis_[g].lm()); });
    live_.push_back(k);
    for (auto& p : fresh) pairs_.insert(std::move(p));
  }

  GroebnerResult& finish(GroebnerResult& res) {
    res.stats = stats_;
    res.basis.order = order_;
    res.basis.ring = ring_;
    if (unit_) {
      res.status = GroebnerStatus::complete;
      res.basis.elements = {Polynomial::constant(ring_, 1)};
      res.basis.reduced = true;
      return res;
    }
    res.status = exhausted_ ? GroebnerStatus::budget_exhausted : GroebnerStatus::complete;
    res.budget_reason = reason_;
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another live one, then tail-reduce against the rest.
    std::vector<std::size_t> minimal;
    for (std::size_t a : live_) {
      bool redundant = false;
      for (std::size_t b : live_) {
        if (a == b) continue;
        const Monomial& la = basis_[a].lm();
        const Monomial& lb = basis_[b].lm();
        if (lb.divides(la) && (la != lb || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<Terms> reduced;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal) {
        if (b != a) others.push_back(b);
      }
      // The leading monomial is irreducible by the others, so only the tail
      // changes.
      reduced.push_back(reduce_full(basis_[a].terms, basis_, others, order_));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Terms& a, const Terms& b) {
      return compare(a.front().mono, b.front().mono, order_) > 0;
    });
    res.basis.elements.clear();
    for (const auto& t : reduced) res.basis.elements.push_back(monic_polynomial(t, ring_));
    res.basis.reduced = !exhausted_;
    return res;
  }

  RingPtr ring_;
  OrderKind order_;
  GroebnerBudget budget_;
  std::vector<Element> basis_;
  std::vector<std::size_t> live_;
  std::set<Pair, PairLess> pairs_;
  GroebnerStats stats_;
  bool unit_ = false;
  bool exhausted_ = false;
  std::string reason_;
};

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors, OrderKind order) {
  std::vector<QTerms> divs;
  for (const auto& d : divisors) {
    require_same_ring(p.ring(), d.ring());
    if (d.is_zero()) continue;
    QTerms t;
    for (auto& [m, c] : sorted_terms(d, order)) t.push_back({m, c});
    divs.push_back(std::move(t));
  }
  QTerms h;
  for (auto& [m, c] : sorted_terms(p, order)) h.push_back({m, c});
  Polynomial::TermMap rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const QTerms* div = nullptr;
    for (const auto& d : divs) {
      if (d.front().mono.divides(h[start].mono)) {
        div = &d;
        break;
      }
    }
    if (!div) {
      rem.emplace(h[start].mono, h[start].coeff);
      ++start;
      continue;
    }
    const Rational factor = h[start].coeff / div->front().coeff;
    const Monomial q = h[start].mono.quotient(div->front().mono);
    h = combine<Rational>(Rational(1), h, start + 1, factor, q, *div, 1, order);
    start = 0;
  }
  return Polynomial(p.ring(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, OrderKind order) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const Monomial& lf = f.leading_monomial(order);
  const Monomial& lg = g.leading_monomial(order);
  const Monomial l = lf.lcm(lg);
  const Polynomial mf = Polynomial::term(f.ring(), l.quotient(lf), 1 / f.leading_coefficient(order));
  const Polynomial mg = Polynomial::term(g.ring(), l.quotient(lg), 1 / g.leading_coefficient(order));
  return mf * f - mg * g;
}

GroebnerResult buchberger(const Ideal& ideal, OrderKind order, const GroebnerBudget& budget) {
  if (budget.max_pairs == 0 || budget.max_coeff_bits == 0) {
    throw std::invalid_argument("Groebner budgets must be positive");
  }
  return Buchberger(ideal.ring, order, budget).run(ideal.generators);
}

bool is_infeasible(const GroebnerBasis& basis) {
  return basis.elements.size() == 1 && basis.elements.front().size() == 1 &&
         basis.elements.front().terms().begin()->first.is_one();
}

}  // namespace soscert
