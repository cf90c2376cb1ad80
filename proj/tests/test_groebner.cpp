#include <doctest.h>

#include "properties.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Polynomial P(const char* text, const RingPtr& ring) { return parse_polynomial(text, ring); }

void check_reduced_basis(const Ideal& ideal, const GroebnerBasis& gb) {
  const OrderKind o = gb.order;
  const auto& el = gb.elements;
  for (const auto& p : ideal.generators) CHECK(normal_form(p, el, o).is_zero());
  for (std::size_t i = 0; i < el.size(); ++i) {
    CHECK(el[i].leading_coefficient(o) == 1);
    if (i + 1 < el.size()) CHECK(compare(el[i].leading_monomial(o), el[i + 1].leading_monomial(o), o) > 0);
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      CHECK(normal_form(s_polynomial(el[i], el[j], o), el, o).is_zero());
      // Reduced: no term of el[i] is divisible by LM(el[j]).
      for (const auto& [m, c] : el[i].terms()) CHECK_FALSE(el[j].leading_monomial(o).divides(m));
    }
  }
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("normal_form examples") {
  const RingPtr r = make_ring(2);
  const std::vector<Polynomial> x1{P("x1", r)};
  CHECK(normal_form(P("x1^2", r), x1, OrderKind::degrevlex).is_zero());
  CHECK(normal_form(P("x1*x2 + x2", r), x1, OrderKind::degrevlex) == P("x2", r));

  const Polynomial g = P("x1^3 - 2*x1*x2 + 5", r);
  const GroebnerResult gb = buchberger(Ideal(r, {g}));
  CHECK(normal_form(g, gb.basis.elements, OrderKind::degrevlex).is_zero());

  CHECK_THROWS_AS(normal_form(P("x1", r), std::vector<Polynomial>{P("x1", make_ring(3))}, OrderKind::lex),
                  ContextMismatch);
}

TEST_CASE("s_polynomial examples") {
  const RingPtr r = make_ring(2);
  const Polynomial f = P("x1^2 - x2", r);
  CHECK(s_polynomial(f, f, OrderKind::degrevlex).is_zero());
  CHECK(s_polynomial(P("x1^2", r), P("x1*x2", r), OrderKind::degrevlex).is_zero());

  // Lex with x1 > x2: LT(g) = -x1, so S = f + x1*g = x1*x2^2 - x2, which
  // reduces to x2^4 - x2 modulo {f, g}.
  const Polynomial g = P("x2^2 - x1", r);
  const Polynomial s = s_polynomial(f, g, OrderKind::lex);
  CHECK(s == P("x1*x2^2 - x2", r));
  const std::vector<Polynomial> fg{f, g};
  CHECK(normal_form(s, fg, OrderKind::lex) == P("x2^4 - x2", r));
  // Graded orders: the leading monomials x1^2 and x2^2 are coprime.
  CHECK(normal_form(s_polynomial(f, g, OrderKind::degrevlex), fg, OrderKind::degrevlex).is_zero());

  CHECK_THROWS_AS(s_polynomial(f, Polynomial(r), OrderKind::lex), std::invalid_argument);
}

TEST_CASE("buchberger examples") {
  const RingPtr u = make_ring(std::vector<std::string>{"u"});
  const GroebnerResult one = buchberger(Ideal(u, {P("u", u), P("u - 1", u)}));
  CHECK(one.status == GroebnerStatus::complete);
  CHECK(is_infeasible(one.basis));
  REQUIRE(one.basis.elements.size() == 1);
  CHECK(one.basis.elements[0] == Polynomial::constant(u, 1));

  const RingPtr u1 = make_ring(std::vector<std::string>{"u1"});
  const GroebnerResult sq = buchberger(Ideal(u1, {P("u1^2 - 1", u1)}));
  REQUIRE(sq.basis.elements.size() == 1);
  CHECK(sq.basis.elements[0] == P("u1^2 - 1", u1));
  CHECK_FALSE(is_infeasible(sq.basis));

  // Lex elimination of a small system.
  const RingPtr r = make_ring(2);
  const Ideal lexi(r, {P("x1^2 - x2", r), P("x2^2 - x1", r)});
  const GroebnerResult lx = buchberger(lexi, OrderKind::lex);
  CHECK(lx.basis.elements == std::vector<Polynomial>{P("x1 - x2^2", r), P("x2^4 - x2", r)});
  check_reduced_basis(lexi, lx.basis);

  const Ideal cyclic(make_ring(3), {P("x1 + x2 + x3", make_ring(3)), P("x1*x2 + x2*x3 + x3*x1", make_ring(3)),
                                    P("x1*x2*x3 - 1", make_ring(3))});
  for (OrderKind o : {OrderKind::degrevlex, OrderKind::lex, OrderKind::deglex}) {
    const GroebnerResult res = buchberger(cyclic, o);
    CHECK(res.status == GroebnerStatus::complete);
    check_reduced_basis(cyclic, res.basis);
  }

  CHECK(buchberger(Ideal(r, {Polynomial(r)})).basis.elements.empty());
  CHECK(Ideal(r, {Polynomial(r), P("x1", r)}).generators.size() == 1);
}

TEST_CASE("budgets are reported, not thrown") {
  const RingPtr r = make_ring(4);
  const Ideal cyclic(r, {P("x1 + x2 + x3 + x4", r), P("x1*x2 + x2*x3 + x3*x4 + x4*x1", r),
                         P("x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2", r), P("x1*x2*x3*x4 - 1", r)});
  const GroebnerResult res = buchberger(cyclic, OrderKind::lex, GroebnerBudget{1, 65536});
  CHECK(res.status == GroebnerStatus::budget_exhausted);
  CHECK_FALSE(res.basis.reduced);
  CHECK_FALSE(res.budget_reason.empty());
  CHECK(res.stats.pairs_reduced <= 1);

  const GroebnerResult bits = buchberger(cyclic, OrderKind::lex, GroebnerBudget{1000, 1});
  CHECK(bits.status == GroebnerStatus::budget_exhausted);

  CHECK_THROWS_AS(buchberger(cyclic, OrderKind::lex, GroebnerBudget{0, 10}), std::invalid_argument);
}

TEST_CASE("property: normal forms are confluent modulo a Groebner basis") {
  const PropertyOutcome r = prop_groebner_confluence(0x5eed0401);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: reduced basis is invariant under input permutation and scaling") {
  const PropertyOutcome r = prop_groebner_permutation(0x5eed0402);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: output bases are reduced Groebner bases of the input") {
  Gen g(0x5eed0403);
  std::size_t done = 0;
  for (std::size_t attempt = 0; attempt < 400 && done < 100; ++attempt) {
    const RingPtr ring = make_ring(static_cast<std::size_t>(g.range(2, 3)));
    std::vector<Polynomial> gens;
    for (long i = 0, n = g.range(2, 3); i < n; ++i) {
      Polynomial::TermMap t;
      for (long j = 0, m = g.range(1, 3); j < m; ++j) t[g.monomial(ring->size(), 2)] += Rational(g.range(-3, 3));
      gens.emplace_back(ring, std::move(t));
    }
    const Ideal ideal(ring, gens);
    const OrderKind o = attempt % 2 ? OrderKind::lex : OrderKind::degrevlex;
    const GroebnerResult res = buchberger(ideal, o, GroebnerBudget{5000, 4096});
    if (res.status != GroebnerStatus::complete) continue;
    check_reduced_basis(ideal, res.basis);
    ++done;
  }
  CHECK(done >= 100);
}

}  // TEST_SUITE
