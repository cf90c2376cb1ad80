#include "properties.hpp"

#include "support.hpp"

#include <sstream>

namespace testing {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { out_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (out_.failures++ == 0) out_.first_failure = "case " + std::to_string(out_.cases) + ": " + what;
  }
  void next_case() { ++out_.cases; }
  PropertyOutcome done() { return out_; }

 private:
  PropertyOutcome out_;
};

OrderKind random_order(Gen& g) {
  static constexpr OrderKind kOrders[] = {OrderKind::degrevlex, OrderKind::lex, OrderKind::deglex};
  return kOrders[g.range(0, 2)];
}

std::string show(const Polynomial& p) { return print_polynomial(p); }

}  // namespace

PropertyOutcome prop_ring_axioms(std::uint64_t seed, std::size_t cases) {
  Recorder rec("ring axioms");
  Gen g(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const RingPtr ring = make_ring(static_cast<std::size_t>(g.range(1, 4)));
    const Polynomial a = g.poly(ring, 6, 3);
    const Polynomial b = g.poly(ring, 6, 3);
    const Polynomial c = g.poly(ring, 6, 3);
    const Polynomial one = Polynomial::constant(ring, 1);
    const Polynomial zero(ring);
    rec.check((a + b) + c == a + (b + c), "additive associativity");
    rec.check(a + b == b + a, "additive commutativity");
    rec.check((a * b) * c == a * (b * c), "multiplicative associativity");
    rec.check(a * b == b * a, "multiplicative commutativity");
    rec.check(a * (b + c) == a * b + a * c, "distributivity");
    rec.check(a - a == zero && a + zero == a && a * one == a && (a * zero).is_zero(), "identities");
    rec.check(naive(a * b) == naive_mul(naive(a), naive(b)), "product vs oracle: " + show(a) + " * " + show(b));
    rec.check(naive(a + b) == naive_add(naive(a), naive(b)), "sum vs oracle");
    for (const Polynomial* p : {&a, &b, &c}) rec.check(all_lowest_terms(*p), "generated terms not canonical");
    const Polynomial prod = a * b - c * Rational(3, 7);
    rec.check(all_lowest_terms(prod) && all_lowest_terms(pow(a, 2)), "lowest terms after operations");
    rec.next_case();
  }
  return rec.done();
}

PropertyOutcome prop_parser_round_trip(std::uint64_t seed, std::size_t cases) {
  Recorder rec("parser round-trip");
  Gen g(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const RingPtr ring = make_ring(static_cast<std::size_t>(g.range(1, 6)));
    Polynomial p = g.poly(ring, 8, 4);
    if (g.coin()) {
      Rational big(Integer("123456789012345678901234567890"), Integer(g.range(1, 97)));
      big.canonicalize();
      p *= big;
    }
    const OrderKind order = random_order(g);
    const std::string text = print_polynomial(p, order);
    try {
      const Polynomial back = parse_polynomial(text, ring);
      rec.check(back == p, "parse(print(p)) != p for '" + text + "'");
      rec.check(print_polynomial(back, order) == text, "print not deterministic for '" + text + "'");
    } catch (const ParseError& e) {
      rec.check(false, "printed form rejected: '" + text + "': " + e.what());
    }
    rec.next_case();
  }
  return rec.done();
}

PropertyOutcome prop_ldlt_reconstruction(std::uint64_t seed, std::size_t cases) {
  Recorder rec("LDL^T reconstruction");
  Gen g(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.range(1, 7));
    RationalMatrix m;
    const int kind = static_cast<int>(k % 3);
    if (kind == 0) {
      m = g.symmetric(n);
    } else {
      const RationalMatrix b = g.matrix(static_cast<std::size_t>(g.range(1, static_cast<long>(n))), n);
      m = b.transpose() * b;
      if (kind == 2) {
        // Push one direction negative: w^T M w = -1.
        RationalVector w = g.vector(n);
        w[static_cast<std::size_t>(g.range(0, static_cast<long>(n) - 1))] += 1;
        Rational ww = 0;
        for (const auto& x : w) ww += x * x;
        if (ww == 0) w[0] = ww = 1;
        const Rational scale = (bilinear(w, m, w) + 1) / (ww * ww);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m(i, j) -= scale * w[i] * w[j];
        }
        rec.check(bilinear(w, m, w) == -1, "negative direction construction");
      }
    }
    const LdltResult r = ldlt_psd(m);
    if (kind == 1) rec.check(r.psd, "B^T B reported not PSD");
    if (kind == 2) rec.check(!r.psd, "matrix with a negative direction reported PSD");
    if (r.psd) {
      rec.check(!r.witness, "witness on PSD matrix");
      RationalMatrix pmp(n, n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) pmp(a, b) = m(r.permutation[a], r.permutation[b]);
      }
      RationalMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = r.diagonal[i];
        rec.check(r.diagonal[i] >= 0, "negative pivot on PSD matrix");
        rec.check(r.lower(i, i) == 1, "L not unit diagonal");
        for (std::size_t j = i + 1; j < n; ++j) rec.check(r.lower(i, j) == 0, "L not lower triangular");
      }
      rec.check(pmp == r.lower * d * r.lower.transpose(), "P M P^T != L D L^T");
      std::vector<std::size_t> sorted = r.permutation;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < n; ++i) rec.check(sorted[i] == i, "permutation invalid");
    } else {
      rec.check(r.witness.has_value(), "missing witness");
      if (r.witness) rec.check(bilinear(*r.witness, m, *r.witness) < 0, "witness value not negative");
    }
    rec.next_case();
  }
  return rec.done();
}

PropertyOutcome prop_rank_nullity(std::uint64_t seed, std::size_t cases) {
  Recorder rec("rank-nullity");
  Gen g(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t rows = static_cast<std::size_t>(g.range(1, 8));
    const std::size_t cols = static_cast<std::size_t>(g.range(1, 8));
    RationalMatrix m;
    if (k % 2 == 0) {
      m = g.matrix(rows, cols, static_cast<int>(g.range(0, 80)));
    } else {
      const std::size_t inner = static_cast<std::size_t>(g.range(1, 4));
      m = g.matrix(rows, inner) * g.matrix(inner, cols);
    }
    const std::size_t r = rank(m);
    const KernelBasis ker = kernel(m);
    rec.check(r + ker.dimension() == cols, "rank + nullity != cols");
    rec.check(r == oracle_rank(m), "rank differs from elimination oracle");
    for (const auto& v : ker.vectors) {
      const RationalVector mv = m * v;
      rec.check(std::all_of(mv.begin(), mv.end(), [](const Rational& x) { return x == 0; }), "M v != 0");
    }
    if (ker.dimension() > 0) {
      rec.check(oracle_rank(RationalMatrix::from_rows(ker.vectors, cols)) == ker.dimension(),
                "kernel vectors dependent");
    }
    const RrefResult once = rref(m);
    const RrefResult twice = rref(once.reduced);
    rec.check(twice.reduced == once.reduced && twice.rank == once.rank, "rref not idempotent");
    rec.next_case();
  }
  return rec.done();
}

namespace {

// Small random ideals that Buchberger finishes quickly.
std::optional<std::pair<Ideal, OrderKind>> random_ideal(Gen& g) {
  const RingPtr ring = make_ring(static_cast<std::size_t>(g.range(2, 3)));
  std::vector<Polynomial> gens;
  const long count = g.range(2, 3);
  for (long i = 0; i < count; ++i) {
    Polynomial::TermMap t;
    const long terms = g.range(1, 3);
    for (long j = 0; j < terms; ++j) t[g.monomial(ring->size(), 2)] += Rational(g.range(-3, 3));
    gens.emplace_back(ring, std::move(t));
  }
  Ideal ideal(ring, gens);
  if (ideal.generators.empty()) return std::nullopt;
  return std::make_pair(ideal, random_order(g));
}

const GroebnerBudget kSmallBudget{5000, 4096};

}  // namespace

PropertyOutcome prop_groebner_confluence(std::uint64_t seed, std::size_t cases) {
  Recorder rec("Groebner confluence");
  Gen g(seed);
  std::size_t attempts = 0;
  while (rec.done().cases < cases && attempts++ < cases * 4) {
    auto drawn = random_ideal(g);
    if (!drawn) continue;
    const auto& [ideal, order] = *drawn;
    const GroebnerResult res = buchberger(ideal, order, kSmallBudget);
    if (res.status != GroebnerStatus::complete) continue;
    const auto& basis = res.basis.elements;
    const Polynomial p = g.poly(ideal.ring, 5, 3);
    const Polynomial nf = normal_form(p, basis, order);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Polynomial> shuffled = basis;
      g.shuffle(shuffled);
      rec.check(normal_form(p, shuffled, order) == nf, "normal form depends on division order");
    }
    for (const auto& [m, c] : nf.terms()) {
      for (const auto& b : basis) {
        rec.check(!b.leading_monomial(order).divides(m), "remainder term divisible by a leading monomial");
      }
    }
    rec.check(normal_form(p - nf, basis, order).is_zero(), "p - NF(p) not in the ideal");
    rec.next_case();
  }
  return rec.done();
}

PropertyOutcome prop_groebner_permutation(std::uint64_t seed, std::size_t cases) {
  Recorder rec("Groebner input-permutation invariance");
  Gen g(seed);
  std::size_t attempts = 0;
  while (rec.done().cases < cases && attempts++ < cases * 4) {
    auto drawn = random_ideal(g);
    if (!drawn) continue;
    const auto& [ideal, order] = *drawn;
    const GroebnerResult res = buchberger(ideal, order, kSmallBudget);
    if (res.status != GroebnerStatus::complete) continue;
    std::vector<Polynomial> permuted = ideal.generators;
    g.shuffle(permuted);
    for (auto& p : permuted) p *= g.nonzero_rational();
    const GroebnerResult again = buchberger(Ideal(ideal.ring, permuted), order, kSmallBudget);
    if (again.status != GroebnerStatus::complete) continue;
    rec.check(again.basis.elements == res.basis.elements, "reduced basis depends on generator order");
    rec.next_case();
  }
  return rec.done();
}

PropertyOutcome prop_moment_well_defined(std::uint64_t seed, std::size_t cases) {
  Recorder rec("moment-matrix well-definedness");

  auto well_defined = [&rec](const RationalMatrix& m, const MonomialBasis& basis, const std::string& label) {
    // Entry (a, b) must depend only on m_a * m_b; compare every pair against
    // the first entry seen for that product.
    std::map<Monomial, Rational> seen;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        auto [it, inserted] = seen.try_emplace(basis[a] * basis[b], m(a, b));
        if (!inserted) rec.check(it->second == m(a, b), label + ": entries differ for one product monomial");
      }
    }
  };

  // Exhaustive on the five-variable instance's 15x15 matrices.
  const SosInstance inst = builtin("example-2.2");
  const Stage1Result s1 = stage1_pin_summands(inst);
  for (const auto& mm : s1.space.matrices) well_defined(mm.matrix, mm.basis, "dual space basis");
  if (s1.psd) well_defined(s1.psd->element.matrix, s1.basis, "Q(1,1)");

  Gen g(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const RingPtr ring = make_ring(static_cast<std::size_t>(g.range(1, 5)));
    const auto d = static_cast<std::uint32_t>(g.range(1, ring->size() > 3 ? 2 : 3));
    LinearFunctional ell{monomial_basis(ring, 2 * d), {}};
    ell.values = g.vector(ell.support.size());
    const MonomialBasis basis = k % 2 ? monomial_basis(ring, d, random_order(g)) : presentation_basis(ring, d);
    const MomentMatrix mm = functional_to_moment(ell, basis);
    rec.check(mm.matrix.is_symmetric(), "moment matrix not symmetric");
    well_defined(mm.matrix, basis, "random functional");
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Polynomial prod = Polynomial::term(ring, basis[a] * basis[b]);
        rec.check(mm.matrix(a, b) == ell(prod), "entry differs from ell(m_a m_b)");
      }
    }
    rec.next_case();
  }
  return rec.done();
}

std::vector<NamedProperty> acceptance_properties() {
  return {
      {"ring axioms", [](std::uint64_t s) { return prop_ring_axioms(s); }},
      {"parser round-trip", [](std::uint64_t s) { return prop_parser_round_trip(s); }},
      {"LDL^T reconstruction", [](std::uint64_t s) { return prop_ldlt_reconstruction(s); }},
      {"rank-nullity", [](std::uint64_t s) { return prop_rank_nullity(s); }},
      {"GB confluence", [](std::uint64_t s) { return prop_groebner_confluence(s); }},
      {"GB input-permutation invariance", [](std::uint64_t s) { return prop_groebner_permutation(s); }},
      {"moment-matrix well-definedness", [](std::uint64_t s) { return prop_moment_well_defined(s); }},
  };
}

}  // namespace testing
