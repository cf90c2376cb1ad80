#include "soscert/certify.hpp"

#include "soscert/builtins.hpp"

#include <map>
#include <stdexcept>

namespace soscert {

std::uint32_t SosInstance::degree() const {
  for (const auto& p : generators) {
    if (auto h = is_homogeneous(p); h && !h->zero) return h->degree;
  }
  return 0;
}

SosInstance make_instance(std::string name, RingPtr ring, std::vector<Polynomial> generators,
                          std::optional<Polynomial> target) {
  for (const auto& p : generators) require_same_ring(ring, p.ring());
  Polynomial g = target ? *target : expand_sos(ring, generators);
  require_same_ring(ring, g.ring());
  return SosInstance{std::move(name), std::move(ring), std::move(generators), std::move(g)};
}

SosInstance make_instance(std::string name, InstanceText text) {
  return make_instance(std::move(name), text.ring, std::move(text.generators), std::move(text.target));
}

InstanceCheck check_instance(const SosInstance& inst) {
  InstanceCheck check;
  const std::uint32_t d = inst.degree();
  check.homogeneous = d > 0 && !inst.generators.empty();
  for (const auto& p : inst.generators) {
    auto h = is_homogeneous(p);
    if (!h || h->zero || h->degree != d) check.homogeneous = false;
  }

  const Polynomial sum = expand_sos(inst.ring, inst.generators);
  const Polynomial diff = inst.target - sum;
  check.identity_holds = diff.is_zero();
  if (!diff.is_zero()) {
    const Monomial& m = diff.leading_monomial(OrderKind::degrevlex);
    check.first_mismatch = m;
    check.expected_coefficient = inst.target.coefficient(m);
    check.actual_coefficient = sum.coefficient(m);
  }

  if (check.homogeneous) {
    const MonomialBasis basis(inst.ring, d);
    std::vector<RationalVector> rows;
    for (const auto& p : inst.generators) rows.push_back(basis.coordinates(p));
    check.rank = rank(RationalMatrix::from_rows(rows, basis.size()));
    check.independent = check.rank == inst.generators.size();
  }
  return check;
}

bool verify_instance(const SosInstance& inst) { return check_instance(inst).valid(); }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pinned: return "pinned";
    case Verdict::infeasible: return "infeasible";
    case Verdict::feasible_complex: return "feasible-complex";
    case Verdict::witness_found: return "witness-found";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

Stage1Result stage1_pin_summands(const SosInstance& inst) {
  if (!verify_instance(inst)) throw std::invalid_argument("stage 1 requires a verified instance");
  const std::uint32_t d = inst.degree();
  Stage1Result out{presentation_basis(inst.ring, d), {}, {}, {}, false, false, Verdict::inconclusive, {}};
  std::vector<RationalVector> coords;
  for (const auto& p : inst.generators) coords.push_back(out.basis.coordinates(p));
  out.full_span = rank(RationalMatrix::from_rows(coords, out.basis.size())) == out.basis.size();
  out.space = dual_obstruction_space(inst.generators, inst.ring, d, out.basis);
  out.psd = pick_psd_element(out.space);
  if (!out.psd) {
    out.reason = out.space.dimension() == 0
                     ? "dual space is {0}: no nonzero functional vanishes on all p_i*q"
                     : "no PSD element found among the tried parameter sign patterns";
    return out;
  }
  out.kernel = kernel(out.psd->element.matrix);
  out.span_matches = same_span(out.kernel.vectors, coords);
  if (out.span_matches) {
    out.verdict = Verdict::pinned;
  } else {
    out.reason = "kernel of the PSD element (dimension " + std::to_string(out.kernel.dimension()) +
                 ") is larger than span{p_i}";
  }
  return out;
}

// -- Ansatz ---------------------------------------------------------------

TriangularAnsatz::TriangularAnsatz(std::size_t s, std::size_t t) : s_(s), t_(t) {
  if (s == 0 || t == 0) throw std::invalid_argument("ansatz needs s >= 1 and t >= 1");
  const bool compact = s <= 9 && t <= 9;
  std::vector<std::string> names;
  index_.assign(t + 1, std::vector<std::optional<std::size_t>>(s + 1));
  for (std::size_t i = 1; i <= t && i <= s; ++i) {
    for (std::size_t j = i; j <= s; ++j) {
      index_[i][j] = names.size();
      names.push_back("u" + std::to_string(i) + (compact ? "" : "_") + std::to_string(j));
    }
  }
  ring_ = make_ring(std::move(names));
}

std::optional<std::size_t> TriangularAnsatz::unknown_index(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > t_ || j > s_) return std::nullopt;
  return index_[i][j];
}

Polynomial TriangularAnsatz::coefficient(std::size_t i, std::size_t j) const {
  auto idx = unknown_index(i, j);
  if (!idx) return Polynomial(ring_);
  return Polynomial::variable(ring_, *idx);
}

std::string TriangularAnsatz::describe_row(std::size_t i) const {
  std::string out;
  for (std::size_t j = 1; j <= s_; ++j) {
    auto idx = unknown_index(i, j);
    if (!idx) continue;
    if (!out.empty()) out += " + ";
    out += ring_->name(*idx) + "*p" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

TriangularAnsatz build_ansatz(std::size_t s, std::size_t t) { return TriangularAnsatz(s, t); }

AnsatzSystem ansatz_system(const SosInstance& inst, const TriangularAnsatz& ansatz) {
  const std::size_t s = inst.size();
  if (ansatz.basis_size() != s) throw std::invalid_argument("ansatz size differs from instance size");
  const RingPtr& u = ansatz.unknowns();

  // Σ_i f_i² = Σ_{j<=k} w_jk C_jk(u) p_j p_k with C_jk = Σ_i u_ij u_ik.
  std::map<Monomial, Polynomial> coeffs;
  for (const auto& [m, c] : inst.target.terms()) coeffs.emplace(m, Polynomial::constant(u, c));
  for (std::size_t j = 1; j <= s; ++j) {
    for (std::size_t k = j; k <= s; ++k) {
      Polynomial cjk(u);
      for (std::size_t i = 1; i <= j && i <= ansatz.squares(); ++i) {
        cjk += ansatz.coefficient(i, j) * ansatz.coefficient(i, k);
      }
      if (cjk.is_zero()) continue;
      if (j != k) cjk *= Rational(2);
      const Polynomial prod = inst.generators[j - 1] * inst.generators[k - 1];
      for (const auto& [m, c] : prod.terms()) {
        auto [it, inserted] = coeffs.try_emplace(m, Polynomial(u));
        it->second -= cjk * c;
      }
    }
  }
  std::vector<std::pair<Monomial, Polynomial>> eqs;
  for (auto& [m, p] : coeffs) {
    if (p.is_zero()) continue;
    if (p.leading_coefficient(OrderKind::degrevlex) < 0) p = -p;
    eqs.emplace_back(m, std::move(p));
  }
  std::sort(eqs.begin(), eqs.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first, OrderKind::degrevlex) > 0;
  });
  std::vector<Polynomial> gens;
  std::vector<Monomial> sources;
  for (auto& [m, p] : eqs) {
    sources.push_back(m);
    gens.push_back(std::move(p));
  }
  return AnsatzSystem{Ideal(u, std::move(gens)), std::move(sources)};
}

Ideal ansatz_equations(const SosInstance& inst, const TriangularAnsatz& ansatz) {
  return ansatz_system(inst, ansatz).ideal;
}

namespace {

std::optional<RationalVector> search_witness(const Ideal& ideal, const TriangularAnsatz& ansatz,
                                             std::size_t patterns) {
  const std::size_t diag = std::min(ansatz.squares(), ansatz.basis_size());
  const std::size_t total = diag >= 63 ? patterns : std::min<std::size_t>(patterns, std::size_t{1} << diag);
  for (std::size_t mask = 0; mask < total; ++mask) {
    RationalVector point(ansatz.unknown_count(), Rational(0));
    for (std::size_t i = 1; i <= diag; ++i) {
      point[*ansatz.unknown_index(i, i)] = ((mask >> (i - 1)) & 1U) ? -1 : 1;
    }
    bool ok = true;
    for (const auto& g : ideal.generators) {
      if (g.evaluate(point) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return point;
  }
  return std::nullopt;
}

}  // namespace

Stage2Result decide_t_squares(const SosInstance& inst, const Stage1Result& stage1, std::size_t t,
                              const Stage2Options& options) {
  if (!stage1.allows_stage2()) {
    throw std::logic_error("stage 2 refused: stage 1 did not pin the summands to span{p_i}");
  }
  const TriangularAnsatz ansatz = build_ansatz(inst.size(), t);
  AnsatzSystem system = ansatz_system(inst, ansatz);
  Stage2Result out;
  out.squares = t;
  out.unknowns = ansatz.unknown_count();
  out.equations = system.ideal.generators.size();
  out.groebner = buchberger(system.ideal, options.order, options.budget);
  if (out.groebner.status == GroebnerStatus::budget_exhausted) {
    out.verdict = Verdict::budget_exhausted;
    return out;
  }
  if (is_infeasible(out.groebner.basis)) {
    out.verdict = Verdict::infeasible;
    return out;
  }
  out.witness = search_witness(system.ideal, ansatz, options.witness_patterns);
  out.verdict = out.witness ? Verdict::witness_found : Verdict::feasible_complex;
  return out;
}

// -- Triangular reduction -------------------------------------------------

TriangularDecomposition triangular_reduce(std::span<const Polynomial> q, std::span<const Polynomial> p) {
  if (p.empty()) throw std::invalid_argument("triangular_reduce needs at least one basis polynomial");
  const RingPtr& ring = p.front().ring();
  auto h = is_homogeneous(p.front());
  if (!h || h->zero) throw std::invalid_argument("basis polynomials must be nonzero and homogeneous");
  const std::uint32_t d = h->degree;
  for (const auto& x : p) {
    auto hx = is_homogeneous(x);
    if (!hx || hx->zero || hx->degree != d) throw std::invalid_argument("basis polynomials must share one degree");
  }
  const MonomialBasis basis(ring, d);
  const std::size_t s = p.size();
  const std::size_t n = basis.size();

  // Columns: p_1..p_s then the target; solve each q_i in the p-coordinates.
  std::vector<RationalVector> pc;
  for (const auto& x : p) pc.push_back(basis.coordinates(x));
  if (rank(RationalMatrix::from_rows(pc, n)) != s) throw std::invalid_argument("basis polynomials are dependent");

  RationalMatrix a(q.size(), s);
  for (std::size_t i = 0; i < q.size(); ++i) {
    require_same_ring(ring, q[i].ring());
    RationalVector qc;
    try {
      qc = basis.coordinates(q[i]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("q" + std::to_string(i + 1) + " is not in span{p}");
    }
    RationalMatrix aug(n, s + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < s; ++c) aug(r, c) = pc[c][r];
      aug(r, s) = qc[r];
    }
    const RrefResult red = rref(aug);
    if (red.rank > s) throw std::invalid_argument("q" + std::to_string(i + 1) + " is not in span{p}");
    for (std::size_t k = 0; k < s; ++k) a(i, k) = red.reduced(k, s);
  }

  const RationalMatrix m = a.transpose() * a;
  const LdltResult f = ldlt_psd(m, Pivoting::none);
  TriangularDecomposition out;
  for (std::size_t k = 0; k < s; ++k) {
    if (f.diagonal[k] == 0) continue;
    RationalVector row(s);
    Polynomial poly(ring);
    for (std::size_t j = k; j < s; ++j) {
      row[j] = f.lower(j, k);
      if (row[j] != 0) poly += p[j] * row[j];
    }
    out.weights.push_back(f.diagonal[k]);
    out.rows.push_back(std::move(row));
    out.polys.push_back(std::move(poly));
  }
  out.rank = out.weights.size();
  return out;
}

// -- Family generator -----------------------------------------------------

SosInstance generate_family_instance(std::size_t n, std::optional<std::vector<Polynomial>> seed) {
  if (n < 2) throw std::invalid_argument("family instances need n >= 2");
  if (!seed) {
    if (n != 5) {
      throw std::invalid_argument("n = " + std::to_string(n) +
                                  " needs a seed of n-1 quadratic forms in n-1 variables "
                                  "(the built-in boundary form only covers n = 5)");
    }
    seed = parse_instance(*builtin_instance_text("example-2.1")).generators;
  }
  if (seed->size() != n - 1) throw std::invalid_argument("seed must contain n-1 polynomials");
  const RingPtr ring = make_ring(n);
  std::vector<Polynomial> gens;
  for (const auto& p : *seed) {
    if (p.ring()->size() != n - 1) throw std::invalid_argument("seed polynomials must use n-1 variables");
    auto h = is_homogeneous(p);
    if (!h || h->zero || h->degree != 2) throw std::invalid_argument("seed polynomials must be nonzero quadratic forms");
    gens.push_back(lift(p, ring));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, n - 1));
  }
  return make_instance("family-n" + std::to_string(n), ring, std::move(gens));
}

}  // namespace soscert
