#include "soscert/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace soscert {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json vector_json(std::span<const Rational> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : v) out.push_back(print_rational(q));
  return out;
}

std::string monomial_text(const Monomial& m, const RingContext& ring) { return print_monomial(m, ring); }

std::string_view status_name(GroebnerStatus s) {
  return s == GroebnerStatus::complete ? "complete" : "budget-exhausted";
}

std::vector<std::string> unknown_names(const Stage2Result& r, std::size_t s) {
  return build_ansatz(s, r.squares).unknowns()->names();
}

}  // namespace

CertificateReport run_verify(const SosInstance& inst) {
  CertificateReport rep(inst);
  const auto t0 = Clock::now();
  rep.check = check_instance(inst);
  rep.check_seconds = seconds_since(t0);
  return rep;
}

CertificateReport run_dual(const SosInstance& inst) {
  CertificateReport rep = run_verify(inst);
  rep.kind = ReportKind::dual;
  if (!rep.check.valid()) return rep;
  const auto t0 = Clock::now();
  rep.stage1 = stage1_pin_summands(inst);
  rep.stage1_seconds = seconds_since(t0);
  return rep;
}

CertificateReport run_certify(const SosInstance& inst, const RunOptions& options) {
  CertificateReport rep = run_dual(inst);
  rep.kind = ReportKind::certify;
  rep.order = options.stage2.order;
  if (!rep.stage1 || !rep.stage1->allows_stage2()) return rep;
  std::size_t lo = options.t_min;
  std::size_t hi = options.t_max;
  if (lo == 0) {
    lo = inst.size() > 1 ? inst.size() - 1 : 1;
    hi = inst.size();
  }
  if (hi < lo) hi = lo;
  for (std::size_t t = lo; t <= hi; ++t) {
    const auto t0 = Clock::now();
    rep.stage2.push_back(decide_t_squares(inst, *rep.stage1, t, options.stage2));
    rep.stage2_seconds.push_back(seconds_since(t0));
  }
  return rep;
}

Outcome outcome_of(const CertificateReport& report) {
  if (!report.check.valid()) return Outcome::identity_failure;
  if (report.kind == ReportKind::verify) return Outcome::definite;
  if (!report.stage1) return Outcome::inconclusive;
  const bool ran_stage2 = report.kind == ReportKind::certify && report.stage1->allows_stage2();
  if (report.stage1->verdict != Verdict::pinned && !ran_stage2) return Outcome::inconclusive;
  for (const auto& r : report.stage2) {
    if (r.verdict == Verdict::budget_exhausted) return Outcome::budget;
  }
  return Outcome::definite;
}

std::vector<std::string> conclusions(const CertificateReport& report) {
  std::vector<std::string> out;
  if (report.kind != ReportKind::certify || !report.stage1 || !report.stage1->allows_stage2()) return out;
  std::optional<std::size_t> not_sum;
  std::optional<std::size_t> sum;
  for (const auto& r : report.stage2) {
    if (r.verdict == Verdict::infeasible) not_sum = std::max(not_sum.value_or(0), r.squares);
    if (r.verdict == Verdict::witness_found) sum = std::min(sum.value_or(r.squares), r.squares);
  }
  // Fewer squares pad with zero rows, so infeasibility at t covers every t' <= t.
  if (not_sum) out.push_back("g is not a sum of " + std::to_string(*not_sum) + " or fewer squares");
  if (sum) {
    out.push_back("g is a sum of " + std::to_string(*sum) + (*sum == 1 ? " square" : " squares") +
                  " (exact witness above)");
  }
  if (not_sum && sum && *sum == *not_sum + 1) {
    out.push_back("sum-of-squares length of g is " + std::to_string(*sum));
    if (*sum == report.source.size() && report.stage1->verdict == Verdict::pinned) {
      out.push_back(
          "note: Gram spectrahedron has no point of rank below s; that it is a single point is a prose "
          "argument, not machine-checked");
    }
  }
  return out;
}

nlohmann::json matrix_json(const RationalMatrix& m, const MonomialBasis& basis) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(print_rational(m(i, j)));
  }
  return {{"basis", basis.labels()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  RationalMatrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    m(k / cols, k % cols) = parse_rational(entries[k].get<std::string>());
  }
  return m;
}

nlohmann::json groebner_json(const GroebnerBasis& basis) {
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : basis.elements) elems.push_back(print_polynomial(e, basis.order));
  return {{"order", order_name(basis.order)},
          {"variables", basis.ring ? basis.ring->names() : std::vector<std::string>{}},
          {"reduced", basis.reduced},
          {"elements", elems}};
}

nlohmann::json report_json(const CertificateReport& rep, const RenderOptions& options) {
  static constexpr const char* kKinds[] = {"verify", "dual", "certify"};
  const SosInstance& inst = rep.source;
  nlohmann::json out;
  out["command"] = kKinds[static_cast<int>(rep.kind)];
  out["instance"] = rep.instance;

  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : inst.generators) gens.push_back(print_polynomial(p));
  nlohmann::json check{{"variables", inst.ring->size()},
                       {"generators", gens},
                       {"s", inst.size()},
                       {"g", print_polynomial(inst.target)},
                       {"g_terms", inst.target.size()},
                       {"homogeneous", rep.check.homogeneous},
                       {"identity_holds", rep.check.identity_holds},
                       {"independent", rep.check.independent},
                       {"rank", rep.check.rank},
                       {"valid", rep.check.valid()}};
  if (rep.check.first_mismatch) {
    check["first_mismatch"] = {{"monomial", monomial_text(*rep.check.first_mismatch, *inst.ring)},
                               {"g", print_rational(rep.check.expected_coefficient)},
                               {"sum_of_squares", print_rational(rep.check.actual_coefficient)}};
  }
  out["instance_check"] = check;

  if (rep.stage1) {
    const Stage1Result& s1 = *rep.stage1;
    nlohmann::json space = nlohmann::json::array();
    for (const auto& m : s1.space.matrices) space.push_back(matrix_json(m.matrix, m.basis));
    nlohmann::json st{{"monomial_basis", s1.basis.labels()},
                      {"unknowns", s1.space.unknowns},
                      {"constraints", s1.space.constraints},
                      {"constraint_rank", s1.space.constraint_rank},
                      {"dimension", s1.space.dimension()},
                      {"space_basis", space},
                      {"psd_element", nullptr},
                      {"kernel", nullptr},
                      {"span_matches", s1.span_matches},
                      {"full_span", s1.full_span},
                      {"verdict", verdict_name(s1.verdict)}};
    if (s1.psd) {
      st["psd_element"] = {{"parameters", vector_json(s1.psd->parameters)},
                           {"matrix", matrix_json(s1.psd->element.matrix, s1.basis)}};
      nlohmann::json vecs = nlohmann::json::array();
      nlohmann::json polys = nlohmann::json::array();
      for (const auto& v : s1.kernel.vectors) {
        vecs.push_back(vector_json(v));
        polys.push_back(print_polynomial(s1.basis.polynomial(v)));
      }
      st["kernel"] = {{"dimension", s1.kernel.dimension()}, {"vectors", vecs}, {"polynomials", polys}};
    }
    if (!s1.reason.empty()) st["reason"] = s1.reason;
    out["stage1"] = st;
  }

  if (rep.kind == ReportKind::certify) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : rep.stage2) {
      const auto& gb = r.groebner;
      nlohmann::json run{{"squares", r.squares},
                         {"unknowns", r.unknowns},
                         {"equations", r.equations},
                         {"groebner",
                          {{"status", status_name(gb.status)},
                           {"basis", groebner_json(gb.basis)},
                           {"infeasible", gb.status == GroebnerStatus::complete && is_infeasible(gb.basis)},
                           {"pairs_created", gb.stats.pairs_created},
                           {"pairs_pruned", gb.stats.pairs_pruned},
                           {"pairs_reduced", gb.stats.pairs_reduced},
                           {"zero_reductions", gb.stats.zero_reductions},
                           {"max_basis_size", gb.stats.max_basis_size},
                           {"max_coeff_bits", gb.stats.max_coeff_bits_seen}}},
                         {"verdict", verdict_name(r.verdict)}};
      if (!gb.budget_reason.empty()) run["groebner"]["budget_reason"] = gb.budget_reason;
      if (r.witness) {
        const auto names = unknown_names(r, inst.size());
        nlohmann::json w = nlohmann::json::object();
        for (std::size_t k = 0; k < names.size(); ++k) w[names[k]] = print_rational((*r.witness)[k]);
        run["witness"] = w;
      }
      runs.push_back(run);
    }
    out["stage2"] = runs;
    out["conclusions"] = conclusions(rep);
  }

  if (options.timings) {
    out["timings"] = {{"check_seconds", rep.check_seconds},
                      {"stage1_seconds", rep.stage1_seconds},
                      {"stage2_seconds", rep.stage2_seconds}};
  }
  return out;
}

namespace {

void print_matrix(std::ostream& os, const RationalMatrix& m, const MonomialBasis& basis) {
  const auto labels = basis.labels();
  std::size_t label_w = 0;
  std::size_t cell_w = 1;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cell_w = std::max(cell_w, print_rational(m(i, j)).size());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    " << std::setw(static_cast<int>(label_w)) << std::left << labels[i] << std::right << " |";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << ' ' << std::setw(static_cast<int>(cell_w)) << print_rational(m(i, j));
    }
    os << '\n';
  }
}

}  // namespace

std::string report_text(const CertificateReport& rep, const RenderOptions& options) {
  const SosInstance& inst = rep.source;
  const InstanceCheck& c = rep.check;
  std::ostringstream os;
  os << "instance: " << rep.instance << "\n";
  os << "variables: " << inst.ring->size() << "\n";
  os << "generators (s=" << inst.size() << "):\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    os << "  p" << (i + 1) << " = " << print_polynomial(inst.generators[i]) << "\n";
  }
  os << "g (" << inst.target.size() << " terms) = " << print_polynomial(inst.target) << "\n";
  if (c.valid()) {
    os << "identity: g = p1^2 + ... + p" << inst.size() << "^2 holds; generators independent (rank "
       << c.rank << "); s=" << inst.size() << "\n";
  } else {
    if (!c.homogeneous) os << "invalid: generators are not homogeneous of one positive degree\n";
    if (c.first_mismatch) {
      os << "identity failure: coefficient of " << print_monomial(*c.first_mismatch, *inst.ring)
         << " is " << print_rational(c.expected_coefficient) << " in g but "
         << print_rational(c.actual_coefficient) << " in the sum of squares\n";
    }
    if (c.homogeneous && !c.independent) {
      os << "invalid: generators are linearly dependent (rank " << c.rank << " < " << inst.size() << ")\n";
    }
  }

  if (rep.stage1) {
    const Stage1Result& s1 = *rep.stage1;
    os << "\nstage 1: functionals vanishing on every p_i*q\n";
    os << "  monomial basis (" << s1.basis.size() << "):";
    for (const auto& l : s1.basis.labels()) os << ' ' << l;
    os << "\n  linear system: " << s1.space.constraints << " equations, " << s1.space.unknowns
       << " unknowns, rank " << s1.space.constraint_rank << "\n";
    os << "  dim E = " << s1.space.dimension() << "\n";
    for (std::size_t k = 0; k < s1.space.dimension(); ++k) {
      os << "  basis matrix " << (k + 1) << " (parameter t" << (k + 1) << "):\n";
      print_matrix(os, s1.space.matrices[k].matrix, s1.basis);
    }
    if (s1.psd) {
      os << "  PSD element: parameters (";
      for (std::size_t k = 0; k < s1.psd->parameters.size(); ++k) {
        os << (k ? ", " : "") << print_rational(s1.psd->parameters[k]);
      }
      os << ")\n  kernel dimension: " << s1.kernel.dimension() << "\n";
      for (const auto& v : s1.kernel.vectors) os << "    " << print_polynomial(s1.basis.polynomial(v)) << "\n";
      os << "  kernel = span{p_i}: " << (s1.span_matches ? "yes" : "no") << "\n";
    }
    if (s1.full_span) os << "  p_i span all forms of degree " << s1.basis.degree() << "\n";
    os << "  verdict: " << verdict_name(s1.verdict);
    if (!s1.reason.empty()) os << " (" << s1.reason << ")";
    os << "\n";
  }

  if (rep.kind == ReportKind::certify && rep.stage1 && rep.stage1->allows_stage2()) {
    for (const auto& r : rep.stage2) {
      const auto& gb = r.groebner;
      os << "\nstage 2: t = " << r.squares << " squares in triangular shape\n";
      const TriangularAnsatz ansatz = build_ansatz(inst.size(), r.squares);
      for (std::size_t i = 1; i <= r.squares; ++i) os << "  f" << i << " = " << ansatz.describe_row(i) << "\n";
      os << "  system: " << r.equations << " equations in " << r.unknowns << " unknowns\n";
      os << "  Groebner basis (" << order_name(gb.basis.order) << ", variables";
      const auto names = ansatz.unknowns()->names();
      if (!names.empty()) os << ' ' << names.front() << " > ... > " << names.back();
      os << "): " << status_name(gb.status) << ", " << gb.basis.elements.size() << " elements, "
         << gb.stats.pairs_reduced << " S-pairs reduced, " << gb.stats.pairs_pruned << " pruned\n";
      if (is_infeasible(gb.basis)) {
        os << "    {1}\n";
      } else {
        for (const auto& e : gb.basis.elements) os << "    " << print_polynomial(e, gb.basis.order) << "\n";
      }
      if (!gb.budget_reason.empty()) os << "  budget: " << gb.budget_reason << "\n";
      if (r.witness) {
        os << "  witness:";
        for (std::size_t k = 0; k < names.size(); ++k) {
          if ((*r.witness)[k] != 0) os << ' ' << names[k] << '=' << print_rational((*r.witness)[k]);
        }
        os << " (all other unknowns 0)\n";
      }
      os << "  verdict: " << verdict_name(r.verdict) << "\n";
    }
  }

  if (const auto lines = conclusions(rep); !lines.empty()) {
    os << "\nconclusions:\n";
    for (const auto& l : lines) os << "  " << l << "\n";
  }

  if (options.timings) {
    os << "\ntimings: check " << rep.check_seconds << " s, stage 1 " << rep.stage1_seconds << " s";
    for (std::size_t k = 0; k < rep.stage2_seconds.size(); ++k) {
      os << ", t=" << rep.stage2[k].squares << " " << rep.stage2_seconds[k] << " s";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace soscert
