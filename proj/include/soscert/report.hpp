// Certificate reports: assembly and text/JSON rendering.
#pragma once

#include "soscert/certify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace soscert {

enum class ReportKind { verify, dual, certify };

struct CertificateReport {
  explicit CertificateReport(SosInstance inst) : instance(inst.name), source(std::move(inst)) {}

  ReportKind kind = ReportKind::verify;
  std::string instance;
  SosInstance source;
  InstanceCheck check;
  std::optional<Stage1Result> stage1;
  std::vector<Stage2Result> stage2;
  OrderKind order = OrderKind::degrevlex;
  /// Wall-clock seconds: instance check, stage 1, then one per stage-2 run.
  double check_seconds = 0;
  double stage1_seconds = 0;
  std::vector<double> stage2_seconds;
};

struct RunOptions {
  std::size_t t_min = 0;
  std::size_t t_max = 0;
  Stage2Options stage2;
};

/// Exit status partition shared by the CLI and the C API.
enum class Outcome { definite = 0, identity_failure = 1, parse_error = 2, inconclusive = 3, budget = 4 };

CertificateReport run_verify(const SosInstance& inst);
CertificateReport run_dual(const SosInstance& inst);
/// Stage 2 runs only when stage 1 is pinned. t_min = 0 means "s - 1 and s".
CertificateReport run_certify(const SosInstance& inst, const RunOptions& options);

Outcome outcome_of(const CertificateReport& report);

/// Statements about g that follow from the stage-2 verdicts in the report.
std::vector<std::string> conclusions(const CertificateReport& report);

struct RenderOptions {
  /// Timings break byte-identical output across runs; off by default.
  bool timings = false;
};

nlohmann::json report_json(const CertificateReport& report, const RenderOptions& options = {});
std::string report_text(const CertificateReport& report, const RenderOptions& options = {});

/// {"basis": [...], "rows": N, "cols": N, "entries": ["a/b", ...]} row-major.
nlohmann::json matrix_json(const RationalMatrix& m, const MonomialBasis& basis);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json groebner_json(const GroebnerBasis& basis);

}  // namespace soscert
