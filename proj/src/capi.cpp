#include "soscert/soscert.h"

#include "soscert/builtins.hpp"
#include "soscert/certify.hpp"
#include "soscert/parser.hpp"
#include "soscert/report.hpp"

#include <new>
#include <string>

struct soscert_instance {
  soscert::SosInstance inst;
  std::string text;
};

struct soscert_report {
  soscert_status status;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

soscert_status fail(soscert_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class Fn>
soscert_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const soscert::ParseError& e) {
    return fail(SOSCERT_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SOSCERT_INTERNAL_ERROR, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(SOSCERT_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SOSCERT_INTERNAL_ERROR, e.what());
  }
}

soscert_status wrap_instance(soscert::SosInstance inst, soscert_instance** out) {
  soscert::InstanceText text{inst.ring, inst.generators, inst.target};
  *out = new soscert_instance{std::move(inst), soscert::print_instance(text)};
  return SOSCERT_OK;
}

soscert::RunOptions run_options(const soscert_options* o) {
  soscert_options defaults;
  soscert_options_init(&defaults);
  if (!o) o = &defaults;
  if (o->max_pairs == 0 || o->max_coeff_bits == 0) throw std::invalid_argument("budgets must be positive");
  if (o->t_max != 0 && o->t_max < o->t_min) throw std::invalid_argument("empty square-count range");
  soscert::RunOptions r;
  r.t_min = o->t_min;
  r.t_max = o->t_max == 0 ? o->t_min : o->t_max;
  switch (o->order) {
    case SOSCERT_ORDER_DEGREVLEX: r.stage2.order = soscert::OrderKind::degrevlex; break;
    case SOSCERT_ORDER_LEX: r.stage2.order = soscert::OrderKind::lex; break;
    case SOSCERT_ORDER_DEGLEX: r.stage2.order = soscert::OrderKind::deglex; break;
    default: throw std::invalid_argument("unknown monomial order");
  }
  r.stage2.budget.max_pairs = o->max_pairs;
  r.stage2.budget.max_coeff_bits = o->max_coeff_bits;
  return r;
}

soscert_status emit(const soscert::CertificateReport& rep, const soscert_options* o, soscert_report** out) {
  soscert::RenderOptions render;
  render.timings = o && o->include_timings != 0;
  const auto status = static_cast<soscert_status>(soscert::outcome_of(rep));
  *out = new soscert_report{status, soscert::report_text(rep, render),
                            soscert::report_json(rep, render).dump(2) + "\n"};
  return status;
}

}  // namespace

extern "C" {

const char* soscert_version(void) { return "0.1.0"; }

const char* soscert_last_error(void) { return g_last_error.c_str(); }

const char* soscert_status_name(soscert_status status) {
  switch (status) {
    case SOSCERT_OK: return "ok";
    case SOSCERT_IDENTITY_FAILURE: return "identity-failure";
    case SOSCERT_PARSE_ERROR: return "parse-error";
    case SOSCERT_INCONCLUSIVE: return "inconclusive";
    case SOSCERT_BUDGET_EXHAUSTED: return "budget-exhausted";
    case SOSCERT_INVALID_ARGUMENT: return "invalid-argument";
    case SOSCERT_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

void soscert_options_init(soscert_options* options) {
  if (!options) return;
  const soscert::GroebnerBudget budget;
  options->t_min = 0;
  options->t_max = 0;
  options->order = SOSCERT_ORDER_DEGREVLEX;
  options->max_pairs = budget.max_pairs;
  options->max_coeff_bits = budget.max_coeff_bits;
  options->include_timings = 0;
}

soscert_status soscert_instance_parse(const char* text, const char* name, soscert_instance** out) {
  if (!text || !out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    return wrap_instance(soscert::make_instance(name ? name : "file", soscert::parse_instance(text)), out);
  });
}

soscert_status soscert_instance_builtin(const char* name, soscert_instance** out) {
  if (!name || !out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  auto text = soscert::builtin_instance_text(name);
  if (!text) return fail(SOSCERT_INVALID_ARGUMENT, std::string("unknown builtin '") + name + "'");
  return guarded([&] { return wrap_instance(soscert::make_instance(name, soscert::parse_instance(*text)), out); });
}

soscert_status soscert_instance_family(unsigned n, soscert_instance** out) {
  if (!out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return wrap_instance(soscert::generate_family_instance(n), out); });
}

void soscert_instance_free(soscert_instance* instance) { delete instance; }

size_t soscert_instance_variables(const soscert_instance* instance) {
  return instance ? instance->inst.ring->size() : 0;
}

size_t soscert_instance_generators(const soscert_instance* instance) {
  return instance ? instance->inst.size() : 0;
}

const char* soscert_instance_text(const soscert_instance* instance) {
  return instance ? instance->text.c_str() : nullptr;
}

soscert_status soscert_verify(const soscert_instance* instance, const soscert_options* options,
                              soscert_report** out) {
  if (!instance || !out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(soscert::run_verify(instance->inst), options, out); });
}

soscert_status soscert_dual(const soscert_instance* instance, const soscert_options* options,
                            soscert_report** out) {
  if (!instance || !out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return emit(soscert::run_dual(instance->inst), options, out); });
}

soscert_status soscert_certify(const soscert_instance* instance, const soscert_options* options,
                               soscert_report** out) {
  if (!instance || !out) return fail(SOSCERT_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const soscert::RunOptions run = run_options(options);
    return emit(soscert::run_certify(instance->inst, run), options, out);
  });
}

const char* soscert_report_text(const soscert_report* report) { return report ? report->text.c_str() : nullptr; }

const char* soscert_report_json(const soscert_report* report) { return report ? report->json.c_str() : nullptr; }

soscert_status soscert_report_status(const soscert_report* report) {
  return report ? report->status : SOSCERT_INVALID_ARGUMENT;
}

void soscert_report_free(soscert_report* report) { delete report; }

}  // extern "C"
