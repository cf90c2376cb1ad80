// soscert command-line front end. Talks to the library only through the C API.
#include "soscert/soscert.h"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kUsageError = 64;

struct InstanceDeleter {
  void operator()(soscert_instance* p) const { soscert_instance_free(p); }
};
struct ReportDeleter {
  void operator()(soscert_report* p) const { soscert_report_free(p); }
};
using InstancePtr = std::unique_ptr<soscert_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<soscert_report, ReportDeleter>;

struct RunConfig {
  std::string builtin;
  std::string file;
  std::string squares;
  std::string order = "degrevlex";
  unsigned long long max_pairs = 0;
  unsigned long long max_coeff_bits = 0;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

std::optional<unsigned> parse_count(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) return std::nullopt;
  return v;
}

// "7" or "7..8".
bool parse_squares(const std::string& text, unsigned& lo, unsigned& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = parse_count(text);
    if (!v) return false;
    lo = hi = *v;
    return true;
  }
  auto a = parse_count(std::string_view(text).substr(0, dots));
  auto b = parse_count(std::string_view(text).substr(dots + 2));
  if (!a || !b || *b < *a) return false;
  lo = *a;
  hi = *b;
  return true;
}

int load_instance(const RunConfig& cfg, InstancePtr& out) {
  soscert_instance* raw = nullptr;
  soscert_status st;
  if (!cfg.builtin.empty()) {
    st = soscert_instance_builtin(cfg.builtin.c_str(), &raw);
  } else {
    std::ifstream in(cfg.file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << cfg.file << "\n";
      return SOSCERT_PARSE_ERROR;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    st = soscert_instance_parse(buf.str().c_str(), cfg.file.c_str(), &raw);
  }
  out.reset(raw);
  if (st != SOSCERT_OK) {
    std::cerr << "error: " << soscert_last_error() << "\n";
    return st == SOSCERT_INVALID_ARGUMENT && !cfg.builtin.empty() ? kUsageError : st;
  }
  return 0;
}

int run(const std::string& command, const RunConfig& cfg) {
  if (cfg.builtin.empty() == cfg.file.empty()) {
    std::cerr << "error: exactly one of --builtin or --file is required\n";
    return kUsageError;
  }
  soscert_options opts;
  soscert_options_init(&opts);
  if (cfg.order == "degrevlex" || cfg.order == "grevlex") {
    opts.order = SOSCERT_ORDER_DEGREVLEX;
  } else if (cfg.order == "lex") {
    opts.order = SOSCERT_ORDER_LEX;
  } else if (cfg.order == "deglex") {
    opts.order = SOSCERT_ORDER_DEGLEX;
  } else {
    std::cerr << "error: unknown order '" << cfg.order << "'\n";
    return kUsageError;
  }
  if (!cfg.squares.empty() && !parse_squares(cfg.squares, opts.t_min, opts.t_max)) {
    std::cerr << "error: --squares expects <t> or <t1>..<t2> with 1 <= t1 <= t2\n";
    return kUsageError;
  }
  if (cfg.max_pairs) opts.max_pairs = cfg.max_pairs;
  if (cfg.max_coeff_bits) opts.max_coeff_bits = cfg.max_coeff_bits;
  opts.include_timings = cfg.timings ? 1 : 0;

  InstancePtr inst;
  if (int rc = load_instance(cfg, inst); rc != 0) return rc;

  soscert_report* raw = nullptr;
  soscert_status st;
  if (command == "verify") {
    st = soscert_verify(inst.get(), &opts, &raw);
  } else if (command == "dual") {
    st = soscert_dual(inst.get(), &opts, &raw);
  } else {
    st = soscert_certify(inst.get(), &opts, &raw);
  }
  ReportPtr report(raw);
  if (!report) {
    std::cerr << "error: " << soscert_last_error() << "\n";
    return st;
  }
  const char* body = cfg.format == "json" ? soscert_report_json(report.get()) : soscert_report_text(report.get());
  if (cfg.out.empty()) {
    std::cout << body;
    std::cout.flush();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kUsageError;
    }
    f << body;
  }
  if (st != SOSCERT_OK) std::cerr << "status: " << soscert_status_name(st) << "\n";
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sums-of-squares length certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", cfg.builtin, "Built-in instance")
                  ->check(CLI::IsMember({"example-2.1", "example-2.2"}));
    auto* f = sub->add_option("--file", cfg.file, "Instance file");
    b->excludes(f);
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write the report to this path");
    sub->add_flag("--timings", cfg.timings, "Include wall-clock timings in the report");
  };

  auto* verify = app.add_subcommand("verify", "Check g = p1^2 + ... + ps^2 and generator independence");
  add_common(verify);
  auto* dual = app.add_subcommand("dual", "Stage 1: pin SOS summands to span{p_i}");
  add_common(dual);
  auto* certify = app.add_subcommand("certify", "Stages 1 and 2: decide whether t squares suffice");
  add_common(certify);
  certify->add_option("--squares", cfg.squares, "Square count t or range t1..t2 (default s-1..s)");
  certify->add_option("--order", cfg.order, "Groebner monomial order (degrevlex|lex|deglex)");
  certify->add_option("--max-pairs", cfg.max_pairs, "S-pair budget")->check(CLI::PositiveNumber);
  certify->add_option("--max-coeff-bits", cfg.max_coeff_bits, "Coefficient size budget in bits")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  const std::string command = verify->parsed() ? "verify" : dual->parsed() ? "dual" : "certify";
  return run(command, cfg);
}
