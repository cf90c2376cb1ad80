// Exercises the shared library through its C header only.
#include <doctest.h>

#include "soscert/soscert.h"

#include <json.hpp>

#include <cstring>
#include <string>
#include <thread>

namespace {

struct Instance {
  soscert_instance* p = nullptr;
  ~Instance() { soscert_instance_free(p); }
};
struct Report {
  soscert_report* p = nullptr;
  ~Report() { soscert_report_free(p); }
};

bool is_rational_text(const std::string& s) {
  std::size_t i = s[0] == '-' ? 1 : 0;
  const std::size_t slash = s.find('/');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t k = a; k < b; ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return b - a == 1 || s[a] != '0';
  };
  if (slash == std::string::npos) return digits(i, s.size());
  return digits(i, slash) && digits(slash + 1, s.size()) && s.substr(slash + 1) != "1";
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version, statuses and options") {
  CHECK(std::strcmp(soscert_version(), "0.1.0") == 0);
  CHECK(std::strcmp(soscert_status_name(SOSCERT_BUDGET_EXHAUSTED), "budget-exhausted") == 0);
  soscert_options o;
  soscert_options_init(&o);
  CHECK(o.t_min == 0);
  CHECK(o.order == SOSCERT_ORDER_DEGREVLEX);
  CHECK(o.max_pairs > 0);
  CHECK(o.include_timings == 0);
}

TEST_CASE("instances") {
  Instance five;
  REQUIRE(soscert_instance_builtin("example-2.2", &five.p) == SOSCERT_OK);
  CHECK(soscert_instance_variables(five.p) == 5);
  CHECK(soscert_instance_generators(five.p) == 8);

  Instance fam;
  REQUIRE(soscert_instance_family(5, &fam.p) == SOSCERT_OK);
  CHECK(std::string(soscert_instance_text(fam.p)) == soscert_instance_text(five.p));

  Instance reparsed;
  REQUIRE(soscert_instance_parse(soscert_instance_text(five.p), "copy", &reparsed.p) == SOSCERT_OK);
  CHECK(std::string(soscert_instance_text(reparsed.p)) == soscert_instance_text(five.p));

  Instance missing;
  CHECK(soscert_instance_builtin("example-9", &missing.p) == SOSCERT_INVALID_ARGUMENT);
  CHECK(missing.p == nullptr);
  CHECK(std::string(soscert_last_error()).find("example-9") != std::string::npos);

  Instance broken;
  CHECK(soscert_instance_parse("vars: n=2\np1 = x1 x2\n", nullptr, &broken.p) == SOSCERT_PARSE_ERROR);
  CHECK(broken.p == nullptr);
  CHECK(std::string(soscert_last_error()).find("line 2") != std::string::npos);

  CHECK(soscert_instance_family(4, &missing.p) == SOSCERT_INVALID_ARGUMENT);
  CHECK(soscert_instance_parse(nullptr, nullptr, &missing.p) == SOSCERT_INVALID_ARGUMENT);
  CHECK(soscert_instance_variables(nullptr) == 0);
}

TEST_CASE("last error is per thread") {
  Instance missing;
  CHECK(soscert_instance_builtin("nope", &missing.p) == SOSCERT_INVALID_ARGUMENT);
  std::string other;
  std::thread([&other] { other = soscert_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(soscert_last_error()).empty());
}

TEST_CASE("verify, dual and certify") {
  Instance five;
  REQUIRE(soscert_instance_builtin("example-2.2", &five.p) == SOSCERT_OK);

  Report v;
  CHECK(soscert_verify(five.p, nullptr, &v.p) == SOSCERT_OK);
  CHECK(soscert_report_status(v.p) == SOSCERT_OK);
  CHECK(std::string(soscert_report_text(v.p)).find("s=8") != std::string::npos);

  Report d;
  CHECK(soscert_dual(five.p, nullptr, &d.p) == SOSCERT_OK);
  const auto dj = nlohmann::json::parse(soscert_report_json(d.p));
  CHECK(dj["stage1"]["dimension"] == 2);
  CHECK(dj["stage1"]["kernel"]["dimension"] == 8);

  soscert_options o;
  soscert_options_init(&o);
  o.t_min = 7;
  o.t_max = 8;
  Report c;
  REQUIRE(soscert_certify(five.p, &o, &c.p) == SOSCERT_OK);
  const auto cj = nlohmann::json::parse(soscert_report_json(c.p));
  CHECK(cj["stage2"][0]["verdict"] == "infeasible");
  CHECK(cj["stage2"][1]["verdict"] == "witness-found");

  // Every matrix entry is a canonical rational string.
  std::size_t entries = 0;
  for (const auto& m : cj["stage1"]["space_basis"]) {
    for (const auto& e : m["entries"]) {
      CHECK(is_rational_text(e.get<std::string>()));
      ++entries;
    }
  }
  CHECK(entries == 2 * 15 * 15);

  Report again;
  REQUIRE(soscert_certify(five.p, &o, &again.p) == SOSCERT_OK);
  CHECK(std::string(soscert_report_json(again.p)) == soscert_report_json(c.p));
  CHECK(std::string(soscert_report_text(again.p)) == soscert_report_text(c.p));

  o.include_timings = 1;
  Report timed;
  REQUIRE(soscert_certify(five.p, &o, &timed.p) == SOSCERT_OK);
  CHECK(nlohmann::json::parse(soscert_report_json(timed.p)).contains("timings"));
}

TEST_CASE("error statuses") {
  Instance five;
  REQUIRE(soscert_instance_builtin("example-2.2", &five.p) == SOSCERT_OK);
  soscert_options o;
  soscert_options_init(&o);
  o.max_pairs = 0;
  Report r;
  CHECK(soscert_certify(five.p, &o, &r.p) == SOSCERT_INVALID_ARGUMENT);
  CHECK(r.p == nullptr);

  soscert_options_init(&o);
  o.t_min = 7;
  o.t_max = 7;
  o.max_pairs = 2;
  CHECK(soscert_certify(five.p, &o, &r.p) == SOSCERT_BUDGET_EXHAUSTED);
  REQUIRE(r.p != nullptr);
  CHECK(soscert_report_status(r.p) == SOSCERT_BUDGET_EXHAUSTED);

  Instance bad;
  REQUIRE(soscert_instance_parse("vars: n=1\np1 = x1^2\ng = 2*x1^4\n", "bad", &bad.p) == SOSCERT_OK);
  Report f;
  CHECK(soscert_verify(bad.p, nullptr, &f.p) == SOSCERT_IDENTITY_FAILURE);
  REQUIRE(f.p != nullptr);
  CHECK(std::string(soscert_report_text(f.p)).find("identity failure") != std::string::npos);

  CHECK(soscert_verify(nullptr, nullptr, &f.p) == SOSCERT_INVALID_ARGUMENT);
  CHECK(soscert_report_text(nullptr) == nullptr);
}

}  // TEST_SUITE
