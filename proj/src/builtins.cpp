#include "soscert/builtins.hpp"

namespace soscert {

namespace {

// Strictly positive quartic in four variables on the boundary of the SOS cone.
constexpr std::string_view kFourVariable = R"(# g = p1^2 + p2^2 + p3^2 + p4^2
vars: n=4
p1 = x1^2 - x4^2
p2 = x2^2 - x4^2
p3 = x3^2 - x4^2
p4 = -x1^2 - x1*x2 - x1*x3 + x1*x4 - x2*x3 + x2*x4 + x3*x4
)";

// The four-variable generators plus x_i*x5; g is a sum of 8 squares.
constexpr std::string_view kFiveVariable = R"(# g = p1^2 + ... + p8^2
vars: n=5
p1 = x1^2 - x4^2
p2 = x2^2 - x4^2
p3 = x3^2 - x4^2
p4 = -x1^2 - x1*x2 - x1*x3 + x1*x4 - x2*x3 + x2*x4 + x3*x4
p5 = x1*x5
p6 = x2*x5
p7 = x3*x5
p8 = x4*x5
)";

}  // namespace

std::optional<std::string_view> builtin_instance_text(std::string_view name) {
  if (name == "example-2.1") return kFourVariable;
  if (name == "example-2.2") return kFiveVariable;
  return std::nullopt;
}

std::vector<std::string_view> builtin_names() { return {"example-2.1", "example-2.2"}; }

}  // namespace soscert
