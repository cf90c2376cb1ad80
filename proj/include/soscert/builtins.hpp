#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace soscert {

/// Instance-file text of a built-in instance ("example-2.1", "example-2.2").
std::optional<std::string_view> builtin_instance_text(std::string_view name);

std::vector<std::string_view> builtin_names();

}  // namespace soscert
