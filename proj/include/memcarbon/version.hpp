#pragma once

#include <string_view>

namespace memcarbon {

inline constexpr std::string_view tool_name = "memcarbon";
inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr int schema_version = 1;

}  // namespace memcarbon
