#pragma once

#include <string_view>

namespace rumor {

inline constexpr std::string_view kToolName = "rumorbench";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace rumor
