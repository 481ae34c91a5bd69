#pragma once

#include <string_view>

namespace da {

inline constexpr std::string_view kToolName = "design-analyzer";
inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace da
