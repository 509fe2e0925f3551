#pragma once

#include <string_view>

namespace stiefelmw {

inline constexpr std::string_view kToolName = "stiefel-mw";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace stiefelmw
