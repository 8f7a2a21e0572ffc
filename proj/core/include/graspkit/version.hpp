#pragma once

namespace graspkit {

inline constexpr const char* kToolName = "graspkit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace graspkit
