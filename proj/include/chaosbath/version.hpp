#pragma once

namespace chaosbath {

inline constexpr const char* kToolName = "chaosbath";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace chaosbath
