#pragma once

namespace trendaudit {

inline constexpr const char* kToolName = "trendaudit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace trendaudit
