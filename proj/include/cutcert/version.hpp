#pragma once

namespace cutcert {

inline constexpr const char* kToolName = "cutcert";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cutcert
