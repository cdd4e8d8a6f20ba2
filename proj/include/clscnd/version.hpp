#pragma once

namespace clscnd {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace clscnd
