#pragma once

namespace hball {

inline constexpr const char* kToolVersion = "hball 0.1.0";

}  // namespace hball
