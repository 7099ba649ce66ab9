#pragma once

namespace fracbs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracbs
