#pragma once

namespace f4rigid {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace f4rigid
