#pragma once

namespace taft {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace taft
