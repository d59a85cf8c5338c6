#pragma once

namespace vqebench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vqebench
