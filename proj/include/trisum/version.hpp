#pragma once

namespace trisum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trisum
