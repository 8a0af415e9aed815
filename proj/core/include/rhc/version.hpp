#pragma once

namespace rhc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rhc
