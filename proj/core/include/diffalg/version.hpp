#pragma once

namespace diffalg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace diffalg
