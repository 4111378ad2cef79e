#pragma once

namespace mirrorborn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mirrorborn
