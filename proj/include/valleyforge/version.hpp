#pragma once

namespace valleyforge {

inline constexpr const char* version = "1.0.0";

}  // namespace valleyforge
