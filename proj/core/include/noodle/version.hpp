#pragma once

namespace noodle {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace noodle
