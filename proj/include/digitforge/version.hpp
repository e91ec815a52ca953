#pragma once

namespace digitforge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace digitforge
