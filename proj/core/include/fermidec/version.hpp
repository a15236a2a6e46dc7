#pragma once

namespace fermidec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fermidec
