#pragma once

namespace cgh {

inline constexpr const char* version = "0.1.0";

}  // namespace cgh
