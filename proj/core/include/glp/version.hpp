#pragma once

namespace glp {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace glp
