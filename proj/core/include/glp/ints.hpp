#pragma once

#include <cstdint>

namespace glp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

}  // namespace glp
