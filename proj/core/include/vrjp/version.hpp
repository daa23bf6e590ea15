#pragma once

namespace vrjp {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace vrjp
