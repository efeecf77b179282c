#pragma once

namespace groupchar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace groupchar
