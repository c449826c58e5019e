#pragma once

namespace tnncells {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tnncells
