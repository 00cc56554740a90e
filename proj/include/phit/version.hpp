#pragma once

namespace phit {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace phit
