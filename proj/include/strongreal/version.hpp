#pragma once

namespace strongreal {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace strongreal
