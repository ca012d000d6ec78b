/// @file version.hpp
#pragma once

namespace moducert {

inline constexpr const char* kToolName = "moducert";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace moducert
