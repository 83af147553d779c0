#pragma once

namespace knotslice {

inline constexpr const char* kEngineName = "slice-engine";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace knotslice
