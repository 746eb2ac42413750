#pragma once

namespace jtsc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace jtsc
