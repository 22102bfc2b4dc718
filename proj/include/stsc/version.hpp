#pragma once

namespace stsc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stsc
