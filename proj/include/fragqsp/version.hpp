#pragma once

namespace fragqsp {
inline constexpr const char* kVersion = "0.1.0";
}
