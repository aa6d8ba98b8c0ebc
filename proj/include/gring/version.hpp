#pragma once

namespace gring {
inline constexpr const char* kVersion = "0.1.0";
}
