#pragma once

namespace fvset {
inline constexpr const char* kVersion = "0.1.0";
}
