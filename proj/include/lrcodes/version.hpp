#pragma once

namespace lrc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lrc
