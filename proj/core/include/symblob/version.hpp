#pragma once

namespace symblob {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symblob
