#pragma once

namespace sbn {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sbn
