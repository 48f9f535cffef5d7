#pragma once

namespace toruskk {

inline constexpr const char* kVersion = "0.1.0";

} // namespace toruskk
