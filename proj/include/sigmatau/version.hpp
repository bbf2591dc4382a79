#pragma once

namespace sigmatau {

inline constexpr const char* kEngineVersion = "1.0.0";

} // namespace sigmatau
