#pragma once

namespace dua {

inline constexpr const char* TOOL_VERSION = "0.1.0";

} // namespace dua
