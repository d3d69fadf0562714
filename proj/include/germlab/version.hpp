#pragma once

namespace germlab {

inline constexpr const char* kToolName = "germlab";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace germlab
