#pragma once

namespace hline {

/// Bumped whenever results could change; cached records from other versions
/// are ignored.
inline constexpr const char* kToolVersion = "0.3.0";

}  // namespace hline
