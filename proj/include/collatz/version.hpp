#pragma once

namespace collatz {

inline constexpr const char* kArtifactName = "collatz-ergodic";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace collatz
