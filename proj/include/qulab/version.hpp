#ifndef QULAB_VERSION_HPP
#define QULAB_VERSION_HPP

namespace qulab {

inline constexpr const char* kToolName = "qulab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qulab

#endif
