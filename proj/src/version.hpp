#ifndef TRAJCLUSTER_VERSION_HPP
#define TRAJCLUSTER_VERSION_HPP

namespace trajcluster {

inline constexpr const char* kVersion = "0.1.0";

} // namespace trajcluster

#endif
