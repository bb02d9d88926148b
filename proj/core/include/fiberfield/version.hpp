#ifndef FIBERFIELD_VERSION_HPP
#define FIBERFIELD_VERSION_HPP

namespace fiberfield {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
