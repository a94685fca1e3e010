#ifndef TOTBOND_VERSION_HPP
#define TOTBOND_VERSION_HPP

namespace totbond {

inline constexpr const char* kToolVersion = "1.0.0";

}

#endif
