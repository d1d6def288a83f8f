#ifndef VPL_VERSION_HPP
#define VPL_VERSION_HPP

#include <string_view>

namespace vpl {

inline constexpr std::string_view kVersion = "1.0.0";

} // namespace vpl

#endif // VPL_VERSION_HPP
