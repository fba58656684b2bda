#ifndef SQMC_VERSION_HPP
#define SQMC_VERSION_HPP

#include <string_view>

namespace sqmc {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace sqmc

#endif  // SQMC_VERSION_HPP
