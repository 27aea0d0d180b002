#ifndef SEATCAST_VERSION_HPP
#define SEATCAST_VERSION_HPP

namespace seatcast {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace seatcast

#endif
