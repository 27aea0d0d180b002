#ifndef SEATCAST_TEXT_STEM_HPP
#define SEATCAST_TEXT_STEM_HPP

#include <string>
#include <string_view>

#include "seatcast/text/lang.hpp"

namespace seatcast {

// Rule-based suffix strippers. Both run their rule pass to a fixpoint, so
// stem(stem(t)) == stem(t) holds for every input. Inputs are expected
// lowercased; outputs are only meaningful as equality classes.
std::string stem_en(std::string_view token);
std::string stem_fr(std::string_view token);

// Language dispatch; Unknown falls back to the English rules for pure
// ASCII tokens and the French rules otherwise.
std::string stem(std::string_view token, Language lang);

}  // namespace seatcast

#endif
