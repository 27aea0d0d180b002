#ifndef SEATCAST_TEXT_CLEAN_HPP
#define SEATCAST_TEXT_CLEAN_HPP

#include <string>
#include <string_view>

namespace seatcast {

// Strips markup remnants, URLs and control characters; keeps letters,
// digits, sentence punctuation (. ! ? ,) and apostrophes/hyphens between
// word characters; collapses whitespace. Idempotent.
std::string clean_text(std::string_view raw);

}  // namespace seatcast

#endif
