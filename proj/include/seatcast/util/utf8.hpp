#ifndef SEATCAST_UTIL_UTF8_HPP
#define SEATCAST_UTIL_UTF8_HPP

#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 handling for English/French news text: decoding, case
// folding and diacritic folding over ASCII, Latin-1 Supplement and
// Latin Extended-A. Anything outside those ranges passes through.

namespace seatcast::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point starting at byte offset `i` and advances `i`
// past it. Invalid sequences decode to U+FFFD and advance one byte.
char32_t decode(std::string_view s, std::size_t& i);

void append(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);

char32_t to_lower(char32_t cp);

// Appends the lowercased, diacritic-folded form of `cp` (e.g. É -> e,
// œ -> oe). Non-letters are appended unchanged.
void fold_append(std::string& out, char32_t cp);

std::string lower(std::string_view s);

// Lowercase + diacritic folding of a whole string.
std::string fold(std::string_view s);

}  // namespace seatcast::utf8

#endif
