#ifndef SEATCAST_TEXT_TOKENIZE_HPP
#define SEATCAST_TEXT_TOKENIZE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seatcast/text/lang.hpp"

namespace seatcast {

struct Token {
    std::string surface;  // lowercased
    std::string stem;     // filled by prep_article; empty from raw tokenize()
    std::size_t offset = 0;  // byte offset into the cleaned text
};

// Lowercased word tokens with offsets. Apostrophes/hyphens join word
// characters; French elision clitics (l', d', qu', ...) are split off as
// their own tokens. No stop-word removal at this layer.
std::vector<Token> word_tokens(std::string_view cleaned);

// word_tokens + stop-word removal for the given language (Unknown uses
// both lists).
std::vector<Token> tokenize(std::string_view cleaned, Language lang, const StopLists& stops);

struct TokenizedArticle {
    std::string article_id;
    Language language = Language::Unknown;
    std::string cleaned;        // cleaned text the offsets index into
    std::vector<Token> tokens;  // stop words removed, stems filled
};

}  // namespace seatcast

#endif
