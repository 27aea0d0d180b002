#include "seatcast/text/tokenize.hpp"

#include <array>

#include "seatcast/util/utf8.hpp"

namespace seatcast {

namespace {

bool is_word_cp(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

// French elision prefixes, already lowercased, without the apostrophe.
constexpr std::array<std::string_view, 10> kClitics = {
    "l", "d", "j", "c", "n", "m", "t", "s", "qu", "jusqu"};

bool is_clitic(std::string_view prefix) {
    for (const auto c : kClitics) {
        if (prefix == c) return true;
    }
    return false;
}

}  // namespace

std::vector<Token> word_tokens(std::string_view cleaned) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::string current;
    std::size_t current_start = 0;
    std::size_t apostrophe_at = std::string::npos;  // byte pos in `current`

    const auto flush = [&] {
        if (current.empty()) return;
        // Split a leading elision clitic: "l'élection" -> "l'" + "élection".
        if (apostrophe_at != std::string::npos &&
            is_clitic(std::string_view(current).substr(0, apostrophe_at)) &&
            apostrophe_at + 1 < current.size()) {
            out.push_back({current.substr(0, apostrophe_at + 1), {}, current_start});
            out.push_back({current.substr(apostrophe_at + 1), {},
                           current_start + apostrophe_at + 1});
        } else {
            out.push_back({current, {}, current_start});
        }
        current.clear();
        apostrophe_at = std::string::npos;
    };

    while (i < cleaned.size()) {
        const std::size_t cp_start = i;
        const char32_t cp = utf8::decode(cleaned, i);
        if (is_word_cp(cp)) {
            if (current.empty()) current_start = cp_start;
            utf8::append(current, utf8::to_lower(cp));
        } else if ((cp == '\'' || cp == '-') && !current.empty() && i < cleaned.size()) {
            std::size_t peek = i;
            if (is_word_cp(utf8::decode(cleaned, peek))) {
                if (cp == '\'' && apostrophe_at == std::string::npos)
                    apostrophe_at = current.size();
                current.push_back(static_cast<char>(cp));
                continue;
            }
            flush();
        } else {
            flush();
        }
    }
    flush();
    return out;
}

std::vector<Token> tokenize(std::string_view cleaned, Language lang, const StopLists& stops) {
    std::vector<Token> out;
    for (Token& tok : word_tokens(cleaned)) {
        if (stops.is_stop(tok.surface, lang)) continue;
        out.push_back(std::move(tok));
    }
    return out;
}

}  // namespace seatcast
