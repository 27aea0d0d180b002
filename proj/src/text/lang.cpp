#include "seatcast/text/lang.hpp"

#include <fstream>

#include "seatcast/text/tokenize.hpp"
#include "seatcast/util/config.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

std::string to_string(Language lang) {
    switch (lang) {
        case Language::EN: return "EN";
        case Language::FR: return "FR";
        case Language::Unknown: break;
    }
    return "UNKNOWN";
}

Language language_from_string(std::string_view s) {
    if (s == "EN" || s == "en") return Language::EN;
    if (s == "FR" || s == "fr") return Language::FR;
    return Language::Unknown;
}

StopList StopList::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open stop-word list: " + path);
    StopList list;
    std::string line;
    while (std::getline(in, line)) {
        const std::string word = trim(line);
        if (word.empty() || word[0] == '#') continue;
        list.words_.insert(word);
    }
    return list;
}

StopList StopList::from_words(std::initializer_list<std::string_view> words) {
    StopList list;
    for (const auto w : words) list.words_.emplace(w);
    return list;
}

bool StopList::contains(std::string_view token) const {
    return words_.find(std::string(token)) != words_.end();
}

bool StopLists::is_stop(std::string_view token, Language lang) const {
    switch (lang) {
        case Language::EN: return en.contains(token);
        case Language::FR: return fr.contains(token);
        case Language::Unknown: return en.contains(token) || fr.contains(token);
    }
    return false;
}

Language detect_language(std::string_view text, const StopLists& stops,
                         std::size_t probe_limit) {
    std::size_t en_hits = 0;
    std::size_t fr_hits = 0;
    std::size_t seen = 0;
    for (const Token& tok : word_tokens(text)) {
        if (seen++ >= probe_limit) break;
        if (stops.en.contains(tok.surface)) ++en_hits;
        if (stops.fr.contains(tok.surface)) ++fr_hits;
    }
    if (en_hits == fr_hits) return Language::Unknown;
    return en_hits > fr_hits ? Language::EN : Language::FR;
}

}  // namespace seatcast
