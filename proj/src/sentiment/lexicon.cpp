#include "seatcast/sentiment/lexicon.hpp"

#include <fstream>

#include "seatcast/text/stem.hpp"
#include "seatcast/util/config.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

Lexicon Lexicon::load(const std::string& path, Language lang) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open lexicon file: " + path);
    Lexicon lex;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto comma = t.rfind(',');
        if (comma == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected word,polarity");
        const std::string word = trim(t.substr(0, comma));
        const std::string pol = trim(t.substr(comma + 1));
        int value = 0;
        if (pol == "1" || pol == "+1") value = 1;
        else if (pol == "-1" || pol == "−1") value = -1;
        else
            throw ConfigError(path + ":" + std::to_string(line_no) + ": polarity must be -1 or 1, got '" + pol + "'");
        if (word.empty())
            throw ConfigError(path + ":" + std::to_string(line_no) + ": empty word");
        lex.entries_[stem(word, lang)] = value;
    }
    return lex;
}

Lexicon Lexicon::from_entries(std::initializer_list<std::pair<std::string_view, int>> entries,
                              Language lang) {
    Lexicon lex;
    for (const auto& [word, value] : entries) lex.entries_[stem(word, lang)] = value;
    return lex;
}

int Lexicon::polarity(std::string_view stem) const {
    const auto it = entries_.find(std::string(stem));
    return it == entries_.end() ? 0 : it->second;
}

int LexiconSet::polarity(const std::string& stem, Language lang) const {
    switch (lang) {
        case Language::EN: return en.polarity(stem);
        case Language::FR: return fr.polarity(stem);
        case Language::Unknown: break;
    }
    if (const int p = en.polarity(stem); p != 0) return p;
    return fr.polarity(stem);
}

}  // namespace seatcast
