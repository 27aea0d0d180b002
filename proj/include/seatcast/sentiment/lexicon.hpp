#ifndef SEATCAST_SENTIMENT_LEXICON_HPP
#define SEATCAST_SENTIMENT_LEXICON_HPP

#include <string>
#include <string_view>
#include <unordered_map>

#include "seatcast/text/lang.hpp"

namespace seatcast {

// Polarity lexicon: UTF-8 lines "word,polarity" with polarity -1 or 1,
// '#' comments. Entries are stemmed with the language's stemmer on load,
// so the data files can hold surface forms.
class Lexicon {
  public:
    static Lexicon load(const std::string& path, Language lang);  // throws ConfigError
    static Lexicon from_entries(std::initializer_list<std::pair<std::string_view, int>> entries,
                                Language lang);

    // 0 when the stem is absent.
    int polarity(std::string_view stem) const;
    std::size_t size() const { return entries_.size(); }

  private:
    std::unordered_map<std::string, int> entries_;
};

struct LexiconSet {
    Lexicon en;
    Lexicon fr;

    // EN/FR articles use their own lexicon; Unknown consults the merged
    // pair (EN entry wins on stem collision).
    int polarity(const std::string& stem, Language lang) const;
};

}  // namespace seatcast

#endif
