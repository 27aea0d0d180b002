#ifndef SEATCAST_TEXT_LANG_HPP
#define SEATCAST_TEXT_LANG_HPP

#include <string>
#include <string_view>
#include <unordered_set>

namespace seatcast {

enum class Language { EN, FR, Unknown };

std::string to_string(Language lang);
Language language_from_string(std::string_view s);  // "EN"/"FR"/anything else -> Unknown

// One entry per line, '#' comments, UTF-8, lowercase expected.
class StopList {
  public:
    static StopList load(const std::string& path);  // throws ConfigError
    static StopList from_words(std::initializer_list<std::string_view> words);

    bool contains(std::string_view token) const;
    std::size_t size() const { return words_.size(); }

  private:
    std::unordered_set<std::string> words_;
};

struct StopLists {
    StopList en;
    StopList fr;

    bool is_stop(std::string_view token, Language lang) const;
};

// Majority vote of stop-word hits over the first `probe_limit` word tokens;
// Unknown when both counts are zero or tied.
Language detect_language(std::string_view text, const StopLists& stops,
                         std::size_t probe_limit = 200);

}  // namespace seatcast

#endif
