#include "seatcast/text/clean.hpp"

#include <vector>

#include "seatcast/corpus/html.hpp"
#include "seatcast/util/utf8.hpp"

namespace seatcast {

namespace {

bool is_word_cp(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

bool is_url_start(std::string_view s, std::size_t i) {
    static constexpr std::string_view kPrefixes[] = {"http://", "https://", "www."};
    for (const auto p : kPrefixes) {
        if (s.size() - i >= p.size() && s.compare(i, p.size(), p) == 0) return true;
    }
    return false;
}

std::string strip_tags(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == '<') {
            if (raw.compare(i, 4, "<!--") == 0) {
                const auto end = raw.find("-->", i + 4);
                i = end == std::string_view::npos ? raw.size() : end + 3;
                out.push_back(' ');
                continue;
            }
            const auto end = raw.find('>', i + 1);
            if (end != std::string_view::npos) {
                i = end + 1;
                out.push_back(' ');
                continue;
            }
        }
        out.push_back(raw[i]);
        ++i;
    }
    return out;
}

std::string strip_urls(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (is_url_start(s, i)) {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) == 0) ++i;
            out.push_back(' ');
            continue;
        }
        out.push_back(s[i]);
        ++i;
    }
    return out;
}

}  // namespace

std::string clean_text(std::string_view raw) {
    std::string text = strip_tags(raw);
    text = html::decode_entities(text);
    text = strip_urls(text);

    // Decode once so the character filter can look at neighbours.
    std::vector<char32_t> cps;
    cps.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = utf8::decode(text, i);
        if (cp == 0x2019 || cp == 0x2018) cp = '\'';          // curly quotes
        if (cp == 0x2010 || cp == 0x2011) cp = '-';           // unicode hyphens
        cps.push_back(cp);
    }

    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    const auto emit_space = [&] { pending_space = true; };
    for (std::size_t k = 0; k < cps.size(); ++k) {
        const char32_t cp = cps[k];
        bool keep = false;
        if (is_word_cp(cp) || cp == '.' || cp == '!' || cp == '?' || cp == ',') {
            keep = true;
        } else if (cp == '\'' || cp == '-') {
            const bool prev_word = k > 0 && is_word_cp(cps[k - 1]);
            const bool next_word = k + 1 < cps.size() && is_word_cp(cps[k + 1]);
            keep = prev_word && next_word;
        }
        if (keep) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            utf8::append(out, cp);
        } else {
            emit_space();
        }
    }
    return out;
}

}  // namespace seatcast
