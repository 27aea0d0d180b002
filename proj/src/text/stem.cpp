#include "seatcast/text/stem.hpp"

#include <algorithm>
#include <array>

#include "seatcast/util/utf8.hpp"

// English: the classic Porter rule cascade. French: a compact suffix
// stripper covering plural, feminine and regular verb morphology. Porter
// alone is not idempotent (rational -> ration -> rat), so both stemmers
// iterate their pass until the token stops changing.

namespace seatcast {

namespace {

// ---------------------------------------------------------------- English

bool en_is_ascii(std::string_view w) {
    return std::all_of(w.begin(), w.end(),
                       [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

bool en_is_consonant(std::string_view w, std::size_t i) {
    const char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !en_is_consonant(w, i - 1);
    return true;
}

// Porter's measure: the number of VC sequences in [C](VC)^m[V].
int en_measure(std::string_view w) {
    int m = 0;
    std::size_t i = 0;
    while (i < w.size() && en_is_consonant(w, i)) ++i;
    while (i < w.size()) {
        while (i < w.size() && !en_is_consonant(w, i)) ++i;
        if (i >= w.size()) break;
        ++m;
        while (i < w.size() && en_is_consonant(w, i)) ++i;
    }
    return m;
}

bool en_has_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!en_is_consonant(w, i)) return true;
    }
    return false;
}

bool en_double_consonant(std::string_view w) {
    const std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && en_is_consonant(w, n - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool en_cvc(std::string_view w) {
    const std::size_t n = w.size();
    if (n < 3) return false;
    if (!en_is_consonant(w, n - 3) || en_is_consonant(w, n - 2) || !en_is_consonant(w, n - 1))
        return false;
    const char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
    std::string_view from;
    std::string_view to;
};

// Replaces `from` by `to` when the remaining stem has measure > min_m.
bool en_apply(std::string& w, std::string_view from, std::string_view to, int min_m) {
    if (!ends_with(w, from)) return false;
    const std::string_view stem = std::string_view(w).substr(0, w.size() - from.size());
    if (en_measure(stem) <= min_m) return true;  // matched, rule consumed
    w = std::string(stem) + std::string(to);
    return true;
}

std::string en_pass(std::string w) {
    // Step 1a
    if (ends_with(w, "sses")) w.resize(w.size() - 2);
    else if (ends_with(w, "ies")) w.resize(w.size() - 2);
    else if (!ends_with(w, "ss") && ends_with(w, "s") && w.size() > 1) w.resize(w.size() - 1);

    // Step 1b
    bool step1b_fixup = false;
    if (ends_with(w, "eed")) {
        if (en_measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.resize(w.size() - 1);
    } else if (ends_with(w, "ed") && en_has_vowel(std::string_view(w).substr(0, w.size() - 2))) {
        w.resize(w.size() - 2);
        step1b_fixup = true;
    } else if (ends_with(w, "ing") && en_has_vowel(std::string_view(w).substr(0, w.size() - 3))) {
        w.resize(w.size() - 3);
        step1b_fixup = true;
    }
    if (step1b_fixup) {
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w.push_back('e');
        } else if (en_double_consonant(w) && !ends_with(w, "l") && !ends_with(w, "s") &&
                   !ends_with(w, "z")) {
            w.resize(w.size() - 1);
        } else if (en_measure(w) == 1 && en_cvc(w)) {
            w.push_back('e');
        }
    }

    // Step 1c
    if (ends_with(w, "y") && en_has_vowel(std::string_view(w).substr(0, w.size() - 1)))
        w.back() = 'i';

    // Step 2
    static constexpr std::array<Rule, 20> kStep2 = {{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    for (const auto& r : kStep2) {
        if (en_apply(w, r.from, r.to, 0)) break;
    }

    // Step 3
    static constexpr std::array<Rule, 7> kStep3 = {{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    for (const auto& r : kStep3) {
        if (en_apply(w, r.from, r.to, 0)) break;
    }

    // Step 4
    static constexpr std::array<std::string_view, 18> kStep4 = {
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism",
        "ate",   "iti",  "ous",  "ive",  "ize",  "ion",  "al",  "er",  "ic"};
    for (const auto suffix : kStep4) {
        if (!ends_with(w, suffix)) continue;
        const std::string_view stem = std::string_view(w).substr(0, w.size() - suffix.size());
        if (suffix == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t"))) continue;
        if (en_measure(stem) > 1) w.resize(stem.size());
        break;
    }

    // Step 5a
    if (ends_with(w, "e")) {
        const std::string_view stem = std::string_view(w).substr(0, w.size() - 1);
        const int m = en_measure(stem);
        if (m > 1 || (m == 1 && !en_cvc(stem))) w.resize(w.size() - 1);
    }
    // Step 5b
    if (en_double_consonant(w) && ends_with(w, "l") && en_measure(w) > 1) w.resize(w.size() - 1);

    return w;
}

// ----------------------------------------------------------------- French

using U32 = std::u32string;

U32 u32_of(std::string_view s) {
    U32 out;
    std::size_t i = 0;
    while (i < s.size()) out.push_back(utf8::decode(s, i));
    return out;
}

std::string u8_of(const U32& s) {
    std::string out;
    for (const char32_t cp : s) utf8::append(out, cp);
    return out;
}

bool ends_with32(const U32& w, const U32& suffix) {
    return w.size() >= suffix.size() &&
           std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

struct FrRule {
    const char32_t* suffix;
    const char32_t* replacement;
    std::size_t min_stem;  // code points that must survive
};

// Ordered longest-first within each family; the first applicable rule of
// the pass fires, then the pass restarts via the fixpoint loop.
constexpr std::array<FrRule, 26> kFrRules = {{
    {U"issements", U"i", 3}, {U"issement", U"i", 3}, {U"issantes", U"i", 3},
    {U"issante", U"i", 3},   {U"issants", U"i", 3},  {U"issant", U"i", 3},
    {U"ements", U"", 3},     {U"ement", U"", 3},
    {U"atrices", U"ateur", 3}, {U"atrice", U"ateur", 3},
    {U"eraient", U"", 3},    {U"eront", U"", 3},     {U"erait", U"", 3},
    {U"erons", U"", 3},      {U"erais", U"", 3},     {U"eriez", U"", 3},
    {U"erai", U"", 3},       {U"eras", U"", 3},      {U"erez", U"", 3},
    {U"era", U"", 3},        {U"ées", U"", 3},       {U"ée", U"", 3},
    {U"er", U"", 3},         {U"és", U"", 3},        {U"é", U"", 3},
    {U"e", U"", 3},
}};

U32 fr_pass(U32 w) {
    // Plural / spelling folds first.
    if (ends_with32(w, U"eaux") && w.size() >= 5) {
        w.resize(w.size() - 1);  // eaux -> eau
        return w;
    }
    if (ends_with32(w, U"aux") && w.size() >= 5) {
        w.resize(w.size() - 1);
        w.back() = U'l';  // aux -> al
        return w;
    }
    if (w.size() >= 4 && w.back() == U'x' &&
        (ends_with32(w, U"eux") || ends_with32(w, U"oux"))) {
        w.resize(w.size() - 1);
        return w;
    }
    if (w.size() >= 3 && w.back() == U's' && w[w.size() - 2] != U's') {
        w.resize(w.size() - 1);
        return w;
    }
    for (const auto& rule : kFrRules) {
        const U32 suffix(rule.suffix);
        if (!ends_with32(w, suffix)) continue;
        if (w.size() - suffix.size() < rule.min_stem) continue;
        w.resize(w.size() - suffix.size());
        w += rule.replacement;
        return w;
    }
    return w;
}

}  // namespace

std::string stem_en(std::string_view token) {
    if (token.size() <= 2 || !en_is_ascii(token)) return std::string(token);
    std::string w(token);
    const std::size_t guard = token.size() + 8;
    for (std::size_t pass = 0; pass < guard; ++pass) {
        std::string next = en_pass(w);
        if (next == w) break;
        w = std::move(next);
        if (w.size() <= 2) break;
    }
    return w;
}

std::string stem_fr(std::string_view token) {
    U32 w = u32_of(token);
    if (w.size() <= 2) return std::string(token);
    const std::size_t guard = w.size() + 8;
    for (std::size_t pass = 0; pass < guard; ++pass) {
        U32 next = fr_pass(w);
        if (next == w) break;
        w = std::move(next);
        if (w.size() <= 2) break;
    }
    return u8_of(w);
}

std::string stem(std::string_view token, Language lang) {
    switch (lang) {
        case Language::EN: return stem_en(token);
        case Language::FR: return stem_fr(token);
        case Language::Unknown: break;
    }
    return en_is_ascii(token) ? stem_en(token) : stem_fr(token);
}

}  // namespace seatcast
