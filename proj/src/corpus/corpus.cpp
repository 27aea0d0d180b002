#include "seatcast/corpus/corpus.hpp"

#include <algorithm>
#include <map>

#include "seatcast/util/hash.hpp"
#include "seatcast/util/utf8.hpp"

namespace seatcast {

namespace {

bool is_word_cp(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

// Case- and diacritics-folded text where every non-word run is a single
// space; padded with one leading/trailing space so whole-word matches are
// plain substring searches.
std::string fold_padded(std::string_view text) {
    std::string out = " ";
    std::size_t i = 0;
    while (i < text.size()) {
        const char32_t cp = utf8::decode(text, i);
        if (is_word_cp(cp)) {
            utf8::fold_append(out, cp);
        } else if (out.back() != ' ') {
            out.push_back(' ');
        }
    }
    if (out.back() != ' ') out.push_back(' ');
    return out;
}

std::string fold_alias(std::string_view alias) {
    const std::string padded = fold_padded(alias);
    return padded;  // already " alias words "
}

std::vector<std::string> fold_words(std::string_view text) {
    const std::string padded = fold_padded(text);
    std::vector<std::string> words;
    std::size_t pos = 1;
    while (pos < padded.size()) {
        const auto end = padded.find(' ', pos);
        if (end == std::string::npos) break;
        if (end > pos) words.push_back(padded.substr(pos, end - pos));
        pos = end + 1;
    }
    return words;
}

}  // namespace

std::string normalize_for_id(std::string_view title, std::string_view body) {
    std::string combined;
    combined.reserve(title.size() + body.size() + 1);
    combined.append(title);
    combined.push_back('\n');
    combined.append(body);

    std::string out;
    out.reserve(combined.size());
    std::size_t i = 0;
    bool pending_space = false;
    while (i < combined.size()) {
        const char32_t cp = utf8::decode(combined, i);
        if (is_word_cp(cp)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            utf8::append(out, utf8::to_lower(cp));
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::string content_id(std::string_view title, std::string_view body) {
    return hash_hex(normalize_for_id(title, body));
}

std::set<std::string> match_entities(std::string_view title, std::string_view body,
                                     const Roster& roster) {
    std::string haystack = fold_padded(title);
    haystack += fold_padded(body);

    std::set<std::string> matched;
    for (const auto& entity : roster.entities) {
        for (const auto& alias : entity.aliases) {
            const std::string needle = fold_alias(alias);
            if (needle.size() <= 2) continue;  // empty alias folds to "  "
            if (haystack.find(needle) != std::string::npos) {
                matched.insert(entity.entity_id);
                break;
            }
        }
    }
    return matched;
}

RelevanceResult relevance_filter(const Article& article, const Roster& roster,
                                 const std::vector<std::string>& context_keywords,
                                 std::size_t window) {
    if (context_keywords.empty()) return {true, {}};
    if (article.matched_entities.empty()) return {true, {}};

    std::string text(article.title);
    text.push_back('\n');
    text.append(article.body);
    const std::vector<std::string> words = fold_words(text);

    std::vector<std::string> keywords;
    keywords.reserve(context_keywords.size());
    for (const auto& k : context_keywords) keywords.push_back(utf8::fold(k));

    // Token positions covered by any matched entity alias.
    std::vector<std::pair<std::size_t, std::size_t>> mentions;  // [first, last]
    for (const auto& entity_id : article.matched_entities) {
        const EntityDef* entity = roster.find_entity(entity_id);
        if (entity == nullptr) continue;
        for (const auto& alias : entity->aliases) {
            const std::vector<std::string> alias_words = fold_words(alias);
            if (alias_words.empty()) continue;
            for (std::size_t i = 0; i + alias_words.size() <= words.size(); ++i) {
                if (std::equal(alias_words.begin(), alias_words.end(), words.begin() + i))
                    mentions.emplace_back(i, i + alias_words.size() - 1);
            }
        }
    }
    if (mentions.empty()) return {false, "NON_POLITICAL"};

    for (std::size_t i = 0; i < words.size(); ++i) {
        if (std::find(keywords.begin(), keywords.end(), words[i]) == keywords.end()) continue;
        for (const auto& [first, last] : mentions) {
            const std::size_t dist = i < first ? first - i : (i > last ? i - last : 0);
            if (dist <= window) return {true, {}};
        }
    }
    return {false, "NON_POLITICAL"};
}

std::vector<Article> deduplicate(std::vector<Article> articles) {
    std::map<std::string, Article> by_id;
    for (auto& article : articles) {
        auto [it, inserted] = by_id.try_emplace(article.id, article);
        if (inserted) continue;
        Article& kept = it->second;
        if (article.published_at < kept.published_at ||
            (article.published_at == kept.published_at && article.url < kept.url)) {
            kept = std::move(article);
        }
    }
    std::vector<Article> out;
    out.reserve(by_id.size());
    for (auto& [id, article] : by_id) out.push_back(std::move(article));
    std::sort(out.begin(), out.end(), [](const Article& a, const Article& b) {
        if (a.published_at != b.published_at) return a.published_at < b.published_at;
        return a.id < b.id;
    });
    return out;
}

CorpusManifest build_manifest(const std::vector<Article>& articles) {
    CorpusManifest m;
    m.article_count = articles.size();
    bool first = true;
    for (const auto& a : articles) {
        if (first || a.published_at < m.date_min) m.date_min = a.published_at;
        if (first || a.published_at > m.date_max) m.date_max = a.published_at;
        first = false;
        ++m.per_outlet_counts[a.outlet];
    }
    return m;
}

}  // namespace seatcast
