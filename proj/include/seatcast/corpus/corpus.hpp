#ifndef SEATCAST_CORPUS_CORPUS_HPP
#define SEATCAST_CORPUS_CORPUS_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seatcast/corpus/article.hpp"
#include "seatcast/corpus/roster.hpp"

namespace seatcast {

// Dedup key text: lowercase, diacritics kept, punctuation stripped,
// whitespace collapsed, over (title + "\n" + body).
std::string normalize_for_id(std::string_view title, std::string_view body);

// Content id = fnv1a64 hex of normalize_for_id().
std::string content_id(std::string_view title, std::string_view body);

// Every entity with a whole-word, case/diacritics-insensitive alias match
// in title or body.
std::set<std::string> match_entities(std::string_view title, std::string_view body,
                                     const Roster& roster);

struct RelevanceResult {
    bool keep = true;
    std::string reason;  // "NON_POLITICAL" when dropped
};

// Drop when no context keyword occurs within `window` tokens of any
// entity mention in title+body. Empty keyword list disables the filter.
RelevanceResult relevance_filter(const Article& article, const Roster& roster,
                                 const std::vector<std::string>& context_keywords,
                                 std::size_t window = 50);

// One article per id (earliest published_at wins, then smallest url),
// output sorted by (published_at, id). Idempotent and order-independent.
std::vector<Article> deduplicate(std::vector<Article> articles);

CorpusManifest build_manifest(const std::vector<Article>& articles);

}  // namespace seatcast

#endif
