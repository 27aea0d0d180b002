#ifndef SEATCAST_TEXT_PREP_HPP
#define SEATCAST_TEXT_PREP_HPP

#include "seatcast/corpus/article.hpp"
#include "seatcast/text/tokenize.hpp"

namespace seatcast {

// clean -> detect language (when the article carries Unknown) -> tokenize
// -> stop-word removal -> stem. The cleaned text covers title and body
// ("title . body") so every matched entity stays addressable by offset.
TokenizedArticle prep_article(const Article& article, const StopLists& stops);

}  // namespace seatcast

#endif
