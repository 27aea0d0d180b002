#ifndef SEATCAST_SENTIMENT_SPLIT_HPP
#define SEATCAST_SENTIMENT_SPLIT_HPP

#include <utility>
#include <vector>

#include "seatcast/corpus/article.hpp"

namespace seatcast {

// Sorts by (published_at, id) and puts the first ceil(ratio * n) articles
// in train. Throws std::invalid_argument for ratio outside (0, 1) or an
// empty input.
std::pair<std::vector<Article>, std::vector<Article>> chronological_split(
    std::vector<Article> articles, double ratio);

}  // namespace seatcast

#endif
