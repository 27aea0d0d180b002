#ifndef SEATCAST_SENTIMENT_CLASSIFY_HPP
#define SEATCAST_SENTIMENT_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "seatcast/corpus/roster.hpp"
#include "seatcast/sentiment/label.hpp"
#include "seatcast/sentiment/lexicon.hpp"
#include "seatcast/text/tokenize.hpp"

namespace seatcast {

struct ClassifyParams {
    int mention_window = 25;    // +/- tokens around a mention
    double neutral_band = 0.0;  // |score| must exceed this to leave Neutral
};

// Byte ranges of alias occurrences in the cleaned article text,
// case/diacritics-insensitive whole-word matches.
std::vector<std::pair<std::size_t, std::size_t>> find_mentions(std::string_view cleaned,
                                                               const EntityDef& entity);

// Sums lexicon polarity over the stems within +/-window tokens of any
// mention; s > band -> positive, s < -band -> negative, else neutral;
// confidence = |s| / (|s| + 2). nullopt when the entity is not mentioned
// (the NO_MENTION case).
std::optional<EntityLabel> classify_lexicon(const TokenizedArticle& article,
                                            const EntityDef& entity, const LexiconSet& lexicons,
                                            const ClassifyParams& params = {});

}  // namespace seatcast

#endif
