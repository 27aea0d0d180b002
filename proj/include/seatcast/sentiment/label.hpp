#ifndef SEATCAST_SENTIMENT_LABEL_HPP
#define SEATCAST_SENTIMENT_LABEL_HPP

#include <string>
#include <string_view>

namespace seatcast {

enum class Sentiment { Positive, Negative, Neutral };

enum class LabelSource { Lexicon, External };

std::string to_string(Sentiment s);

// Accepts "positive"/"negative"/"neutral" (any case) and the short forms
// "POS"/"NEG"/"NEU". Returns false on anything else.
bool sentiment_from_string(std::string_view s, Sentiment& out);

struct EntityLabel {
    std::string article_id;
    std::string entity_id;
    Sentiment sentiment = Sentiment::Neutral;
    double confidence = 0.0;  // in [0, 1]
    LabelSource source = LabelSource::Lexicon;
};

}  // namespace seatcast

#endif
