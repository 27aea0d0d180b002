#include "seatcast/sentiment/label.hpp"

#include <algorithm>

namespace seatcast {

std::string to_string(Sentiment s) {
    switch (s) {
        case Sentiment::Positive: return "positive";
        case Sentiment::Negative: return "negative";
        case Sentiment::Neutral: break;
    }
    return "neutral";
}

bool sentiment_from_string(std::string_view s, Sentiment& out) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "positive" || lower == "pos") {
        out = Sentiment::Positive;
        return true;
    }
    if (lower == "negative" || lower == "neg") {
        out = Sentiment::Negative;
        return true;
    }
    if (lower == "neutral" || lower == "neu") {
        out = Sentiment::Neutral;
        return true;
    }
    return false;
}

}  // namespace seatcast
