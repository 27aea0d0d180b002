#include "seatcast/sentiment/classify.hpp"

#include <algorithm>
#include <cmath>

#include "seatcast/util/utf8.hpp"

namespace seatcast {

namespace {

bool is_word_cp(char32_t cp) { return utf8::is_letter(cp) || utf8::is_digit(cp); }

// Folded copy plus a map from folded byte positions back to source byte
// positions, so matches can be reported as ranges into the original.
struct FoldedText {
    std::string folded;
    std::vector<std::size_t> source_pos;  // one entry per folded byte

    static FoldedText build(std::string_view text) {
        FoldedText out;
        out.folded.reserve(text.size());
        std::size_t i = 0;
        while (i < text.size()) {
            const std::size_t start = i;
            const char32_t cp = utf8::decode(text, i);
            std::string piece;
            if (is_word_cp(cp)) utf8::fold_append(piece, cp);
            else piece = " ";
            for (const char c : piece) {
                out.folded.push_back(c);
                out.source_pos.push_back(start);
            }
        }
        return out;
    }
};

std::string fold_alias_words(std::string_view alias) {
    std::string out;
    std::size_t i = 0;
    bool pending = false;
    while (i < alias.size()) {
        const char32_t cp = utf8::decode(alias, i);
        if (is_word_cp(cp)) {
            if (pending && !out.empty()) out.push_back(' ');
            pending = false;
            utf8::fold_append(out, cp);
        } else {
            pending = true;
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> find_mentions(std::string_view cleaned,
                                                               const EntityDef& entity) {
    const FoldedText folded = FoldedText::build(cleaned);
    std::vector<std::pair<std::size_t, std::size_t>> mentions;
    for (const auto& alias : entity.aliases) {
        const std::string needle = fold_alias_words(alias);
        if (needle.empty()) continue;
        std::size_t from = 0;
        while (true) {
            const auto pos = folded.folded.find(needle, from);
            if (pos == std::string::npos) break;
            from = pos + 1;
            const std::size_t end = pos + needle.size();
            const bool left_ok = pos == 0 || folded.folded[pos - 1] == ' ';
            const bool right_ok = end >= folded.folded.size() || folded.folded[end] == ' ';
            if (!left_ok || !right_ok) continue;
            const std::size_t src_begin = folded.source_pos[pos];
            const std::size_t src_end =
                end < folded.source_pos.size() ? folded.source_pos[end] : cleaned.size();
            mentions.emplace_back(src_begin, src_end);
        }
    }
    std::sort(mentions.begin(), mentions.end());
    mentions.erase(std::unique(mentions.begin(), mentions.end()), mentions.end());
    return mentions;
}

std::optional<EntityLabel> classify_lexicon(const TokenizedArticle& article,
                                            const EntityDef& entity, const LexiconSet& lexicons,
                                            const ClassifyParams& params) {
    const auto mentions = find_mentions(article.cleaned, entity);
    if (mentions.empty()) return std::nullopt;

    const auto& tokens = article.tokens;
    const std::size_t n = tokens.size();
    std::vector<bool> in_window(n, false);
    const std::size_t window = params.mention_window < 0
                                   ? 0
                                   : static_cast<std::size_t>(params.mention_window);

    for (const auto& [begin, end] : mentions) {
        // Anchor: first token at or after the mention start.
        std::size_t anchor = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (tokens[i].offset >= begin) {
                anchor = i;
                break;
            }
        }
        if (anchor == n && n > 0) anchor = n - 1;
        if (n == 0) break;
        const std::size_t lo = anchor >= window ? anchor - window : 0;
        const std::size_t hi = std::min(n - 1, anchor + window);
        for (std::size_t i = lo; i <= hi; ++i) in_window[i] = true;
    }

    long long score = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_window[i]) continue;
        score += lexicons.polarity(tokens[i].stem, article.language);
    }

    EntityLabel label;
    label.article_id = article.article_id;
    label.entity_id = entity.entity_id;
    label.source = LabelSource::Lexicon;
    const double s = static_cast<double>(score);
    if (s > params.neutral_band) label.sentiment = Sentiment::Positive;
    else if (s < -params.neutral_band) label.sentiment = Sentiment::Negative;
    else label.sentiment = Sentiment::Neutral;
    label.confidence = std::abs(s) / (std::abs(s) + 2.0);
    return label;
}

}  // namespace seatcast
