#include "seatcast/text/prep.hpp"

#include "seatcast/text/clean.hpp"
#include "seatcast/text/stem.hpp"

namespace seatcast {

TokenizedArticle prep_article(const Article& article, const StopLists& stops) {
    TokenizedArticle out;
    out.article_id = article.id;

    std::string raw(article.title);
    raw += " . ";
    raw += article.body;
    out.cleaned = clean_text(raw);

    out.language = article.language != Language::Unknown
                       ? article.language
                       : detect_language(out.cleaned, stops);
    out.tokens = tokenize(out.cleaned, out.language, stops);
    for (Token& tok : out.tokens) tok.stem = stem(tok.surface, out.language);
    return out;
}

}  // namespace seatcast
