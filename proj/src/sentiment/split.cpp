#include "seatcast/sentiment/split.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seatcast {

std::pair<std::vector<Article>, std::vector<Article>> chronological_split(
    std::vector<Article> articles, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("split ratio must be in (0, 1)");
    if (articles.empty()) throw std::invalid_argument("cannot split an empty corpus");

    std::sort(articles.begin(), articles.end(), [](const Article& a, const Article& b) {
        if (a.published_at != b.published_at) return a.published_at < b.published_at;
        return a.id < b.id;
    });

    const auto n = articles.size();
    auto train_n = static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(n)));
    train_n = std::min(train_n, n);

    std::vector<Article> test(articles.begin() + static_cast<std::ptrdiff_t>(train_n),
                              articles.end());
    articles.resize(train_n);
    return {std::move(articles), std::move(test)};
}

}  // namespace seatcast
