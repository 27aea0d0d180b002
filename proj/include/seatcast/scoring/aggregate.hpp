#ifndef SEATCAST_SCORING_AGGREGATE_HPP
#define SEATCAST_SCORING_AGGREGATE_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "seatcast/corpus/article.hpp"
#include "seatcast/corpus/roster.hpp"
#include "seatcast/sentiment/label.hpp"
#include "seatcast/util/time.hpp"

namespace seatcast {

struct Scope {
    enum class Kind { National, Constituency, Outlet };

    Kind kind = Kind::National;
    std::string id;  // constituency or outlet id; empty for National

    static Scope national() { return {Kind::National, {}}; }
    static Scope constituency(std::string id) { return {Kind::Constituency, std::move(id)}; }
    static Scope outlet(std::string id) { return {Kind::Outlet, std::move(id)}; }

    std::string to_string() const;
};

// Joins labels to their article's publication date and outlet.
struct ArticleMeta {
    Timestamp published_at = 0;
    std::string outlet;
};
using ArticleIndex = std::map<std::string, ArticleMeta>;

ArticleIndex build_article_index(const std::vector<Article>& articles);

struct SentimentAggregate {
    std::string entity_id;
    Scope scope;
    TimeWindow window;
    long positive = 0;   // omega
    long negative = 0;   // psi
    long neutral = 0;    // nu
    long total = 0;      // phi = omega + psi + nu
    double score = 0.0;  // Eq. 1
    double sis = 0.0;    // Eq. 2
    bool adjusted = false;
};

// Counts the entity's labels whose article falls inside the window and
// matches the scope. Labels whose article_id is absent from the index are
// ignored. Constituency scope requires a roster to resolve entity ->
// constituency (throws std::invalid_argument without one).
SentimentAggregate aggregate(std::span<const EntityLabel> labels, const ArticleIndex& index,
                             const std::string& entity_id, const Scope& scope,
                             const TimeWindow& window, const Roster* roster = nullptr);

struct SentimentSeries {
    std::string entity_id;
    Scope scope;
    std::vector<SentimentAggregate> buckets;  // dense, consecutive ISO weeks
};

// One bucket per ISO week covering date_range (empty weeks included).
SentimentSeries weekly_series(std::span<const EntityLabel> labels, const ArticleIndex& index,
                              const std::string& entity_id, const Scope& scope,
                              const TimeWindow& date_range, const Roster* roster = nullptr);

// Percent change of the cumulative SIS (counts from series start through
// each week). from/to are bucket start timestamps; throws
// std::invalid_argument when not in the series or out of order, and
// std::domain_error (UNDEFINED_BASELINE) when the baseline SIS is 0.
double cumulative_sis_change(const SentimentSeries& series, Timestamp from_week,
                             Timestamp to_week);

}  // namespace seatcast

#endif
