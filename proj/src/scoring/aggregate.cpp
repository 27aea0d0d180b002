#include "seatcast/scoring/aggregate.hpp"

#include <stdexcept>

#include "seatcast/scoring/score.hpp"

namespace seatcast {

std::string Scope::to_string() const {
    switch (kind) {
        case Kind::National: return "national";
        case Kind::Constituency: return "constituency:" + id;
        case Kind::Outlet: return "outlet:" + id;
    }
    return "national";
}

ArticleIndex build_article_index(const std::vector<Article>& articles) {
    ArticleIndex index;
    for (const auto& a : articles) index[a.id] = {a.published_at, a.outlet};
    return index;
}

namespace {

bool scope_matches(const Scope& scope, const ArticleMeta& meta, const std::string& entity_id,
                   const Roster* roster) {
    switch (scope.kind) {
        case Scope::Kind::National:
            return true;
        case Scope::Kind::Outlet:
            return meta.outlet == scope.id;
        case Scope::Kind::Constituency: {
            if (roster == nullptr)
                throw std::invalid_argument("constituency scope requires a roster");
            const EntityDef* entity = roster->find_entity(entity_id);
            return entity != nullptr && entity->constituency_id &&
                   *entity->constituency_id == scope.id;
        }
    }
    return false;
}

void finish(SentimentAggregate& agg) {
    agg.total = agg.positive + agg.negative + agg.neutral;
    agg.score = sentiment_score(agg.positive, agg.negative, agg.total);
    agg.sis = sis(agg.positive, agg.negative, agg.total);
}

}  // namespace

SentimentAggregate aggregate(std::span<const EntityLabel> labels, const ArticleIndex& index,
                             const std::string& entity_id, const Scope& scope,
                             const TimeWindow& window, const Roster* roster) {
    SentimentAggregate agg;
    agg.entity_id = entity_id;
    agg.scope = scope;
    agg.window = window;
    for (const auto& label : labels) {
        if (label.entity_id != entity_id) continue;
        const auto it = index.find(label.article_id);
        if (it == index.end()) continue;
        if (!window.contains(it->second.published_at)) continue;
        if (!scope_matches(scope, it->second, entity_id, roster)) continue;
        switch (label.sentiment) {
            case Sentiment::Positive: ++agg.positive; break;
            case Sentiment::Negative: ++agg.negative; break;
            case Sentiment::Neutral: ++agg.neutral; break;
        }
    }
    finish(agg);
    return agg;
}

SentimentSeries weekly_series(std::span<const EntityLabel> labels, const ArticleIndex& index,
                              const std::string& entity_id, const Scope& scope,
                              const TimeWindow& date_range, const Roster* roster) {
    if (date_range.empty()) throw std::invalid_argument("empty date range");
    SentimentSeries series;
    series.entity_id = entity_id;
    series.scope = scope;
    for (Timestamp start = week_floor(date_range.start); start < date_range.end;
         start += kSecondsPerWeek) {
        series.buckets.push_back(aggregate(labels, index, entity_id, scope,
                                           {start, start + kSecondsPerWeek}, roster));
    }
    return series;
}

double cumulative_sis_change(const SentimentSeries& series, Timestamp from_week,
                             Timestamp to_week) {
    if (from_week >= to_week)
        throw std::invalid_argument("from_week must precede to_week");

    long pos = 0;
    long neg = 0;
    long neu = 0;
    double s_from = 0.0;
    double s_to = 0.0;
    bool saw_from = false;
    bool saw_to = false;
    for (const auto& bucket : series.buckets) {
        pos += bucket.positive;
        neg += bucket.negative;
        neu += bucket.neutral;
        const Timestamp start = bucket.window.start;
        if (start == from_week) {
            s_from = sis(pos, neg, pos + neg + neu);
            saw_from = true;
        }
        if (start == to_week) {
            s_to = sis(pos, neg, pos + neg + neu);
            saw_to = true;
        }
    }
    if (!saw_from || !saw_to)
        throw std::invalid_argument("requested weeks are not in the series");
    return percent_change(s_from, s_to);
}

}  // namespace seatcast
