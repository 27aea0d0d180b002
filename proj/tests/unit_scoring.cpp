#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "seatcast/scoring/aggregate.hpp"
#include "seatcast/scoring/score.hpp"

using namespace seatcast;

namespace {

EntityLabel label(const std::string& article, const std::string& entity, Sentiment s) {
    EntityLabel l;
    l.article_id = article;
    l.entity_id = entity;
    l.sentiment = s;
    l.confidence = 1.0;
    return l;
}

}  // namespace

TEST_CASE("sentiment_score: Eq. 1") {
    CHECK(sentiment_score(5, 5, 12) == 0.0);   // omega == psi
    CHECK(sentiment_score(7, 0, 7) == 1.0);    // all positive
    CHECK(sentiment_score(0, 0, 0) == 0.0);    // empty
    // Arithmetic oracle on the reported 43%/27% distribution.
    CHECK(sentiment_score(43, 27, 100) == 0.16);
    CHECK(sentiment_score(32, 40, 100) == -0.08);
    CHECK_THROWS_AS(sentiment_score(5, 6, 10), std::invalid_argument);
    CHECK_THROWS_AS(sentiment_score(-1, 0, 10), std::invalid_argument);
}

TEST_CASE("sis: Eq. 2 with natural log") {
    CHECK(sis(1, 0, 1) == 0.0);  // ln 1 = 0
    CHECK(sis(0, 1, 1) == 0.0);
    CHECK(sis(0, 0, 0) == 0.0);
    // Frozen from an independent arithmetic oracle: 0.16 * ln(100).
    CHECK(sis(43, 27, 100) == doctest::Approx(0.7368272297580947).epsilon(1e-12));
    // -ln(10).
    CHECK(sis(0, 10, 10) == doctest::Approx(-2.302585092994046).epsilon(1e-12));
    CHECK_THROWS_AS(sis(5, 6, 10), std::invalid_argument);
}

TEST_CASE("sis sign and growth properties") {
    for (long total = 2; total <= 200; total += 7) {
        for (long pos = 0; pos <= total; pos += 3) {
            const long neg = total - pos;
            const double score = sentiment_score(pos, neg, total);
            const double impact = sis(pos, neg, total);
            if (score > 0) CHECK(impact > 0);
            if (score < 0) CHECK(impact < 0);
            if (score == 0.0) CHECK(impact == 0.0);
        }
    }
    // For a fixed positive score, sis grows strictly with phi.
    double prev = sis(6, 2, 8);
    for (long k = 2; k <= 6; ++k) {
        const double cur = sis(6 * k, 2 * k, 8 * k);
        CHECK(cur > prev);
        prev = cur;
    }
    // Scaling counts by k leaves the score unchanged and multiplies sis by
    // ln(k*phi)/ln(phi): checked numerically for k=10, phi=100.
    CHECK(sentiment_score(430, 270, 1000) == doctest::Approx(0.16).epsilon(1e-15));
    CHECK(sis(430, 270, 1000) ==
          doctest::Approx(sis(43, 27, 100) * std::log(1000.0) / std::log(100.0))
              .epsilon(1e-9));
}

TEST_CASE("percent_change matches the reported trend arithmetic") {
    CHECK(percent_change(0.50, 0.56) == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(percent_change(1.00, 0.91) == doctest::Approx(-9.0).epsilon(1e-9));
    CHECK(percent_change(-0.5, -0.4) == doctest::Approx(20.0).epsilon(1e-9));
    CHECK_THROWS_AS(percent_change(0.0, 0.5), std::domain_error);
}

TEST_CASE("aggregate counts labels in window and scope") {
    ArticleIndex index;
    index["a1"] = {make_utc(2024, 1, 2), "defi"};
    index["a2"] = {make_utc(2024, 1, 3), "defi"};
    index["a3"] = {make_utc(2024, 1, 4), "lexpress"};
    index["a4"] = {make_utc(2024, 2, 20), "defi"};  // outside the window

    std::vector<EntityLabel> labels = {
        label("a1", "e1", Sentiment::Positive), label("a2", "e1", Sentiment::Positive),
        label("a3", "e1", Sentiment::Negative), label("a4", "e1", Sentiment::Positive),
        label("a1", "e2", Sentiment::Negative),  // other entity
    };
    // a4's label is neutral in a different copy to get the 2/1/1 example.
    labels.push_back(label("missing", "e1", Sentiment::Positive));  // not in index
    ArticleIndex with_neutral = index;
    with_neutral["a5"] = {make_utc(2024, 1, 5), "defi"};
    labels.push_back(label("a5", "e1", Sentiment::Neutral));

    const TimeWindow window{make_utc(2024, 1, 1), make_utc(2024, 2, 1)};
    const auto agg =
        aggregate(labels, with_neutral, "e1", Scope::national(), window);
    CHECK(agg.positive == 2);
    CHECK(agg.negative == 1);
    CHECK(agg.neutral == 1);
    CHECK(agg.total == 4);
    CHECK(agg.score == doctest::Approx(0.25));
    CHECK_FALSE(agg.adjusted);

    // Order-independence.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = labels;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto again =
            aggregate(shuffled, with_neutral, "e1", Scope::national(), window);
        CHECK(again.positive == agg.positive);
        CHECK(again.negative == agg.negative);
        CHECK(again.neutral == agg.neutral);
        CHECK(again.score == agg.score);
    }

    // Outlet scope restricts to one outlet.
    const auto defi_only =
        aggregate(labels, with_neutral, "e1", Scope::outlet("defi"), window);
    CHECK(defi_only.total == 3);
    CHECK(defi_only.negative == 0);

    // Empty selection yields the zero aggregate.
    const TimeWindow empty_window{make_utc(2030, 1, 1), make_utc(2030, 2, 1)};
    const auto none = aggregate(labels, with_neutral, "e1", Scope::national(), empty_window);
    CHECK(none.total == 0);
    CHECK(none.score == 0.0);
    CHECK(none.sis == 0.0);
}

TEST_CASE("weekly_series: dense ISO-week buckets, half-open boundaries") {
    ArticleIndex index;
    index["w1"] = {make_utc(2024, 1, 2), "defi"};   // 2024-W01
    index["w2"] = {make_utc(2024, 1, 10), "defi"};  // 2024-W02
    index["boundary"] = {make_utc(2024, 1, 8), "defi"};  // Monday 00:00 -> W02

    const std::vector<EntityLabel> labels = {
        label("w1", "e1", Sentiment::Positive),
        label("w2", "e1", Sentiment::Negative),
        label("boundary", "e1", Sentiment::Positive),
    };
    const TimeWindow range{make_utc(2024, 1, 1), make_utc(2024, 1, 29)};
    const auto series = weekly_series(labels, index, "e1", Scope::national(), range);
    REQUIRE(series.buckets.size() == 4);

    // Contiguous, non-overlapping, one-week windows.
    for (std::size_t i = 0; i < series.buckets.size(); ++i) {
        const auto& b = series.buckets[i];
        CHECK(b.window.end - b.window.start == kSecondsPerWeek);
        CHECK(week_floor(b.window.start) == b.window.start);
        if (i > 0) CHECK(b.window.start == series.buckets[i - 1].window.end);
    }
    CHECK(iso_week_label(series.buckets[0].window.start) == "2024-W01");
    CHECK(series.buckets[0].positive == 1);
    CHECK(series.buckets[0].total == 1);
    // The Monday-00:00 label falls in the later week.
    CHECK(series.buckets[1].positive == 1);
    CHECK(series.buckets[1].negative == 1);
    CHECK(series.buckets[2].total == 0);
    CHECK(series.buckets[3].total == 0);

    // Bucket sums equal the full-range aggregate.
    long pos = 0;
    long neg = 0;
    long neu = 0;
    for (const auto& b : series.buckets) {
        pos += b.positive;
        neg += b.negative;
        neu += b.neutral;
    }
    const auto whole = aggregate(labels, index, "e1", Scope::national(), range);
    CHECK(pos == whole.positive);
    CHECK(neg == whole.negative);
    CHECK(neu == whole.neutral);

    // Empty label set over 4 weeks -> 4 buckets, all zero.
    const auto empty_series =
        weekly_series({}, index, "e1", Scope::national(), range);
    REQUIRE(empty_series.buckets.size() == 4);
    for (const auto& b : empty_series.buckets) CHECK(b.total == 0);
}

TEST_CASE("cumulative_sis_change") {
    ArticleIndex index;
    std::vector<EntityLabel> labels;
    // Week 1: 5 positive labels. Week 2: nothing. Week 3: 3 positive, 2 negative.
    int n = 0;
    const auto add = [&](Timestamp ts, Sentiment s) {
        const std::string id = "a" + std::to_string(n++);
        index[id] = {ts, "defi"};
        labels.push_back(label(id, "e1", s));
    };
    for (int i = 0; i < 5; ++i) add(make_utc(2024, 1, 2, i), Sentiment::Positive);
    for (int i = 0; i < 3; ++i) add(make_utc(2024, 1, 16, i), Sentiment::Positive);
    for (int i = 0; i < 2; ++i) add(make_utc(2024, 1, 17, i), Sentiment::Negative);

    const TimeWindow range{make_utc(2024, 1, 1), make_utc(2024, 1, 22)};
    const auto series = weekly_series(labels, index, "e1", Scope::national(), range);
    REQUIRE(series.buckets.size() == 3);

    const Timestamp w1 = series.buckets[0].window.start;
    const Timestamp w2 = series.buckets[1].window.start;
    const Timestamp w3 = series.buckets[2].window.start;

    // Constant cumulative counts between w1 and w2 -> 0%.
    CHECK(cumulative_sis_change(series, w1, w2) == doctest::Approx(0.0));
    // Oracle: S(w1) = 1*ln(5); S(w3) = (6/10)*ln(10).
    const double expected =
        100.0 * (0.6 * std::log(10.0) - std::log(5.0)) / std::log(5.0);
    CHECK(cumulative_sis_change(series, w1, w3) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(cumulative_sis_change(series, w2, w1), std::invalid_argument);
    // Weeks outside the series are rejected.
    CHECK_THROWS_AS(cumulative_sis_change(series, w1 - kSecondsPerWeek, w3),
                    std::invalid_argument);

    // Zero baseline: only neutral labels in week one.
    ArticleIndex index2;
    std::vector<EntityLabel> neutral_first;
    index2["n1"] = {make_utc(2024, 1, 2), "defi"};
    index2["n2"] = {make_utc(2024, 1, 10), "defi"};
    neutral_first.push_back(label("n1", "e1", Sentiment::Neutral));
    neutral_first.push_back(label("n2", "e1", Sentiment::Positive));
    const auto series2 = weekly_series(neutral_first, index2, "e1", Scope::national(),
                                       {make_utc(2024, 1, 1), make_utc(2024, 1, 15)});
    CHECK_THROWS_AS(
        cumulative_sis_change(series2, series2.buckets[0].window.start,
                              series2.buckets[1].window.start),
        std::domain_error);
}
