#include "support/table1.hpp"

#include <cstdio>

namespace seatcast::testing {

std::pair<long, long> counts_for_adc_seats(int adc_seats) {
    // score = (pos - neg) / 20 for the ADC candidate; ALP mirrored.
    switch (adc_seats) {
        case 3: return {19, 1};  // +0.9
        case 2: return {12, 8};  // +0.2
        case 1: return {8, 12};  // -0.2
        default: return {1, 19};  // -0.9
    }
}

std::pair<double, double> scores_for_adc_seats(int adc_seats) {
    const auto [pos, neg] = counts_for_adc_seats(adc_seats);
    const double s = static_cast<double>(pos - neg) / static_cast<double>(kLabelsPerCandidate);
    return {s, -s};
}

std::string table1_roster_text() {
    std::string text;
    text += "party ADC \"L'Alliance Du Changement\"\n";
    text += "party ALP \"L'Alliance Lepep\"\n";
    char buf[160];
    for (int c = 1; c <= 20; ++c) {
        std::snprintf(buf, sizeof(buf), "constituency C%02d 3 \"Constituency %d\"\n", c, c);
        text += buf;
    }
    for (int c = 1; c <= 20; ++c) {
        std::snprintf(buf, sizeof(buf),
                      "entity adc_c%02d ADC C%02d \"Arvin Candidate %d\" aka \"Arvin Candidate %d\"\n",
                      c, c, c, c);
        text += buf;
        std::snprintf(buf, sizeof(buf),
                      "entity alp_c%02d ALP C%02d \"Leela Candidate %d\" aka \"Leela Candidate %d\"\n",
                      c, c, c, c);
        text += buf;
    }
    return text;
}

Table1Fixture build_table1_fixture() {
    Table1Fixture fixture;
    fixture.roster = Roster::parse(table1_roster_text(), "<table1>");
    fixture.window = {make_utc(2024, 9, 1), make_utc(2024, 11, 1)};

    char buf[64];
    Timestamp when = make_utc(2024, 9, 2, 8, 0, 0);
    for (int c = 1; c <= 20; ++c) {
        const int adc_seats = kTable1Splits[static_cast<std::size_t>(c - 1)].second;
        for (const bool is_adc : {true, false}) {
            auto [pos, neg] = counts_for_adc_seats(adc_seats);
            if (!is_adc) std::swap(pos, neg);
            std::snprintf(buf, sizeof(buf), "%s_c%02d", is_adc ? "adc" : "alp", c);
            const std::string entity_id = buf;
            for (long k = 0; k < kLabelsPerCandidate; ++k) {
                Article article;
                std::snprintf(buf, sizeof(buf), "art_%s_%02ld", entity_id.c_str(), k);
                article.id = buf;
                article.outlet = "lexpress";
                article.url = "https://example.mu/" + article.id;
                article.published_at = when;
                when += 3600;
                article.language = Language::FR;
                article.title = "Campagne: " + entity_id;
                article.body = "Couverture de campagne pour " + entity_id + ".";
                article.matched_entities.insert(entity_id);
                fixture.articles.push_back(std::move(article));

                EntityLabel label;
                label.article_id = buf;
                label.entity_id = entity_id;
                label.sentiment = k < pos ? Sentiment::Positive
                                          : (k < pos + neg ? Sentiment::Negative
                                                           : Sentiment::Neutral);
                label.confidence = 0.9;
                label.source = LabelSource::External;
                fixture.labels.push_back(std::move(label));
            }
        }
    }
    return fixture;
}

}  // namespace seatcast::testing
