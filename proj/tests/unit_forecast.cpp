#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "seatcast/forecast/chart.hpp"
#include "seatcast/forecast/forecast.hpp"
#include "support/table1.hpp"

using namespace seatcast;

TEST_CASE("allocate_seats: spec examples") {
    // Degenerate shares sweep all seats.
    CHECK(allocate_seats(1.0, -1.0, 1.0, 0.0, 3) == std::pair<int, int>{3, 0});
    CHECK(allocate_seats(-1.0, 1.0, 0.0, 1.0, 3) == std::pair<int, int>{0, 3});
    // Equal scores and SIS: quotas 1.5/1.5, floors (1,1), tie seat to party A.
    CHECK(allocate_seats(0.3, 0.3, 0.5, 0.5, 3) == std::pair<int, int>{2, 1});
    // Equal scores, higher SIS wins the remainder seat.
    CHECK(allocate_seats(0.3, 0.3, 0.2, 0.9, 3) == std::pair<int, int>{1, 2});
    // Hand largest-remainder: w=(1.2,0.8), quotas (1.8,1.2) -> (2,1).
    CHECK(allocate_seats(0.2, -0.2, 0.1, -0.1, 3) == std::pair<int, int>{2, 1});
    // Both weights zero: even split of 4.
    CHECK(allocate_seats(-1.0, -1.0, 0.0, 0.0, 4) == std::pair<int, int>{2, 2});

    CHECK_THROWS_AS(allocate_seats(1.5, 0.0, 0.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(allocate_seats(0.0, -2.0, 0.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(allocate_seats(0.0, 0.0, 0.0, 0.0, 0), std::invalid_argument);
}

TEST_CASE("allocate_seats: conservation, monotonicity, symmetry, share invariance") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> score_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> sis_dist(-5.0, 5.0);
    std::uniform_int_distribution<int> mag_dist(1, 7);

    for (int trial = 0; trial < 2000; ++trial) {
        const double a = score_dist(rng);
        const double b = score_dist(rng);
        const double sa = sis_dist(rng);
        const double sb = sis_dist(rng);
        const int magnitude = mag_dist(rng);

        const auto [seats_a, seats_b] = allocate_seats(a, b, sa, sb, magnitude);
        CHECK(seats_a >= 0);
        CHECK(seats_b >= 0);
        CHECK(seats_a + seats_b == magnitude);

        // Symmetry under party swap (random draws never tie exactly).
        const auto swapped = allocate_seats(b, a, sb, sa, magnitude);
        CHECK(swapped.first == seats_b);
        CHECK(swapped.second == seats_a);

        // Monotonicity in score_a with everything else fixed.
        const double higher = std::min(1.0, a + 0.25);
        const auto more = allocate_seats(higher, b, sa, sb, magnitude);
        CHECK(more.first >= seats_a);

        // The allocation depends on scores only through w_a/(w_a+w_b):
        // scaling both weights by k > 0 leaves it unchanged.
        const double wa = a + 1.0;
        const double wb = b + 1.0;
        const double wmax = std::max(wa, wb);
        if (wmax > 0) {
            const double k = 0.5 * (2.0 / wmax);  // keep scaled weights in [0,2]
            const auto scaled =
                allocate_seats(k * wa - 1.0, k * wb - 1.0, sa, sb, magnitude);
            CHECK(scaled.first == seats_a);
            CHECK(scaled.second == seats_b);
        }
    }
}

TEST_CASE("table 1 score pairs are verified by brute force over a grid") {
    for (const int adc_seats : {0, 1, 2, 3}) {
        const auto [score_adc, score_alp] = seatcast::testing::scores_for_adc_seats(adc_seats);
        const auto seats = allocate_seats(score_adc, score_alp, score_adc, score_alp, 3);
        CHECK(seats.first == adc_seats);
        CHECK(seats.second == 3 - adc_seats);

        // Brute force: the chosen symmetric pair must land in the score band
        // that produces this split, and the band must be non-empty.
        int band_hits = 0;
        for (int s100 = -95; s100 <= 95; s100 += 5) {
            const double s = s100 / 100.0;
            const auto grid = allocate_seats(s, -s, s, -s, 3);
            if (grid.first == adc_seats) ++band_hits;
            if (s100 == static_cast<int>(std::lround(score_adc * 100.0)))
                CHECK(grid.first == adc_seats);
        }
        CHECK(band_hits > 0);
    }
}

TEST_CASE("constituency scores fall back to national standings") {
    const auto fixture = seatcast::testing::build_table1_fixture();
    const Roster& roster = fixture.roster;
    const ArticleIndex index = build_article_index(fixture.articles);
    const BiasTable no_bias;  // adjust() treats missing entries as bias 0

    const auto national = national_party_standings(fixture.labels, index, roster, no_bias,
                                                   fixture.window);
    CHECK(national.at("ADC").support > 0);

    // A constituency with labels uses its local scores.
    const auto local = constituency_scores(fixture.labels, index, roster, no_bias,
                                           *roster.find_constituency("C02"), fixture.window,
                                           national);
    CHECK_FALSE(local.at("ADC").fallback);
    CHECK(local.at("ADC").score == doctest::Approx(0.9));
    CHECK(local.at("ALP").score == doctest::Approx(-0.9));

    // Strip one party's labels in C02: that party falls back.
    std::vector<EntityLabel> partial;
    for (const auto& l : fixture.labels) {
        if (l.entity_id != "alp_c02") partial.push_back(l);
    }
    const auto partial_scores = constituency_scores(partial, index, roster, no_bias,
                                        *roster.find_constituency("C02"), fixture.window,
                                        national);
    CHECK_FALSE(partial_scores.at("ADC").fallback);
    CHECK(partial_scores.at("ALP").fallback);
    CHECK(partial_scores.at("ALP").score == doctest::Approx(national.at("ALP").score));

    // No labels at all: both fall back, flag set on the forecast.
    std::vector<EntityLabel> empty;
    const auto forecast = forecast_constituency(empty, index, roster, no_bias,
                                                *roster.find_constituency("C02"),
                                                fixture.window, national);
    CHECK(forecast.fallback_used);
    CHECK(forecast.seats.at("ADC") + forecast.seats.at("ALP") == 3);
}

TEST_CASE("national_forecast totals and duplicate detection") {
    ConstituencyForecast c1;
    c1.constituency_id = "C01";
    c1.seats = {{"A", 2}, {"B", 1}};
    ConstituencyForecast c2;
    c2.constituency_id = "C02";
    c2.seats = {{"A", 0}, {"B", 3}};

    const auto national = national_forecast({c1, c2});
    CHECK(national.totals.at("A") == 2);
    CHECK(national.totals.at("B") == 4);

    SUBCASE("single constituency") {
        const auto solo = national_forecast({c1});
        CHECK(solo.totals.at("A") == 2);
        CHECK(solo.totals.at("B") == 1);
    }
    SUBCASE("all sweeps") {
        std::vector<ConstituencyForecast> sweeps;
        for (int i = 0; i < 20; ++i) {
            ConstituencyForecast cf;
            cf.constituency_id = "C" + std::to_string(i);
            cf.seats = {{"A", 0}, {"B", 3}};
            sweeps.push_back(cf);
        }
        const auto total = national_forecast(sweeps);
        CHECK(total.totals.at("A") == 0);
        CHECK(total.totals.at("B") == 60);
    }
    SUBCASE("duplicate id throws") {
        CHECK_THROWS_AS(national_forecast({c1, c1}), std::invalid_argument);
    }
    SUBCASE("empty input throws") {
        CHECK_THROWS_AS(national_forecast({}), std::invalid_argument);
    }
}

TEST_CASE("forecast CSV and SVG chart carry the seat data") {
    const auto fixture = seatcast::testing::build_table1_fixture();
    const ArticleIndex index = build_article_index(fixture.articles);
    const BiasTable no_bias;
    const auto national = national_party_standings(fixture.labels, index, fixture.roster,
                                                   no_bias, fixture.window);
    std::vector<ConstituencyForecast> per;
    for (const auto& c : fixture.roster.constituencies)
        per.push_back(forecast_constituency(fixture.labels, index, fixture.roster, no_bias, c,
                                            fixture.window, national));
    const auto forecast = national_forecast(std::move(per));

    std::ostringstream csv_out;
    save_forecast_csv(csv_out, forecast, fixture.roster);
    const std::string csv = csv_out.str();
    CHECK(csv.rfind("constituency,party_A_seats,party_B_seats\n", 0) == 0);
    CHECK(csv.find("\ntotal,37,23\n") != std::string::npos);

    std::ostringstream svg_out;
    write_forecast_chart(svg_out, forecast, fixture.roster);
    const std::string svg = svg_out.str();
    CHECK(svg.find("data-party=\"ADC\" data-seats=\"37\"") != std::string::npos);
    CHECK(svg.find("data-party=\"ALP\" data-seats=\"23\"") != std::string::npos);
    CHECK(svg.rfind("<svg", 0) == 0);
}
