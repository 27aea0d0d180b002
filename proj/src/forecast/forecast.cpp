#include "seatcast/forecast/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "seatcast/util/csv.hpp"

namespace seatcast {

namespace {

// Pools per-(entity, outlet) adjusted aggregates into one standing:
// support-weighted mean of adjusted scores, SIS on the pooled total.
PartyStanding pool_entities(std::span<const EntityLabel> labels, const ArticleIndex& index,
                            const std::vector<std::string>& entity_ids, const BiasTable& bias,
                            const TimeWindow& window) {
    PartyStanding standing;
    double weighted_score = 0.0;
    long total = 0;
    for (const auto& entity_id : entity_ids) {
        const SentimentAggregate adjusted =
            adjust_entity(labels, index, entity_id, Scope::national(), window, bias);
        if (adjusted.total == 0) continue;
        weighted_score += static_cast<double>(adjusted.total) * adjusted.score;
        total += adjusted.total;
    }
    standing.support = total;
    if (total > 0) {
        standing.score = weighted_score / static_cast<double>(total);
        standing.sis = standing.score * std::log(static_cast<double>(total));
    }
    return standing;
}

}  // namespace

std::map<std::string, PartyStanding> national_party_standings(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const TimeWindow& window) {
    std::map<std::string, PartyStanding> out;
    for (const auto& party : roster.parties) {
        out[party.party_id] =
            pool_entities(labels, index, roster.party_entities(party.party_id), bias, window);
    }
    return out;
}

std::map<std::string, PartyStanding> constituency_scores(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const ConstituencyDef& constituency, const TimeWindow& window,
    const std::map<std::string, PartyStanding>& national) {
    std::map<std::string, PartyStanding> out;
    for (const auto& party : roster.parties) {
        const auto candidates = roster.candidates(constituency.constituency_id, party.party_id);
        PartyStanding standing = pool_entities(labels, index, candidates, bias, window);
        if (standing.support == 0) {
            standing = national.at(party.party_id);
            standing.fallback = true;
        }
        out[party.party_id] = standing;
    }
    return out;
}

std::pair<int, int> allocate_seats(double score_a, double score_b, double sis_a, double sis_b,
                                   int magnitude) {
    if (score_a < -1.0 || score_a > 1.0 || score_b < -1.0 || score_b > 1.0)
        throw std::invalid_argument("scores must lie in [-1, 1]");
    if (magnitude < 1) throw std::invalid_argument("magnitude must be >= 1");

    const double weight_a = score_a + 1.0;
    const double weight_b = score_b + 1.0;
    const double weight_sum = weight_a + weight_b;

    // Both quotas go through the same expression so that swapping the
    // parties swaps the allocation bit-for-bit.
    const double quota_a = weight_sum == 0.0 ? 0.5 * magnitude
                                             : weight_a * magnitude / weight_sum;
    const double quota_b = weight_sum == 0.0 ? 0.5 * magnitude
                                             : weight_b * magnitude / weight_sum;
    int seats_a = static_cast<int>(std::floor(quota_a));
    int seats_b = static_cast<int>(std::floor(quota_b));
    double rem_a = quota_a - seats_a;
    double rem_b = quota_b - seats_b;

    // Largest remainder; remainder ties break on SIS, then on party A
    // (the caller passes the lexicographically smaller party first).
    while (seats_a + seats_b < magnitude) {
        bool give_a;
        if (rem_a != rem_b) give_a = rem_a > rem_b;
        else if (sis_a != sis_b) give_a = sis_a > sis_b;
        else give_a = true;
        if (give_a) {
            ++seats_a;
            rem_a = -1.0;
        } else {
            ++seats_b;
            rem_b = -1.0;
        }
    }
    return {seats_a, seats_b};
}

ConstituencyForecast forecast_constituency(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const ConstituencyDef& constituency, const TimeWindow& window,
    const std::map<std::string, PartyStanding>& national) {
    ConstituencyForecast out;
    out.constituency_id = constituency.constituency_id;
    out.basis =
        constituency_scores(labels, index, roster, bias, constituency, window, national);

    const auto [party_a, party_b] = roster.party_ids_sorted();
    const PartyStanding& a = out.basis.at(party_a);
    const PartyStanding& b = out.basis.at(party_b);
    const auto [seats_a, seats_b] =
        allocate_seats(a.score, b.score, a.sis, b.sis, constituency.magnitude);
    out.seats[party_a] = seats_a;
    out.seats[party_b] = seats_b;
    out.fallback_used = a.fallback || b.fallback;
    return out;
}

NationalForecast national_forecast(std::vector<ConstituencyForecast> per_constituency) {
    if (per_constituency.empty())
        throw std::invalid_argument("forecast needs at least one constituency");
    std::set<std::string> seen;
    NationalForecast out;
    for (auto& cf : per_constituency) {
        if (!seen.insert(cf.constituency_id).second)
            throw std::invalid_argument("duplicate constituency id '" + cf.constituency_id + "'");
        for (const auto& [party, seats] : cf.seats) out.totals[party] += seats;
    }
    out.per_constituency = std::move(per_constituency);
    return out;
}

void save_forecast_csv(std::ostream& out, const NationalForecast& forecast,
                       const Roster& roster) {
    const auto [party_a, party_b] = roster.party_ids_sorted();
    csv::write_row(out, {"constituency", "party_A_seats", "party_B_seats"});
    for (const auto& cf : forecast.per_constituency) {
        csv::write_row(out, {cf.constituency_id, std::to_string(cf.seats.at(party_a)),
                             std::to_string(cf.seats.at(party_b))});
    }
    csv::write_row(out, {"total", std::to_string(forecast.totals.at(party_a)),
                         std::to_string(forecast.totals.at(party_b))});
}

void save_forecast_basis_csv(std::ostream& out, const NationalForecast& forecast,
                             const Roster& roster) {
    const auto [party_a, party_b] = roster.party_ids_sorted();
    csv::write_row(out, {"constituency", "party", "score", "sis", "support", "fallback"});
    for (const auto& cf : forecast.per_constituency) {
        for (const auto& party : {party_a, party_b}) {
            const PartyStanding& s = cf.basis.at(party);
            char score[32];
            char sis[32];
            std::snprintf(score, sizeof(score), "%.12g", s.score);
            std::snprintf(sis, sizeof(sis), "%.12g", s.sis);
            csv::write_row(out, {cf.constituency_id, party, score, sis,
                                 std::to_string(s.support), s.fallback ? "1" : "0"});
        }
    }
}

}  // namespace seatcast
