#ifndef SEATCAST_FORECAST_FORECAST_HPP
#define SEATCAST_FORECAST_FORECAST_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seatcast/bias/bias.hpp"
#include "seatcast/corpus/roster.hpp"
#include "seatcast/scoring/aggregate.hpp"

namespace seatcast {

struct PartyStanding {
    double score = 0.0;  // adjusted
    double sis = 0.0;    // adjusted
    long support = 0;    // phi backing the score
    bool fallback = false;  // true when national figures were substituted
};

struct ConstituencyForecast {
    std::string constituency_id;
    std::map<std::string, int> seats;            // party_id -> seats
    std::map<std::string, PartyStanding> basis;  // party_id -> standing used
    bool fallback_used = false;
};

struct NationalForecast {
    std::vector<ConstituencyForecast> per_constituency;
    std::map<std::string, int> totals;
};

// Pools the party's entities at national scope and bias-adjusts; the
// fallback source for data-sparse constituencies.
std::map<std::string, PartyStanding> national_party_standings(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const TimeWindow& window);

// Per-party adjusted score/SIS for one constituency; parties with no
// local labels fall back to their national standing.
std::map<std::string, PartyStanding> constituency_scores(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const ConstituencyDef& constituency, const TimeWindow& window,
    const std::map<std::string, PartyStanding>& national);

// Largest-remainder apportionment over weights w = score + 1. Both
// weights 0 -> even split. Remainder ties go to the higher SIS, then to
// the first (lexicographically smaller) party. Throws
// std::invalid_argument for scores outside [-1,1] or magnitude < 1.
std::pair<int, int> allocate_seats(double score_a, double score_b, double sis_a, double sis_b,
                                   int magnitude);

ConstituencyForecast forecast_constituency(
    std::span<const EntityLabel> labels, const ArticleIndex& index, const Roster& roster,
    const BiasTable& bias, const ConstituencyDef& constituency, const TimeWindow& window,
    const std::map<std::string, PartyStanding>& national);

// Sums per-party seats; throws std::invalid_argument on duplicate
// constituency ids or an empty input.
NationalForecast national_forecast(std::vector<ConstituencyForecast> per_constituency);

// CSV `constituency,party_A_seats,party_B_seats` plus a `total` row;
// party A is the lexicographically smaller party id.
void save_forecast_csv(std::ostream& out, const NationalForecast& forecast,
                       const Roster& roster);

// Per-constituency basis detail (scores, SIS, support, fallback flag).
void save_forecast_basis_csv(std::ostream& out, const NationalForecast& forecast,
                             const Roster& roster);

}  // namespace seatcast

#endif
