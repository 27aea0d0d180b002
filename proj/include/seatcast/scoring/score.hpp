#ifndef SEATCAST_SCORING_SCORE_HPP
#define SEATCAST_SCORING_SCORE_HPP

namespace seatcast {

// Net sentiment score (omega - psi) / phi in [-1, 1]; 0 when phi = 0.
// Throws std::invalid_argument (COUNT_INCONSISTENT) when phi < omega + psi
// or any count is negative.
double sentiment_score(long positive, long negative, long total);

// Sentiment impact score: sentiment_score * ln(total). Natural log;
// total 0 and 1 both yield 0.
double sis(long positive, long negative, long total);

// 100 * (s_to - s_from) / |s_from|. Throws std::domain_error
// (UNDEFINED_BASELINE) when s_from == 0.
double percent_change(double s_from, double s_to);

}  // namespace seatcast

#endif
