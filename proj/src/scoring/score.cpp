#include "seatcast/scoring/score.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seatcast {

namespace {

void check_counts(long positive, long negative, long total) {
    if (positive < 0 || negative < 0 || total < 0)
        throw std::invalid_argument("COUNT_INCONSISTENT: negative count");
    if (total < positive + negative)
        throw std::invalid_argument("COUNT_INCONSISTENT: total " + std::to_string(total) +
                                    " < positive " + std::to_string(positive) + " + negative " +
                                    std::to_string(negative));
}

}  // namespace

double sentiment_score(long positive, long negative, long total) {
    check_counts(positive, negative, total);
    if (total == 0) return 0.0;
    return static_cast<double>(positive - negative) / static_cast<double>(total);
}

double sis(long positive, long negative, long total) {
    check_counts(positive, negative, total);
    if (total == 0) return 0.0;
    return sentiment_score(positive, negative, total) * std::log(static_cast<double>(total));
}

double percent_change(double s_from, double s_to) {
    if (s_from == 0.0)
        throw std::domain_error("UNDEFINED_BASELINE: baseline SIS is zero");
    return 100.0 * (s_to - s_from) / std::abs(s_from);
}

}  // namespace seatcast
