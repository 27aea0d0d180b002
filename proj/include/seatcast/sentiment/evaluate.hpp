#ifndef SEATCAST_SENTIMENT_EVALUATE_HPP
#define SEATCAST_SENTIMENT_EVALUATE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "seatcast/sentiment/label.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct EvalReport {
    double accuracy = 0.0;
    std::map<Sentiment, ClassMetrics> per_class;
    double macro_f1 = 0.0;
    // confusion[gold][predicted], classes ordered positive, negative, neutral.
    std::array<std::array<long, 3>, 3> confusion{};
    long total = 0;
};

struct KeyMismatchError : DataError {
    std::vector<std::string> missing_in_predicted;
    std::vector<std::string> missing_in_gold;

    KeyMismatchError(std::vector<std::string> missing_pred, std::vector<std::string> missing_gold);
};

// Standard multiclass metrics over matching (article, entity) keys.
// 0/0 precision and recall are defined as 0; macro F1 is the unweighted
// mean of the three class F1 scores. Throws KeyMismatchError when the two
// label sets do not cover the same keys.
EvalReport evaluate(const std::vector<EntityLabel>& predicted,
                    const std::vector<EntityLabel>& gold);

std::size_t class_index(Sentiment s);

}  // namespace seatcast

#endif
