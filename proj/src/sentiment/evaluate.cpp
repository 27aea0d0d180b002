#include "seatcast/sentiment/evaluate.hpp"

#include <algorithm>

namespace seatcast {

namespace {

std::string describe_mismatch(const std::vector<std::string>& missing_pred,
                              const std::vector<std::string>& missing_gold) {
    std::string msg = "KEY_MISMATCH:";
    if (!missing_pred.empty()) {
        msg += " missing in predicted:";
        for (const auto& k : missing_pred) msg += " " + k;
    }
    if (!missing_gold.empty()) {
        msg += " missing in gold:";
        for (const auto& k : missing_gold) msg += " " + k;
    }
    return msg;
}

std::map<std::pair<std::string, std::string>, Sentiment> index_labels(
    const std::vector<EntityLabel>& labels) {
    std::map<std::pair<std::string, std::string>, Sentiment> out;
    for (const auto& l : labels) out[{l.article_id, l.entity_id}] = l.sentiment;
    return out;
}

}  // namespace

KeyMismatchError::KeyMismatchError(std::vector<std::string> missing_pred,
                                   std::vector<std::string> missing_gold)
    : DataError(describe_mismatch(missing_pred, missing_gold)),
      missing_in_predicted(std::move(missing_pred)),
      missing_in_gold(std::move(missing_gold)) {}

std::size_t class_index(Sentiment s) {
    switch (s) {
        case Sentiment::Positive: return 0;
        case Sentiment::Negative: return 1;
        case Sentiment::Neutral: break;
    }
    return 2;
}

EvalReport evaluate(const std::vector<EntityLabel>& predicted,
                    const std::vector<EntityLabel>& gold) {
    const auto pred_index = index_labels(predicted);
    const auto gold_index = index_labels(gold);

    std::vector<std::string> missing_pred;
    std::vector<std::string> missing_gold;
    for (const auto& [key, _] : gold_index) {
        if (pred_index.find(key) == pred_index.end())
            missing_pred.push_back(key.first + "/" + key.second);
    }
    for (const auto& [key, _] : pred_index) {
        if (gold_index.find(key) == gold_index.end())
            missing_gold.push_back(key.first + "/" + key.second);
    }
    if (!missing_pred.empty() || !missing_gold.empty())
        throw KeyMismatchError(std::move(missing_pred), std::move(missing_gold));

    EvalReport report;
    for (const auto& [key, gold_sentiment] : gold_index) {
        const Sentiment pred_sentiment = pred_index.at(key);
        ++report.confusion[class_index(gold_sentiment)][class_index(pred_sentiment)];
        ++report.total;
    }

    long trace = 0;
    for (std::size_t c = 0; c < 3; ++c) trace += report.confusion[c][c];
    report.accuracy = report.total == 0 ? 0.0
                                        : static_cast<double>(trace) /
                                              static_cast<double>(report.total);

    const std::array<Sentiment, 3> classes = {Sentiment::Positive, Sentiment::Negative,
                                              Sentiment::Neutral};
    double f1_sum = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        const long tp = report.confusion[c][c];
        long fp = 0;
        long fn = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == c) continue;
            fp += report.confusion[r][c];
            fn += report.confusion[c][r];
        }
        ClassMetrics m;
        m.precision = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
        m.recall = (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
        m.f1 = (m.precision + m.recall) == 0.0
                   ? 0.0
                   : 2.0 * m.precision * m.recall / (m.precision + m.recall);
        f1_sum += m.f1;
        report.per_class[classes[c]] = m;
    }
    report.macro_f1 = f1_sum / 3.0;
    return report;
}

}  // namespace seatcast
