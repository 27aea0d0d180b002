#ifndef SEATCAST_SENTIMENT_EXTERNAL_HPP
#define SEATCAST_SENTIMENT_EXTERNAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "seatcast/corpus/roster.hpp"
#include "seatcast/sentiment/label.hpp"

namespace seatcast {

struct ImportReject {
    int line = 0;
    std::string message;
};

struct ImportedLabels {
    std::vector<EntityLabel> labels;
    std::vector<ImportReject> rejects;
    std::vector<std::string> warnings;  // e.g. duplicate (article, entity) rows
};

// CSV with header `article_id,entity_id,sentiment,confidence`. Sentiment
// strings are case-insensitive {positive,negative,neutral}. Rows with an
// unknown entity or confidence outside [0,1] are rejected; duplicate
// (article, entity) rows: last wins with a warning. All labels carry
// source = External. Throws DataError when the header is wrong or the
// file is unreadable.
ImportedLabels import_external_labels(std::istream& in, const Roster& roster);
ImportedLabels import_external_labels(const std::string& path, const Roster& roster);

// Writer for the same contract, sorted by (article_id, entity_id).
void save_labels(std::ostream& out, std::vector<EntityLabel> labels);
void save_labels(const std::string& path, std::vector<EntityLabel> labels);

}  // namespace seatcast

#endif
