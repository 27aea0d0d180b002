#include "seatcast/sentiment/external.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include "seatcast/util/csv.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

namespace {

const std::vector<std::string> kHeader = {"article_id", "entity_id", "sentiment", "confidence"};

}  // namespace

ImportedLabels import_external_labels(std::istream& in, const Roster& roster) {
    ImportedLabels result;
    std::vector<std::string> row;
    if (!csv::read_row(in, row) || row != kHeader)
        throw DataError("labels CSV must start with header 'article_id,entity_id,sentiment,confidence'");

    std::map<std::pair<std::string, std::string>, std::size_t> index;
    int line = 1;
    while (csv::read_row(in, row)) {
        ++line;
        if (row.size() == 1 && row[0].empty()) continue;  // blank line
        if (row.size() != 4) {
            result.rejects.push_back({line, "expected 4 fields, got " + std::to_string(row.size())});
            continue;
        }
        EntityLabel label;
        label.article_id = row[0];
        label.entity_id = row[1];
        label.source = LabelSource::External;
        if (roster.find_entity(label.entity_id) == nullptr) {
            result.rejects.push_back({line, "unknown entity_id '" + label.entity_id + "'"});
            continue;
        }
        if (!sentiment_from_string(row[2], label.sentiment)) {
            result.rejects.push_back({line, "bad sentiment '" + row[2] + "'"});
            continue;
        }
        try {
            std::size_t used = 0;
            label.confidence = std::stod(row[3], &used);
            if (used != row[3].size()) throw std::invalid_argument(row[3]);
        } catch (const std::exception&) {
            result.rejects.push_back({line, "bad confidence '" + row[3] + "'"});
            continue;
        }
        if (label.confidence < 0.0 || label.confidence > 1.0) {
            result.rejects.push_back({line, "confidence out of [0,1]: " + row[3]});
            continue;
        }

        const auto key = std::make_pair(label.article_id, label.entity_id);
        if (const auto it = index.find(key); it != index.end()) {
            result.warnings.push_back("line " + std::to_string(line) + ": duplicate label for (" +
                                      label.article_id + ", " + label.entity_id +
                                      "), keeping the later row");
            result.labels[it->second] = std::move(label);
        } else {
            index.emplace(key, result.labels.size());
            result.labels.push_back(std::move(label));
        }
    }
    return result;
}

ImportedLabels import_external_labels(const std::string& path, const Roster& roster) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open labels file: " + path);
    return import_external_labels(in, roster);
}

void save_labels(std::ostream& out, std::vector<EntityLabel> labels) {
    std::sort(labels.begin(), labels.end(), [](const EntityLabel& a, const EntityLabel& b) {
        if (a.article_id != b.article_id) return a.article_id < b.article_id;
        return a.entity_id < b.entity_id;
    });
    csv::write_row(out, kHeader);
    for (const auto& label : labels) {
        char conf[32];
        std::snprintf(conf, sizeof(conf), "%.6f", label.confidence);
        csv::write_row(out, {label.article_id, label.entity_id, to_string(label.sentiment), conf});
    }
}

void save_labels(const std::string& path, std::vector<EntityLabel> labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write labels file: " + path);
    save_labels(out, std::move(labels));
}

}  // namespace seatcast
