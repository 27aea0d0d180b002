#include "seatcast/bias/bias.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "seatcast/scoring/score.hpp"
#include "seatcast/util/csv.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

namespace {

double clamp_score(double s) { return std::min(1.0, std::max(-1.0, s)); }

}  // namespace

void BiasTable::add(OutletBias row) {
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), row, [](const OutletBias& a, const OutletBias& b) {
            if (a.outlet_id != b.outlet_id) return a.outlet_id < b.outlet_id;
            return a.entity_id < b.entity_id;
        });
    rows_.insert(pos, std::move(row));
}

std::optional<double> BiasTable::lookup(const std::string& outlet_id,
                                        const std::string& entity_id) const {
    for (const auto& row : rows_) {
        if (row.outlet_id == outlet_id && row.entity_id == entity_id) return row.bias;
    }
    return std::nullopt;
}

void BiasTable::save(std::ostream& out) const {
    csv::write_row(out, {"outlet_id", "entity_id", "bias", "support"});
    for (const auto& row : rows_) {
        char bias[32];
        std::snprintf(bias, sizeof(bias), "%.12g", row.bias);
        csv::write_row(out, {row.outlet_id, row.entity_id, bias, std::to_string(row.support)});
    }
}

void BiasTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write bias table: " + path);
    save(out);
}

BiasTable BiasTable::load(std::istream& in) {
    std::vector<std::string> row;
    if (!csv::read_row(in, row) ||
        row != std::vector<std::string>{"outlet_id", "entity_id", "bias", "support"})
        throw DataError("bias CSV must start with header 'outlet_id,entity_id,bias,support'");
    BiasTable table;
    int line = 1;
    while (csv::read_row(in, row)) {
        ++line;
        if (row.size() == 1 && row[0].empty()) continue;
        if (row.size() != 4)
            throw DataError("bias CSV line " + std::to_string(line) + ": expected 4 fields");
        OutletBias b;
        b.outlet_id = row[0];
        b.entity_id = row[1];
        try {
            b.bias = std::stod(row[2]);
            b.support = std::stol(row[3]);
        } catch (const std::exception&) {
            throw DataError("bias CSV line " + std::to_string(line) + ": bad number");
        }
        table.add(std::move(b));
    }
    return table;
}

BiasTable BiasTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open bias table: " + path);
    return load(in);
}

BiasTable identify_bias(std::span<const EntityLabel> labels, const ArticleIndex& index,
                        const std::vector<std::string>& outlets,
                        const std::vector<std::string>& entities, const TimeWindow& window,
                        long min_support) {
    BiasTable table;
    for (const auto& entity_id : entities) {
        std::vector<std::pair<std::string, SentimentAggregate>> per_outlet;
        per_outlet.reserve(outlets.size());
        for (const auto& outlet_id : outlets) {
            per_outlet.emplace_back(
                outlet_id,
                aggregate(labels, index, entity_id, Scope::outlet(outlet_id), window));
        }
        // Reference score: Eq. 1 pooled over the qualifying outlets, so the
        // support-weighted mean of the emitted biases is exactly zero.
        long pos = 0;
        long neg = 0;
        long total = 0;
        for (const auto& [outlet_id, agg] : per_outlet) {
            if (agg.total < min_support) continue;
            pos += agg.positive;
            neg += agg.negative;
            total += agg.total;
        }
        const double reference = sentiment_score(pos, neg, total);
        for (const auto& [outlet_id, agg] : per_outlet) {
            OutletBias row;
            row.outlet_id = outlet_id;
            row.entity_id = entity_id;
            row.support = agg.total;
            row.bias = agg.total >= min_support ? agg.score - reference : 0.0;
            table.add(std::move(row));
        }
    }
    return table;
}

SentimentAggregate adjust(const SentimentAggregate& outlet_aggregate, const BiasTable& table,
                          std::vector<std::string>* warnings) {
    SentimentAggregate out = outlet_aggregate;
    double bias = 0.0;
    const auto found = table.lookup(outlet_aggregate.scope.id, outlet_aggregate.entity_id);
    if (found) {
        bias = *found;
    } else if (warnings != nullptr) {
        warnings->push_back("no bias entry for (" + outlet_aggregate.scope.id + ", " +
                            outlet_aggregate.entity_id + "); using 0");
    }
    out.score = clamp_score(outlet_aggregate.score - bias);
    out.sis = out.total == 0 ? 0.0 : out.score * std::log(static_cast<double>(out.total));
    out.adjusted = true;
    return out;
}

SentimentAggregate adjust_entity(std::span<const EntityLabel> labels, const ArticleIndex& index,
                                 const std::string& entity_id, const Scope& scope,
                                 const TimeWindow& window, const BiasTable& table,
                                 const Roster* roster, std::vector<std::string>* warnings) {
    SentimentAggregate combined;
    combined.entity_id = entity_id;
    combined.scope = scope;
    combined.window = window;
    combined.adjusted = true;

    // Constituency membership is an entity-level fact; outside entities
    // contribute an empty aggregate.
    if (scope.kind == Scope::Kind::Constituency) {
        if (roster == nullptr) throw std::invalid_argument("constituency scope requires a roster");
        const EntityDef* entity = roster->find_entity(entity_id);
        if (entity == nullptr || !entity->constituency_id ||
            *entity->constituency_id != scope.id)
            return combined;
    }

    // Outlets present in the joined label set, deterministic order.
    std::set<std::string> outlets;
    for (const auto& label : labels) {
        if (label.entity_id != entity_id) continue;
        const auto it = index.find(label.article_id);
        if (it == index.end()) continue;
        if (!window.contains(it->second.published_at)) continue;
        outlets.insert(it->second.outlet);
    }

    double weighted_score = 0.0;
    for (const auto& outlet_id : outlets) {
        const SentimentAggregate part =
            aggregate(labels, index, entity_id, Scope::outlet(outlet_id), window);
        if (part.total == 0) continue;
        const SentimentAggregate adjusted_part = adjust(part, table, warnings);
        combined.positive += adjusted_part.positive;
        combined.negative += adjusted_part.negative;
        combined.neutral += adjusted_part.neutral;
        weighted_score += static_cast<double>(adjusted_part.total) * adjusted_part.score;
    }
    combined.total = combined.positive + combined.negative + combined.neutral;
    combined.score = combined.total == 0 ? 0.0 : weighted_score / static_cast<double>(combined.total);
    combined.sis =
        combined.total == 0 ? 0.0 : combined.score * std::log(static_cast<double>(combined.total));
    return combined;
}

}  // namespace seatcast
