#ifndef SEATCAST_BIAS_BIAS_HPP
#define SEATCAST_BIAS_BIAS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seatcast/scoring/aggregate.hpp"

namespace seatcast {

// Additive per-(outlet, entity) offset on the score scale. For each
// entity the support-weighted mean of bias over all outlets is 0.
struct OutletBias {
    std::string outlet_id;
    std::string entity_id;
    double bias = 0.0;
    long support = 0;  // phi the estimate is based on
};

class BiasTable {
  public:
    void add(OutletBias row);

    // Bias for (outlet, entity); nullopt when the pair is unknown (the
    // caller treats that as 0 with a warning).
    std::optional<double> lookup(const std::string& outlet_id,
                                 const std::string& entity_id) const;

    const std::vector<OutletBias>& rows() const { return rows_; }

    // CSV `outlet_id,entity_id,bias,support`.
    void save(std::ostream& out) const;
    void save(const std::string& path) const;
    static BiasTable load(std::istream& in);        // throws DataError
    static BiasTable load(const std::string& path);

  private:
    std::vector<OutletBias> rows_;  // kept sorted by (outlet_id, entity_id)
};

// bias(o,e) = score_{o,e} - reference_e, where reference_e is Eq. 1 over
// the labels of every outlet whose phi_{o,e} >= min_support; pairs below
// min_support get bias 0. Estimated within `window` only.
BiasTable identify_bias(std::span<const EntityLabel> labels, const ArticleIndex& index,
                        const std::vector<std::string>& outlets,
                        const std::vector<std::string>& entities, const TimeWindow& window,
                        long min_support = 10);

// Outlet-scope aggregate: score' = clamp(score - bias, [-1, 1]) and
// sis' = score' * ln(phi); counts are untouched. A missing bias entry is
// treated as 0 and reported through `warnings` when given.
SentimentAggregate adjust(const SentimentAggregate& outlet_aggregate, const BiasTable& table,
                          std::vector<std::string>* warnings = nullptr);

// Cross-outlet adjusted aggregate for one entity: decomposes into
// per-outlet parts, adjusts each, then support-weights the adjusted
// scores; sis' = score' * ln(phi_total).
SentimentAggregate adjust_entity(std::span<const EntityLabel> labels, const ArticleIndex& index,
                                 const std::string& entity_id, const Scope& scope,
                                 const TimeWindow& window, const BiasTable& table,
                                 const Roster* roster = nullptr,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace seatcast

#endif
