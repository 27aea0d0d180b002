#ifndef SEATCAST_CORPUS_FETCH_HPP
#define SEATCAST_CORPUS_FETCH_HPP

#include <string>
#include <vector>

#include "seatcast/corpus/html.hpp"
#include "seatcast/util/time.hpp"

namespace seatcast {

// One news source. `source` is either "local:<directory>" (every
// *.html/*.htm file, filename order) or an http(s) base URL, in which
// case `pages` and/or `index` + `link_pattern` name what to pull.
struct OutletConfig {
    std::string outlet_id;
    std::string source;
    std::vector<std::string> pages;  // explicit paths under the base URL
    std::string index;               // index page to harvest links from
    std::string link_pattern;        // substring filter on harvested hrefs
    html::Selector title_selector;
    html::Selector body_selector;
    html::Selector date_selector;
    std::string date_format = "iso8601";
    double rate_limit_per_sec = 1.0;  // polite default, configurable
};

struct RawDoc {
    std::string url;
    std::string title;
    std::string body;
    Timestamp published_at = 0;
};

// Reject reason codes, stable for reporting.
inline constexpr const char* kRejectDateUnparseable = "DATE_UNPARSEABLE";
inline constexpr const char* kRejectEmptyBody = "EMPTY_BODY";
inline constexpr const char* kRejectFetchFailed = "FETCH_FAILED";
inline constexpr const char* kRejectOutOfRange = "OUT_OF_RANGE";

struct FetchReject {
    std::string url;
    std::string reason;
};

struct FetchResult {
    std::vector<RawDoc> docs;
    std::vector<FetchReject> rejects;
};

// Extraction shared by both source kinds; exposed for tests.
// Returns true and fills `doc` on success, else fills `reason`.
bool extract_document(const OutletConfig& outlet, const std::string& url,
                      std::string_view page_html, RawDoc& doc, std::string& reason);

// Per-document failures land in rejects; only a misconfigured source
// throws (ConfigError).
FetchResult fetch_outlet(const OutletConfig& outlet, const TimeWindow& date_range);

}  // namespace seatcast

#endif
