#ifndef SEATCAST_UTIL_TIME_HPP
#define SEATCAST_UTIL_TIME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// UTC timestamps at second precision. All corpus timestamps are stored
// and compared in UTC; weeks follow ISO-8601 (Monday 00:00 UTC start).

namespace seatcast {

using Timestamp = std::int64_t;  // seconds since 1970-01-01T00:00:00Z

inline constexpr Timestamp kSecondsPerDay = 86400;
inline constexpr Timestamp kSecondsPerWeek = 7 * kSecondsPerDay;

struct CivilDate {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
};

std::int64_t days_from_civil(int y, int m, int d);
CivilDate civil_from_days(std::int64_t z);

Timestamp make_utc(int y, int mo, int d, int h = 0, int mi = 0, int s = 0);

// "YYYY-MM-DD" optionally followed by "THH:MM[:SS]" and "Z" or "+hh:mm".
// Offsets are normalized to UTC. A bare date means midnight UTC.
std::optional<Timestamp> parse_iso8601(std::string_view s);

// Per-outlet date formats: %Y %m %d %H %M %S plus %B (English or French
// month name, case/diacritics-insensitive). "iso8601" selects the parser
// above. Non-token characters must match literally.
std::optional<Timestamp> parse_timestamp(std::string_view s, std::string_view format);

std::string format_iso8601(Timestamp ts);  // "YYYY-MM-DDTHH:MM:SSZ"

// Monday 00:00:00 UTC of the ISO week containing ts.
Timestamp week_floor(Timestamp ts);

// ISO-8601 week label, e.g. "2024-W01".
std::string iso_week_label(Timestamp week_start);

// Parses "YYYY-Www" to that week's Monday 00:00 UTC.
std::optional<Timestamp> parse_iso_week(std::string_view s);

// Half-open interval [start, end).
struct TimeWindow {
    Timestamp start = 0;
    Timestamp end = 0;

    bool contains(Timestamp ts) const { return ts >= start && ts < end; }
    bool empty() const { return end <= start; }
};

}  // namespace seatcast

#endif
