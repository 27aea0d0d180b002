#include "seatcast/util/time.hpp"

#include <array>
#include <cctype>
#include <cstdio>

#include "seatcast/util/utf8.hpp"

namespace seatcast {

// Civil <-> day-count conversions use the standard proleptic Gregorian
// algorithms (era-based, exact over the full int range).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : static_cast<unsigned>(-9));
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

Timestamp make_utc(int y, int mo, int d, int h, int mi, int s) {
    return days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 + mi * 60 + s;
}

namespace {

bool read_int(std::string_view s, std::size_t& i, int digits, int& out) {
    if (i + static_cast<std::size_t>(digits) > s.size()) return false;
    int v = 0;
    for (int k = 0; k < digits; ++k) {
        const char c = s[i + static_cast<std::size_t>(k)];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    i += static_cast<std::size_t>(digits);
    out = v;
    return true;
}

bool valid_date(int y, int mo, int d) {
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || y < 1) return false;
    const CivilDate back = civil_from_days(days_from_civil(y, mo, d));
    return back.year == y && back.month == mo && back.day == d;
}

// Month-name table shared by %B parsing; folded forms (lowercase, no
// diacritics) so "Février", "fevrier" and "FEVRIER" all resolve.
const std::array<std::array<const char*, 3>, 12> kMonthNames = {{
    {"january", "janvier", "jan"},
    {"february", "fevrier", "feb"},
    {"march", "mars", "mar"},
    {"april", "avril", "apr"},
    {"may", "mai", nullptr},
    {"june", "juin", "jun"},
    {"july", "juillet", "jul"},
    {"august", "aout", "aug"},
    {"september", "septembre", "sep"},
    {"october", "octobre", "oct"},
    {"november", "novembre", "nov"},
    {"december", "decembre", "dec"},
}};

bool read_month_name(std::string_view s, std::size_t& i, int& out) {
    std::size_t end = i;
    std::string word;
    while (end < s.size()) {
        std::size_t next = end;
        const char32_t cp = utf8::decode(s, next);
        if (!utf8::is_letter(cp)) break;
        utf8::fold_append(word, cp);
        end = next;
    }
    if (word.empty()) return false;
    for (std::size_t m = 0; m < kMonthNames.size(); ++m) {
        for (const char* name : kMonthNames[m]) {
            if (name != nullptr && word == name) {
                out = static_cast<int>(m) + 1;
                i = end;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) != 0) ++i;
    std::size_t tail = s.size();
    while (tail > i && std::isspace(static_cast<unsigned char>(s[tail - 1])) != 0) --tail;
    s = s.substr(i, tail - i);
    i = 0;

    int y = 0;
    int mo = 0;
    int d = 0;
    if (!read_int(s, i, 4, y)) return std::nullopt;
    if (i >= s.size() || s[i] != '-') return std::nullopt;
    ++i;
    if (!read_int(s, i, 2, mo)) return std::nullopt;
    if (i >= s.size() || s[i] != '-') return std::nullopt;
    ++i;
    if (!read_int(s, i, 2, d)) return std::nullopt;
    if (!valid_date(y, mo, d)) return std::nullopt;

    int h = 0;
    int mi = 0;
    int sec = 0;
    std::int64_t offset = 0;
    if (i < s.size()) {
        if (s[i] != 'T' && s[i] != 't' && s[i] != ' ') return std::nullopt;
        ++i;
        if (!read_int(s, i, 2, h)) return std::nullopt;
        if (i >= s.size() || s[i] != ':') return std::nullopt;
        ++i;
        if (!read_int(s, i, 2, mi)) return std::nullopt;
        if (i < s.size() && s[i] == ':') {
            ++i;
            if (!read_int(s, i, 2, sec)) return std::nullopt;
        }
        if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
        if (i < s.size()) {
            const char c = s[i];
            if (c == 'Z' || c == 'z') {
                ++i;
            } else if (c == '+' || c == '-') {
                ++i;
                int oh = 0;
                int om = 0;
                if (!read_int(s, i, 2, oh)) return std::nullopt;
                if (i < s.size() && s[i] == ':') ++i;
                if (!read_int(s, i, 2, om)) return std::nullopt;
                offset = (c == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
            }
        }
        if (i != s.size()) return std::nullopt;
    }
    return make_utc(y, mo, d, h, mi, sec) - offset;
}

std::optional<Timestamp> parse_timestamp(std::string_view s, std::string_view format) {
    if (format.empty() || format == "iso8601") return parse_iso8601(s);

    int y = 1970;
    int mo = 1;
    int d = 1;
    int h = 0;
    int mi = 0;
    int sec = 0;
    std::size_t si = 0;
    std::size_t fi = 0;
    while (fi < format.size()) {
        const char f = format[fi];
        if (f == '%' && fi + 1 < format.size()) {
            const char spec = format[fi + 1];
            fi += 2;
            bool ok = true;
            switch (spec) {
                case 'Y': ok = read_int(s, si, 4, y); break;
                case 'm': ok = read_int(s, si, 2, mo); break;
                case 'd': ok = read_int(s, si, 2, d); break;
                case 'H': ok = read_int(s, si, 2, h); break;
                case 'M': ok = read_int(s, si, 2, mi); break;
                case 'S': ok = read_int(s, si, 2, sec); break;
                case 'B': ok = read_month_name(s, si, mo); break;
                case '%':
                    ok = si < s.size() && s[si] == '%';
                    if (ok) ++si;
                    break;
                default: return std::nullopt;
            }
            if (!ok) return std::nullopt;
        } else {
            ++fi;
            if (std::isspace(static_cast<unsigned char>(f)) != 0) {
                // A literal space matches any run of whitespace.
                if (si >= s.size() || std::isspace(static_cast<unsigned char>(s[si])) == 0)
                    return std::nullopt;
                while (si < s.size() && std::isspace(static_cast<unsigned char>(s[si])) != 0) ++si;
            } else {
                if (si >= s.size() || s[si] != f) return std::nullopt;
                ++si;
            }
        }
    }
    if (si != s.size()) return std::nullopt;
    if (!valid_date(y, mo, d) || h > 23 || mi > 59 || sec > 60) return std::nullopt;
    return make_utc(y, mo, d, h, mi, sec);
}

std::string format_iso8601(Timestamp ts) {
    std::int64_t days = ts / kSecondsPerDay;
    std::int64_t rem = ts % kSecondsPerDay;
    if (rem < 0) {
        rem += kSecondsPerDay;
        --days;
    }
    const CivilDate cd = civil_from_days(days);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", cd.year, cd.month, cd.day,
                  static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

Timestamp week_floor(Timestamp ts) {
    std::int64_t days = ts / kSecondsPerDay;
    if (ts % kSecondsPerDay < 0) --days;
    // 1970-01-01 was a Thursday; shift so 0 = Monday.
    std::int64_t dow = (days + 3) % 7;
    if (dow < 0) dow += 7;
    return (days - dow) * kSecondsPerDay;
}

std::string iso_week_label(Timestamp week_start) {
    // The ISO year/week of a week is determined by its Thursday.
    const std::int64_t thursday = week_start / kSecondsPerDay + 3;
    const CivilDate cd = civil_from_days(thursday);
    const std::int64_t year_start = days_from_civil(cd.year, 1, 1);
    const int week = static_cast<int>((thursday - year_start) / 7) + 1;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-W%02d", cd.year, week);
    return buf;
}

std::optional<Timestamp> parse_iso_week(std::string_view s) {
    std::size_t i = 0;
    int y = 0;
    int w = 0;
    if (!read_int(s, i, 4, y)) return std::nullopt;
    if (i >= s.size() || s[i] != '-') return std::nullopt;
    ++i;
    if (i >= s.size() || (s[i] != 'W' && s[i] != 'w')) return std::nullopt;
    ++i;
    if (!read_int(s, i, 2, w) || i != s.size()) return std::nullopt;
    if (w < 1 || w > 53) return std::nullopt;
    // Week 1 is the week containing January 4th.
    const Timestamp jan4 = make_utc(y, 1, 4);
    const Timestamp week1 = week_floor(jan4);
    const Timestamp start = week1 + static_cast<Timestamp>(w - 1) * kSecondsPerWeek;
    // Round-trip check rejects e.g. "2023-W53" in a 52-week year.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-W%02d", y, w);
    if (iso_week_label(start) != buf) return std::nullopt;
    return start;
}

}  // namespace seatcast
