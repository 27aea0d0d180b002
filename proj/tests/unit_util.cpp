#include <doctest.h>

#include <sstream>

#include "seatcast/util/config.hpp"
#include "seatcast/util/csv.hpp"
#include "seatcast/util/errors.hpp"
#include "seatcast/util/hash.hpp"
#include "seatcast/util/time.hpp"
#include "seatcast/util/utf8.hpp"

using namespace seatcast;

TEST_CASE("utf8 folding lowercases and strips diacritics") {
    CHECK(utf8::fold("Député") == "depute");
    CHECK(utf8::fold("ÉLECTION") == "election");
    CHECK(utf8::fold("œuvre Æsir") == "oeuvre aesir");
    CHECK(utf8::fold("Hello-42") == "hello-42");
    CHECK(utf8::lower("À LA UNE") == "à la une");
}

TEST_CASE("utf8 decode survives malformed bytes") {
    const std::string bad = "a\xC3馬";  // truncated sequence then valid CJK
    std::size_t i = 0;
    CHECK(utf8::decode(bad, i) == U'a');
    (void)utf8::decode(bad, i);  // replacement, advances
    CHECK(i > 1);
}

TEST_CASE("iso8601 parsing and formatting round-trip") {
    const auto ts = parse_iso8601("2024-03-05T06:07:08Z");
    REQUIRE(ts.has_value());
    CHECK(format_iso8601(*ts) == "2024-03-05T06:07:08Z");

    CHECK(parse_iso8601("2024-03-05") == make_utc(2024, 3, 5));
    // +04:00 is Mauritius local time; stored value must be UTC.
    CHECK(parse_iso8601("2024-03-05T10:00:00+04:00") == make_utc(2024, 3, 5, 6));
    CHECK(parse_iso8601("2024-13-01") == std::nullopt);
    CHECK(parse_iso8601("2023-02-29") == std::nullopt);
    CHECK(parse_iso8601("not a date") == std::nullopt);
}

TEST_CASE("outlet date formats incl. French month names") {
    CHECK(parse_timestamp("05 mars 2024", "%d %B %Y") == make_utc(2024, 3, 5));
    CHECK(parse_timestamp("05 Février 2024", "%d %B %Y") == make_utc(2024, 2, 5));
    CHECK(parse_timestamp("March 05, 2024", "%B %d, %Y") == make_utc(2024, 3, 5));
    CHECK(parse_timestamp("2024/03/05 10:11", "%Y/%m/%d %H:%M") ==
          make_utc(2024, 3, 5, 10, 11));
    CHECK(parse_timestamp("05 frimaire 2024", "%d %B %Y") == std::nullopt);
    CHECK(parse_timestamp("2024-03-05T06:07:08Z", "iso8601") ==
          make_utc(2024, 3, 5, 6, 7, 8));
}

TEST_CASE("ISO weeks: floor, labels, parsing") {
    // 2024-01-01 was a Monday and starts 2024-W01.
    const Timestamp monday = make_utc(2024, 1, 1);
    CHECK(week_floor(monday) == monday);
    CHECK(week_floor(make_utc(2024, 1, 2, 15, 30)) == monday);
    CHECK(week_floor(make_utc(2024, 1, 7, 23, 59, 59)) == monday);
    CHECK(week_floor(make_utc(2024, 1, 8)) == monday + kSecondsPerWeek);

    CHECK(iso_week_label(monday) == "2024-W01");
    CHECK(iso_week_label(week_floor(make_utc(2024, 1, 10))) == "2024-W02");
    // 2024-12-30 (Monday) belongs to 2025-W01.
    CHECK(iso_week_label(week_floor(make_utc(2024, 12, 31))) == "2025-W01");
    // 2021-01-01 (Friday) belongs to 2020-W53.
    CHECK(iso_week_label(week_floor(make_utc(2021, 1, 1))) == "2020-W53");

    CHECK(parse_iso_week("2024-W01") == monday);
    CHECK(parse_iso_week("2020-W53") == week_floor(make_utc(2021, 1, 1)));
    CHECK(parse_iso_week("2023-W53") == std::nullopt);  // 2023 has 52 weeks
    CHECK(parse_iso_week("garbage") == std::nullopt);
}

TEST_CASE("content hash is stable and hex-encoded") {
    CHECK(hash_hex("abc") == hash_hex("abc"));
    CHECK(hash_hex("abc") != hash_hex("abd"));
    CHECK(hash_hex("").size() == 16);
}

TEST_CASE("csv quoting round-trips awkward fields") {
    std::ostringstream out;
    csv::write_row(out, {"plain", "with,comma", "with\"quote", "multi\nline"});
    std::istringstream in(out.str());
    std::vector<std::string> row;
    REQUIRE(csv::read_row(in, row));
    CHECK(row == std::vector<std::string>{"plain", "with,comma", "with\"quote", "multi\nline"});
    CHECK_FALSE(csv::read_row(in, row));
}

TEST_CASE("config files: sections, comments, trimming, errors") {
    const auto cfg = ConfigFile::parse(
        "# comment\n"
        "roster = roster.cfg\n"
        "keywords = a, b , c\n"
        "\n"
        "[outlet defi]\n"
        "source = local:fixtures\n",
        "<test>");
    CHECK(cfg.global.get_or("roster", "") == "roster.cfg");
    CHECK(split_list(cfg.global.get_or("keywords", "")) ==
          std::vector<std::string>{"a", "b", "c"});
    REQUIRE(cfg.sections.size() == 1);
    CHECK(cfg.sections[0].name == "outlet defi");
    CHECK(cfg.sections[0].get_or("source", "") == "local:fixtures");

    CHECK_THROWS_AS(ConfigFile::parse("key without equals\n", "<t>"), ConfigError);
    CHECK_THROWS_AS(ConfigFile::parse("[unterminated\n", "<t>"), ConfigError);
    CHECK_THROWS_AS(ConfigFile::load("/nonexistent/path.cfg"), ConfigError);
}
