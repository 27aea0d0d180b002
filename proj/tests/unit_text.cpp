#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "seatcast/text/clean.hpp"
#include "seatcast/text/lang.hpp"
#include "seatcast/text/stem.hpp"
#include "seatcast/text/tokenize.hpp"

using namespace seatcast;

namespace {

const std::string kDataDir = std::string(SEATCAST_SOURCE_DIR) + "/data";

StopLists shipped_stops() {
    return {StopList::load(kDataDir + "/stopwords_en.txt"),
            StopList::load(kDataDir + "/stopwords_fr.txt")};
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens) out.push_back(t.surface);
    return out;
}

}  // namespace

TEST_CASE("clean_text strips markup, urls and control characters") {
    CHECK(clean_text("<p>Bonjour</p>") == "Bonjour");
    CHECK(clean_text("see https://x.mu/a now") == "see now");
    CHECK(clean_text("") == "");
    CHECK(clean_text("a\tb\x01" "c") == "a b c");
    CHECK(clean_text("semi;colon") == "semi colon");
    // Apostrophes and hyphens survive only inside words.
    CHECK(clean_text("l'élection porte-parole - dash") == "l'élection porte-parole dash");
    CHECK(clean_text("A &amp; B") == "A B");
}

TEST_CASE("clean_text golden fixture") {
    const std::string raw =
        "<div><p>Rose &amp; Co announced a rally.</p>"
        "<p>Details: https://news.mu/rally?id=1 tonight!</p></div>";
    // Hand-cleaned once; frozen.
    CHECK(clean_text(raw) == "Rose Co announced a rally. Details tonight!");
}

TEST_CASE("clean_text is idempotent") {
    const std::vector<std::string> fixtures = {
        "<p>Bonjour</p>",
        "see https://x.mu/a now",
        "A &amp; B &lt;tag&gt; www.x.mu/path",
        "«Élection» 2024 — l'heure du choix!?",
        "nested <div><span>text</span></div> tail",
    };
    for (const auto& raw : fixtures) {
        const std::string once = clean_text(raw);
        CHECK(clean_text(once) == once);
    }
}

TEST_CASE("detect_language by stop-word vote") {
    const StopLists stops = shipped_stops();
    // Hand oracle: FR hits le, et, les, de, la = 5; EN hits 0.
    CHECK(detect_language("le gouvernement et les députés de la république", stops) ==
          Language::FR);
    // Hand oracle: EN hits the(3), and, of = 5; FR hits 0.
    CHECK(detect_language("the government and the people of the country", stops) ==
          Language::EN);
    CHECK(detect_language("", stops) == Language::Unknown);
    CHECK(detect_language("zebra quartz 12345", stops) == Language::Unknown);
}

TEST_CASE("tokenize removes stop words and splits clitics") {
    const StopLists stops = shipped_stops();
    CHECK(surfaces(tokenize("bonjour le monde", Language::FR, stops)) ==
          std::vector<std::string>{"bonjour", "monde"});
    CHECK(tokenize("", Language::FR, stops).empty());
    CHECK(surfaces(tokenize("l'élection", Language::FR, stops)) ==
          std::vector<std::string>{"élection"});
    // "don't" is not an elision clitic; it stays whole (and is not a stop word).
    CHECK(surfaces(tokenize("don't stop", Language::EN, stops)) ==
          std::vector<std::string>{"don't", "stop"});
}

TEST_CASE("token offsets are strictly increasing and index into the text") {
    const std::string text = clean_text("Le député l'élection, victoire totale.");
    const StopLists stops = shipped_stops();
    const auto tokens = tokenize(text, Language::FR, stops);
    REQUIRE(!tokens.empty());
    std::size_t prev = 0;
    bool first = true;
    for (const auto& t : tokens) {
        if (!first) CHECK(t.offset > prev);
        prev = t.offset;
        first = false;
        CHECK(t.offset < text.size());
    }
}

TEST_CASE("tokens never contain whitespace, angle brackets or http") {
    const StopLists stops = shipped_stops();
    const std::vector<std::string> nasty = {
        "<a href='https://x.mu'>linked words</a> here",
        "text with http://plain.mu/url and <b>bold</b>",
        "entities &lt;kept&gt; &amp; cleaned www.y.mu tail",
    };
    for (const auto& raw : nasty) {
        for (const auto& tok : tokenize(clean_text(raw), Language::Unknown, stops)) {
            CHECK(tok.surface.find(' ') == std::string::npos);
            CHECK(tok.surface.find('<') == std::string::npos);
            CHECK(tok.surface.find('>') == std::string::npos);
            CHECK(tok.surface.find("http") == std::string::npos);
        }
    }
}

TEST_CASE("English stems fold inflectional variants") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"elections", "election"},   {"votes", "vote"},         {"voted", "vote"},
        {"voting", "vote"},          {"winning", "win"},        {"wins", "win"},
        {"victories", "victory"},    {"governments", "government"},
        {"supported", "support"},    {"supporting", "supports"},
        {"promised", "promise"},     {"scandals", "scandal"},   {"campaigns", "campaign"},
        {"policies", "policy"},      {"failures", "failure"},   {"failing", "failed"},
        {"accusations", "accuse"},   {"ministers", "minister"}, {"reforms", "reform"},
        {"debates", "debate"},       {"economies", "economy"},  {"parties", "party"},
        {"criticized", "criticize"}, {"announcements", "announcement"},
    };
    for (const auto& [a, b] : pairs) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(stem_en(a) == stem_en(b));
    }
    CHECK(stem_en("x") == "x");
}

TEST_CASE("French stems fold inflectional variants") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"élections", "élection"},     {"victoires", "victoire"},
        {"députés", "député"},         {"gouvernements", "gouvernement"},
        {"politiques", "politique"},   {"ministres", "ministre"},
        {"réformes", "réforme"},       {"décisions", "décision"},
        {"partis", "parti"},           {"candidats", "candidat"},
        {"campagnes", "campagne"},     {"journaux", "journal"},
        {"électeurs", "électeur"},     {"scandales", "scandale"},
        {"promesses", "promesse"},     {"gagné", "gagner"},
        {"perdus", "perdu"},           {"soutenue", "soutenu"},
        {"critiquée", "critiqué"},     {"annoncés", "annoncé"},
        {"nouvelles", "nouvelle"},     {"économiques", "économique"},
    };
    for (const auto& [a, b] : pairs) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(stem_fr(a) == stem_fr(b));
    }
    CHECK(stem_fr("x") == "x");
}

TEST_CASE("stemming is idempotent over generated tokens") {
    std::mt19937 rng(20241109);
    std::uniform_int_distribution<int> len_dist(1, 12);
    std::uniform_int_distribution<int> char_dist(0, 25);
    const std::vector<std::string> suffixes = {"ation", "ement",  "ing", "ed",  "s",
                                               "es",    "ées",    "aux", "ness", "ization",
                                               "ly",    "issement", "er",  "é"};
    std::uniform_int_distribution<std::size_t> suffix_dist(0, suffixes.size() - 1);

    for (int trial = 0; trial < 2000; ++trial) {
        std::string word;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) word.push_back(static_cast<char>('a' + char_dist(rng)));
        if (trial % 2 == 0) word += suffixes[suffix_dist(rng)];
        CAPTURE(word);
        const std::string en_once = stem_en(word);
        CHECK(stem_en(en_once) == en_once);
        const std::string fr_once = stem_fr(word);
        CHECK(stem_fr(fr_once) == fr_once);
    }
}
