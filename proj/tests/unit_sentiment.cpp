#include <doctest.h>

#include <cmath>
#include <sstream>

#include "seatcast/sentiment/classify.hpp"
#include "seatcast/sentiment/evaluate.hpp"
#include "seatcast/sentiment/external.hpp"
#include "seatcast/sentiment/split.hpp"
#include "seatcast/text/prep.hpp"

using namespace seatcast;

namespace {

Roster two_party_roster() {
    return Roster::parse(
        "party A \"Party A\"\n"
        "party B \"Party B\"\n"
        "entity e1 A national \"Navin X\" aka \"Navin X\"\n"
        "entity e2 B national \"Xavier\" aka \"Xavier\"\n",
        "<roster>");
}

StopLists tiny_stops() {
    return {StopList::from_words({"the", "a", "of"}),
            StopList::from_words({"le", "la", "de", "l'", "du"})};
}

LexiconSet fixture_lexicons() {
    return {Lexicon::from_entries({{"excellent", 1}, {"scandal", -1}}, Language::EN),
            Lexicon::from_entries({{"excellent", 1}, {"victoire", 1}, {"scandale", -1}},
                                  Language::FR)};
}

Article article_with_body(const std::string& body, Language lang = Language::FR) {
    Article a;
    a.id = "art1";
    a.outlet = "defi";
    a.url = "u";
    a.published_at = 1700000000;
    a.language = lang;
    a.title = "Titre neutre";
    a.body = body;
    return a;
}

EntityLabel label(const std::string& article, const std::string& entity, Sentiment s) {
    EntityLabel l;
    l.article_id = article;
    l.entity_id = entity;
    l.sentiment = s;
    l.confidence = 1.0;
    return l;
}

Article dated(const std::string& id, Timestamp ts) {
    Article a;
    a.id = id;
    a.outlet = "defi";
    a.url = "u";
    a.published_at = ts;
    a.language = Language::FR;
    a.title = "t";
    a.body = "b";
    return a;
}

}  // namespace

TEST_CASE("classify_lexicon sums polarities around mentions") {
    const Roster roster = two_party_roster();
    const StopLists stops = tiny_stops();
    const LexiconSet lexicons = fixture_lexicons();
    const EntityDef& navin = *roster.find_entity("e1");

    SUBCASE("two positive hits -> positive, confidence |s|/(|s|+2)") {
        const Article a =
            article_with_body("Navin X remporte une victoire, un résultat excellent.");
        const auto lab = classify_lexicon(prep_article(a, stops), navin, lexicons);
        REQUIRE(lab.has_value());
        CHECK(lab->sentiment == Sentiment::Positive);
        CHECK(lab->confidence == doctest::Approx(2.0 / 4.0));
        CHECK(lab->source == LabelSource::Lexicon);
    }
    SUBCASE("no lexicon hits -> neutral with confidence 0") {
        const Article a = article_with_body("Navin X visite une école du village.");
        const auto lab = classify_lexicon(prep_article(a, stops), navin, lexicons);
        REQUIRE(lab.has_value());
        CHECK(lab->sentiment == Sentiment::Neutral);
        CHECK(lab->confidence == 0.0);
    }
    SUBCASE("balanced +1/-1 -> neutral (tie rule)") {
        const Article a =
            article_with_body("Navin X célèbre une victoire malgré un scandale récent.");
        const auto lab = classify_lexicon(prep_article(a, stops), navin, lexicons);
        REQUIRE(lab.has_value());
        CHECK(lab->sentiment == Sentiment::Neutral);
    }
    SUBCASE("entity not mentioned -> NO_MENTION") {
        const Article a = article_with_body("Une victoire pour quelqu'un d'autre.");
        CHECK_FALSE(classify_lexicon(prep_article(a, stops), navin, lexicons).has_value());
    }
    SUBCASE("polarity outside the window does not count") {
        std::string body = "Navin X inaugure une route.";
        for (int i = 0; i < 30; ++i) body += " mot" + std::to_string(i);
        body += " victoire excellente";  // beyond W=25 content tokens
        const Article a = article_with_body(body);
        ClassifyParams params;
        params.mention_window = 10;
        const auto lab = classify_lexicon(prep_article(a, stops), navin, lexicons, params);
        REQUIRE(lab.has_value());
        CHECK(lab->sentiment == Sentiment::Neutral);
    }
    SUBCASE("adding a positive token in the window never moves POS toward NEG") {
        std::string body = "Navin X obtient un résultat excellent.";
        const Article base = article_with_body(body);
        const auto before = classify_lexicon(prep_article(base, stops), navin, lexicons);
        const Article more = article_with_body(body + " victoire");
        const auto after = classify_lexicon(prep_article(more, stops), navin, lexicons);
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(before->sentiment == Sentiment::Positive);
        CHECK(after->sentiment == Sentiment::Positive);
        CHECK(after->confidence >= before->confidence);
    }
}

TEST_CASE("import_external_labels validates rows") {
    const Roster roster = two_party_roster();

    SUBCASE("happy path") {
        std::istringstream in(
            "article_id,entity_id,sentiment,confidence\n"
            "a1,e1,positive,0.9\n"
            "a2,e2,NEUTRAL,0.5\n");
        const auto imported = import_external_labels(in, roster);
        CHECK(imported.rejects.empty());
        REQUIRE(imported.labels.size() == 2);
        CHECK(imported.labels[0].sentiment == Sentiment::Positive);
        CHECK(imported.labels[0].source == LabelSource::External);
        CHECK(imported.labels[1].sentiment == Sentiment::Neutral);
    }
    SUBCASE("bad sentiment, unknown entity and out-of-range confidence reject") {
        std::istringstream in(
            "article_id,entity_id,sentiment,confidence\n"
            "a1,e1,meh,0.9\n"
            "a1,ghost,positive,0.9\n"
            "a1,e1,positive,1.5\n");
        const auto imported = import_external_labels(in, roster);
        CHECK(imported.labels.empty());
        CHECK(imported.rejects.size() == 3);
    }
    SUBCASE("duplicate (article, entity): last wins with a warning") {
        std::istringstream in(
            "article_id,entity_id,sentiment,confidence\n"
            "a1,e1,neutral,0.4\n"
            "a1,e1,positive,0.8\n");
        const auto imported = import_external_labels(in, roster);
        REQUIRE(imported.labels.size() == 1);
        CHECK(imported.labels[0].sentiment == Sentiment::Positive);
        CHECK(imported.warnings.size() == 1);
    }
    SUBCASE("wrong header is a data error") {
        std::istringstream in("a,b,c,d\n");
        CHECK_THROWS_AS(import_external_labels(in, roster), DataError);
    }
}

TEST_CASE("labels CSV writer round-trips through the importer") {
    const Roster roster = two_party_roster();
    std::vector<EntityLabel> labels = {label("a2", "e1", Sentiment::Negative),
                                       label("a1", "e2", Sentiment::Positive)};
    labels[0].confidence = 0.25;
    labels[1].confidence = 0.75;
    std::ostringstream out;
    save_labels(out, labels);
    std::istringstream in(out.str());
    const auto imported = import_external_labels(in, roster);
    CHECK(imported.rejects.empty());
    REQUIRE(imported.labels.size() == 2);
    // Sorted by (article_id, entity_id).
    CHECK(imported.labels[0].article_id == "a1");
    CHECK(imported.labels[0].sentiment == Sentiment::Positive);
    CHECK(imported.labels[1].confidence == doctest::Approx(0.25));
}

TEST_CASE("chronological_split: ceil rule, determinism, tie by id") {
    std::vector<Article> ten;
    for (int i = 0; i < 10; ++i)
        ten.push_back(dated("id" + std::to_string(i), 1000 + 10 * i));

    auto [train, test] = chronological_split(ten, 0.8);
    CHECK(train.size() == 8);
    CHECK(test.size() == 2);
    for (const auto& tr : train)
        for (const auto& te : test) CHECK(tr.published_at <= te.published_at);

    auto [one_train, one_test] = chronological_split({dated("only", 5)}, 0.8);
    CHECK(one_train.size() == 1);
    CHECK(one_test.empty());

    // Equal timestamps are ordered by id, stable across runs.
    std::vector<Article> tied = {dated("b", 100), dated("a", 100), dated("c", 100)};
    auto [t1, t2] = chronological_split(tied, 0.5);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].id == "a");
    CHECK(t1[1].id == "b");
    CHECK(t2[0].id == "c");

    CHECK_THROWS_AS(chronological_split(ten, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(chronological_split(ten, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chronological_split({}, 0.8), std::invalid_argument);
}

TEST_CASE("evaluate: hand-computed confusion matrices") {
    SUBCASE("perfect prediction") {
        const std::vector<EntityLabel> gold = {label("a1", "e1", Sentiment::Positive),
                                               label("a2", "e1", Sentiment::Negative)};
        const auto report = evaluate(gold, gold);
        CHECK(report.accuracy == 1.0);
        CHECK(report.macro_f1 == doctest::Approx(2.0 / 3.0));  // neutral class is empty -> F1 0
    }
    SUBCASE("one error out of four") {
        // gold [POS,POS,NEG,NEU], pred [POS,NEG,NEG,NEU] -> accuracy 0.75.
        const std::vector<EntityLabel> gold = {
            label("a1", "e1", Sentiment::Positive), label("a2", "e1", Sentiment::Positive),
            label("a3", "e1", Sentiment::Negative), label("a4", "e1", Sentiment::Neutral)};
        const std::vector<EntityLabel> pred = {
            label("a1", "e1", Sentiment::Positive), label("a2", "e1", Sentiment::Negative),
            label("a3", "e1", Sentiment::Negative), label("a4", "e1", Sentiment::Neutral)};
        const auto report = evaluate(pred, gold);
        CHECK(report.accuracy == doctest::Approx(0.75));
        // Hand matrix: POS row (1 correct, 1 -> NEG), NEG row (1), NEU row (1).
        CHECK(report.confusion[0][0] == 1);
        CHECK(report.confusion[0][1] == 1);
        CHECK(report.confusion[1][1] == 1);
        CHECK(report.confusion[2][2] == 1);
        // POS: P=1/1, R=1/2; NEG: P=1/2, R=1/1; NEU: P=1, R=1.
        CHECK(report.per_class.at(Sentiment::Positive).recall == doctest::Approx(0.5));
        CHECK(report.per_class.at(Sentiment::Negative).precision == doctest::Approx(0.5));
        CHECK(report.per_class.at(Sentiment::Neutral).f1 == doctest::Approx(1.0));
    }
    SUBCASE("all-neutral predictions exercise the 0/0 rules") {
        const std::vector<EntityLabel> gold = {label("a1", "e1", Sentiment::Positive),
                                               label("a2", "e1", Sentiment::Positive)};
        const std::vector<EntityLabel> pred = {label("a1", "e1", Sentiment::Neutral),
                                               label("a2", "e1", Sentiment::Neutral)};
        const auto report = evaluate(pred, gold);
        CHECK(report.accuracy == 0.0);
        CHECK(report.per_class.at(Sentiment::Positive).precision == 0.0);  // 0/0 -> 0
        CHECK(report.per_class.at(Sentiment::Positive).recall == 0.0);
        CHECK(report.per_class.at(Sentiment::Neutral).precision == 0.0);  // 0/2
        CHECK(report.per_class.at(Sentiment::Neutral).recall == 0.0);     // 0/0 -> 0
        CHECK(report.macro_f1 == 0.0);
    }
    SUBCASE("key mismatch lists the missing keys") {
        const std::vector<EntityLabel> gold = {label("a1", "e1", Sentiment::Positive),
                                               label("a2", "e1", Sentiment::Positive)};
        const std::vector<EntityLabel> pred = {label("a1", "e1", Sentiment::Positive)};
        CHECK_THROWS_WITH_AS(evaluate(pred, gold),
                             "KEY_MISMATCH: missing in predicted: a2/e1", KeyMismatchError);
    }
}

TEST_CASE("evaluate invariants: trace identity and F1 harmonic mean") {
    const std::vector<EntityLabel> gold = {
        label("a1", "e1", Sentiment::Positive), label("a2", "e1", Sentiment::Negative),
        label("a3", "e1", Sentiment::Neutral),  label("a4", "e1", Sentiment::Positive),
        label("a5", "e1", Sentiment::Negative), label("a6", "e1", Sentiment::Neutral)};
    const std::vector<EntityLabel> pred = {
        label("a1", "e1", Sentiment::Negative), label("a2", "e1", Sentiment::Negative),
        label("a3", "e1", Sentiment::Positive), label("a4", "e1", Sentiment::Positive),
        label("a5", "e1", Sentiment::Neutral),  label("a6", "e1", Sentiment::Neutral)};
    const auto report = evaluate(pred, gold);

    long trace = 0;
    long total = 0;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) total += report.confusion[r][c];
        trace += report.confusion[r][r];
    }
    CHECK(report.total == total);
    CHECK(report.accuracy ==
          doctest::Approx(static_cast<double>(trace) / static_cast<double>(total))
              .epsilon(1e-12));
    for (const auto& [sentiment, m] : report.per_class) {
        const double expected_f1 =
            (m.precision + m.recall) == 0.0
                ? 0.0
                : 2.0 * m.precision * m.recall / (m.precision + m.recall);
        CHECK(std::abs(m.f1 - expected_f1) < 1e-12);
    }
    // evaluate(x, x) == accuracy 1 for any label set.
    CHECK(evaluate(gold, gold).accuracy == 1.0);
}
