// seatcast: forecast a two-party, 60-seat election from the sentiment of
// news coverage. Subcommands mirror the pipeline stages; `all` chains
// them. Every run writes a manifest next to its outputs so identical
// inputs reproduce identical bytes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "seatcast/bias/bias.hpp"
#include "seatcast/corpus/corpus.hpp"
#include "seatcast/forecast/chart.hpp"
#include "seatcast/forecast/forecast.hpp"
#include "seatcast/pipeline/pipeline.hpp"
#include "seatcast/sentiment/evaluate.hpp"
#include "seatcast/sentiment/split.hpp"
#include "seatcast/util/csv.hpp"
#include "seatcast/util/errors.hpp"
#include "seatcast/version.hpp"

#include <json.hpp>

namespace fs = std::filesystem;
using namespace seatcast;

namespace {

std::vector<Article> load_corpus_logged(const std::string& path) {
    LoadedCorpus loaded = load_corpus(path);
    for (const auto& err : loaded.errors)
        std::cerr << path << ":" << err.line << ": skipped: " << err.message << "\n";
    return std::move(loaded.articles);
}

std::vector<EntityLabel> load_labels_logged(const std::string& path, const Roster& roster) {
    ImportedLabels imported = import_external_labels(path, roster);
    for (const auto& rej : imported.rejects)
        std::cerr << path << ":" << rej.line << ": rejected: " << rej.message << "\n";
    for (const auto& warning : imported.warnings) std::cerr << path << ": " << warning << "\n";
    return std::move(imported.labels);
}

Scope parse_scope(const std::string& spec) {
    if (spec.empty() || spec == "national") return Scope::national();
    if (spec.rfind("outlet:", 0) == 0) return Scope::outlet(spec.substr(7));
    if (spec.rfind("constituency:", 0) == 0) return Scope::constituency(spec.substr(13));
    throw ConfigError("bad --scope '" + spec + "' (national | outlet:ID | constituency:ID)");
}

TimeWindow corpus_range(const std::vector<Article>& articles) {
    const CorpusManifest m = build_manifest(articles);
    if (m.article_count == 0) return {0, 1};
    return {m.date_min, m.date_max + 1};
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_series_csv(std::ostream& out, const std::vector<SentimentSeries>& all_series) {
    csv::write_row(out, {"entity_id", "scope", "week_start", "omega", "psi", "nu", "phi",
                         "score", "sis"});
    for (const auto& series : all_series) {
        for (const auto& b : series.buckets) {
            csv::write_row(out, {series.entity_id, series.scope.to_string(),
                                 format_iso8601(b.window.start).substr(0, 10),
                                 std::to_string(b.positive), std::to_string(b.negative),
                                 std::to_string(b.neutral), std::to_string(b.total),
                                 fmt_double(b.score), fmt_double(b.sis)});
        }
    }
}

void print_eval_report(std::ostream& out, const EvalReport& report) {
    out << "accuracy " << fmt_double(report.accuracy) << "\n";
    for (const Sentiment s : {Sentiment::Positive, Sentiment::Negative, Sentiment::Neutral}) {
        const ClassMetrics& m = report.per_class.at(s);
        out << to_string(s) << " precision " << fmt_double(m.precision) << " recall "
            << fmt_double(m.recall) << " f1 " << fmt_double(m.f1) << "\n";
    }
    out << "macro_f1 " << fmt_double(report.macro_f1) << "\n";
    out << "confusion (rows gold, cols predicted; positive negative neutral):\n";
    for (const auto& row : report.confusion) {
        out << "  " << row[0] << " " << row[1] << " " << row[2] << "\n";
    }
}

nlohmann::json eval_report_json(const EvalReport& report) {
    nlohmann::json per_class = nlohmann::json::object();
    for (const auto& [sentiment, m] : report.per_class) {
        per_class[to_string(sentiment)] = {
            {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
    }
    return {{"accuracy", report.accuracy},
            {"macro_f1", report.macro_f1},
            {"per_class", per_class},
            {"confusion", report.confusion},
            {"total", report.total}};
}

// ----------------------------------------------------------------- stages

struct IngestArgs {
    std::string config;
    std::string from;
    std::string to;
    std::string out;
};

void cmd_ingest(const IngestArgs& args) {
    const PipelineConfig config = PipelineConfig::load(args.config);
    const TimeWindow range = parse_date_range(args.from, args.to);
    IngestStats stats;
    const std::vector<Article> articles = run_ingest(config, range, std::cerr, &stats);
    save_corpus(args.out, articles);
    const CorpusManifest manifest = build_manifest(articles);
    std::cerr << "ingested " << manifest.article_count << " articles (fetched " << stats.fetched
              << ", rejects " << stats.rejected << ", no-entity " << stats.no_entity
              << ", non-political " << stats.non_political << ", duplicates "
              << stats.duplicates << ")\n";
    write_run_manifest(args.out + ".manifest.json", "ingest",
                       {{"from", args.from},
                        {"to", args.to},
                        {"context_window", std::to_string(config.params.context_window)}},
                       {args.config, config.roster_path, config.stopwords_en_path,
                        config.stopwords_fr_path},
                       {args.out});
}

struct ClassifyArgs {
    std::string corpus;
    std::string roster;
    std::string external;
    std::string config;
    std::string out;
    int window = 25;
    double tau = 0.0;
    bool window_set = false;
    bool tau_set = false;
};

void cmd_classify(const ClassifyArgs& args) {
    const Roster roster = Roster::load(args.roster);
    const std::vector<Article> articles = load_corpus_logged(args.corpus);

    std::vector<EntityLabel> labels;
    std::vector<std::string> inputs = {args.corpus, args.roster};
    ClassifyParams params;
    if (!args.external.empty()) {
        labels = load_labels_logged(args.external, roster);
        inputs.push_back(args.external);
    } else {
        if (args.config.empty())
            throw ConfigError("lexicon classification needs --config for lexicons/stop lists");
        const PipelineConfig config = PipelineConfig::load(args.config);
        params.mention_window = args.window_set ? args.window : config.params.mention_window;
        params.neutral_band = args.tau_set ? args.tau : config.params.neutral_band;
        if (params.mention_window < 1) throw ConfigError("--window must be >= 1");
        if (params.neutral_band < 0) throw ConfigError("--tau must be >= 0");
        const StopLists stops = config.load_stops();
        const LexiconSet lexicons = config.load_lexicons();
        labels = run_classify(articles, roster, stops, lexicons, params, std::cerr);
        inputs.insert(inputs.end(),
                      {args.config, config.lexicon_en_path, config.lexicon_fr_path,
                       config.stopwords_en_path, config.stopwords_fr_path});
    }
    save_labels(args.out, labels);
    std::cerr << "wrote " << labels.size() << " labels\n";
    write_run_manifest(args.out + ".manifest.json", "classify",
                       {{"window", std::to_string(params.mention_window)},
                        {"tau", fmt_double(params.neutral_band)},
                        {"source", args.external.empty() ? "lexicon" : "external"}},
                       inputs, {args.out});
}

struct ScoreArgs {
    std::string labels;
    std::string corpus;
    std::string roster;
    std::vector<std::string> entities;
    std::string scope = "national";
    std::string from;
    std::string to;
    std::string out;
    std::string change_from;
    std::string change_to;
};

void cmd_score(const ScoreArgs& args) {
    const Roster roster = Roster::load(args.roster);
    const std::vector<Article> articles = load_corpus_logged(args.corpus);
    const std::vector<EntityLabel> labels = load_labels_logged(args.labels, roster);
    const ArticleIndex index = build_article_index(articles);
    const TimeWindow range = args.from.empty() || args.to.empty()
                                 ? corpus_range(articles)
                                 : parse_date_range(args.from, args.to);
    const Scope scope = parse_scope(args.scope);

    std::vector<std::string> entity_ids = args.entities;
    if (entity_ids.empty()) {
        for (const auto& e : roster.entities) entity_ids.push_back(e.entity_id);
    }
    std::sort(entity_ids.begin(), entity_ids.end());

    std::vector<SentimentSeries> all_series;
    for (const auto& entity_id : entity_ids) {
        if (roster.find_entity(entity_id) == nullptr)
            throw DataError("unknown entity '" + entity_id + "'");
        all_series.push_back(weekly_series(labels, index, entity_id, scope, range, &roster));
    }
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw DataError("cannot write series file: " + args.out);
    write_series_csv(out, all_series);

    if (!args.change_from.empty() || !args.change_to.empty()) {
        if (args.change_from.empty() || args.change_to.empty())
            throw ConfigError("--change-from and --change-to must be given together");
        const auto from_week = parse_iso_week(args.change_from);
        const auto to_week = parse_iso_week(args.change_to);
        if (!from_week) throw ConfigError("bad ISO week: " + args.change_from);
        if (!to_week) throw ConfigError("bad ISO week: " + args.change_to);
        for (const auto& series : all_series) {
            try {
                const double pct = cumulative_sis_change(series, *from_week, *to_week);
                std::cout << series.entity_id << " cumulative SIS change " << args.change_from
                          << " -> " << args.change_to << ": " << fmt_double(pct) << "%\n";
            } catch (const std::domain_error&) {
                std::cout << series.entity_id << " cumulative SIS change " << args.change_from
                          << " -> " << args.change_to << ": UNDEFINED_BASELINE\n";
            }
        }
    }
    write_run_manifest(args.out + ".manifest.json", "score",
                       {{"scope", args.scope},
                        {"from", args.from},
                        {"to", args.to}},
                       {args.labels, args.corpus, args.roster}, {args.out});
}

struct BiasArgs {
    std::string labels;
    std::string corpus;
    std::string roster;
    std::string from;
    std::string to;
    std::string out;
    double split_ratio = 0.8;
    long min_support = 10;
};

void cmd_bias(const BiasArgs& args) {
    const Roster roster = Roster::load(args.roster);
    std::vector<Article> articles = load_corpus_logged(args.corpus);
    const std::vector<EntityLabel> labels = load_labels_logged(args.labels, roster);
    if (articles.empty()) throw DataError("corpus is empty; nothing to estimate bias from");

    // Estimated on the training split only, then applied everywhere.
    auto [train, test] = chronological_split(std::move(articles), args.split_ratio);
    (void)test;
    const ArticleIndex train_index = build_article_index(train);
    const TimeWindow range = args.from.empty() || args.to.empty()
                                 ? corpus_range(train)
                                 : parse_date_range(args.from, args.to);

    std::set<std::string> outlet_set;
    for (const auto& a : train) outlet_set.insert(a.outlet);
    const std::vector<std::string> outlets(outlet_set.begin(), outlet_set.end());
    std::vector<std::string> entities;
    for (const auto& e : roster.entities) entities.push_back(e.entity_id);
    std::sort(entities.begin(), entities.end());

    const BiasTable table =
        identify_bias(labels, train_index, outlets, entities, range, args.min_support);
    table.save(args.out);
    std::cerr << "wrote " << table.rows().size() << " bias rows (train split of " << train.size()
              << " articles)\n";
    write_run_manifest(args.out + ".manifest.json", "bias",
                       {{"split_ratio", fmt_double(args.split_ratio)},
                        {"min_support", std::to_string(args.min_support)}},
                       {args.labels, args.corpus, args.roster}, {args.out});
}

struct ForecastArgs {
    std::string labels;
    std::string corpus;
    std::string roster;
    std::string bias;
    std::string from;
    std::string to;
    std::string out;
    std::string chart;
    std::string basis;
};

void cmd_forecast(const ForecastArgs& args) {
    const Roster roster = Roster::load(args.roster);
    if (roster.constituencies.empty())
        throw ConfigError("roster declares no constituencies; nothing to forecast");
    const std::vector<Article> articles = load_corpus_logged(args.corpus);
    const std::vector<EntityLabel> labels = load_labels_logged(args.labels, roster);
    const BiasTable bias = BiasTable::load(args.bias);
    const ArticleIndex index = build_article_index(articles);
    const TimeWindow range = args.from.empty() || args.to.empty()
                                 ? corpus_range(articles)
                                 : parse_date_range(args.from, args.to);

    const auto national = national_party_standings(labels, index, roster, bias, range);
    std::vector<ConstituencyForecast> per_constituency;
    for (const auto& constituency : roster.constituencies) {
        per_constituency.push_back(
            forecast_constituency(labels, index, roster, bias, constituency, range, national));
    }
    const NationalForecast forecast = national_forecast(std::move(per_constituency));

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw DataError("cannot write forecast file: " + args.out);
    save_forecast_csv(out, forecast, roster);

    std::vector<std::string> outputs = {args.out};
    if (!args.basis.empty()) {
        std::ofstream basis_out(args.basis, std::ios::binary);
        if (!basis_out) throw DataError("cannot write basis file: " + args.basis);
        save_forecast_basis_csv(basis_out, forecast, roster);
        outputs.push_back(args.basis);
    }
    if (!args.chart.empty()) {
        std::ofstream chart_out(args.chart, std::ios::binary);
        if (!chart_out) throw DataError("cannot write chart file: " + args.chart);
        write_forecast_chart(chart_out, forecast, roster);
        outputs.push_back(args.chart);
    }
    const auto [party_a, party_b] = roster.party_ids_sorted();
    std::cerr << "forecast totals: " << party_a << " " << forecast.totals.at(party_a) << ", "
              << party_b << " " << forecast.totals.at(party_b) << "\n";
    write_run_manifest(args.out + ".manifest.json", "forecast", {{"from", args.from}, {"to", args.to}},
                       {args.labels, args.corpus, args.roster, args.bias}, outputs);
}

struct EvaluateArgs {
    std::string pred;
    std::string gold;
    std::string roster;
    std::string out;
};

void cmd_evaluate(const EvaluateArgs& args) {
    const Roster roster = Roster::load(args.roster);
    const std::vector<EntityLabel> pred = load_labels_logged(args.pred, roster);
    const std::vector<EntityLabel> gold = load_labels_logged(args.gold, roster);
    const EvalReport report = evaluate(pred, gold);
    print_eval_report(std::cout, report);
    if (!args.out.empty()) {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw DataError("cannot write report: " + args.out);
        out << eval_report_json(report).dump(2) << '\n';
        write_run_manifest(args.out + ".manifest.json", "evaluate", {},
                           {args.pred, args.gold, args.roster}, {args.out});
    }
}

struct AllArgs {
    std::string config;
    std::string from;
    std::string to;
    std::string out_dir;
};

void cmd_all(const AllArgs& args) {
    const PipelineConfig config = PipelineConfig::load(args.config);
    TimeWindow range;
    std::string from = args.from;
    std::string to = args.to;
    if (!from.empty() && !to.empty()) {
        range = parse_date_range(from, to);
    } else if (!config.params.date_range.empty()) {
        range = config.params.date_range;
    } else {
        throw ConfigError("no date range: give --from/--to or from/to in the config");
    }

    fs::create_directories(args.out_dir);
    const auto path = [&](const char* name) { return (fs::path(args.out_dir) / name).string(); };

    const Roster roster = config.load_roster();
    const StopLists stops = config.load_stops();
    const LexiconSet lexicons = config.load_lexicons();

    // ingest
    IngestStats stats;
    const std::vector<Article> articles = run_ingest(config, range, std::cerr, &stats);
    if (articles.empty()) throw DataError("ingest produced no articles");
    save_corpus(path("corpus.jsonl"), articles);

    // classify
    ClassifyParams params;
    params.mention_window = config.params.mention_window;
    params.neutral_band = config.params.neutral_band;
    const std::vector<EntityLabel> labels =
        run_classify(articles, roster, stops, lexicons, params, std::cerr);
    save_labels(path("labels.csv"), labels);

    // score: weekly national series for every roster entity
    const ArticleIndex index = build_article_index(articles);
    std::vector<std::string> entity_ids;
    for (const auto& e : roster.entities) entity_ids.push_back(e.entity_id);
    std::sort(entity_ids.begin(), entity_ids.end());
    std::vector<SentimentSeries> all_series;
    for (const auto& entity_id : entity_ids)
        all_series.push_back(
            weekly_series(labels, index, entity_id, Scope::national(), range, &roster));
    {
        std::ofstream out(path("series.csv"), std::ios::binary);
        if (!out) throw DataError("cannot write series.csv");
        write_series_csv(out, all_series);
    }

    // bias (train split only)
    auto [train, test] = chronological_split(articles, config.params.split_ratio);
    (void)test;
    const ArticleIndex train_index = build_article_index(train);
    std::set<std::string> outlet_set;
    for (const auto& a : articles) outlet_set.insert(a.outlet);
    const std::vector<std::string> outlets(outlet_set.begin(), outlet_set.end());
    const BiasTable bias = identify_bias(labels, train_index, outlets, entity_ids, range,
                                         config.params.min_support);
    bias.save(path("bias.csv"));

    // forecast
    const auto national = national_party_standings(labels, index, roster, bias, range);
    std::vector<ConstituencyForecast> per_constituency;
    for (const auto& constituency : roster.constituencies)
        per_constituency.push_back(
            forecast_constituency(labels, index, roster, bias, constituency, range, national));
    const NationalForecast forecast = national_forecast(std::move(per_constituency));
    {
        std::ofstream out(path("forecast.csv"), std::ios::binary);
        if (!out) throw DataError("cannot write forecast.csv");
        save_forecast_csv(out, forecast, roster);
    }
    {
        std::ofstream out(path("forecast_basis.csv"), std::ios::binary);
        if (!out) throw DataError("cannot write forecast_basis.csv");
        save_forecast_basis_csv(out, forecast, roster);
    }
    {
        std::ofstream out(path("forecast.svg"), std::ios::binary);
        if (!out) throw DataError("cannot write forecast.svg");
        write_forecast_chart(out, forecast, roster);
    }

    std::vector<std::string> outputs = {path("corpus.jsonl"), path("labels.csv"),
                                        path("series.csv"),   path("bias.csv"),
                                        path("forecast.csv"), path("forecast_basis.csv"),
                                        path("forecast.svg")};

    // evaluate, when the config names a gold label set
    if (!config.gold_labels_path.empty()) {
        const std::vector<EntityLabel> gold = load_labels_logged(config.gold_labels_path, roster);
        const EvalReport report = evaluate(labels, gold);
        std::ofstream out(path("eval_report.json"), std::ios::binary);
        if (!out) throw DataError("cannot write eval_report.json");
        out << eval_report_json(report).dump(2) << '\n';
        outputs.push_back(path("eval_report.json"));
    }

    std::vector<std::string> inputs = {args.config, config.roster_path,
                                       config.stopwords_en_path, config.stopwords_fr_path,
                                       config.lexicon_en_path, config.lexicon_fr_path};
    if (!config.gold_labels_path.empty()) inputs.push_back(config.gold_labels_path);
    write_run_manifest(path("manifest.json"), "all",
                       {{"from", format_iso8601(range.start)},
                        {"to", format_iso8601(range.end)},
                        {"context_window", std::to_string(config.params.context_window)},
                        {"window", std::to_string(config.params.mention_window)},
                        {"tau", fmt_double(config.params.neutral_band)},
                        {"min_support", std::to_string(config.params.min_support)},
                        {"split_ratio", fmt_double(config.params.split_ratio)}},
                       inputs, outputs);

    const auto [party_a, party_b] = roster.party_ids_sorted();
    std::cout << "forecast totals: " << party_a << " " << forecast.totals.at(party_a) << ", "
              << party_b << " " << forecast.totals.at(party_b) << " (out of "
              << forecast.totals.at(party_a) + forecast.totals.at(party_b) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seatcast: media-sentiment seat forecasting pipeline"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "fetch, filter, dedup and persist the corpus");
    ingest->add_option("--config", ingest_args.config, "pipeline config file")->required();
    ingest->add_option("--from", ingest_args.from, "start date (ISO-8601, inclusive)")->required();
    ingest->add_option("--to", ingest_args.to, "end date (ISO-8601; bare date keeps the whole day)")
        ->required();
    ingest->add_option("--out", ingest_args.out, "output corpus JSONL")->required();
    ingest->callback([&] { cmd_ingest(ingest_args); });

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "label per-(article, entity) sentiment");
    classify->add_option("--corpus", classify_args.corpus, "corpus JSONL")->required();
    classify->add_option("--roster", classify_args.roster, "roster config file")->required();
    classify->add_option("--external", classify_args.external,
                         "import labels from this CSV instead of the lexicon classifier");
    classify->add_option("--config", classify_args.config,
                         "pipeline config (lexicons, stop lists, defaults for -W/--tau)");
    auto* window_opt = classify->add_option("-W,--window", classify_args.window,
                                            "tokens around a mention to score (default 25)");
    auto* tau_opt = classify->add_option("--tau", classify_args.tau,
                                         "neutral band: |score| must exceed tau (default 0)");
    classify->add_option("--out", classify_args.out, "output labels CSV")->required();
    classify->callback([&] {
        classify_args.window_set = window_opt->count() > 0;
        classify_args.tau_set = tau_opt->count() > 0;
        cmd_classify(classify_args);
    });

    ScoreArgs score_args;
    auto* score = app.add_subcommand("score", "weekly sentiment series per entity");
    score->add_option("--labels", score_args.labels, "labels CSV")->required();
    score->add_option("--corpus", score_args.corpus, "corpus JSONL")->required();
    score->add_option("--roster", score_args.roster, "roster config file")->required();
    score->add_option("--entity", score_args.entities,
                      "entity id (repeatable; default all roster entities)");
    score->add_option("--scope", score_args.scope,
                      "national | outlet:ID | constituency:ID (default national)");
    score->add_option("--from", score_args.from, "start date (default corpus range)");
    score->add_option("--to", score_args.to, "end date (default corpus range)");
    score->add_option("--change-from", score_args.change_from,
                      "baseline ISO week (e.g. 2024-W36) for cumulative SIS change");
    score->add_option("--change-to", score_args.change_to, "target ISO week");
    score->add_option("--out", score_args.out, "output series CSV")->required();
    score->callback([&] { cmd_score(score_args); });

    BiasArgs bias_args;
    auto* bias = app.add_subcommand("bias", "estimate per-(outlet, entity) bias on the train split");
    bias->add_option("--labels", bias_args.labels, "labels CSV")->required();
    bias->add_option("--corpus", bias_args.corpus, "corpus JSONL")->required();
    bias->add_option("--roster", bias_args.roster, "roster config file")->required();
    bias->add_option("--from", bias_args.from, "start date (default train-split range)");
    bias->add_option("--to", bias_args.to, "end date");
    bias->add_option("--split-ratio", bias_args.split_ratio,
                     "chronological train fraction (default 0.8)");
    bias->add_option("--min-support", bias_args.min_support,
                     "minimum phi per (outlet, entity) pair (default 10)");
    bias->add_option("--out", bias_args.out, "output bias CSV")->required();
    bias->callback([&] { cmd_bias(bias_args); });

    ForecastArgs forecast_args;
    auto* forecast = app.add_subcommand("forecast", "allocate seats per constituency");
    forecast->add_option("--labels", forecast_args.labels, "labels CSV")->required();
    forecast->add_option("--corpus", forecast_args.corpus,
                         "corpus JSONL (publication dates and outlets)")
        ->required();
    forecast->add_option("--roster", forecast_args.roster, "roster config file")->required();
    forecast->add_option("--bias", forecast_args.bias, "bias table CSV")->required();
    forecast->add_option("--from", forecast_args.from, "start date (default corpus range)");
    forecast->add_option("--to", forecast_args.to, "end date");
    forecast->add_option("--out", forecast_args.out, "output forecast CSV")->required();
    forecast->add_option("--chart", forecast_args.chart, "also write an SVG seat chart");
    forecast->add_option("--basis", forecast_args.basis,
                         "also write per-constituency score basis CSV");
    forecast->callback([&] { cmd_forecast(forecast_args); });

    EvaluateArgs evaluate_args;
    auto* evaluate = app.add_subcommand("evaluate", "score predicted labels against gold labels");
    evaluate->add_option("--pred", evaluate_args.pred, "predicted labels CSV")->required();
    evaluate->add_option("--gold", evaluate_args.gold, "gold labels CSV")->required();
    evaluate->add_option("--roster", evaluate_args.roster, "roster config file")->required();
    evaluate->add_option("--out", evaluate_args.out, "also write a JSON report");
    evaluate->callback([&] { cmd_evaluate(evaluate_args); });

    AllArgs all_args;
    auto* all = app.add_subcommand("all", "run the whole pipeline into a directory");
    all->add_option("--config", all_args.config, "pipeline config file")->required();
    all->add_option("--from", all_args.from, "start date (overrides config)");
    all->add_option("--to", all_args.to, "end date (overrides config)");
    all->add_option("--out-dir", all_args.out_dir, "output directory")->required();
    all->callback([&] { cmd_all(all_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
