#include "seatcast/pipeline/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seatcast/corpus/corpus.hpp"
#include "seatcast/text/clean.hpp"
#include "seatcast/text/prep.hpp"
#include "seatcast/util/config.hpp"
#include "seatcast/util/errors.hpp"
#include "seatcast/util/hash.hpp"
#include "seatcast/version.hpp"

namespace seatcast {

namespace fs = std::filesystem;

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (path.empty()) return path;
    const fs::path p(path);
    if (p.is_absolute()) return path;
    return (fs::path(base_dir) / p).lexically_normal().string();
}

// "local:" sources carry a path that must resolve relative to the config.
std::string resolve_source(const std::string& base_dir, const std::string& source) {
    if (source.rfind("local:", 0) == 0) return "local:" + resolve(base_dir, source.substr(6));
    return source;
}

int parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for '" + key + "': " + value);
    }
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number for '" + key + "': " + value);
    }
}

}  // namespace

TimeWindow parse_date_range(const std::string& from, const std::string& to) {
    const auto start = parse_iso8601(from);
    if (!start) throw ConfigError("unparseable --from date: " + from);
    auto end = parse_iso8601(to);
    if (!end) throw ConfigError("unparseable --to date: " + to);
    if (to.size() == 10) *end += kSecondsPerDay;  // bare date: keep the whole day
    if (*end <= *start) throw ConfigError("empty date range: " + from + " .. " + to);
    return {*start, *end};
}

PipelineConfig PipelineConfig::load(const std::string& path) {
    const ConfigFile file = ConfigFile::load(path);
    const std::string base_dir = fs::path(path).parent_path().string();

    PipelineConfig cfg;
    cfg.config_path = path;
    const auto& g = file.global;

    const auto required = [&](const char* key) {
        const auto v = g.get(key);
        if (!v || v->empty()) throw ConfigError(path + ": missing required key '" + key + "'");
        return *v;
    };
    cfg.roster_path = resolve(base_dir, required("roster"));
    cfg.stopwords_en_path = resolve(base_dir, required("stopwords_en"));
    cfg.stopwords_fr_path = resolve(base_dir, required("stopwords_fr"));
    cfg.lexicon_en_path = resolve(base_dir, required("lexicon_en"));
    cfg.lexicon_fr_path = resolve(base_dir, required("lexicon_fr"));
    if (const auto gold = g.get("gold_labels"); gold && !gold->empty())
        cfg.gold_labels_path = resolve(base_dir, *gold);

    cfg.context_keywords = split_list(g.get_or("context_keywords", ""));
    cfg.params.context_window = parse_int(g.get_or("context_window", "50"), "context_window");
    cfg.params.mention_window = parse_int(g.get_or("mention_window", "25"), "mention_window");
    cfg.params.neutral_band = parse_double(g.get_or("neutral_band", "0"), "neutral_band");
    cfg.params.min_support = parse_int(g.get_or("min_support", "10"), "min_support");
    cfg.params.split_ratio = parse_double(g.get_or("split_ratio", "0.8"), "split_ratio");

    if (cfg.params.mention_window < 1)
        throw ConfigError(path + ": mention_window must be >= 1");
    if (cfg.params.neutral_band < 0) throw ConfigError(path + ": neutral_band must be >= 0");
    if (!(cfg.params.split_ratio > 0.0 && cfg.params.split_ratio < 1.0))
        throw ConfigError(path + ": split_ratio must be in (0, 1)");
    if (cfg.params.context_window < 0)
        throw ConfigError(path + ": context_window must be >= 0");
    if (cfg.params.min_support < 0) throw ConfigError(path + ": min_support must be >= 0");

    const auto from = g.get("from");
    const auto to = g.get("to");
    if (from && to) cfg.params.date_range = parse_date_range(*from, *to);

    for (const auto& section : file.sections) {
        if (section.name.rfind("outlet", 0) != 0)
            throw ConfigError(path + ": unknown section [" + section.name + "]");
        OutletConfig outlet;
        outlet.outlet_id = trim(section.name.substr(6));
        if (outlet.outlet_id.empty())
            throw ConfigError(path + ": outlet section needs an id: [outlet <id>]");
        const auto src = section.get("source");
        if (!src) throw ConfigError(path + ": outlet '" + outlet.outlet_id + "' has no source");
        outlet.source = resolve_source(base_dir, *src);
        outlet.title_selector = html::Selector::parse(section.get_or("title", "h1"));
        outlet.body_selector = html::Selector::parse(section.get_or("body", "p"));
        outlet.date_selector = html::Selector::parse(section.get_or("date", "time@datetime"));
        outlet.date_format = section.get_or("date_format", "iso8601");
        outlet.pages = split_list(section.get_or("pages", ""));
        outlet.index = section.get_or("index", "");
        outlet.link_pattern = section.get_or("link_pattern", "");
        outlet.rate_limit_per_sec =
            parse_double(section.get_or("rate_limit_per_sec", "1"), "rate_limit_per_sec");
        cfg.outlets.push_back(std::move(outlet));
    }

    // Validate eagerly: every referenced file must exist and parse.
    cfg.load_roster();
    cfg.load_stops();
    cfg.load_lexicons();
    if (!cfg.gold_labels_path.empty() && !fs::exists(cfg.gold_labels_path))
        throw ConfigError(path + ": gold_labels file not found: " + cfg.gold_labels_path);
    return cfg;
}

Roster PipelineConfig::load_roster() const { return Roster::load(roster_path); }

StopLists PipelineConfig::load_stops() const {
    return {StopList::load(stopwords_en_path), StopList::load(stopwords_fr_path)};
}

LexiconSet PipelineConfig::load_lexicons() const {
    return {Lexicon::load(lexicon_en_path, Language::EN),
            Lexicon::load(lexicon_fr_path, Language::FR)};
}

std::vector<Article> run_ingest(const PipelineConfig& config, const TimeWindow& range,
                                std::ostream& log, IngestStats* stats) {
    const Roster roster = config.load_roster();
    const StopLists stops = config.load_stops();
    IngestStats local;

    std::vector<Article> kept;
    for (const auto& outlet : config.outlets) {
        const FetchResult fetched = fetch_outlet(outlet, range);
        local.fetched += fetched.docs.size();
        local.rejected += fetched.rejects.size();
        for (const auto& reject : fetched.rejects)
            log << "reject " << reject.reason << " " << reject.url << "\n";

        for (const auto& doc : fetched.docs) {
            Article article;
            article.id = content_id(doc.title, doc.body);
            article.outlet = outlet.outlet_id;
            article.url = doc.url;
            article.published_at = doc.published_at;
            article.title = doc.title;
            article.body = doc.body;
            article.language = detect_language(clean_text(doc.title + " " + doc.body), stops);
            article.matched_entities = match_entities(article.title, article.body, roster);
            if (article.matched_entities.empty()) {
                ++local.no_entity;
                continue;
            }
            const RelevanceResult rel =
                relevance_filter(article, roster, config.context_keywords,
                                 static_cast<std::size_t>(config.params.context_window));
            if (!rel.keep) {
                ++local.non_political;
                log << "drop " << rel.reason << " " << article.url << "\n";
                continue;
            }
            kept.push_back(std::move(article));
        }
    }

    const std::size_t before = kept.size();
    kept = deduplicate(std::move(kept));
    local.duplicates = before - kept.size();
    if (stats != nullptr) *stats = local;
    return kept;
}

std::vector<EntityLabel> run_classify(const std::vector<Article>& articles, const Roster& roster,
                                      const StopLists& stops, const LexiconSet& lexicons,
                                      const ClassifyParams& params, std::ostream& log) {
    std::vector<EntityLabel> labels;
    for (const auto& article : articles) {
        const TokenizedArticle prepped = prep_article(article, stops);
        for (const auto& entity_id : article.matched_entities) {
            const EntityDef* entity = roster.find_entity(entity_id);
            if (entity == nullptr) {
                log << "skip unknown entity '" << entity_id << "' in article " << article.id
                    << "\n";
                continue;
            }
            const auto label = classify_lexicon(prepped, *entity, lexicons, params);
            if (!label) {
                log << "skip NO_MENTION for entity '" << entity_id << "' in article "
                    << article.id << "\n";
                continue;
            }
            labels.push_back(*label);
        }
    }
    return labels;
}

void write_run_manifest(const std::string& path, const std::string& command,
                        const std::map<std::string, std::string>& parameters,
                        const std::vector<std::string>& input_files,
                        const std::vector<std::string>& output_files) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& file : input_files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            inputs[file] = "unreadable";
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        inputs[file] = hash_hex(buf.str());
    }
    // Outputs are recorded by base name so the manifest bytes do not
    // depend on where the caller pointed --out / --out-dir.
    std::vector<std::string> output_names;
    output_names.reserve(output_files.size());
    for (const auto& file : output_files)
        output_names.push_back(fs::path(file).filename().string());
    nlohmann::json j{{"tool", "seatcast"},
                     {"version", kVersion},
                     {"command", command},
                     {"parameters", parameters},
                     {"inputs", inputs},
                     {"outputs", output_names}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write manifest: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace seatcast
