#ifndef SEATCAST_PIPELINE_PIPELINE_HPP
#define SEATCAST_PIPELINE_PIPELINE_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "seatcast/corpus/corpus_io.hpp"
#include "seatcast/corpus/fetch.hpp"
#include "seatcast/corpus/roster.hpp"
#include "seatcast/sentiment/classify.hpp"
#include "seatcast/sentiment/external.hpp"

namespace seatcast {

struct PipelineParams {
    int context_window = 50;   // relevance filter token window
    int mention_window = 25;   // classifier W
    double neutral_band = 0.0;  // classifier tau
    long min_support = 10;
    double split_ratio = 0.8;
    TimeWindow date_range;  // [from, to)
};

// The pipeline config file: global keys plus one [outlet <id>] section
// per source. Loading validates everything up front (all referenced
// files exist and parse, parameters in range) so a bad config never
// produces partial outputs.
struct PipelineConfig {
    std::string config_path;
    std::string roster_path;
    std::string stopwords_en_path;
    std::string stopwords_fr_path;
    std::string lexicon_en_path;
    std::string lexicon_fr_path;
    std::string gold_labels_path;  // optional
    std::vector<std::string> context_keywords;
    std::vector<OutletConfig> outlets;
    PipelineParams params;

    static PipelineConfig load(const std::string& path);  // throws ConfigError

    Roster load_roster() const;
    StopLists load_stops() const;
    LexiconSet load_lexicons() const;
};

// End-of-day-exclusive range: "--to 2024-11-01" keeps that whole day.
TimeWindow parse_date_range(const std::string& from, const std::string& to);

struct IngestStats {
    std::size_t fetched = 0;
    std::size_t rejected = 0;
    std::size_t no_entity = 0;
    std::size_t non_political = 0;
    std::size_t duplicates = 0;
};

std::vector<Article> run_ingest(const PipelineConfig& config, const TimeWindow& range,
                                std::ostream& log, IngestStats* stats = nullptr);

std::vector<EntityLabel> run_classify(const std::vector<Article>& articles, const Roster& roster,
                                      const StopLists& stops, const LexiconSet& lexicons,
                                      const ClassifyParams& params, std::ostream& log);

// Deterministic run manifest: tool version, command, parameters and an
// fnv1a64 digest of every input file. No clocks, so reruns are
// byte-identical.
void write_run_manifest(const std::string& path, const std::string& command,
                        const std::map<std::string, std::string>& parameters,
                        const std::vector<std::string>& input_files,
                        const std::vector<std::string>& output_files);

}  // namespace seatcast

#endif
