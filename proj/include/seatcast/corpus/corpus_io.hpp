#ifndef SEATCAST_CORPUS_CORPUS_IO_HPP
#define SEATCAST_CORPUS_CORPUS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "seatcast/corpus/article.hpp"

namespace seatcast {

struct CorpusLineError {
    int line = 0;
    std::string message;
};

struct LoadedCorpus {
    std::vector<Article> articles;
    std::vector<CorpusLineError> errors;
    CorpusManifest manifest;
};

// JSONL, one article per line, UTF-8. Fields exactly:
//   id, outlet, url, published_at (ISO-8601 UTC), language, title, body,
//   matched_entities
void save_corpus(std::ostream& out, const std::vector<Article>& articles);
void save_corpus(const std::string& path, const std::vector<Article>& articles);

// Invalid lines are recorded with their line number and skipped.
// Throws DataError only when the file itself cannot be read.
LoadedCorpus load_corpus(std::istream& in);
LoadedCorpus load_corpus(const std::string& path);

}  // namespace seatcast

#endif
