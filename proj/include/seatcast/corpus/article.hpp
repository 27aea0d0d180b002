#ifndef SEATCAST_CORPUS_ARTICLE_HPP
#define SEATCAST_CORPUS_ARTICLE_HPP

#include <map>
#include <set>
#include <string>

#include "seatcast/text/lang.hpp"
#include "seatcast/util/time.hpp"

namespace seatcast {

struct Article {
    std::string id;  // content hash of the normalized title+body
    std::string outlet;
    std::string url;
    Timestamp published_at = 0;
    Language language = Language::Unknown;
    std::string title;
    std::string body;
    std::set<std::string> matched_entities;
};

struct CorpusManifest {
    std::size_t article_count = 0;
    Timestamp date_min = 0;
    Timestamp date_max = 0;
    std::map<std::string, std::size_t> per_outlet_counts;
};

}  // namespace seatcast

#endif
