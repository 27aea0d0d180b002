#include "seatcast/corpus/corpus_io.hpp"

#include <fstream>

#include <json.hpp>

#include "seatcast/corpus/corpus.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

namespace {

using nlohmann::json;

json to_json(const Article& a) {
    json entities = json::array();
    for (const auto& e : a.matched_entities) entities.push_back(e);
    return json{{"id", a.id},
                {"outlet", a.outlet},
                {"url", a.url},
                {"published_at", format_iso8601(a.published_at)},
                {"language", to_string(a.language)},
                {"title", a.title},
                {"body", a.body},
                {"matched_entities", entities}};
}

std::string require_string(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw DataError(std::string("missing field '") + key + "'");
    if (!it->is_string()) throw DataError(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

Article from_json(const json& j) {
    Article a;
    a.id = require_string(j, "id");
    a.outlet = require_string(j, "outlet");
    a.url = require_string(j, "url");
    const std::string published = require_string(j, "published_at");
    const auto ts = parse_iso8601(published);
    if (!ts) throw DataError("unparseable published_at '" + published + "'");
    a.published_at = *ts;
    const std::string lang = require_string(j, "language");
    if (lang != "EN" && lang != "FR" && lang != "UNKNOWN")
        throw DataError("bad language '" + lang + "'");
    a.language = language_from_string(lang);
    a.title = require_string(j, "title");
    a.body = require_string(j, "body");
    if (a.body.empty()) throw DataError("empty body");
    const auto it = j.find("matched_entities");
    if (it == j.end() || !it->is_array())
        throw DataError("missing or non-array matched_entities");
    for (const auto& e : *it) {
        if (!e.is_string()) throw DataError("matched_entities must contain strings");
        a.matched_entities.insert(e.get<std::string>());
    }
    return a;
}

}  // namespace

void save_corpus(std::ostream& out, const std::vector<Article>& articles) {
    for (const auto& a : articles) out << to_json(a).dump() << '\n';
}

void save_corpus(const std::string& path, const std::vector<Article>& articles) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path);
    save_corpus(out, articles);
}

LoadedCorpus load_corpus(std::istream& in) {
    LoadedCorpus loaded;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            loaded.articles.push_back(from_json(j));
        } catch (const json::exception& e) {
            loaded.errors.push_back({line_no, std::string("malformed JSON: ") + e.what()});
        } catch (const DataError& e) {
            loaded.errors.push_back({line_no, e.what()});
        }
    }
    loaded.manifest = build_manifest(loaded.articles);
    return loaded;
}

LoadedCorpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    return load_corpus(in);
}

}  // namespace seatcast
