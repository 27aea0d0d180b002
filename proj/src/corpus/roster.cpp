#include "seatcast/corpus/roster.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "seatcast/util/config.hpp"
#include "seatcast/util/errors.hpp"

namespace seatcast {

namespace {

// Whitespace-separated tokens; double quotes group words.
std::vector<std::string> tokenize_line(const std::string& line, const std::string& where) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) != 0) ++i;
        if (i >= line.size()) break;
        if (line[i] == '"') {
            const auto end = line.find('"', i + 1);
            if (end == std::string::npos)
                throw ConfigError(where + ": unterminated quote");
            out.push_back(line.substr(i + 1, end - i - 1));
            i = end + 1;
        } else {
            std::size_t end = i;
            while (end < line.size() && std::isspace(static_cast<unsigned char>(line[end])) == 0)
                ++end;
            out.push_back(line.substr(i, end - i));
            i = end;
        }
    }
    return out;
}

}  // namespace

Roster Roster::parse(const std::string& text, const std::string& origin) {
    Roster roster;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto tokens = tokenize_line(t, where);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];

        if (directive == "party") {
            if (tokens.size() != 3) throw ConfigError(where + ": party <id> <name>");
            roster.parties.push_back({tokens[1], tokens[2]});
        } else if (directive == "constituency") {
            if (tokens.size() != 4)
                throw ConfigError(where + ": constituency <id> <magnitude> <name>");
            ConstituencyDef c;
            c.constituency_id = tokens[1];
            try {
                c.magnitude = std::stoi(tokens[2]);
            } catch (const std::exception&) {
                throw ConfigError(where + ": bad magnitude '" + tokens[2] + "'");
            }
            if (c.magnitude < 1) throw ConfigError(where + ": magnitude must be >= 1");
            c.name = tokens[3];
            roster.constituencies.push_back(std::move(c));
        } else if (directive == "entity") {
            if (tokens.size() < 5)
                throw ConfigError(where +
                                  ": entity <id> <party> <constituency|national> <name> [aka ...]");
            EntityDef e;
            e.entity_id = tokens[1];
            e.party_id = tokens[2];
            if (tokens[3] != "national") e.constituency_id = tokens[3];
            e.display_name = tokens[4];
            if (tokens.size() > 5) {
                if (tokens[5] != "aka")
                    throw ConfigError(where + ": expected 'aka' before aliases");
                e.aliases.assign(tokens.begin() + 6, tokens.end());
                if (e.aliases.empty())
                    throw ConfigError(where + ": 'aka' requires at least one alias");
            }
            if (e.aliases.empty()) e.aliases.push_back(e.display_name);
            roster.entities.push_back(std::move(e));
        } else {
            throw ConfigError(where + ": unknown directive '" + directive + "'");
        }
    }

    if (roster.parties.size() != 2)
        throw ConfigError(origin + ": roster must declare exactly two parties, found " +
                          std::to_string(roster.parties.size()));
    if (roster.parties[0].party_id == roster.parties[1].party_id)
        throw ConfigError(origin + ": duplicate party id");
    for (const auto& e : roster.entities) {
        if (roster.find_party(e.party_id) == nullptr)
            throw ConfigError(origin + ": entity '" + e.entity_id + "' references unknown party '" +
                              e.party_id + "'");
        if (e.constituency_id && roster.find_constituency(*e.constituency_id) == nullptr)
            throw ConfigError(origin + ": entity '" + e.entity_id +
                              "' references unknown constituency '" + *e.constituency_id + "'");
    }
    for (std::size_t i = 0; i < roster.entities.size(); ++i) {
        for (std::size_t j = i + 1; j < roster.entities.size(); ++j) {
            if (roster.entities[i].entity_id == roster.entities[j].entity_id)
                throw ConfigError(origin + ": duplicate entity id '" +
                                  roster.entities[i].entity_id + "'");
        }
    }
    return roster;
}

Roster Roster::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open roster file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const EntityDef* Roster::find_entity(const std::string& entity_id) const {
    for (const auto& e : entities) {
        if (e.entity_id == entity_id) return &e;
    }
    return nullptr;
}

const ConstituencyDef* Roster::find_constituency(const std::string& constituency_id) const {
    for (const auto& c : constituencies) {
        if (c.constituency_id == constituency_id) return &c;
    }
    return nullptr;
}

const Party* Roster::find_party(const std::string& party_id) const {
    for (const auto& p : parties) {
        if (p.party_id == party_id) return &p;
    }
    return nullptr;
}

std::vector<std::string> Roster::candidates(const std::string& constituency_id,
                                            const std::string& party_id) const {
    std::vector<std::string> out;
    for (const auto& e : entities) {
        if (e.party_id == party_id && e.constituency_id &&
            *e.constituency_id == constituency_id)
            out.push_back(e.entity_id);
    }
    return out;
}

std::vector<std::string> Roster::party_entities(const std::string& party_id) const {
    std::vector<std::string> out;
    for (const auto& e : entities) {
        if (e.party_id == party_id) out.push_back(e.entity_id);
    }
    return out;
}

std::pair<std::string, std::string> Roster::party_ids_sorted() const {
    std::pair<std::string, std::string> ids{parties[0].party_id, parties[1].party_id};
    if (ids.second < ids.first) std::swap(ids.first, ids.second);
    return ids;
}

}  // namespace seatcast
