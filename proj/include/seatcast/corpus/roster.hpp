#ifndef SEATCAST_CORPUS_ROSTER_HPP
#define SEATCAST_CORPUS_ROSTER_HPP

#include <optional>
#include <string>
#include <vector>

namespace seatcast {

struct Party {
    std::string party_id;
    std::string display_name;
};

struct EntityDef {
    std::string entity_id;
    std::string display_name;
    std::string party_id;
    std::vector<std::string> aliases;  // matched case/diacritics-insensitively
    std::optional<std::string> constituency_id;
};

struct ConstituencyDef {
    std::string constituency_id;
    std::string name;
    int magnitude = 3;
};

// Two parties, their candidates and the constituency map. Line format:
//
//   party        <id> <display name>
//   constituency <id> <magnitude> <display name>
//   entity       <id> <party id> <constituency id|national> <display name>
//                [aka <alias> ...]
//
// Tokens with spaces are double-quoted. Entities without an explicit
// `aka` list match on their display name.
struct Roster {
    std::vector<Party> parties;  // exactly two, file order
    std::vector<ConstituencyDef> constituencies;
    std::vector<EntityDef> entities;

    static Roster load(const std::string& path);          // throws ConfigError
    static Roster parse(const std::string& text, const std::string& origin);

    const EntityDef* find_entity(const std::string& entity_id) const;
    const ConstituencyDef* find_constituency(const std::string& constituency_id) const;
    const Party* find_party(const std::string& party_id) const;

    // Candidate entity ids of one party in one constituency, file order.
    std::vector<std::string> candidates(const std::string& constituency_id,
                                        const std::string& party_id) const;

    // All entity ids of a party (candidates and national-level entities).
    std::vector<std::string> party_entities(const std::string& party_id) const;

    // Party ids sorted lexicographically; the forecast's "party A" is front().
    std::pair<std::string, std::string> party_ids_sorted() const;
};

}  // namespace seatcast

#endif
