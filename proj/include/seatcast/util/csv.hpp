#ifndef SEATCAST_UTIL_CSV_HPP
#define SEATCAST_UTIL_CSV_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

// RFC-4180-ish CSV: comma separator, double-quote quoting, quotes doubled
// inside quoted fields. Handles \r\n and embedded newlines in quoted fields.

namespace seatcast::csv {

std::string escape(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Reads one record (possibly spanning lines). Returns false at EOF.
bool read_row(std::istream& in, std::vector<std::string>& fields);

}  // namespace seatcast::csv

#endif
