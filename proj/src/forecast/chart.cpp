#include "seatcast/forecast/chart.hpp"

#include <ostream>

namespace seatcast {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

void write_forecast_chart(std::ostream& out, const NationalForecast& forecast,
                          const Roster& roster) {
    const auto [party_a, party_b] = roster.party_ids_sorted();
    const int seats_a = forecast.totals.at(party_a);
    const int seats_b = forecast.totals.at(party_b);
    const int total = seats_a + seats_b;

    const int width = 640;
    const int height = 200;
    const int bar_x = 40;
    const int bar_y = 80;
    const int bar_w = width - 2 * bar_x;
    const int bar_h = 48;
    const int w_a = total == 0 ? 0 : bar_w * seats_a / total;
    const int w_b = bar_w - w_a;

    const std::string name_a = xml_escape(roster.find_party(party_a)->display_name);
    const std::string name_b = xml_escape(roster.find_party(party_b)->display_name);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <title>Seat forecast</title>\n";
    out << "  <text x=\"" << bar_x << "\" y=\"40\" font-family=\"sans-serif\" font-size=\"18\">"
        << "Projected seats (" << total << " total)</text>\n";
    out << "  <rect data-party=\"" << xml_escape(party_a) << "\" data-seats=\"" << seats_a
        << "\" x=\"" << bar_x << "\" y=\"" << bar_y << "\" width=\"" << w_a << "\" height=\""
        << bar_h << "\" fill=\"#4a7fb5\"/>\n";
    out << "  <rect data-party=\"" << xml_escape(party_b) << "\" data-seats=\"" << seats_b
        << "\" x=\"" << bar_x + w_a << "\" y=\"" << bar_y << "\" width=\"" << w_b
        << "\" height=\"" << bar_h << "\" fill=\"#c0504d\"/>\n";
    out << "  <text x=\"" << bar_x << "\" y=\"" << bar_y + bar_h + 28
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << name_a << ": " << seats_a
        << "</text>\n";
    out << "  <text x=\"" << bar_x << "\" y=\"" << bar_y + bar_h + 48
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << name_b << ": " << seats_b
        << "</text>\n";
    out << "</svg>\n";
}

}  // namespace seatcast
