#ifndef SEATCAST_FORECAST_CHART_HPP
#define SEATCAST_FORECAST_CHART_HPP

#include <iosfwd>
#include <string>

#include "seatcast/forecast/forecast.hpp"

namespace seatcast {

// Standalone SVG stacked bar of the national seat totals. Every bar
// carries data-party / data-seats attributes so the values stay
// machine-checkable.
void write_forecast_chart(std::ostream& out, const NationalForecast& forecast,
                          const Roster& roster);

}  // namespace seatcast

#endif
