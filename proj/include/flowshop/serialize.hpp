#pragma once

#include "json.hpp"

#include "flowshop/evaluator.hpp"
#include "flowshop/markov.hpp"
#include "flowshop/rounds.hpp"
#include "flowshop/search.hpp"

namespace flowshop {

// JSON views of the result types. Schedules and machine indices are 1-based
// on the wire; numbers round-trip exactly.

nlohmann::json to_json(const ScheduleEvaluation& evaluation);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const SimStats& stats);
nlohmann::json to_json(const RoundsReport& report);
nlohmann::json to_json(const WeightSeries& series);

}  // namespace flowshop
