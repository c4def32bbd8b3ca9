#pragma once

#include <string>

#include "pgroup/verdicts.hpp"

namespace pgroup {

/// Schema-stable JSON rendering of an analysis report. Field order and types
/// are fixed; future fields are only additive. Timings appear only when the
/// report carries them.
std::string report_to_json(const AnalysisReport& rep, bool pretty = true);

}  // namespace pgroup
