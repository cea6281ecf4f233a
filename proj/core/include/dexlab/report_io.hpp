#pragma once

#include <string>

#include "dexlab/experiment.hpp"

namespace dexlab {

/// Deterministic serialization: JSON carries the complete data model (keys
/// sorted, shortest round-trip floats); CSV is the experiment's primary
/// table with a fixed, documented column order.
std::string emit_report_json(const ExperimentReport& rep);
std::string emit_report_csv(const ExperimentReport& rep);
std::string emit_report(const ExperimentReport& rep, const std::string& format);

/// Inverse of emit_report_json on the data model.
ExperimentReport parse_report_json(const std::string& text);

}  // namespace dexlab
