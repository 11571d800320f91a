#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "colorsim/analysis.hpp"
#include "colorsim/code.hpp"
#include "colorsim/experiment.hpp"
#include "colorsim/restriction_decoder.hpp"

namespace colorsim {

// Lattice and code fixtures, for debugging and cross-implementation diffs.
nlohmann::json lattice_to_json(const Lattice& lat);
nlohmann::json code_to_json(const StabilizerCode& code);
StabilizerCode code_from_json(const nlohmann::json& j);

nlohmann::json syndrome_graph_to_json(const SyndromeGraph& graph);
nlohmann::json matching_to_json(const Matching& matching);

// Sweep results as JSON-lines (one record per point, append-only) and CSV
// with the fixed column set
//   code,family,d,L1,L2,kappa,phi,eta,p,decoder,trials,failures,p_L,
//   ci_lo,ci_hi,seed,seconds
// The two formats round-trip through the readers below.
void append_results_jsonl(const std::string& path, const TrialStatistics& stats);
void write_results_csv(const std::string& path, const TrialStatistics& stats);
std::string results_csv_string(const TrialStatistics& stats);
TrialStatistics read_results_csv(const std::string& path);
TrialStatistics read_results_jsonl(const std::string& path);

nlohmann::json threshold_report_json(const ThresholdEstimate& est,
                                     const std::vector<FitPoint>& points);

// Plain-text configuration: key = value lines grouped under [section]
// headers; keys are returned as "section.key". '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace colorsim
