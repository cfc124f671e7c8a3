#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "rmpredict/mistakes.hpp"
#include "rmpredict/predictor.hpp"

namespace rmp {

using Json = nlohmann::ordered_json;

struct SessionReport {
  PredictionConfig config;
  std::vector<TrialResult> trials;
  MistakeLedger mistakes;
  bool approx_predicted = false;
  double regret_mean = 0;
  double regret_max = 0;
};

// Leave-one-out: each object in turn becomes the new object (its decision the
// expert value) and is predicted from the remaining rows. Throws DomainError
// for fewer than two objects.
SessionReport evaluate_loo(const DecisionSystem& system, const PredictionConfig& config);

Json config_to_json(const PredictionConfig& config);
Json trial_to_json(const TrialResult& trial);
Json localization_to_json(const Localization& loc);
Json session_to_json(const SessionReport& report);

std::string trial_to_csv(const TrialResult& trial);
std::string session_to_csv(const SessionReport& report);

}  // namespace rmp
