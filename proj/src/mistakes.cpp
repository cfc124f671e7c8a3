#include "rmpredict/mistakes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmpredict/errors.hpp"

namespace rmp {

MistakeLedger count_mistakes(const std::vector<TrialResult>& trials) {
  MistakeLedger ledger;
  for (const auto& trial : trials) {
    if (!trial.expert) continue;
    unsigned in_trial = 0;
    for (const auto& f : trial.forecasts) {
      auto& slot = ledger.per_object[f.object];
      if (f.reward.value_or(0) == 0) {
        ++slot;
        ++in_trial;
      }
    }
    ledger.per_trial.push_back(in_trial);
    ledger.covered.push_back(trial.reward_sum() >= 1);
    ledger.total += in_trial;
  }
  for (const auto& [id, n] : ledger.per_object) {
    if (n == 0) ledger.mistake_free.push_back(id);
  }
  return ledger;
}

std::vector<std::vector<ObjectId>> Localization::survivor_chain() const {
  std::vector<std::vector<ObjectId>> chain;
  for (const auto& state : history) {
    if (chain.empty() || chain.back() != state.survivors) chain.push_back(state.survivors);
  }
  if (!fore_last.empty() && (chain.empty() || chain.back() != fore_last)) chain.push_back(fore_last);
  return chain;
}

Localization localize(const TrialResult& trial, double expert, const PredictionConfig& config,
                      const CenterPolicy& policy) {
  config.validate();
  if (trial.forecasts.empty()) throw DomainError("localization needs at least one agent");

  LocalizationState state;
  for (const auto& f : trial.forecasts) {
    state.survivors.push_back(f.object);
    state.radii.push_back(static_cast<double>(f.radius));
    state.centers.push_back(f.forecast);
  }

  Localization loc;
  const auto close_with = [&](const LocalizationState& passed) {
    loc.fore_last = passed.survivors;
    loc.lo = std::numeric_limits<double>::infinity();
    loc.hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < passed.survivors.size(); ++i) {
      loc.lo = std::min(loc.lo, passed.centers[i] - passed.radii[i]);
      loc.hi = std::max(loc.hi, passed.centers[i] + passed.radii[i]);
    }
  };

  for (unsigned round = 0;; ++round) {
    state.round = round;
    loc.history.push_back(state);

    LocalizationState kept;
    for (std::size_t i = 0; i < state.survivors.size(); ++i) {
      if (std::abs(expert - state.centers[i]) <= state.radii[i]) {
        kept.survivors.push_back(state.survivors[i]);
        kept.radii.push_back(state.radii[i]);
        kept.centers.push_back(state.centers[i]);
      }
    }
    if (kept.survivors.empty()) {
      // Nobody passed: the agents of this vote localize the value, at the
      // radii they were tested with.
      if (round == 0) {
        close_with(state);
      }
      return loc;
    }
    close_with(kept);

    bool all_small = true;
    for (std::size_t i = 0; i < kept.survivors.size(); ++i) {
      kept.radii[i] *= config.eta;
      if (policy) kept.centers[i] = policy(kept.survivors[i], kept.centers[i], kept.radii[i], round + 1);
      all_small = all_small && kept.radii[i] < config.radius_tolerance;
    }
    if (all_small) {
      loc.stopped_by_tolerance = true;
      return loc;
    }
    state = std::move(kept);
  }
}

std::size_t localization_round_bound(double initial_radius, double eta, double tolerance) {
  if (initial_radius < tolerance) return 1;
  const double x = std::log(tolerance / initial_radius) / std::log(eta);
  return static_cast<std::size_t>(std::ceil(x)) + 1;
}

}  // namespace rmp
