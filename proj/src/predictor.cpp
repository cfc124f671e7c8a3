#include "rmpredict/predictor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "rmpredict/errors.hpp"

namespace rmp {

const char* to_string(TieStrategy t) {
  return t == TieStrategy::random ? "random" : "lowest";
}

TieStrategy parse_tie_strategy(std::string_view text) {
  if (text == "random") return TieStrategy::random;
  if (text == "lowest" || text == "lowest_object_id") return TieStrategy::lowest_object_id;
  throw UsageError("unknown tie strategy '" + std::string(text) + "' (expected random or lowest)");
}

void PredictionConfig::validate() const {
  if (epsilon < 0 || epsilon > 1) throw UsageError("epsilon must lie in [0,1], got " + to_string(epsilon));
  if (delta < 1) throw UsageError("delta must be a positive natural number");
  if (!(eta > 0 && eta < 1)) throw UsageError("eta must lie in (0,1)");
  if (!(radius_tolerance > 0)) throw UsageError("radius tolerance must be positive");
}

int TrialResult::reward_sum() const {
  int sum = 0;
  for (const auto& f : forecasts) sum += f.reward.value_or(0);
  return sum;
}

unsigned radius(unsigned vc, unsigned vc_star, unsigned delta) {
  if (vc_star == 0) return 0;
  return static_cast<unsigned>((static_cast<std::uint64_t>(delta) * vc) / vc_star);
}

double forecast(const DecisionSystem& system, std::size_t row, unsigned radius,
                const ForecastPolicy& policy) {
  const double center = system.decision(row);
  if (!policy) return center;
  const double value = policy(system, row, radius);
  if (!(std::abs(value - center) <= radius)) {
    throw DomainError("forecast " + std::to_string(value) + " for object " +
                      std::to_string(to_index(system.id(row))) + " leaves the neighborhood of " +
                      std::to_string(center) + " with radius " + std::to_string(radius));
  }
  return value;
}

int reward(double center, double radius, double expert) {
  return std::abs(expert - center) <= radius ? 1 : 0;
}

std::optional<Winner> select_winner(const TrialResult& trial, const PredictionConfig& config) {
  if (!trial.expert) return std::nullopt;
  const double expert = *trial.expert;
  double best = std::numeric_limits<double>::infinity();
  std::vector<const AgentForecast*> candidates;
  for (const auto& f : trial.forecasts) {
    if (f.reward.value_or(0) != 1) continue;
    const double loss = std::abs(expert - f.forecast);
    if (loss < best) {
      best = loss;
      candidates.clear();
    }
    if (loss == best) candidates.push_back(&f);
  }
  if (candidates.empty()) return std::nullopt;
  std::sort(candidates.begin(), candidates.end(),
            [](const AgentForecast* a, const AgentForecast* b) { return a->object < b->object; });

  const AgentForecast* pick = candidates.front();
  if (config.tie == TieStrategy::random && candidates.size() > 1) {
    std::vector<std::uint64_t> words{config.seed, static_cast<std::uint64_t>(trial.trial_index)};
    for (const auto* c : candidates) words.push_back(to_index(c->object));
    std::seed_seq seq(words.begin(), words.end());
    std::mt19937_64 gen(seq);
    pick = candidates[gen() % candidates.size()];
  }
  return Winner{pick->object, pick->forecast};
}

double weighted_prediction(const TrialResult& trial) {
  if (trial.forecasts.empty() || trial.vc_star == 0) {
    throw DomainError("weighted prediction is undefined when every VC(o) is 0");
  }
  const double star = trial.vc_star;
  double num = 0;
  double den = 0;
  for (const auto& f : trial.forecasts) {
    const double w = f.vc / star;
    num += f.forecast * w;
    den += w;
  }
  return num / den;
}

double regret(const TrialResult& trial) {
  if (!trial.expert) throw DomainError("regret needs an expert decision");
  if (trial.forecasts.empty()) throw DomainError("regret needs at least one forecast");
  const double expert = *trial.expert;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : trial.forecasts) best = std::min(best, std::abs(expert - f.forecast));
  return std::abs(expert - trial.weighted) - best;
}

TrialResult run_trial(const DecisionSystem& system, const NewObject& omega,
                      std::optional<double> expert, const PredictionConfig& config,
                      std::size_t trial_index, const ForecastPolicy& policy) {
  config.validate();
  if (system.empty()) throw DomainError("the decision system has no objects to act as agents");

  TrialResult trial{omega, expert};
  trial.delta = config.delta;
  trial.seed = config.seed;
  trial.trial_index = trial_index;
  if (!is_consistent(system).consistent) {
    // Touching sets stay indexed by F: omega has no value for the added feature.
    (void)consistentize(system);
    trial.consistentized = true;
  }

  trial.forecasts.reserve(system.object_count());
  for (std::size_t r = 0; r < system.object_count(); ++r) {
    const auto family = vc::family_for(system, system.id(r), omega, config.epsilon, config.mode);
    AgentForecast f;
    f.object = system.id(r);
    f.touching_size = static_cast<std::size_t>(std::popcount(family.touching));
    f.vc = vc::vc_dimension(family);
    f.decision = system.decision(r);
    trial.forecasts.push_back(f);
  }
  for (const auto& f : trial.forecasts) trial.vc_star = std::max(trial.vc_star, f.vc);

  for (std::size_t r = 0; r < trial.forecasts.size(); ++r) {
    auto& f = trial.forecasts[r];
    f.radius = radius(f.vc, trial.vc_star, config.delta);
    f.forecast = forecast(system, r, f.radius, policy);
    if (expert) {
      f.reward = reward(f.decision, f.radius, *expert);
      f.loss = std::abs(*expert - f.forecast);
    }
  }

  if (trial.vc_star > 0) {
    trial.weighted = weighted_prediction(trial);
  } else {
    double sum = 0;
    for (const auto& f : trial.forecasts) sum += f.forecast;
    trial.weighted = sum / static_cast<double>(trial.forecasts.size());
    trial.weights_degenerate = true;
  }

  if (expert) {
    trial.winner = select_winner(trial, config);
    trial.regret = regret(trial);
  }
  return trial;
}

bool approx_predicted(const std::vector<TrialResult>& trials) {
  if (trials.empty()) throw DomainError("approximate prediction needs at least one trial");
  return std::all_of(trials.begin(), trials.end(),
                     [](const TrialResult& t) { return t.reward_sum() >= 1; });
}

bool max_rewarded_loss_below_2delta(const TrialResult& trial) {
  double worst = 0;
  for (const auto& f : trial.forecasts) {
    if (f.reward.value_or(0) == 1 && f.loss) worst = std::max(worst, *f.loss);
  }
  return worst < 2.0 * trial.delta;
}

}  // namespace rmp
