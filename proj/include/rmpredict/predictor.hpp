#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rmpredict/data_model.hpp"
#include "rmpredict/rational.hpp"
#include "rmpredict/vc.hpp"

namespace rmp {

enum class TieStrategy { random, lowest_object_id };

const char* to_string(TieStrategy t);
TieStrategy parse_tie_strategy(std::string_view text);

struct PredictionConfig {
  Rational epsilon{1};
  unsigned delta = 1;
  vc::Mode mode = vc::Mode::exact;
  TieStrategy tie = TieStrategy::lowest_object_id;
  std::uint64_t seed = 0;
  double eta = 0.5;
  double radius_tolerance = 1e-6;

  // Throws UsageError on epsilon outside [0,1], delta == 0, eta outside (0,1)
  // or a non-positive tolerance.
  void validate() const;
};

// Chooses d^(o) given the object's row and radius. The result must lie in
// [d(o) - radius, d(o) + radius].
using ForecastPolicy = std::function<double(const DecisionSystem&, std::size_t row, unsigned radius)>;

struct AgentForecast {
  ObjectId object{};
  std::size_t touching_size = 0;
  unsigned vc = 0;
  unsigned radius = 0;
  double decision = 0;  // d(o), the neighborhood center
  double forecast = 0;  // d^(o)
  std::optional<int> reward;
  std::optional<double> loss;  // |d_exp - d^(o)|
};

struct Winner {
  ObjectId object{};
  double decision = 0;
};

struct TrialResult {
  NewObject omega;
  std::optional<double> expert;
  std::vector<AgentForecast> forecasts{};
  unsigned vc_star = 0;
  unsigned delta = 1;
  std::optional<Winner> winner{};
  double weighted = 0;
  bool weights_degenerate = false;
  std::optional<double> regret{};
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
  bool consistentized = false;

  int reward_sum() const;
};

// floor(delta * vc / vc_star) in integer arithmetic; 0 when vc_star == 0.
unsigned radius(unsigned vc, unsigned vc_star, unsigned delta);

// Default policy returns d(o). Throws DomainError if the policy leaves the
// closed neighborhood.
double forecast(const DecisionSystem& system, std::size_t row, unsigned radius,
                const ForecastPolicy& policy = {});

// 1 iff |expert - center| <= radius (closed ball).
int reward(double center, double radius, double expert);

// Rewarded forecast with least loss; ties per config.tie. Random ties draw
// from a generator seeded by (seed, trial index, candidate ids).
std::optional<Winner> select_winner(const TrialResult& trial, const PredictionConfig& config);

// VC-weighted average of the forecasts. Throws DomainError when every VC is 0.
double weighted_prediction(const TrialResult& trial);

// |d_exp - weighted| - min_o |d_exp - d^(o)|. Requires an expert value.
double regret(const TrialResult& trial);

// Runs the protocol for one new object. Without an expert value the result
// carries forecasts, radii and the weighted prediction only.
TrialResult run_trial(const DecisionSystem& system, const NewObject& omega,
                      std::optional<double> expert, const PredictionConfig& config,
                      std::size_t trial_index = 0, const ForecastPolicy& policy = {});

// True iff every trial rewarded at least one object. Throws DomainError on an
// empty list.
bool approx_predicted(const std::vector<TrialResult>& trials);

// Largest loss among rewarded agents is below 2 * delta. Always true for
// closed balls of radius <= delta; kept as a report diagnostic.
bool max_rewarded_loss_below_2delta(const TrialResult& trial);

}  // namespace rmp
