#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "rmpredict/predictor.hpp"

namespace rmp {

struct MistakeLedger {
  std::map<ObjectId, unsigned> per_object;
  unsigned total = 0;
  std::vector<unsigned> per_trial;
  // Some object was rewarded in the trial (the neighborhoods covered d_exp).
  std::vector<bool> covered;
  // Objects that never made a mistake in any trial they took part in.
  std::vector<ObjectId> mistake_free;
};

// Counts reward-0 events per object. Trials without an expert are skipped.
MistakeLedger count_mistakes(const std::vector<TrialResult>& trials);

struct LocalizationState {
  unsigned round = 0;
  std::vector<ObjectId> survivors;  // agents voting in this round
  std::vector<double> radii;
  std::vector<double> centers;
};

// Picks the next center for a surviving object after its radius shrank.
using CenterPolicy = std::function<double(ObjectId, double center, double radius, unsigned round)>;

struct Localization {
  std::vector<LocalizationState> history;
  std::vector<ObjectId> fore_last;
  double lo = 0;
  double hi = 0;
  bool stopped_by_tolerance = false;

  // Distinct consecutive survivor sets, starting with the initial agents.
  std::vector<std::vector<ObjectId>> survivor_chain() const;
};

// Repeated votes: agents whose neighborhood misses the expert value are
// dismissed, the rest shrink their radii by eta. Stops when nobody survives a
// vote (the previous survivors localize the value) or when every surviving
// radius drops below config.radius_tolerance. The interval spans the
// fore-last agents' neighborhoods at the last radius they passed with.
Localization localize(const TrialResult& trial, double expert, const PredictionConfig& config,
                      const CenterPolicy& policy = {});

// Upper bound on the number of votes: ceil(log(tol / r0) / log(eta)) + 1,
// or 1 when r0 < tol.
std::size_t localization_round_bound(double initial_radius, double eta, double tolerance);

}  // namespace rmp
