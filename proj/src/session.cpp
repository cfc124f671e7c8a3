#include "rmpredict/session.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "rmpredict/errors.hpp"

namespace rmp {

SessionReport evaluate_loo(const DecisionSystem& system, const PredictionConfig& config) {
  config.validate();
  if (system.object_count() < 2) {
    throw DomainError("leave-one-out needs at least two objects, got " +
                      std::to_string(system.object_count()));
  }
  const std::size_t n = system.object_count();
  std::vector<std::optional<TrialResult>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const auto rest = system.without_row(i);
        slots[i] = run_trial(rest, NewObject::from_row(system, i), system.decision(i), config, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SessionReport report;
  report.config = config;
  report.trials.reserve(n);
  for (auto& s : slots) report.trials.push_back(std::move(*s));
  report.mistakes = count_mistakes(report.trials);
  report.approx_predicted = approx_predicted(report.trials);
  double sum = 0;
  report.regret_max = -std::numeric_limits<double>::infinity();
  for (const auto& t : report.trials) {
    sum += *t.regret;
    report.regret_max = std::max(report.regret_max, *t.regret);
  }
  report.regret_mean = sum / static_cast<double>(n);
  return report;
}

Json config_to_json(const PredictionConfig& config) {
  Json j;
  j["epsilon"] = to_string(config.epsilon);
  j["delta"] = config.delta;
  j["eta"] = config.eta;
  j["mode"] = vc::to_string(config.mode);
  j["tie"] = to_string(config.tie);
  j["seed"] = config.seed;
  j["tolerance"] = config.radius_tolerance;
  return j;
}

Json trial_to_json(const TrialResult& trial) {
  Json j;
  Json omega = Json::object();
  for (const auto& d : trial.omega.descriptors()) omega[d.feature] = d.value;
  j["omega"] = std::move(omega);
  j["expert"] = trial.expert ? Json(*trial.expert) : Json(nullptr);
  j["vc_star"] = trial.vc_star;
  Json per_object = Json::array();
  for (const auto& f : trial.forecasts) {
    Json o;
    o["id"] = to_index(f.object);
    o["touching_size"] = f.touching_size;
    o["vc"] = f.vc;
    o["radius"] = f.radius;
    o["forecast"] = f.forecast;
    if (f.reward) o["reward"] = *f.reward;
    if (f.loss) o["loss"] = *f.loss;
    per_object.push_back(std::move(o));
  }
  j["per_object"] = std::move(per_object);
  if (trial.expert) {
    if (trial.winner) {
      j["winner"] = Json{{"id", to_index(trial.winner->object)}, {"decision", trial.winner->decision}};
    } else {
      j["winner"] = nullptr;
    }
  }
  j["weighted"] = trial.weighted;
  j["weights_degenerate"] = trial.weights_degenerate;
  if (trial.expert) {
    j["regret"] = *trial.regret;
    j["max_rewarded_loss_below_2delta"] = max_rewarded_loss_below_2delta(trial);
  }
  j["consistentized"] = trial.consistentized;
  j["seed"] = trial.seed;
  return j;
}

namespace {

Json ids_to_json(const std::vector<ObjectId>& ids) {
  Json a = Json::array();
  for (auto id : ids) a.push_back(to_index(id));
  return a;
}

}  // namespace

Json localization_to_json(const Localization& loc) {
  Json rounds = Json::array();
  for (const auto& s : loc.history) {
    Json r;
    r["round"] = s.round;
    r["survivors"] = ids_to_json(s.survivors);
    r["radii"] = s.radii;
    r["centers"] = s.centers;
    rounds.push_back(std::move(r));
  }
  Json j;
  j["rounds"] = std::move(rounds);
  j["fore_last"] = ids_to_json(loc.fore_last);
  j["interval"] = Json::array({loc.lo, loc.hi});
  j["stopped_by_tolerance"] = loc.stopped_by_tolerance;
  return j;
}

Json session_to_json(const SessionReport& report) {
  Json j;
  j["config"] = config_to_json(report.config);
  Json trials = Json::array();
  for (const auto& t : report.trials) {
    Json d;
    d["holdout"] = t.trial_index;
    d["expert"] = *t.expert;
    d["vc_star"] = t.vc_star;
    d["reward_sum"] = t.reward_sum();
    d["winner"] = t.winner ? Json(to_index(t.winner->object)) : Json(nullptr);
    d["weighted"] = t.weighted;
    d["weights_degenerate"] = t.weights_degenerate;
    d["regret"] = *t.regret;
    trials.push_back(std::move(d));
  }
  j["trials"] = std::move(trials);

  const auto& m = report.mistakes;
  Json per_object = Json::object();
  for (const auto& [id, n] : m.per_object) per_object[std::to_string(to_index(id))] = n;
  j["mistakes"] = {{"total", m.total},
                   {"per_trial", m.per_trial},
                   {"covered", m.covered},
                   {"per_object", std::move(per_object)},
                   {"mistake_free", ids_to_json(m.mistake_free)}};
  j["approx_predicted"] = report.approx_predicted;
  j["regret"] = {{"mean", report.regret_mean}, {"max", report.regret_max}};
  j["seed"] = report.config.seed;
  return j;
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string trial_to_csv(const TrialResult& trial) {
  std::ostringstream os;
  const bool scored = trial.expert.has_value();
  os << "id,touching_size,vc,radius,forecast" << (scored ? ",reward,loss" : "") << '\n';
  for (const auto& f : trial.forecasts) {
    os << to_index(f.object) << ',' << f.touching_size << ',' << f.vc << ',' << f.radius << ','
       << num(f.forecast);
    if (scored) os << ',' << *f.reward << ',' << num(*f.loss);
    os << '\n';
  }
  return os.str();
}

std::string session_to_csv(const SessionReport& report) {
  std::ostringstream os;
  os << "holdout,expert,vc_star,reward_sum,mistakes,winner,weighted,regret\n";
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    const auto& t = report.trials[i];
    os << t.trial_index << ',' << num(*t.expert) << ',' << t.vc_star << ',' << t.reward_sum() << ','
       << report.mistakes.per_trial[i] << ','
       << (t.winner ? std::to_string(to_index(t.winner->object)) : std::string()) << ','
       << num(t.weighted) << ',' << num(*t.regret) << '\n';
  }
  return os.str();
}

}  // namespace rmp
