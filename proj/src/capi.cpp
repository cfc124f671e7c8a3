#include "rmpredict/rmpredict.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "rmpredict/data_model.hpp"
#include "rmpredict/errors.hpp"
#include "rmpredict/mistakes.hpp"
#include "rmpredict/selftest.hpp"
#include "rmpredict/session.hpp"
#include "rmpredict/syllogistic.hpp"

struct rmp_system {
  rmp::DecisionSystem system;
};

struct rmp_omega {
  rmp::NewObject omega;
};

namespace {

thread_local std::string last_error;

rmp_status status_of(rmp::ErrorKind kind) {
  switch (kind) {
    case rmp::ErrorKind::io: return RMP_E_IO;
    case rmp::ErrorKind::parse: return RMP_E_PARSE;
    case rmp::ErrorKind::structure: return RMP_E_STRUCTURE;
    case rmp::ErrorKind::schema: return RMP_E_SCHEMA;
    case rmp::ErrorKind::lookup: return RMP_E_LOOKUP;
    case rmp::ErrorKind::usage: return RMP_E_USAGE;
    case rmp::ErrorKind::domain: return RMP_E_DOMAIN;
  }
  return RMP_E_INTERNAL;
}

template <class F>
rmp_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return RMP_OK;
  } catch (const rmp::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return RMP_E_INTERNAL;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw rmp::UsageError(std::string(what) + " must not be null");
}

rmp::PredictionConfig to_config(const rmp_config* c) {
  rmp::PredictionConfig out;
  if (c == nullptr) return out;
  if (c->epsilon_den == 0) throw rmp::UsageError("epsilon denominator must not be zero");
  out.epsilon = rmp::Rational(c->epsilon_num, c->epsilon_den);
  out.delta = c->delta;
  out.mode = c->mode == RMP_MODE_AT_LEAST ? rmp::vc::Mode::at_least : rmp::vc::Mode::exact;
  out.tie = c->tie == RMP_TIE_RANDOM ? rmp::TieStrategy::random : rmp::TieStrategy::lowest_object_id;
  out.seed = c->seed;
  out.eta = c->eta;
  out.radius_tolerance = c->radius_tolerance;
  out.validate();
  return out;
}

void check_omega(const rmp::DecisionSystem& system, const rmp::NewObject& omega) {
  const auto missing = omega.missing_features(system);
  if (!missing.empty()) throw rmp::UsageError("omega is missing feature '" + missing.front() + "'");
  for (const auto& d : omega.descriptors()) {
    if (!system.find_feature(d.feature)) {
      throw rmp::UsageError("omega names unknown feature '" + d.feature + "'");
    }
  }
}

rmp::LoadOptions load_options(const char* decision_column, char delimiter) {
  rmp::LoadOptions opts;
  opts.delimiter = delimiter == '\0' ? ',' : delimiter;
  if (decision_column) opts.decision_column = decision_column;
  return opts;
}

}  // namespace

extern "C" {

const char* rmp_version(void) { return "0.1.0"; }

const char* rmp_last_error(void) { return last_error.c_str(); }

const char* rmp_status_name(rmp_status status) {
  switch (status) {
    case RMP_OK: return "ok";
    case RMP_E_IO: return "io error";
    case RMP_E_PARSE: return "parse error";
    case RMP_E_STRUCTURE: return "structural error";
    case RMP_E_SCHEMA: return "schema error";
    case RMP_E_LOOKUP: return "lookup error";
    case RMP_E_USAGE: return "usage error";
    case RMP_E_DOMAIN: return "domain error";
    case RMP_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rmp_string_free(char* s) { std::free(s); }

void rmp_config_init(rmp_config* config) {
  if (!config) return;
  const rmp::PredictionConfig d;
  config->epsilon_num = d.epsilon.numerator();
  config->epsilon_den = d.epsilon.denominator();
  config->delta = d.delta;
  config->mode = RMP_MODE_EXACT;
  config->tie = RMP_TIE_LOWEST;
  config->seed = d.seed;
  config->eta = d.eta;
  config->radius_tolerance = d.radius_tolerance;
}

rmp_status rmp_config_set_epsilon(rmp_config* config, const char* rational) {
  return guarded([&] {
    require(config, "config");
    require(rational, "epsilon");
    const auto eps = rmp::parse_rational(rational);
    if (eps < 0 || eps > 1) throw rmp::UsageError("epsilon must lie in [0,1], got " + rmp::to_string(eps));
    config->epsilon_num = eps.numerator();
    config->epsilon_den = eps.denominator();
  });
}

rmp_status rmp_system_load_file(const char* path, const char* decision_column, char delimiter,
                                rmp_system** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    auto sys = rmp::load_decision_system_file(path, load_options(decision_column, delimiter));
    *out = new rmp_system{std::move(sys)};
  });
}

rmp_status rmp_system_load_text(const char* text, const char* decision_column, char delimiter,
                                rmp_system** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    std::istringstream in(text);
    auto sys = rmp::load_decision_system(in, load_options(decision_column, delimiter));
    *out = new rmp_system{std::move(sys)};
  });
}

void rmp_system_free(rmp_system* system) { delete system; }

size_t rmp_system_object_count(const rmp_system* system) {
  return system ? system->system.object_count() : 0;
}

size_t rmp_system_feature_count(const rmp_system* system) {
  return system ? system->system.feature_count() : 0;
}

rmp_status rmp_system_is_consistent(const rmp_system* system, int* consistent, size_t* witness_a,
                                    size_t* witness_b) {
  return guarded([&] {
    require(system, "system");
    require(consistent, "consistent");
    const auto r = rmp::is_consistent(system->system);
    *consistent = r.consistent ? 1 : 0;
    if (r.witness) {
      if (witness_a) *witness_a = rmp::to_index(r.witness->first);
      if (witness_b) *witness_b = rmp::to_index(r.witness->second);
    }
  });
}

rmp_status rmp_omega_from_spec(const char* spec, rmp_omega** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    *out = new rmp_omega{rmp::NewObject::from_spec(spec)};
  });
}

rmp_status rmp_omega_from_file(const char* path, char delimiter, rmp_omega** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    std::ifstream in(path);
    if (!in) throw rmp::IoError(std::string("cannot open '") + path + "'");
    std::string line;
    std::vector<std::vector<std::string>> records;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      records.push_back(rmp::split_record(line, delimiter == '\0' ? ',' : delimiter));
    }
    if (records.size() != 2) {
      throw rmp::UsageError("omega file must hold a header and exactly one row, found " +
                            std::to_string(records.size()) + " records");
    }
    if (records[0].size() != records[1].size()) {
      throw rmp::UsageError("omega file row does not match its header");
    }
    std::vector<rmp::Descriptor> ds;
    for (std::size_t i = 0; i < records[0].size(); ++i) ds.push_back({records[0][i], records[1][i]});
    *out = new rmp_omega{rmp::NewObject(std::move(ds))};
  });
}

void rmp_omega_free(rmp_omega* omega) { delete omega; }

rmp_status rmp_predict(const rmp_system* system, const rmp_omega* omega, const double* expert,
                       const rmp_config* config, rmp_format format, char** out) {
  return guarded([&] {
    require(system, "system");
    require(omega, "omega");
    require(out, "out");
    *out = nullptr;
    const auto cfg = to_config(config);
    check_omega(system->system, omega->omega);
    std::optional<double> e;
    if (expert) e = *expert;
    const auto trial = rmp::run_trial(system->system, omega->omega, e, cfg);
    if (format == RMP_FORMAT_CSV) {
      *out = dup(rmp::trial_to_csv(trial));
    } else {
      rmp::Json j = rmp::trial_to_json(trial);
      j["config"] = rmp::config_to_json(cfg);
      *out = dup(j.dump(2) + "\n");
    }
  });
}

rmp_status rmp_evaluate_loo(const rmp_system* system, const rmp_config* config, rmp_format format,
                            char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = nullptr;
    const auto report = rmp::evaluate_loo(system->system, to_config(config));
    *out = dup(format == RMP_FORMAT_CSV ? rmp::session_to_csv(report)
                                        : rmp::session_to_json(report).dump(2) + "\n");
  });
}

rmp_status rmp_localize(const rmp_system* system, const rmp_omega* omega, double expert,
                        const rmp_config* config, char** out) {
  return guarded([&] {
    require(system, "system");
    require(omega, "omega");
    require(out, "out");
    *out = nullptr;
    const auto cfg = to_config(config);
    check_omega(system->system, omega->omega);
    const auto trial = rmp::run_trial(system->system, omega->omega, expert, cfg);
    const auto loc = rmp::localize(trial, expert, cfg);
    rmp::Json j;
    j["config"] = rmp::config_to_json(cfg);
    j["trial"] = rmp::trial_to_json(trial);
    j["localization"] = rmp::localization_to_json(loc);
    *out = dup(j.dump(2) + "\n");
  });
}

rmp_status rmp_moods_list(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = dup(rmp::syllogistic::moods_csv(rmp::syllogistic::enumerate_moods()));
  });
}

rmp_status rmp_moods_check(const char* expression, int* valid, char** out) {
  namespace syl = rmp::syllogistic;
  const rmp_status st = guarded([&] {
    require(expression, "expression");
    require(valid, "valid");
    require(out, "out");
    *out = nullptr;
    const auto mood = syl::parse_mood(expression);
    const auto verdict = syl::is_valid_mood(mood);
    *valid = verdict.valid ? 1 : 0;
    std::string line = syl::to_string(mood) + ": " + (verdict.valid ? "valid" : "invalid");
    for (const auto& e : syl::catalog()) {
      if (e.mood == mood) line += " [" + std::string(e.name) + "]";
    }
    if (verdict.countermodel) line += "; countermodel " + syl::describe(*verdict.countermodel);
    *out = dup(line + "\n");
  });
  // Malformed mood expressions are usage errors for callers.
  return st == RMP_E_PARSE || st == RMP_E_LOOKUP || st == RMP_E_DOMAIN ? RMP_E_USAGE : st;
}

rmp_status rmp_algebra_selftest(size_t atoms, size_t random_universes, uint64_t seed,
                                int* all_passed, char** summary) {
  return guarded([&] {
    require(all_passed, "all_passed");
    require(summary, "summary");
    *summary = nullptr;
    if (atoms < 1 || atoms > 6) throw rmp::UsageError("exhaustive universe size must be 1..6 atoms");
    rmp::SelftestOptions opts;
    opts.exhaustive_atoms = atoms;
    opts.random_universes = random_universes;
    opts.seed = seed;
    const auto report = rmp::run_algebra_selftest(opts);
    *all_passed = report.all_passed() ? 1 : 0;
    *summary = dup(report.summary());
  });
}

}  // extern "C"
