// Command-line front end. Talks to the library only through rmpredict.h.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "rmpredict/rmpredict.h"

namespace {

enum Exit { ok = 0, io = 1, usage = 2, domain = 3 };

int exit_code(rmp_status st) {
  switch (st) {
    case RMP_OK: return ok;
    case RMP_E_IO: return io;
    case RMP_E_DOMAIN: return domain;
    case RMP_E_INTERNAL: return domain;
    default: return usage;
  }
}

int fail(rmp_status st) {
  std::cerr << "rmpredict: " << rmp_status_name(st) << ": " << rmp_last_error() << '\n';
  return exit_code(st);
}

// Owns a string returned by the library.
struct Text {
  char* p = nullptr;
  ~Text() { rmp_string_free(p); }
};

struct Flags {
  std::string epsilon = "1";
  unsigned delta = 1;
  double eta = 0.5;
  std::string mode = "exact";
  std::string tie = "lowest";
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  std::string decision;
  std::string output = "json";
  char delimiter = ',';
};

void add_protocol_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--epsilon", f.epsilon, "rough inclusion threshold as p/q")->capture_default_str();
  cmd->add_option("--delta", f.delta, "neighborhood scale")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--eta", f.eta, "radius shrink factor")->capture_default_str();
  cmd->add_option("--mode", f.mode, "component family")->check(CLI::IsMember({"exact", "at_least"}))->capture_default_str();
  cmd->add_option("--tie", f.tie, "winner tie breaking")->check(CLI::IsMember({"random", "lowest"}))->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for random tie breaking")->capture_default_str();
  cmd->add_option("--tolerance", f.tolerance, "radius tolerance for localization")->capture_default_str();
  cmd->add_option("--decision", f.decision, "decision column (default: last)");
  cmd->add_option("--output", f.output, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--delimiter", f.delimiter, "field delimiter")->capture_default_str();
}

rmp_status make_config(const Flags& f, rmp_config& c) {
  rmp_config_init(&c);
  if (auto st = rmp_config_set_epsilon(&c, f.epsilon.c_str()); st != RMP_OK) {
    // A malformed rational is a usage problem for the caller.
    return st == RMP_E_PARSE ? RMP_E_USAGE : st;
  }
  c.delta = f.delta;
  c.eta = f.eta;
  c.mode = f.mode == "at_least" ? RMP_MODE_AT_LEAST : RMP_MODE_EXACT;
  c.tie = f.tie == "random" ? RMP_TIE_RANDOM : RMP_TIE_LOWEST;
  c.seed = f.seed;
  c.radius_tolerance = f.tolerance;
  return RMP_OK;
}

rmp_format format_of(const Flags& f) { return f.output == "csv" ? RMP_FORMAT_CSV : RMP_FORMAT_JSON; }

struct Loaded {
  rmp_system* system = nullptr;
  rmp_omega* omega = nullptr;
  ~Loaded() {
    rmp_omega_free(omega);
    rmp_system_free(system);
  }
};

rmp_status load_system(const std::string& table, const Flags& f, Loaded& l) {
  return rmp_system_load_file(table.c_str(), f.decision.c_str(), f.delimiter, &l.system);
}

// An omega argument naming a file, or holding no '=', is read as a one-row CSV.
rmp_status load_omega(const std::string& omega, const Flags& f, Loaded& l) {
  std::error_code ec;
  if (omega.find('=') == std::string::npos || std::filesystem::is_regular_file(omega, ec)) {
    return rmp_omega_from_file(omega.c_str(), f.delimiter, &l.omega);
  }
  return rmp_omega_from_spec(omega.c_str(), &l.omega);
}

int emit(const Text& t) {
  std::fputs(t.p, stdout);
  return std::fflush(stdout) == 0 ? ok : io;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-mereological decision prediction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rmp_version()));

  Flags flags;
  std::string table;
  std::string omega;
  std::optional<double> expert;

  auto* predict = app.add_subcommand("predict", "forecast the decision of a new object");
  predict->add_option("table", table, "decision table (CSV)")->required();
  predict->add_option("--omega", omega, "new object: f1=v1,f2=v2 or a one-row CSV file")->required();
  predict->add_option("--expert", expert, "expert decision used for rewards and regret");
  add_protocol_flags(predict, flags);

  auto* evaluate = app.add_subcommand("evaluate", "leave-one-out evaluation over the table");
  evaluate->add_option("table", table, "decision table (CSV)")->required();
  add_protocol_flags(evaluate, flags);

  double localize_expert = 0;
  auto* localize = app.add_subcommand("localize", "shrink radii by voting until the decision is localized");
  localize->add_option("table", table, "decision table (CSV)")->required();
  localize->add_option("--omega", omega, "new object: f1=v1,f2=v2 or a one-row CSV file")->required();
  localize->add_option("--expert", localize_expert, "expert decision")->required();
  add_protocol_flags(localize, flags);

  auto* moods = app.add_subcommand("moods", "syllogistic moods");
  moods->require_subcommand(1);
  auto* moods_list = moods->add_subcommand("list", "all 256 moods as CSV");
  std::string expression;
  auto* moods_check = moods->add_subcommand("check", "decide one mood");
  moods_check->add_option("expr", expression, "mood name or expression, e.g. \"Amb & Aam -> Aab\"")->required();

  auto* algebra = app.add_subcommand("algebra", "mereological algebra");
  algebra->require_subcommand(1);
  std::size_t atoms = 4;
  std::size_t universes = 1000;
  std::uint64_t selftest_seed = 0;
  auto* selftest = algebra->add_subcommand("selftest", "run the law suite");
  selftest->add_option("--atoms", atoms, "atoms in the exhaustively checked universe")->capture_default_str();
  selftest->add_option("--universes", universes, "random weighted universes")->capture_default_str();
  selftest->add_option("--seed", selftest_seed, "seed for the random universes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  Text out;
  rmp_status st = RMP_OK;

  if (*predict || *evaluate || *localize) {
    rmp_config cfg;
    if ((st = make_config(flags, cfg)) != RMP_OK) return fail(st);
    Loaded l;
    if ((st = load_system(table, flags, l)) != RMP_OK) return fail(st);
    if (*evaluate) {
      st = rmp_evaluate_loo(l.system, &cfg, format_of(flags), &out.p);
    } else {
      if ((st = load_omega(omega, flags, l)) != RMP_OK) return fail(st);
      if (*predict) {
        st = rmp_predict(l.system, l.omega, expert ? &*expert : nullptr, &cfg, format_of(flags), &out.p);
      } else {
        st = rmp_localize(l.system, l.omega, localize_expert, &cfg, &out.p);
      }
    }
    if (st != RMP_OK) return fail(st);
    return emit(out);
  }

  if (*moods_list) {
    if ((st = rmp_moods_list(&out.p)) != RMP_OK) return fail(st);
    return emit(out);
  }
  if (*moods_check) {
    int valid = 0;
    if ((st = rmp_moods_check(expression.c_str(), &valid, &out.p)) != RMP_OK) return fail(st);
    return emit(out);
  }
  if (*selftest) {
    int passed = 0;
    if ((st = rmp_algebra_selftest(atoms, universes, selftest_seed, &passed, &out.p)) != RMP_OK) {
      return fail(st);
    }
    const int code = emit(out);
    return code != ok ? code : (passed ? ok : domain);
  }
  return usage;
}
