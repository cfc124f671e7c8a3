#include <doctest.h>

#include <set>

#include "rmpredict/errors.hpp"
#include "rmpredict/predictor.hpp"

using namespace rmp;

namespace {

// Object 0 agrees with omega on both features, object 1 on one.
DecisionSystem worked() { return DecisionSystem({"f1", "f2"}, {{"1", "1"}, {"1", "2"}}, {4, 7}); }

PredictionConfig delta(unsigned d) {
  PredictionConfig c;
  c.delta = d;
  return c;
}

}  // namespace

TEST_CASE("radius") {
  CHECK(radius(2, 2, 4) == 4);
  CHECK(radius(1, 3, 4) == 1);
  CHECK(radius(0, 3, 4) == 0);
  CHECK(radius(0, 0, 4) == 0);
}

TEST_CASE("forecast") {
  const auto s = worked();
  CHECK(forecast(s, 0, 3) == 4.0);
  CHECK(forecast(s, 0, 0) == 4.0);
  CHECK(forecast(s, 0, 1, [](const DecisionSystem&, std::size_t, unsigned) { return 4.5; }) == 4.5);
  CHECK_THROWS_AS(forecast(s, 0, 1, [](const DecisionSystem&, std::size_t, unsigned) { return 5.5; }),
                  DomainError);
}

TEST_CASE("reward") {
  CHECK(reward(4, 1, 5) == 1);
  CHECK(reward(4, 1, 5.5) == 0);
  CHECK(reward(4, 1, 3) == 1);
  CHECK(reward(4, 0, 4) == 1);
}

TEST_CASE("worked trial") {
  const auto t = run_trial(worked(), NewObject::from_spec("f1=1,f2=1"), 5.0, delta(4));
  REQUIRE(t.forecasts.size() == 2);
  CHECK(t.vc_star == 2);
  CHECK(t.forecasts[0].vc == 2);
  CHECK(t.forecasts[1].vc == 1);
  CHECK(t.forecasts[0].radius == 4);
  CHECK(t.forecasts[1].radius == 2);
  CHECK(t.forecasts[0].reward == 1);
  CHECK(t.forecasts[1].reward == 1);
  REQUIRE(t.winner);
  CHECK(to_index(t.winner->object) == 0);
  CHECK(t.weighted == doctest::Approx(5.0).epsilon(1e-12));
  REQUIRE(t.regret);
  CHECK(*t.regret == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(t.reward_sum() == 2);
  CHECK(max_rewarded_loss_below_2delta(t));
}

TEST_CASE("trial without expert") {
  const auto t = run_trial(worked(), NewObject::from_spec("f1=1,f2=1"), std::nullopt, delta(4));
  CHECK_FALSE(t.winner);
  CHECK_FALSE(t.regret);
  CHECK_FALSE(t.forecasts[0].reward);
  CHECK(t.weighted == doctest::Approx(5.0));
}

TEST_CASE("winner selection") {
  auto t = run_trial(worked(), NewObject::from_spec("f1=1,f2=1"), 5.0, delta(4));
  for (auto& f : t.forecasts) f.reward = 0;
  CHECK_FALSE(select_winner(t, delta(4)));

  // Equal losses: expert halfway between two rewarded forecasts.
  const DecisionSystem tie({"f"}, {{"x"}, {"x"}, {"x"}}, {4, 6, 6});
  const auto tt = run_trial(tie, NewObject::from_spec("f=x"), 5.0, delta(2));
  REQUIRE(tt.winner);
  CHECK(to_index(tt.winner->object) == 0);

  auto random = delta(2);
  random.tie = TieStrategy::random;
  std::set<std::size_t> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    random.seed = seed;
    const auto w = run_trial(tie, NewObject::from_spec("f=x"), 5.0, random).winner;
    REQUIRE(w);
    seen.insert(to_index(w->object));
    // Same seed, same winner.
    CHECK(to_index(run_trial(tie, NewObject::from_spec("f=x"), 5.0, random).winner->object) ==
          to_index(w->object));
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("weighted prediction") {
  const DecisionSystem one({"f"}, {{"x"}}, {3.5});
  CHECK(run_trial(one, NewObject::from_spec("f=x"), 1.0, delta(2)).weighted == 3.5);
  CHECK(run_trial(one, NewObject::from_spec("f=x"), 1.0, delta(2)).regret == 0.0);

  const DecisionSystem flat({"f", "g"}, {{"x", "y"}, {"x", "z"}}, {2, 2});
  CHECK(run_trial(flat, NewObject::from_spec("f=x,g=y"), 2.0, delta(2)).weighted == 2.0);

  // No object touches omega: VC* = 0, mean fallback.
  const DecisionSystem far({"f"}, {{"a"}, {"b"}}, {1, 3});
  const auto t = run_trial(far, NewObject::from_spec("f=z"), 2.0, delta(2));
  CHECK(t.vc_star == 0);
  CHECK(t.weights_degenerate);
  CHECK(t.weighted == 2.0);
  CHECK_THROWS_AS(weighted_prediction(t), DomainError);
}

TEST_CASE("weighted prediction stays in the forecast hull") {
  const DecisionSystem s({"f", "g", "h"},
                         {{"1", "1", "1"}, {"1", "2", "1"}, {"2", "2", "1"}, {"1", "1", "3"}},
                         {1, 9, -2, 4});
  for (const auto* spec : {"f=1,g=1,h=1", "f=2,g=2,h=3", "f=1,g=2,h=3"}) {
    const auto t = run_trial(s, NewObject::from_spec(spec), 0.0, delta(3));
    CHECK(t.weighted >= -2.0);
    CHECK(t.weighted <= 9.0);
  }
}

TEST_CASE("trial fixtures and errors") {
  const DecisionSystem s({"f1", "f2"}, {{"0", "0"}, {"1", "0"}, {"1", "2"}}, {1, 2, 3});
  const auto t = run_trial(s, NewObject::from_spec("f1=1,f2=2"), std::nullopt, delta(3));
  CHECK(t.forecasts[0].radius == 0);
  CHECK(t.forecasts[1].radius == 1);
  CHECK(t.forecasts[2].radius == 3);

  const DecisionSystem empty({"f"}, {}, {});
  CHECK_THROWS_AS(run_trial(empty, NewObject::from_spec("f=1"), 1.0, delta(1)), DomainError);

  const DecisionSystem inconsistent({"f"}, {{"x"}, {"x"}}, {1, 2});
  CHECK(run_trial(inconsistent, NewObject::from_spec("f=x"), 1.0, delta(1)).consistentized);
}

TEST_CASE("approximate prediction") {
  const DecisionSystem s({"f"}, {{"x"}, {"y"}}, {1, 5});
  const auto hit = run_trial(s, NewObject::from_spec("f=x"), 1.0, delta(1));
  const auto miss = run_trial(s, NewObject::from_spec("f=x"), 3.0, delta(1));
  CHECK(hit.reward_sum() == 1);
  CHECK(miss.reward_sum() == 0);
  CHECK(approx_predicted({hit}));
  CHECK(approx_predicted({hit, hit}));
  CHECK_FALSE(approx_predicted({hit, miss}));
  CHECK_THROWS_AS(approx_predicted({}), DomainError);
}

TEST_CASE("config validation") {
  PredictionConfig c;
  c.delta = 0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = {};
  c.eta = 1.0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = {};
  c.epsilon = Rational(5, 4);
  CHECK_THROWS_AS(c.validate(), UsageError);
  CHECK(parse_tie_strategy("random") == TieStrategy::random);
  CHECK_THROWS_AS(parse_tie_strategy("coin"), UsageError);
}
