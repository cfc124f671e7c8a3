#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "rmpredict/errors.hpp"
#include "rmpredict/syllogistic.hpp"

using namespace rmp::syllogistic;

namespace {

std::string compact(const Premiss& p) { return to_string(p); }

}  // namespace

TEST_CASE("premiss parsing") {
  CHECK(parse_premiss("Aab") == Premiss{Quantifier::A, 'a', 'b'});
  CHECK(parse_premiss("Some a is not b") == Premiss{Quantifier::O, 'a', 'b'});
  CHECK(parse_premiss("All m is b") == Premiss{Quantifier::A, 'm', 'b'});
  CHECK(parse_premiss("No a is m") == Premiss{Quantifier::E, 'a', 'm'});
  CHECK(parse_premiss("Some b is m") == Premiss{Quantifier::I, 'b', 'm'});
  CHECK_THROWS_AS(parse_premiss("Xab"), rmp::ParseError);
  CHECK_THROWS_AS(parse_premiss("Aa"), rmp::ParseError);
}

TEST_CASE("premiss evaluation") {
  CHECK(evaluate_premiss(parse_premiss("Aab"), EulerModel{0b001, 0b011, 0b100}));
  CHECK(evaluate_premiss(parse_premiss("Eab"), EulerModel{0b001, 0b010, 0b100}));
  for (unsigned s = 1; s < 128; ++s) {
    CHECK(evaluate_premiss(parse_premiss("Iaa"), EulerModel{static_cast<std::uint8_t>(s), 1, 1}));
  }
}

TEST_CASE("mood decisions") {
  CHECK(is_valid_mood(parse_mood("Amb & Aam -> Aab")).valid);
  CHECK(is_valid_mood(parse_mood("Amb & Ima -> Iab")).valid);

  // Conclusion Iac: a stays a, c becomes b, the middle b becomes m.
  const auto f1 = parse_mood("Acb & Aab -> Iac");
  CHECK(to_string(f1) == "Abm & Aam -> Iab");
  const auto v1 = is_valid_mood(f1);
  CHECK_FALSE(v1.valid);
  REQUIRE(v1.countermodel);
  const auto& cm = *v1.countermodel;
  CHECK((cm.a & cm.b) == 0);
  CHECK((cm.a & ~cm.m) == 0);
  CHECK((cm.b & ~cm.m) == 0);

  const auto f2 = parse_mood("Ecb & Eab -> Iac");
  CHECK(to_string(f2) == "Ebm & Eam -> Iab");
  CHECK_FALSE(is_valid_mood(f2).valid);

  CHECK_THROWS_AS(parse_mood("Aab & Abc -> Aab"), rmp::Error);
  CHECK_THROWS_AS(parse_mood("nonsense"), rmp::Error);
}

TEST_CASE("countermodels falsify the mood") {
  for (const auto& row : enumerate_moods()) {
    const auto v = is_valid_mood(row.mood);
    if (v.valid) continue;
    REQUIRE(v.countermodel);
    CHECK(evaluate_premiss(row.mood.premiss1, *v.countermodel));
    CHECK(evaluate_premiss(row.mood.premiss2, *v.countermodel));
    CHECK_FALSE(evaluate_premiss(row.mood.conclusion, *v.countermodel));
  }
}

TEST_CASE("all 256 moods agree with the region oracle") {
  const auto rows = enumerate_moods();
  CHECK(rows.size() == 256);
  std::size_t valid = 0;
  for (const auto& row : rows) {
    const bool expected = oracle::valid_mood(compact(row.mood.premiss1), compact(row.mood.premiss2),
                                             compact(row.mood.conclusion));
    INFO(to_string(row.mood));
    CHECK(row.valid == expected);
    valid += row.valid;
  }
  CHECK(valid == 24);
}

TEST_CASE("valid moods by conclusion") {
  std::set<std::string> e_names;
  std::set<std::string> a_names;
  for (const auto& row : enumerate_moods()) {
    if (!row.valid) continue;
    REQUIRE(row.name);
    if (row.mood.conclusion.quantifier == Quantifier::E) e_names.insert(std::string(*row.name));
    if (row.mood.conclusion.quantifier == Quantifier::A) a_names.insert(std::string(*row.name));
  }
  CHECK(e_names == std::set<std::string>{"Celarent", "Cesare", "Camestres", "Calemes"});
  CHECK(a_names == std::set<std::string>{"Barbara"});
}

TEST_CASE("catalog lookup") {
  CHECK(to_string(lookup_mood("Barbara").mood) == "Amb & Aam -> Aab");
  CHECK(to_string(lookup_mood("Bocardo").mood) == "Omb & Ama -> Oab");
  CHECK(to_string(lookup_mood("celaront").mood) == "Emb & Aam -> Oab");
  CHECK(lookup_mood("Camelop").label == "M4.10");
  CHECK_THROWS_AS(lookup_mood("Nope"), rmp::LookupError);
  CHECK(catalog().size() == 24);
  for (const auto& e : oracle::catalog24()) {
    INFO(e.name);
    const auto& entry = lookup_mood(e.name);
    CHECK(compact(entry.mood.premiss1) == e.major);
    CHECK(compact(entry.mood.premiss2) == e.minor);
    CHECK(compact(entry.mood.conclusion) == e.conclusion);
  }
}

TEST_CASE("moods csv") {
  const auto csv = moods_csv(enumerate_moods());
  CHECK(csv.rfind("figure,premiss1,premiss2,conclusion,valid,name\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
  CHECK(csv.find("1,Amb,Aam,Aab,true,Barbara\n") != std::string::npos);
}
