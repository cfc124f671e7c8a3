#include <doctest.h>

#include <sstream>

#include "rmpredict/data_model.hpp"
#include "rmpredict/errors.hpp"

using namespace rmp;

namespace {

DecisionSystem parse(const std::string& text, LoadOptions opts = {}) {
  std::istringstream in(text);
  return load_decision_system(in, opts);
}

std::vector<std::size_t> idx(const std::vector<ObjectId>& ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) out.push_back(to_index(id));
  return out;
}

}  // namespace

TEST_CASE("load: header and decision column") {
  LoadOptions opts;
  opts.decision_column = "d";
  const auto s = parse("f1,f2,d\n1,1,0\n1,2,1\n2,1,0.5\n", opts);
  CHECK(s.object_count() == 3);
  CHECK(s.features() == std::vector<std::string>{"f1", "f2"});
  CHECK(s.decision(2) == doctest::Approx(0.5));
}

TEST_CASE("load: decision column in the middle") {
  LoadOptions opts;
  opts.decision_column = "d";
  const auto s = parse("f1,d,f2\na,3,b\n", opts);
  CHECK(s.features() == std::vector<std::string>{"f1", "f2"});
  CHECK(s.value(0, 1) == "b");
  CHECK(s.decision(0) == 3.0);
}

TEST_CASE("load: decisions of the three-row fixture") {
  const auto s = parse("f1,f2,d\n1,1,0.0\n1,1,1.0\n2,1,0.0\n");
  CHECK(s.decision(0) == 0.0);
  CHECK(s.decision(1) == 1.0);
  CHECK(s.decision(2) == 0.0);
}

TEST_CASE("load: short row is a structural error naming the row") {
  try {
    parse("f1,f2,d\n1,1,0\n1,2\n");
    FAIL("expected a structural error");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
}

TEST_CASE("load: malformed input") {
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("f1,d\n1,abc\n"), ParseError);
  CHECK_THROWS_AS(parse("f1,f1,d\n1,1,0\n"), SchemaError);
  LoadOptions opts;
  opts.decision_column = "nope";
  CHECK_THROWS_AS(parse("f1,d\n1,0\n", opts), Error);
  CHECK_THROWS_AS(load_decision_system_file("/nonexistent/table.csv"), IoError);
}

TEST_CASE("split_record: quotes") {
  CHECK(split_record(R"(a,"b,c",d)", ',') == std::vector<std::string>{"a", "b,c", "d"});
  CHECK(split_record(R"("x ""y""",z)", ',') == std::vector<std::string>{"x \"y\"", "z"});
  CHECK(split_record("a;b", ';') == std::vector<std::string>{"a", "b"});
}

TEST_CASE("indiscernibility classes") {
  const DecisionSystem s({"f1", "f2"}, {{"1", "1"}, {"1", "2"}, {"1", "1"}}, {0, 0, 0});
  CHECK(idx(indiscernibility_class(s, ObjectId{0}, {"f1"})) == std::vector<std::size_t>{0, 1, 2});
  CHECK(idx(indiscernibility_class(s, ObjectId{0}, {"f1", "f2"})) == std::vector<std::size_t>{0, 2});

  const DecisionSystem one({"f"}, {{"x"}}, {1});
  CHECK(idx(indiscernibility_class(one, ObjectId{0}, {"f"})) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(indiscernibility_class(s, ObjectId{0}, {"zz"}), LookupError);
}

TEST_CASE("consistency") {
  const DecisionSystem bad({"f1", "f2"}, {{"1", "1"}, {"1", "1"}}, {0, 1});
  const auto r = is_consistent(bad);
  CHECK_FALSE(r.consistent);
  REQUIRE(r.witness);
  CHECK(to_index(r.witness->first) == 0);
  CHECK(to_index(r.witness->second) == 1);

  CHECK(is_consistent(DecisionSystem({"f1", "f2"}, {{"1", "1"}, {"2", "1"}}, {0, 1})).consistent);
  CHECK(is_consistent(DecisionSystem({"f1", "f2"}, {{"1", "1"}, {"1", "1"}}, {0, 0})).consistent);
}

TEST_CASE("consistentize") {
  const DecisionSystem bad({"f1", "f2"}, {{"1", "1"}, {"1", "1"}}, {0, 1});
  const auto fixed = consistentize(bad);
  CHECK(fixed.feature_count() == 3);
  CHECK(is_consistent(fixed).consistent);

  const DecisionSystem good({"f1"}, {{"1"}, {"2"}}, {0, 1});
  CHECK(is_consistent(consistentize(good)).consistent);

  CHECK_THROWS_AS(consistentize(bad, "f1"), SchemaError);
}

TEST_CASE("without_row keeps ids") {
  const DecisionSystem s({"f"}, {{"a"}, {"b"}, {"c"}}, {1, 2, 3});
  const auto rest = s.without_row(1);
  CHECK(rest.object_count() == 2);
  CHECK(to_index(rest.id(1)) == 2);
  CHECK(rest.row_of(ObjectId{2}) == 1);
  CHECK_THROWS_AS(rest.row_of(ObjectId{1}), LookupError);
}

TEST_CASE("new object") {
  const DecisionSystem s({"f1", "f2"}, {{"1", "2"}}, {0});
  const auto w = NewObject::from_spec("f2=2, f1=1");
  CHECK(w.aligned_values(s) == std::vector<std::string>{"1", "2"});
  CHECK(NewObject::from_spec("f1=1").missing_features(s) == std::vector<std::string>{"f2"});
  CHECK_THROWS_AS(NewObject::from_spec("f1=1").aligned_values(s), DomainError);
  CHECK_THROWS_AS(NewObject::from_spec("f1"), Error);
  CHECK_THROWS_AS(NewObject::from_spec("f1=1,f1=2"), Error);
  CHECK(NewObject::from_row(s, 0).aligned_values(s) == s.row_values(0));
}
