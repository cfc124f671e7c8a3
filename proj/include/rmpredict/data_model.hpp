#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmp {

// Objects keep the id they were loaded with (the 0-based row index), even after
// rows are removed, so leave-one-out trials can report against the full table.
enum class ObjectId : std::size_t {};

inline std::size_t to_index(ObjectId id) { return static_cast<std::size_t>(id); }

struct Descriptor {
  std::string feature;
  std::string value;

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

// A decision system (O, F, d, V, V_d). Feature values are opaque tokens
// compared by equality; decisions are reals.
class DecisionSystem {
 public:
  DecisionSystem(std::vector<std::string> features, std::vector<std::vector<std::string>> rows,
                 std::vector<double> decisions, std::string decision_name = "d",
                 std::vector<ObjectId> ids = {});

  std::size_t object_count() const { return rows_.size(); }
  std::size_t feature_count() const { return features_.size(); }
  bool empty() const { return rows_.empty(); }

  const std::vector<std::string>& features() const { return features_; }
  const std::string& decision_name() const { return decision_name_; }

  // Row-level access; `row` is a position in this system, not an ObjectId.
  ObjectId id(std::size_t row) const { return ids_[row]; }
  const std::vector<std::string>& row_values(std::size_t row) const { return rows_[row]; }
  const std::string& value(std::size_t row, std::size_t feature) const { return rows_[row][feature]; }
  double decision(std::size_t row) const { return decisions_[row]; }

  const std::vector<ObjectId>& ids() const { return ids_; }

  // Throws LookupError for unknown ids / names.
  std::size_t row_of(ObjectId id) const;
  std::size_t feature_index(std::string_view name) const;
  std::optional<std::size_t> find_feature(std::string_view name) const;

  // Copy of the system without the given row.
  DecisionSystem without_row(std::size_t row) const;

 private:
  std::vector<std::string> features_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<double> decisions_;
  std::string decision_name_;
  std::vector<ObjectId> ids_;
};

struct LoadOptions {
  char delimiter = ',';
  // Empty selects the last column.
  std::string decision_column;
};

DecisionSystem load_decision_system(std::istream& in, const LoadOptions& options = {});
DecisionSystem load_decision_system_file(const std::string& path, const LoadOptions& options = {});

// Splits one delimiter-separated record. Double quotes group a field and "" is
// a literal quote inside a quoted field.
std::vector<std::string> split_record(std::string_view line, char delimiter);

std::vector<ObjectId> indiscernibility_class(const DecisionSystem& system, ObjectId o,
                                             const std::vector<std::string>& features);

struct ConsistencyResult {
  bool consistent = true;
  // Two objects with identical feature values and different decisions.
  std::optional<std::pair<ObjectId, ObjectId>> witness;
};

ConsistencyResult is_consistent(const DecisionSystem& system);

// Adds the decision as a discrete feature (named after the decision column
// unless `feature_name` is given), which refines every indiscernibility class
// into one decision class. Throws SchemaError when the name is taken.
DecisionSystem consistentize(const DecisionSystem& system, const std::string& feature_name = {});

// A new object: exactly one descriptor per feature.
class NewObject {
 public:
  explicit NewObject(std::vector<Descriptor> descriptors);

  // "f1=1,f2=2"
  static NewObject from_spec(std::string_view spec);
  // Feature values of an existing row.
  static NewObject from_row(const DecisionSystem& system, std::size_t row);

  const std::vector<Descriptor>& descriptors() const { return descriptors_; }
  std::size_t size() const { return descriptors_.size(); }

  // Features of `system` with no descriptor here, in system order.
  std::vector<std::string> missing_features(const DecisionSystem& system) const;

  // Values reordered to match the system's features. Throws DomainError when
  // the feature sets differ.
  std::vector<std::string> aligned_values(const DecisionSystem& system) const;

 private:
  std::vector<Descriptor> descriptors_;
};

}  // namespace rmp
