#include "rmpredict/data_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rmpredict/errors.hpp"

namespace rmp {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_real(std::string_view s) {
  double v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || p != last) return std::nullopt;
  return v;
}

void check_unique(const std::vector<std::string>& names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw SchemaError("duplicate column name '" + n + "'");
  }
}

}  // namespace

DecisionSystem::DecisionSystem(std::vector<std::string> features,
                               std::vector<std::vector<std::string>> rows,
                               std::vector<double> decisions, std::string decision_name,
                               std::vector<ObjectId> ids)
    : features_(std::move(features)),
      rows_(std::move(rows)),
      decisions_(std::move(decisions)),
      decision_name_(std::move(decision_name)),
      ids_(std::move(ids)) {
  check_unique(features_);
  if (std::find(features_.begin(), features_.end(), decision_name_) != features_.end()) {
    throw SchemaError("decision column '" + decision_name_ + "' is also a feature");
  }
  if (decisions_.size() != rows_.size()) {
    throw StructureError("decision column has " + std::to_string(decisions_.size()) +
                         " values for " + std::to_string(rows_.size()) + " objects");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != features_.size()) {
      throw StructureError("row " + std::to_string(r) + " has " +
                           std::to_string(rows_[r].size()) + " feature values, expected " +
                           std::to_string(features_.size()));
    }
  }
  if (ids_.empty()) {
    ids_.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) ids_.push_back(ObjectId{r});
  } else if (ids_.size() != rows_.size()) {
    throw StructureError("object id list does not match the number of rows");
  }
}

std::size_t DecisionSystem::row_of(ObjectId id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw LookupError("unknown object id " + std::to_string(to_index(id)));
  return static_cast<std::size_t>(it - ids_.begin());
}

std::optional<std::size_t> DecisionSystem::find_feature(std::string_view name) const {
  const auto it = std::find(features_.begin(), features_.end(), name);
  if (it == features_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - features_.begin());
}

std::size_t DecisionSystem::feature_index(std::string_view name) const {
  if (auto i = find_feature(name)) return *i;
  throw LookupError("unknown feature '" + std::string(name) + "'");
}

DecisionSystem DecisionSystem::without_row(std::size_t row) const {
  auto rows = rows_;
  auto decisions = decisions_;
  auto ids = ids_;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(row));
  decisions.erase(decisions.begin() + static_cast<std::ptrdiff_t>(row));
  ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(row));
  return DecisionSystem(features_, std::move(rows), std::move(decisions), decision_name_,
                        std::move(ids));
}

std::vector<std::string> split_record(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == delimiter) {
      out.push_back(was_quoted ? cur : trim(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field");
  out.push_back(was_quoted ? cur : trim(cur));
  return out;
}

DecisionSystem load_decision_system(std::istream& in, const LoadOptions& options) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    header = split_record(line, options.delimiter);
    break;
  }
  if (header.empty()) throw StructureError("missing header row");
  check_unique(header);

  std::size_t decision_col = header.size() - 1;
  if (!options.decision_column.empty()) {
    const auto it = std::find(header.begin(), header.end(), options.decision_column);
    if (it == header.end()) {
      throw SchemaError("decision column '" + options.decision_column + "' not in header");
    }
    decision_col = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::string> features;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != decision_col) features.push_back(header[c]);
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<double> decisions;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::size_t row = rows.size() + 1;  // data rows count from 1 in messages
    std::vector<std::string> cells;
    try {
      cells = split_record(line, options.delimiter);
    } catch (const ParseError& e) {
      throw ParseError("row " + std::to_string(row) + " (line " + std::to_string(line_no) +
                       "): " + e.what());
    }
    if (cells.size() != header.size()) {
      throw StructureError("row " + std::to_string(row) + " (line " + std::to_string(line_no) +
                           ") has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        throw StructureError("missing value at row " + std::to_string(row) + ", column '" +
                             header[c] + "'");
      }
    }
    const auto d = parse_real(cells[decision_col]);
    if (!d) {
      throw ParseError("non-numeric decision '" + cells[decision_col] + "' at row " +
                       std::to_string(row) + ", column '" + header[decision_col] + "'");
    }
    decisions.push_back(*d);
    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(decision_col));
    rows.push_back(std::move(cells));
  }
  return DecisionSystem(std::move(features), std::move(rows), std::move(decisions),
                        header[decision_col]);
}

DecisionSystem load_decision_system_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_decision_system(in, options);
}

std::vector<ObjectId> indiscernibility_class(const DecisionSystem& system, ObjectId o,
                                             const std::vector<std::string>& features) {
  if (features.empty()) throw DomainError("indiscernibility needs a non-empty feature subset");
  const std::size_t row = system.row_of(o);
  std::vector<std::size_t> cols;
  cols.reserve(features.size());
  for (const auto& f : features) cols.push_back(system.feature_index(f));

  std::vector<ObjectId> out;
  for (std::size_t r = 0; r < system.object_count(); ++r) {
    const bool same = std::all_of(cols.begin(), cols.end(), [&](std::size_t c) {
      return system.value(r, c) == system.value(row, c);
    });
    if (same) out.push_back(system.id(r));
  }
  return out;
}

ConsistencyResult is_consistent(const DecisionSystem& system) {
  std::map<std::vector<std::string>, std::size_t> first_row;
  for (std::size_t r = 0; r < system.object_count(); ++r) {
    const auto [it, inserted] = first_row.emplace(system.row_values(r), r);
    if (!inserted && system.decision(it->second) != system.decision(r)) {
      return {false, std::make_pair(system.id(it->second), system.id(r))};
    }
  }
  return {};
}

DecisionSystem consistentize(const DecisionSystem& system, const std::string& feature_name) {
  const std::string name = feature_name.empty() ? system.decision_name() : feature_name;
  if (system.find_feature(name)) {
    throw SchemaError("feature '" + name + "' already exists; cannot add the decision as a feature");
  }
  auto features = system.features();
  features.push_back(name);
  std::vector<std::vector<std::string>> rows;
  std::vector<double> decisions;
  rows.reserve(system.object_count());
  for (std::size_t r = 0; r < system.object_count(); ++r) {
    auto values = system.row_values(r);
    std::ostringstream token;
    token.precision(17);
    token << system.decision(r);
    values.push_back(token.str());
    rows.push_back(std::move(values));
    decisions.push_back(system.decision(r));
  }
  // When the synthetic feature takes the decision's name, the decision column
  // is renamed to keep d out of F.
  std::string decision_name = system.decision_name();
  if (decision_name == name) decision_name += "*";
  return DecisionSystem(std::move(features), std::move(rows), std::move(decisions),
                        std::move(decision_name), system.ids());
}

NewObject::NewObject(std::vector<Descriptor> descriptors) : descriptors_(std::move(descriptors)) {
  std::set<std::string_view> seen;
  for (const auto& d : descriptors_) {
    if (d.feature.empty()) throw UsageError("descriptor with empty feature name");
    if (!seen.insert(d.feature).second) {
      throw UsageError("feature '" + d.feature + "' given more than once");
    }
  }
}

NewObject NewObject::from_spec(std::string_view spec) {
  std::vector<Descriptor> out;
  for (const auto& item : split_record(spec, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("omega item '" + item + "' is not of the form feature=value");
    }
    out.push_back({trim(item.substr(0, eq)), trim(item.substr(eq + 1))});
  }
  if (out.empty()) throw UsageError("empty omega specification");
  return NewObject(std::move(out));
}

NewObject NewObject::from_row(const DecisionSystem& system, std::size_t row) {
  std::vector<Descriptor> out;
  out.reserve(system.feature_count());
  for (std::size_t f = 0; f < system.feature_count(); ++f) {
    out.push_back({system.features()[f], system.value(row, f)});
  }
  return NewObject(std::move(out));
}

std::vector<std::string> NewObject::missing_features(const DecisionSystem& system) const {
  std::vector<std::string> out;
  for (const auto& f : system.features()) {
    const bool present = std::any_of(descriptors_.begin(), descriptors_.end(),
                                     [&](const Descriptor& d) { return d.feature == f; });
    if (!present) out.push_back(f);
  }
  return out;
}

std::vector<std::string> NewObject::aligned_values(const DecisionSystem& system) const {
  if (descriptors_.size() != system.feature_count()) {
    throw DomainError("new object has " + std::to_string(descriptors_.size()) +
                      " descriptors, system has " + std::to_string(system.feature_count()) +
                      " features");
  }
  std::vector<std::string> values(system.feature_count());
  for (const auto& d : descriptors_) {
    const auto idx = system.find_feature(d.feature);
    if (!idx) throw DomainError("new object feature '" + d.feature + "' is not in the system");
    values[*idx] = d.value;
  }
  return values;
}

}  // namespace rmp
