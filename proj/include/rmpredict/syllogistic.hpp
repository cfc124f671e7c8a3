#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rmp::syllogistic {

enum class Quantifier : char { A = 'A', I = 'I', E = 'E', O = 'O' };

inline constexpr std::array<Quantifier, 4> all_quantifiers{Quantifier::A, Quantifier::I,
                                                           Quantifier::E, Quantifier::O};

struct Premiss {
  Quantifier quantifier;
  char subject;
  char predicate;

  friend bool operator==(const Premiss&, const Premiss&) = default;
};

// Compact "Aab" form.
std::string to_string(const Premiss& p);

// Accepts "Aab" or the English forms "All a is b", "Some a is b", "No a is b",
// "Some a is not b" ("are" is accepted for "is"; case-insensitive keywords).
// Throws ParseError with the offending position.
Premiss parse_premiss(std::string_view text);

// Middle-term placements: figure 1 = (mb, am), 2 = (bm, am), 3 = (mb, ma),
// 4 = (bm, ma). The first premiss links m with b, the second a with m.
struct Mood {
  Premiss premiss1;
  Premiss premiss2;
  Premiss conclusion;

  // 1..4, or 0 if the premisses do not follow the {a, b, m} scheme.
  int figure() const;
  friend bool operator==(const Mood&, const Mood&) = default;
};

// Throws DomainError unless the mood uses exactly terms a, b, m with
// conclusion (a, b), m in both premisses, a and b in exactly one each.
void validate(const Mood& mood);

std::string to_string(const Mood& mood);

// "Amb & Aam -> Aab", "Amb ∧ Aam ⊃ Aab", "Amb, Aam |- Aab", or a catalog
// name. Any three single-letter terms are accepted and relabelled: the
// conclusion's subject becomes a, its predicate b, the shared term m; the
// premiss containing b is placed first. Throws ParseError / UsageError.
Mood parse_mood(std::string_view text);

// Assignment of the three terms to sets of the 7 atomic Venn cells.
struct EulerModel {
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  std::uint8_t m = 0;

  std::uint8_t set_of(char term) const;
};

inline constexpr unsigned cell_count = 7;

// "a={1,3} b={2} m={1,2,3}" with cells numbered 1..7.
std::string describe(const EulerModel& model);

// Throws DomainError for unassigned terms or empty sets (existential import).
bool evaluate_premiss(const Premiss& p, const EulerModel& model);

struct Validity {
  bool valid = false;
  std::optional<EulerModel> countermodel;
};

// Exhaustive over all 127^3 models with non-empty terms.
Validity is_valid_mood(const Mood& mood);

// True iff some model satisfies every premiss in the list.
std::optional<EulerModel> find_model(const std::vector<Premiss>& premisses);

struct CatalogEntry {
  std::string_view label;  // e.g. "M4.8"
  std::string_view name;   // e.g. "Bocardo"
  Mood mood;
  // The negated form listed with the entry (premisses and contradictory conclusion).
  Premiss negation;
};

const std::vector<CatalogEntry>& catalog();

// Case-insensitive; throws LookupError.
const CatalogEntry& lookup_mood(std::string_view name);

struct MoodRow {
  Mood mood;
  std::optional<std::string_view> name;
  bool valid = false;
};

// All 256 moods, ordered by figure, then premiss1, premiss2, conclusion
// quantifier in A, I, E, O order.
std::vector<MoodRow> enumerate_moods();

// CSV: figure,premiss1,premiss2,conclusion,valid,name
std::string moods_csv(const std::vector<MoodRow>& rows);

}  // namespace rmp::syllogistic
