#include "rmpredict/syllogistic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rmpredict/errors.hpp"

namespace rmp::syllogistic {
namespace {

constexpr std::uint8_t all_cells = (1u << cell_count) - 1;

bool is_quantifier(char c) { return c == 'A' || c == 'I' || c == 'E' || c == 'O'; }

bool holds(Quantifier q, std::uint8_t s, std::uint8_t p) {
  switch (q) {
    case Quantifier::A: return (s & ~p) == 0;
    case Quantifier::I: return (s & p) != 0;
    case Quantifier::E: return (s & p) == 0;
    case Quantifier::O: return (s & ~p) != 0;
  }
  return false;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({std::string(text.substr(start, i - start)), start});
  }
  return out;
}

char term_token(const Token& t) {
  if (t.text.size() != 1 || !std::isalpha(static_cast<unsigned char>(t.text[0]))) {
    throw ParseError("expected a single-letter term at position " + std::to_string(t.pos) +
                     ", got '" + t.text + "'");
  }
  return t.text[0];
}

Premiss parse_english(const std::vector<Token>& tokens, std::string_view text) {
  const auto kw = lower(tokens[0].text);
  const auto expect_copula = [&](std::size_t i) {
    if (i >= tokens.size()) {
      throw ParseError("premiss '" + std::string(text) + "' ends early at position " +
                       std::to_string(text.size()));
    }
    const auto c = lower(tokens[i].text);
    if (c != "is" && c != "are") {
      throw ParseError("expected 'is' at position " + std::to_string(tokens[i].pos) + ", got '" +
                       tokens[i].text + "'");
    }
  };
  const auto need = [&](std::size_t n) {
    if (tokens.size() < n) {
      throw ParseError("premiss '" + std::string(text) + "' ends early at position " +
                       std::to_string(text.size()));
    }
    if (tokens.size() > n) {
      throw ParseError("unexpected '" + tokens[n].text + "' at position " +
                       std::to_string(tokens[n].pos));
    }
  };

  Quantifier q;
  if (kw == "all" || kw == "no") {
    q = kw == "all" ? Quantifier::A : Quantifier::E;
    need(4);
    expect_copula(2);
    return {q, term_token(tokens[1]), term_token(tokens[3])};
  }
  if (kw == "some") {
    if (tokens.size() >= 4 && lower(tokens[3].text) == "not") {
      need(5);
      expect_copula(2);
      return {Quantifier::O, term_token(tokens[1]), term_token(tokens[4])};
    }
    need(4);
    expect_copula(2);
    return {Quantifier::I, term_token(tokens[1]), term_token(tokens[3])};
  }
  throw ParseError("unknown quantifier '" + tokens[0].text + "' at position " +
                   std::to_string(tokens[0].pos));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on the first matching separator from the list.
std::vector<std::string> split_any(const std::string& text, const std::vector<std::string>& seps) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    bool hit = false;
    for (const auto& sep : seps) {
      if (text.compare(i, sep.size(), sep) == 0) {
        parts.push_back(text.substr(start, i - start));
        i += sep.size();
        start = i;
        hit = true;
        break;
      }
    }
    if (!hit) ++i;
  }
  parts.push_back(text.substr(start));
  return parts;
}

Premiss P(Quantifier q, char s, char p) { return {q, s, p}; }

constexpr auto A = Quantifier::A;
constexpr auto I = Quantifier::I;
constexpr auto E = Quantifier::E;
constexpr auto O = Quantifier::O;

std::vector<CatalogEntry> build_catalog() {
  const auto aab = P(A, 'a', 'b');
  const auto iab = P(I, 'a', 'b');
  const auto eab = P(E, 'a', 'b');
  const auto oab = P(O, 'a', 'b');
  const auto eba = P(E, 'b', 'a');
  return {
      {"M1.1", "Barbara", {P(A, 'm', 'b'), P(A, 'a', 'm'), aab}, oab},
      {"M2.1", "Datisi", {P(A, 'm', 'b'), P(I, 'm', 'a'), iab}, eab},
      {"M2.2", "Barbari", {P(A, 'm', 'b'), P(A, 'a', 'm'), iab}, eab},
      {"M2.3", "Darii", {P(A, 'm', 'b'), P(I, 'a', 'm'), iab}, eab},
      {"M2.4", "Darapti", {P(A, 'm', 'b'), P(A, 'm', 'a'), iab}, eba},
      {"M2.5", "Disamis", {P(I, 'm', 'b'), P(A, 'm', 'a'), iab}, eba},
      {"M2.6", "Bamalip", {P(A, 'b', 'm'), P(A, 'm', 'a'), iab}, eba},
      {"M2.7", "Dimatis", {P(I, 'b', 'm'), P(A, 'm', 'a'), iab}, eba},
      {"M3.1", "Celarent", {P(E, 'm', 'b'), P(A, 'a', 'm'), eab}, iab},
      {"M3.2", "Cesare", {P(E, 'b', 'm'), P(A, 'a', 'm'), eab}, iab},
      {"M3.3", "Camestres", {P(A, 'b', 'm'), P(E, 'a', 'm'), eab}, iab},
      {"M3.4", "Calemes", {P(A, 'b', 'm'), P(E, 'm', 'a'), eab}, iab},
      {"M4.1", "Celaront", {P(E, 'm', 'b'), P(A, 'a', 'm'), oab}, aab},
      {"M4.2", "Ferio", {P(E, 'm', 'b'), P(I, 'a', 'm'), oab}, aab},
      {"M4.3", "Cesaro", {P(E, 'b', 'm'), P(A, 'a', 'm'), oab}, aab},
      {"M4.4", "Camestrop", {P(A, 'b', 'm'), P(E, 'a', 'm'), oab}, aab},
      {"M4.5", "Festino", {P(E, 'b', 'm'), P(I, 'a', 'm'), oab}, aab},
      {"M4.6", "Baroco", {P(A, 'b', 'm'), P(O, 'a', 'm'), oab}, aab},
      {"M4.7", "Felapton", {P(E, 'm', 'b'), P(A, 'm', 'a'), oab}, aab},
      {"M4.8", "Bocardo", {P(O, 'm', 'b'), P(A, 'm', 'a'), oab}, aab},
      {"M4.9", "Ferison", {P(E, 'm', 'b'), P(I, 'm', 'a'), oab}, aab},
      {"M4.10", "Camelop", {P(A, 'b', 'm'), P(E, 'm', 'a'), oab}, aab},
      {"M4.11", "Fesapo", {P(E, 'b', 'm'), P(A, 'm', 'a'), oab}, aab},
      {"M4.12", "Fresison", {P(E, 'b', 'm'), P(I, 'm', 'a'), oab}, aab},
  };
}

std::string cells_to_string(std::uint8_t s) {
  std::string out = "{";
  bool first = true;
  for (unsigned c = 0; c < cell_count; ++c) {
    if (s & (1u << c)) {
      if (!first) out += ',';
      out += std::to_string(c + 1);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::string to_string(const Premiss& p) {
  return std::string{static_cast<char>(p.quantifier), p.subject, p.predicate};
}

Premiss parse_premiss(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty premiss at position 0");
  if (tokens.size() == 1) {
    const auto& t = tokens[0];
    if (t.text.size() != 3) {
      throw ParseError("expected compact premiss like 'Aab' at position " + std::to_string(t.pos) +
                       ", got '" + t.text + "'");
    }
    if (!is_quantifier(t.text[0])) {
      throw ParseError("unknown quantifier '" + std::string(1, t.text[0]) + "' at position " +
                       std::to_string(t.pos));
    }
    for (std::size_t i = 1; i < 3; ++i) {
      if (!std::isalpha(static_cast<unsigned char>(t.text[i]))) {
        throw ParseError("expected a term letter at position " + std::to_string(t.pos + i));
      }
    }
    return {static_cast<Quantifier>(t.text[0]), t.text[1], t.text[2]};
  }
  return parse_english(tokens, text);
}

int Mood::figure() const {
  const bool mb = premiss1.subject == 'm' && premiss1.predicate == 'b';
  const bool bm = premiss1.subject == 'b' && premiss1.predicate == 'm';
  const bool am = premiss2.subject == 'a' && premiss2.predicate == 'm';
  const bool ma = premiss2.subject == 'm' && premiss2.predicate == 'a';
  if (mb && am) return 1;
  if (bm && am) return 2;
  if (mb && ma) return 3;
  if (bm && ma) return 4;
  return 0;
}

void validate(const Mood& mood) {
  if (mood.conclusion.subject != 'a' || mood.conclusion.predicate != 'b') {
    throw DomainError("conclusion of " + to_string(mood) + " must be about (a, b)");
  }
  if (mood.figure() == 0) {
    throw DomainError("premisses of " + to_string(mood) +
                      " must link m with b (first) and a with m (second)");
  }
}

std::string to_string(const Mood& mood) {
  return to_string(mood.premiss1) + " & " + to_string(mood.premiss2) + " -> " +
         to_string(mood.conclusion);
}

Mood parse_mood(std::string_view text) {
  const std::string trimmed = trim(text);
  const bool word = !trimmed.empty() && std::all_of(trimmed.begin(), trimmed.end(), [](unsigned char c) {
    return std::isalpha(c);
  });
  if (word && trimmed.size() > 3) return lookup_mood(trimmed).mood;

  const auto sides = split_any(trimmed, {"->", "=>", "|-", "\xE2\x8A\x83" /* ⊃ */, "\xE2\x8A\xA2" /* ⊢ */});
  if (sides.size() != 2) throw ParseError("expected 'premiss & premiss -> conclusion' in '" + trimmed + "'");
  auto premisses = split_any(sides[0], {"&", ",", "\xE2\x88\xA7" /* ∧ */, " and "});
  premisses.erase(std::remove_if(premisses.begin(), premisses.end(),
                                 [](const std::string& s) { return trim(s).empty(); }),
                  premisses.end());
  if (premisses.size() != 2) {
    throw ParseError("expected exactly two premisses in '" + trimmed + "'");
  }
  const Premiss p1 = parse_premiss(premisses[0]);
  const Premiss p2 = parse_premiss(premisses[1]);
  const Premiss c = parse_premiss(sides[1]);

  const char s = c.subject;
  const char p = c.predicate;
  const auto terms_of = [](const Premiss& x) { return std::pair{x.subject, x.predicate}; };
  const auto involves = [](const Premiss& x, char t) { return x.subject == t || x.predicate == t; };
  if (s == p) throw UsageError("conclusion must relate two distinct terms");

  // Premiss with the conclusion's predicate goes first.
  const Premiss* major = involves(p1, p) ? &p1 : &p2;
  const Premiss* minor = major == &p1 ? &p2 : &p1;
  const auto [mj_s, mj_p] = terms_of(*major);
  const char middle = mj_s == p ? mj_p : mj_s;
  const bool ok = involves(*major, p) && !involves(*major, s) && middle != p && middle != s &&
                  involves(*minor, s) && involves(*minor, middle) && !involves(*minor, p);
  if (!ok) {
    throw UsageError("'" + trimmed + "' is not a syllogistic mood over three terms");
  }
  const auto relabel = [&](char t) { return t == s ? 'a' : t == p ? 'b' : 'm'; };
  const auto map = [&](const Premiss& x) {
    return Premiss{x.quantifier, relabel(x.subject), relabel(x.predicate)};
  };
  Mood mood{map(*major), map(*minor), map(c)};
  validate(mood);
  return mood;
}

std::uint8_t EulerModel::set_of(char term) const {
  switch (term) {
    case 'a': return a;
    case 'b': return b;
    case 'm': return m;
    default: throw DomainError(std::string("term '") + term + "' is not assigned in the model");
  }
}

bool evaluate_premiss(const Premiss& p, const EulerModel& model) {
  const auto s = model.set_of(p.subject);
  const auto t = model.set_of(p.predicate);
  if (s == 0 || t == 0) throw DomainError("terms must denote non-empty sets");
  return holds(p.quantifier, s, t);
}

std::optional<EulerModel> find_model(const std::vector<Premiss>& premisses) {
  EulerModel model;
  for (unsigned a = 1; a <= all_cells; ++a) {
    model.a = static_cast<std::uint8_t>(a);
    for (unsigned b = 1; b <= all_cells; ++b) {
      model.b = static_cast<std::uint8_t>(b);
      for (unsigned m = 1; m <= all_cells; ++m) {
        model.m = static_cast<std::uint8_t>(m);
        const bool all = std::all_of(premisses.begin(), premisses.end(), [&](const Premiss& p) {
          return holds(p.quantifier, model.set_of(p.subject), model.set_of(p.predicate));
        });
        if (all) return model;
      }
    }
  }
  return std::nullopt;
}

Validity is_valid_mood(const Mood& mood) {
  validate(mood);
  Premiss negated = mood.conclusion;
  switch (negated.quantifier) {
    case Quantifier::A: negated.quantifier = Quantifier::O; break;
    case Quantifier::O: negated.quantifier = Quantifier::A; break;
    case Quantifier::I: negated.quantifier = Quantifier::E; break;
    case Quantifier::E: negated.quantifier = Quantifier::I; break;
  }
  if (auto model = find_model({mood.premiss1, mood.premiss2, negated})) return {false, model};
  return {true, std::nullopt};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& lookup_mood(std::string_view name) {
  const auto key = lower(trim(name));
  for (const auto& e : catalog()) {
    if (lower(e.name) == key) return e;
  }
  throw LookupError("unknown mood name '" + std::string(name) + "'");
}

std::vector<MoodRow> enumerate_moods() {
  struct Placement {
    char s1, p1, s2, p2;
  };
  constexpr Placement figures[4] = {
      {'m', 'b', 'a', 'm'}, {'b', 'm', 'a', 'm'}, {'m', 'b', 'm', 'a'}, {'b', 'm', 'm', 'a'}};
  std::vector<MoodRow> rows;
  rows.reserve(256);
  for (const auto& f : figures)
    for (auto x : all_quantifiers)
      for (auto y : all_quantifiers)
        for (auto z : all_quantifiers) {
          MoodRow row;
          row.mood = Mood{{x, f.s1, f.p1}, {y, f.s2, f.p2}, {z, 'a', 'b'}};
          row.valid = is_valid_mood(row.mood).valid;
          for (const auto& e : catalog()) {
            if (e.mood == row.mood) row.name = e.name;
          }
          rows.push_back(row);
        }
  return rows;
}

std::string moods_csv(const std::vector<MoodRow>& rows) {
  std::ostringstream os;
  os << "figure,premiss1,premiss2,conclusion,valid,name\n";
  for (const auto& r : rows) {
    os << r.mood.figure() << ',' << to_string(r.mood.premiss1) << ',' << to_string(r.mood.premiss2)
       << ',' << to_string(r.mood.conclusion) << ',' << (r.valid ? "true" : "false") << ','
       << (r.name ? std::string(*r.name) : std::string()) << '\n';
  }
  return os.str();
}

std::string describe(const EulerModel& model) {
  return "a=" + cells_to_string(model.a) + " b=" + cells_to_string(model.b) +
         " m=" + cells_to_string(model.m);
}

}  // namespace rmp::syllogistic
