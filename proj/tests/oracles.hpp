// Brute-force reference implementations. Deliberately naive and independent of
// the library code they are compared with.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

// Materialized epsilon-component family over A = {0..n-1}.
inline std::vector<Mask> family(unsigned n, Mask t, std::int64_t num, std::int64_t den, bool at_least) {
  std::vector<Mask> out;
  for (Mask c = 1; c < (Mask{1} << n); ++c) {
    const std::int64_t hits = std::popcount(c & t);
    const std::int64_t size = std::popcount(c);
    const bool ok = at_least ? hits * den >= num * size : hits * den == num * size;
    if (ok) out.push_back(c);
  }
  return out;
}

// The empty trace counts as realized by the empty term.
inline bool shattered(const std::vector<Mask>& fam, Mask s) {
  std::set<Mask> traces{0};
  for (Mask c : fam) traces.insert(c & s);
  return traces.size() == (std::size_t{1} << std::popcount(s));
}

// Largest shattered non-empty S, checking every subset of A.
inline unsigned vc(unsigned n, const std::vector<Mask>& fam) {
  unsigned best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const unsigned k = std::popcount(s);
    if (k > best && shattered(fam, s)) best = k;
  }
  return best;
}

// Syllogistic validity by Venn regions. A model says which of the 7 regions
// of three circles (a, b, m) are inhabited; region r has bit 0 = in a,
// bit 1 = in b, bit 2 = in m (r = 1..7; region 0 is outside all three).
inline bool holds(char q, char s, char p, unsigned inhabited) {
  const auto in = [](char term, unsigned r) {
    const unsigned bit = term == 'a' ? 1u : term == 'b' ? 2u : 4u;
    return (r & bit) != 0;
  };
  bool some_s_p = false;
  bool some_s_not_p = false;
  for (unsigned r = 1; r < 8; ++r) {
    if (!((inhabited >> r) & 1u) || !in(s, r)) continue;
    if (in(p, r)) some_s_p = true;
    else some_s_not_p = true;
  }
  switch (q) {
    case 'A': return !some_s_not_p;
    case 'E': return !some_s_p;
    case 'I': return some_s_p;
    default: return some_s_not_p;
  }
}

// premiss strings are "Qsp", e.g. "Amb".
inline bool valid_mood(const std::string& p1, const std::string& p2, const std::string& c) {
  for (unsigned inhabited = 0; inhabited < 256; inhabited += 2) {
    bool nonempty = true;
    for (unsigned bit : {1u, 2u, 4u}) {
      bool any = false;
      for (unsigned r = 1; r < 8; ++r) any = any || (((inhabited >> r) & 1u) && (r & bit));
      nonempty = nonempty && any;
    }
    if (!nonempty) continue;
    const auto h = [&](const std::string& x) { return holds(x[0], x[1], x[2], inhabited); };
    if (h(p1) && h(p2) && !h(c)) return false;
  }
  return true;
}

// The 24 valid moods by name: (name, major, minor, conclusion) in the {a, b, m} scheme.
struct Named {
  const char* name;
  const char* major;
  const char* minor;
  const char* conclusion;
};

inline const std::array<Named, 24>& catalog24() {
  static const std::array<Named, 24> rows{{
      {"Barbara", "Amb", "Aam", "Aab"},
      {"Datisi", "Amb", "Ima", "Iab"},   {"Barbari", "Amb", "Aam", "Iab"},
      {"Darii", "Amb", "Iam", "Iab"},    {"Darapti", "Amb", "Ama", "Iab"},
      {"Disamis", "Imb", "Ama", "Iab"},  {"Bamalip", "Abm", "Ama", "Iab"},
      {"Dimatis", "Ibm", "Ama", "Iab"},
      {"Celarent", "Emb", "Aam", "Eab"}, {"Cesare", "Ebm", "Aam", "Eab"},
      {"Camestres", "Abm", "Eam", "Eab"}, {"Calemes", "Abm", "Ema", "Eab"},
      {"Celaront", "Emb", "Aam", "Oab"}, {"Ferio", "Emb", "Iam", "Oab"},
      {"Cesaro", "Ebm", "Aam", "Oab"},   {"Camestrop", "Abm", "Eam", "Oab"},
      {"Festino", "Ebm", "Iam", "Oab"},  {"Baroco", "Abm", "Oam", "Oab"},
      {"Felapton", "Emb", "Ama", "Oab"}, {"Bocardo", "Omb", "Ama", "Oab"},
      {"Ferison", "Emb", "Ima", "Oab"},  {"Camelop", "Abm", "Ema", "Oab"},
      {"Fesapo", "Ebm", "Ama", "Oab"},   {"Fresison", "Ebm", "Ima", "Oab"},
  }};
  return rows;
}

// Reward sums for one trial computed from scratch: touching sets by value
// equality, VC by the family oracle, radius floor(delta*vc/vc*), closed ball.
inline int reward_sum(const std::vector<std::vector<std::string>>& rows, const std::vector<double>& decisions,
                      const std::vector<std::string>& omega, double expert, std::int64_t num,
                      std::int64_t den, unsigned delta) {
  const unsigned n = static_cast<unsigned>(omega.size());
  std::vector<unsigned> vcs;
  for (const auto& row : rows) {
    Mask t = 0;
    for (unsigned f = 0; f < n; ++f) {
      if (row[f] == omega[f]) t |= Mask{1} << f;
    }
    vcs.push_back(vc(n, family(n, t, num, den, false)));
  }
  const unsigned star = vcs.empty() ? 0 : *std::max_element(vcs.begin(), vcs.end());
  int sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const unsigned r = star == 0 ? 0 : delta * vcs[i] / star;
    if (std::abs(expert - decisions[i]) <= r) ++sum;
  }
  return sum;
}

}  // namespace oracle
